#include <doctest.h>

#include <stdexcept>

#include "rminor/errors.hpp"
#include "rminor/generators.hpp"
#include "rminor/lifting.hpp"
#include "rminor/oracles.hpp"
#include "support.hpp"

using namespace rminor;
using namespace rminor::testsupport;

namespace {

Graph wheel_graph(int rim) {  // rim 0..rim-1, hub = rim
    GraphBuilder b;
    for (int i = 0; i <= rim; ++i) b.add_vertex();
    for (int i = 0; i < rim; ++i) {
        b.add_edge(i, (i + 1) % rim);
        b.add_edge(i, rim);
    }
    return b.build();
}

Graph k33() {
    GraphBuilder b;
    for (int i = 0; i < 6; ++i) b.add_vertex();
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) b.add_edge(i, j);
    return b.build();
}

Graph k23() {  // sides {0, 1} and {2, 3, 4}
    GraphBuilder b;
    for (int i = 0; i < 5; ++i) b.add_vertex();
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 5; ++j) b.add_edge(i, j);
    return b.build();
}

bool is_path_in(const Graph& g, const std::vector<VertexId>& p) {
    if (p.empty()) return false;
    VertexSet seen = make_set(p);
    if (seen.size() != p.size()) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
}

} // namespace

TEST_SUITE_BEGIN("oracles");

TEST_CASE("kappa_x_brute rejects oversized graphs") {
    RootedGraph big(complete_graph(15), {0, 1});
    CHECK_THROWS_AS(kappa_x_brute(big), resource_limit_error);
}

TEST_CASE("bridge decomposition of a path in a wheel") {
    Graph w = wheel_graph(5);  // rim 0..4, hub 5
    // h holds {0, 1, 4} with the single edge 0-1; the rest {2, 3, 5} forms
    // one bridge and the rim edge 4-0 survives as a trivial bridge.
    Graph h = induced_subgraph(w, {0, 1, 4}).remove_edge(0, 4);
    auto dec = bridges(w, h);
    REQUIRE(dec.bridges.size() == 1);
    CHECK(dec.bridges[0].inner == VertexSet{2, 3, 5});
    CHECK(dec.bridges[0].attachments == VertexSet{0, 1, 4});
    // The rim edge 4-0 is off h but has both ends on it.
    REQUIRE(dec.trivial_bridges.size() == 1);
    CHECK(dec.trivial_bridges[0] == Edge{0, 4});
}

TEST_CASE("bridge decomposition lists all trivial bridges of a spanning path") {
    Graph k4 = complete_graph(4);
    Graph h = path_graph(4);  // path 0-1-2-3 inside K4
    auto dec = bridges(k4, h);
    CHECK(dec.bridges.empty());
    REQUIRE(dec.trivial_bridges.size() == 3);
    CHECK(dec.trivial_bridges[0] == Edge{0, 2});
    CHECK(dec.trivial_bridges[1] == Edge{0, 3});
    CHECK(dec.trivial_bridges[2] == Edge{1, 3});
}

TEST_CASE("bridges validates its inputs") {
    Graph split = Graph().add_vertex(0).add_vertex(1);
    CHECK_THROWS_AS(bridges(split, Graph().add_vertex(0)), std::invalid_argument);
    Graph c4 = cycle_graph(4);
    Graph stranger = Graph().add_vertex(9);
    CHECK_THROWS_AS(bridges(c4, stranger), std::invalid_argument);
}

TEST_CASE("tutte path recognition without an anchor") {
    Graph w5 = wheel_graph(5);
    // Both bridges of the path 0-5-2 have exactly three attachments.
    CHECK(is_tutte_path(w5, {0, 5, 2}));

    // A long rim path of a W6 leaves a bridge holding the hub, whose
    // attachments cover five path vertices.
    Graph w6 = wheel_graph(6);
    CHECK_FALSE(is_tutte_path(w6, {0, 1, 2, 3, 4}));
}

TEST_CASE("anchored bridges must have exactly two attachments") {
    Graph w5 = wheel_graph(5);
    Graph rim = induced_subgraph(w5, {0, 1, 2, 3, 4});
    // The bridge {3, 4} of the path 0-5-2 contains rim edges but has three
    // attachments, so the anchored check refuses what the plain one accepts.
    CHECK(is_tutte_path(w5, {0, 5, 2}));
    CHECK_FALSE(is_tutte_path(w5, {0, 5, 2}, &rim));

    // On a plain cycle the single bridge of an edge path has two attachments.
    Graph c6 = cycle_graph(6);
    CHECK(is_tutte_path(c6, {0, 1}, &c6));
}

TEST_CASE("tutte path recognition validates the path") {
    Graph c4 = cycle_graph(4);
    CHECK_THROWS_AS(is_tutte_path(c4, {0}), std::invalid_argument);
    CHECK_THROWS_AS(is_tutte_path(c4, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(is_tutte_path(c4, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("brute tutte path search on a small wheel") {
    Graph w4 = wheel_graph(4);
    auto p = find_tutte_path_brute(w4, 0, 2, {1, 2});
    REQUIRE(p.has_value());
    CHECK(p->front() == 0);
    CHECK(p->back() == 2);
    CHECK(is_path_in(w4, *p));
    bool uses_forced = false;
    for (std::size_t i = 0; i + 1 < p->size(); ++i)
        if (((*p)[i] == 1 && (*p)[i + 1] == 2) || ((*p)[i] == 2 && (*p)[i + 1] == 1)) uses_forced = true;
    CHECK(uses_forced);
    CHECK(is_tutte_path(w4, *p));
}

TEST_CASE("brute tutte path search validates and guards") {
    CHECK_THROWS_AS(find_tutte_path_brute(path_graph(4), 0, 3, {0, 1}), std::invalid_argument);
    Graph c4 = cycle_graph(4);
    CHECK_THROWS_AS(find_tutte_path_brute(c4, 1, 1, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(find_tutte_path_brute(c4, 0, 1, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(find_tutte_path_brute(wheel_graph(12), 0, 1, {0, 1}), resource_limit_error);
}

TEST_CASE("spanning tree oracle finds degree-capped trees") {
    Graph w5 = wheel_graph(5);
    RootedGraph rim_roots(w5, {0, 1, 2, 3, 4});
    auto res = exists_x_spanning_tree(rim_roots, 2);
    REQUIRE(res.has_value());
    CHECK(verify_degree_bounded_tree(w5, rim_roots.roots, *res).ok);
    CHECK(res->bound == 2);
}

TEST_CASE("spanning tree oracle respects designated leaves") {
    Graph k4 = complete_graph(4);
    RootedGraph rg(k4, {0, 1, 2, 3});
    auto res = exists_x_spanning_tree(rg, 3, std::make_pair(0, 3));
    REQUIRE(res.has_value());
    CHECK(res->tree.degree(0) == 1);
    CHECK(res->tree.degree(3) == 1);
    CHECK(verify_degree_bounded_tree(k4, rg.roots, *res).ok);

    CHECK_THROWS_AS(exists_x_spanning_tree(rg, 3, std::make_pair(0, 0)), std::invalid_argument);
    RootedGraph partial(k4, {0, 1});
    CHECK_THROWS_AS(exists_x_spanning_tree(partial, 3, std::make_pair(0, 2)), std::invalid_argument);
}

TEST_CASE("spanning tree oracle reports impossibility") {
    // Star: every X-spanning tree passes the center with degree 4.
    Graph star = Graph().add_vertex(0).add_vertex(1).add_vertex(2).add_vertex(3).add_vertex(4);
    for (int leaf = 0; leaf < 4; ++leaf) star = star.add_edge(leaf, 4);
    RootedGraph rg(star, {0, 1, 2, 3});
    CHECK_FALSE(exists_x_spanning_tree(rg, 3).has_value());
    auto res = exists_x_spanning_tree(rg, 4);
    REQUIRE(res.has_value());
    CHECK(verify_degree_bounded_tree(star, rg.roots, *res).ok);

    CHECK_THROWS_AS(exists_x_spanning_tree(rg, 0), std::invalid_argument);
    RootedGraph big(complete_graph(15), {0, 1});
    CHECK_THROWS_AS(exists_x_spanning_tree(big, 3), resource_limit_error);
}

TEST_CASE("spanning path oracle on cycles") {
    Graph c6 = cycle_graph(6);
    RootedGraph all(c6, c6.vertices());
    auto p = exists_x_spanning_path(all, 0, 5);
    REQUIRE(p.has_value());
    CHECK(*p == std::vector<VertexId>{0, 1, 2, 3, 4, 5});

    RootedGraph two(c6, {0, 3});
    auto q = exists_x_spanning_path(two, 0, 3);
    REQUIRE(q.has_value());
    CHECK(q->front() == 0);
    CHECK(q->back() == 3);
    CHECK(is_path_in(c6, *q));
}

TEST_CASE("spanning path oracle honors one forced edge") {
    Graph c6 = cycle_graph(6);
    RootedGraph rg(c6, {0, 1, 5});
    auto p = exists_x_spanning_path(rg, 1, 5, {Edge{0, 1}});
    REQUIRE(p.has_value());
    bool uses = false;
    for (std::size_t i = 0; i + 1 < p->size(); ++i)
        if (((*p)[i] == 0 && (*p)[i + 1] == 1) || ((*p)[i] == 1 && (*p)[i + 1] == 0)) uses = true;
    CHECK(uses);

    CHECK_THROWS_AS(exists_x_spanning_path(rg, 1, 5, {Edge{1, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(exists_x_spanning_path(rg, 1, 5, {Edge{0, 1}, Edge{0, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(exists_x_spanning_path(rg, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(exists_x_spanning_path(rg, 1, 2), std::invalid_argument);
}

TEST_CASE("spanning path oracle reports impossibility") {
    // Claw: visiting the third leaf forces the center twice.
    Graph claw = Graph().add_vertex(0).add_vertex(1).add_vertex(2).add_vertex(3);
    claw = claw.add_edge(0, 3).add_edge(1, 3).add_edge(2, 3);
    RootedGraph rg(claw, {0, 1, 2});
    CHECK_FALSE(exists_x_spanning_path(rg, 0, 1).has_value());
}

TEST_CASE("spanning cycle oracle with avoided vertices") {
    Graph w5 = wheel_graph(5);
    RootedGraph rim(w5, {0, 1, 2, 3, 4});
    auto cy = exists_x_spanning_cycle(rim);
    REQUIRE(cy.has_value());
    CHECK(cy->size() >= 5);

    // Avoiding the hub (not a root) leaves the rim cycle.
    auto no_hub = exists_x_spanning_cycle(rim, {5});
    REQUIRE(no_hub.has_value());
    CHECK(make_set(*no_hub) == VertexSet{0, 1, 2, 3, 4});

    // Avoiding one rim root reroutes through the hub.
    auto no_zero = exists_x_spanning_cycle(rim, {0});
    REQUIRE(no_zero.has_value());
    CHECK_FALSE(set_contains(make_set(*no_zero), 0));
    for (VertexId x : {1, 2, 3, 4}) CHECK(set_contains(make_set(*no_zero), x));

    Graph c6 = cycle_graph(6);
    RootedGraph ring(c6, c6.vertices());
    CHECK_FALSE(exists_x_spanning_cycle(ring, {0}).has_value());

    CHECK_THROWS_AS(exists_x_spanning_cycle(rim, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(exists_x_spanning_cycle(rim, {42}), std::invalid_argument);
    RootedGraph lone(c6, {2});
    CHECK_THROWS_AS(exists_x_spanning_cycle(lone, {2}), std::invalid_argument);
}

TEST_CASE("minor containment on classic fixtures") {
    CHECK(has_minor_brute(complete_graph(5), complete_graph(5)));
    CHECK_FALSE(has_minor_brute(complete_graph(4), complete_graph(5)));
    CHECK(has_minor_brute(wheel_graph(4), complete_graph(4)));
    CHECK(has_minor_brute(k33(), k33()));
    CHECK_FALSE(has_minor_brute(complete_graph(4), k33()));
    CHECK(has_minor_brute(petersen(), complete_graph(5)));
    // Petersen is 3-regular on 10 vertices: six bags of size >= 2 cannot fit.
    CHECK_FALSE(has_minor_brute(petersen(), complete_graph(6)));
}

TEST_CASE("minor containment guards its input sizes") {
    CHECK_THROWS_AS(has_minor_brute(complete_graph(13), complete_graph(3)), resource_limit_error);
    CHECK_THROWS_AS(has_minor_brute(complete_graph(8), complete_graph(7)), resource_limit_error);
}

TEST_CASE("bounded-degree 2-connected spanning subgraphs") {
    Graph w5 = wheel_graph(5);
    auto ham = exists_spanning_two_connected_bounded_degree(w5, 2);
    REQUIRE(ham.has_value());
    CHECK(ham->order() == 6);
    CHECK(is_k_connected(*ham, 2));
    for (VertexId v : ham->vertices()) {
        CHECK(ham->degree(v) == 2);
        for (VertexId w : ham->neighbors(v)) CHECK(w5.has_edge(v, w));
    }

    // K23 is 2-connected but has no hamiltonian cycle, while K23 itself
    // already satisfies the next degree bound.
    CHECK_FALSE(exists_spanning_two_connected_bounded_degree(k23(), 2).has_value());
    auto whole = exists_spanning_two_connected_bounded_degree(k23(), 3);
    REQUIRE(whole.has_value());
    CHECK(*whole == k23());
}

TEST_CASE("bounded-degree search validates and guards") {
    CHECK_FALSE(exists_spanning_two_connected_bounded_degree(path_graph(4), 3).has_value());
    CHECK_THROWS_AS(exists_spanning_two_connected_bounded_degree(cycle_graph(4), 1), std::invalid_argument);
    CHECK_THROWS_AS(exists_spanning_two_connected_bounded_degree(complete_graph(15), 3), resource_limit_error);
}

TEST_SUITE_END();

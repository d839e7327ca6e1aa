#include <doctest.h>

#include <stdexcept>

#include "rminor/graph.hpp"
#include "support.hpp"

using namespace rminor;
using namespace rminor::testsupport;

TEST_SUITE_BEGIN("graph");

TEST_CASE("empty graph degenerate cases") {
    Graph g;
    CHECK(g.order() == 0);
    CHECK(g.size() == 0);
    CHECK(g.vertices().empty());
    CHECK(g.edges().empty());
    CHECK(is_connected(g));
    CHECK(components(g).empty());
}

TEST_CASE("immutable updates leave the original untouched") {
    Graph g = Graph().add_vertex(0).add_vertex(1);
    Graph h = g.add_edge(0, 1);
    CHECK(g.size() == 0);
    CHECK(h.size() == 1);
    CHECK(h.has_edge(1, 0));
    Graph back = h.remove_edge(0, 1);
    CHECK(back == g);
    CHECK(h.size() == 1);
}

TEST_CASE("vertex and edge validation") {
    Graph g = Graph().add_vertex(3).add_vertex(7);
    CHECK_THROWS_AS(g.add_vertex(3), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(g.remove_edge(3, 7), std::invalid_argument);
    CHECK_THROWS_AS(g.neighbors(5), std::invalid_argument);
    Graph h = g.add_edge(7, 3);
    CHECK_THROWS_AS(h.add_edge(3, 7), std::invalid_argument);
}

TEST_CASE("iteration order is sorted everywhere") {
    Graph g = Graph().add_vertex(9).add_vertex(2).add_vertex(5);
    g = g.add_edge(9, 2).add_edge(9, 5).add_edge(5, 2);
    CHECK(g.vertices() == VertexSet{2, 5, 9});
    CHECK(g.neighbors(9) == VertexSet{2, 5});
    CHECK(g.degree(2) == 2);
    auto es = g.edges();
    REQUIRE(es.size() == 3);
    CHECK(es[0] == Edge{2, 5});
    CHECK(es[1] == Edge{2, 9});
    CHECK(es[2] == Edge{5, 9});
}

TEST_CASE("names are carried but do not affect equality") {
    Graph a = Graph().add_vertex(0, "left").add_vertex(1).add_edge(0, 1);
    Graph b = Graph().add_vertex(0).add_vertex(1, "right").add_edge(0, 1);
    CHECK(a.name(0) == "left");
    CHECK(a.name(1) == "");
    CHECK(a == b);
    CHECK_FALSE(a == b.remove_edge(0, 1));
}

TEST_CASE("builder assigns increasing ids and validates") {
    GraphBuilder b;
    CHECK(b.add_vertex("x") == 0);
    b.add_vertex_with_id(4);
    CHECK(b.add_vertex() == 5);
    CHECK_THROWS_AS(b.add_vertex_with_id(2), std::invalid_argument);
    b.add_edge(0, 4);
    CHECK(b.has_edge(4, 0));
    CHECK_FALSE(b.has_edge(0, 5));
    Graph g = b.build();
    CHECK(g.vertices() == VertexSet{0, 4, 5});
    CHECK(g.name(0) == "x");
    CHECK(g.has_edge(0, 4));
}

TEST_CASE("builder rejects loops, duplicates and unknown endpoints") {
    GraphBuilder loop;
    loop.add_vertex();
    CHECK_THROWS_AS(loop.add_edge(0, 0), std::invalid_argument);

    GraphBuilder dup;
    dup.add_vertex();
    dup.add_vertex();
    dup.add_edge(0, 1);
    dup.add_edge(1, 0);
    CHECK_THROWS_AS(dup.build(), std::invalid_argument);

    GraphBuilder missing;
    missing.add_vertex();
    missing.add_edge(0, 3);
    CHECK_THROWS_AS(missing.build(), std::invalid_argument);
}

TEST_CASE("vertex set helpers") {
    VertexSet a{1, 3, 5}, b{3, 4, 5, 6};
    CHECK(set_contains(a, 3));
    CHECK_FALSE(set_contains(a, 2));
    CHECK(set_union(a, b) == VertexSet{1, 3, 4, 5, 6});
    CHECK(set_intersection(a, b) == VertexSet{3, 5});
    CHECK(set_difference(a, b) == VertexSet{1});
    CHECK(make_set({5, 1, 5, 3, 1}) == VertexSet{1, 3, 5});
}

TEST_CASE("induced subgraph keeps exactly the inner edges") {
    Graph g = complete_graph(5);
    Graph s = induced_subgraph(g, {1, 2, 4});
    CHECK(s.vertices() == VertexSet{1, 2, 4});
    CHECK(s.size() == 3);
    CHECK_THROWS_AS(induced_subgraph(g, {1, 9}), std::invalid_argument);
}

TEST_CASE("delete_vertices equals induced complement") {
    Rng rng(11);
    Graph g = random_connected_graph(8, 6, rng);
    VertexSet s{2, 5};
    CHECK(delete_vertices(g, s) == induced_subgraph(g, set_difference(g.vertices(), s)));
    CHECK_THROWS_AS(delete_vertices(g, {42}), std::invalid_argument);
}

TEST_CASE("contract_edge absorbs the second endpoint") {
    // Square 0-1-2-3; contracting 0<-1 yields a triangle on {0,2,3}.
    Graph sq = cycle_graph(4);
    Graph t = contract_edge(sq, 0, 1);
    CHECK(t.vertices() == VertexSet{0, 2, 3});
    CHECK(t.has_edge(0, 2));
    CHECK(t.has_edge(0, 3));
    CHECK(t.has_edge(2, 3));
    CHECK(t.size() == 3);
    CHECK_THROWS_AS(contract_edge(sq, 0, 2), std::invalid_argument);
}

TEST_CASE("contract_edge never creates loops or duplicate edges") {
    Graph k4 = complete_graph(4);
    Graph t = contract_edge(k4, 1, 3);
    CHECK(t == complete_graph(3));
    CHECK(t.size() == 3);
}

TEST_CASE("components are ordered by least contained id") {
    Graph g = Graph().add_vertex(0).add_vertex(1).add_vertex(5).add_vertex(6).add_edge(5, 6).add_edge(0, 1);
    auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1});
    CHECK(comps[1] == VertexSet{5, 6});
    CHECK_FALSE(is_connected(g));
}

TEST_CASE("lex_shortest_path picks the least shortest route") {
    Graph c4 = cycle_graph(4);
    auto p = lex_shortest_path(c4, 0, {2});
    REQUIRE(p.has_value());
    CHECK(*p == std::vector<VertexId>{0, 1, 2});

    auto self = lex_shortest_path(c4, 2, {0, 2});
    REQUIRE(self.has_value());
    CHECK(*self == std::vector<VertexId>{2});

    CHECK_FALSE(lex_shortest_path(c4, 0, {}).has_value());
    Graph split = Graph().add_vertex(0).add_vertex(1);
    CHECK_FALSE(lex_shortest_path(split, 0, {1}).has_value());
    CHECK_THROWS_AS(lex_shortest_path(c4, 9, {0}), std::invalid_argument);
}

TEST_SUITE_END();

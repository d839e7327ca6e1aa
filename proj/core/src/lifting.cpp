#include "rminor/lifting.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace rminor {

namespace {

void require(bool cond, const std::string& why) {
    if (!cond) throw std::invalid_argument(why);
}

void require_certificate(const Certificate& c, const char* op) {
    if (auto r = verify_certificate(c); !r)
        throw std::invalid_argument(std::string(op) + ": invalid certificate: " + r.reason);
}

// Host edge between two bags whose endpoint pair is lexicographically least
// by (min, max); from/to are aligned with the bag order of the call.
struct BagLink {
    VertexId from;
    VertexId to;
};
BagLink least_link(const Graph& host, const VertexSet& bag_from, const VertexSet& bag_to) {
    std::optional<BagLink> best;
    auto better = [](const BagLink& l, const BagLink& r) {
        auto key = [](const BagLink& x) {
            return std::make_pair(std::min(x.from, x.to), std::max(x.from, x.to));
        };
        return key(l) < key(r);
    };
    for (VertexId u : bag_from)
        for (VertexId w : set_intersection(host.neighbors(u), bag_to))
            if (BagLink cand{u, w}; !best || better(cand, *best)) best = cand;
    if (!best) throw std::logic_error("certified minor edge lacks a host edge between its bags");
    return *best;
}

std::vector<VertexId> bag_path(const Graph& host, const VertexSet& bag, VertexId from,
                               const VertexSet& targets) {
    auto p = lex_shortest_path(induced_subgraph(host, bag), from, targets);
    if (!p) throw std::logic_error("bag of a certified minor is not connected");
    return *p;
}

GeneralizedStructure lift_spine(const Certificate& c, const std::vector<VertexId>& order,
                                bool cyclic, const char* op) {
    require_certificate(c, op);
    require(!order.empty(), std::string(op) + ": empty spine order");
    require(!cyclic || order.size() >= 3, std::string(op) + ": a cycle needs at least 3 vertices");
    VertexSet distinct(order.begin(), order.end());
    std::sort(distinct.begin(), distinct.end());
    require(std::adjacent_find(distinct.begin(), distinct.end()) == distinct.end(),
            std::string(op) + ": repeated minor vertex");
    for (VertexId v : order)
        require(c.minor.has_vertex(v), std::string(op) + ": spine vertex outside the minor");
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        require(c.minor.has_edge(order[i], order[i + 1]),
                std::string(op) + ": consecutive spine vertices not adjacent in the minor");
    if (cyclic)
        require(c.minor.has_edge(order.back(), order.front()),
                std::string(op) + ": cycle does not close in the minor");
    for (VertexId x : c.roots)
        require(set_contains(distinct, x), std::string(op) + ": root off the given spine order");

    const std::size_t m = order.size();
    std::vector<BagLink> links;
    const std::size_t nlinks = cyclic ? m : m - 1;
    for (std::size_t i = 0; i < nlinks; ++i)
        links.push_back(
            least_link(c.host, c.bags.at(order[i]), c.bags.at(order[(i + 1) % m])));

    GeneralizedStructure out;
    out.cyclic = cyclic;
    for (std::size_t i = 0; i < m; ++i) {
        const VertexSet& bag = c.bags.at(order[i]);
        // Entry and exit points of the spine inside this bag; the path's
        // outer bags start or end at their own minor vertex.
        VertexId entry = (cyclic || i > 0) ? links[(i + m - 1) % m].to : order[i];
        VertexId exit = (cyclic || i + 1 < m) ? links[i].from : order[i];
        std::vector<VertexId> connector = bag_path(c.host, bag, entry, {exit});
        VertexSet on_connector = make_set(connector);

        if (set_contains(c.roots, order[i]) && !set_contains(on_connector, order[i])) {
            GeneralizedStructure::Attachment att;
            att.root = order[i];
            att.path = bag_path(c.host, bag, order[i], on_connector);
            out.attachments.push_back(std::move(att));
        }
        out.spine.insert(out.spine.end(), connector.begin(), connector.end());
    }
    return out;
}

} // namespace

GeneralizedStructure lift_path(const Certificate& c, const std::vector<VertexId>& p) {
    return lift_spine(c, p, false, "lift_path");
}

GeneralizedStructure lift_cycle(const Certificate& c, const std::vector<VertexId>& cy) {
    return lift_spine(c, cy, true, "lift_cycle");
}

DegreeBoundedTree lift_tree(const Certificate& c, const Graph& t, int bound) {
    require_certificate(c, "lift_tree");
    require(bound >= 1, "lift_tree: bound must be >= 1");
    require(t.vertices() == c.minor.vertices(), "lift_tree: tree must span the minor");
    for (const Edge& e : t.edges())
        require(c.minor.has_edge(e.a, e.b), "lift_tree: tree edge outside the minor");
    require(is_connected(t) && t.size() + 1 == static_cast<std::size_t>(t.order()),
            "lift_tree: input is not a tree");
    for (VertexId v : t.vertices())
        require(t.degree(v) <= bound, "lift_tree: tree exceeds the degree bound");

    // One host edge per tree edge; bag ports collect their endpoints.
    std::map<VertexId, VertexSet> ports;
    std::vector<Edge> host_edges;
    for (const Edge& e : t.edges()) {
        BagLink link = least_link(c.host, c.bags.at(e.a), c.bags.at(e.b));
        host_edges.push_back({link.from, link.to});
        ports[e.a] = set_union(ports[e.a], {link.from});
        ports[e.b] = set_union(ports[e.b], {link.to});
    }

    VertexSet used_vertices;
    std::vector<Edge> used_edges = host_edges;
    // Link endpoints are bag-ordered, not id-ordered, so sort before the union.
    for (const Edge& e : host_edges) used_vertices = set_union(used_vertices, make_set({e.a, e.b}));

    for (VertexId v : c.minor.vertices()) {
        const VertexSet& bag = c.bags.at(v);
        Graph bag_sub = induced_subgraph(c.host, bag);
        VertexSet terminals = ports.contains(v) ? ports.at(v) : VertexSet{};
        VertexSet tree_vertices = terminals.empty() ? VertexSet{v} : VertexSet{terminals.front()};
        VertexSet uncovered(terminals.begin() + (terminals.empty() ? 0 : 1), terminals.end());

        // Nearest-terminal-first growth: each join path starts on the tree
        // and ends at the closest uncovered terminal (ties by id), with the
        // lexicographically least shortest path; interiors are never
        // terminals, and the degree audit below confirms the resulting caps.
        while (!uncovered.empty()) {
            VertexId nearest = -1;
            std::size_t nearest_dist = 0;
            for (VertexId u : uncovered) {
                auto p = lex_shortest_path(bag_sub, u, tree_vertices);
                if (!p) throw std::logic_error("lift_tree: disconnected bag");
                if (nearest < 0 || p->size() < nearest_dist) {
                    nearest = u;
                    nearest_dist = p->size();
                }
            }
            auto join = lex_shortest_path(bag_sub, nearest, tree_vertices);
            for (std::size_t i = 0; i + 1 < join->size(); ++i)
                used_edges.push_back({(*join)[i], (*join)[i + 1]});
            tree_vertices = set_union(tree_vertices, make_set(*join));
            uncovered = set_difference(uncovered, {nearest});
        }

        if (set_contains(c.roots, v) && !set_contains(tree_vertices, v)) {
            auto att = lex_shortest_path(bag_sub, v, tree_vertices);
            if (!att) throw std::logic_error("lift_tree: disconnected bag");
            for (std::size_t i = 0; i + 1 < att->size(); ++i)
                used_edges.push_back({(*att)[i], (*att)[i + 1]});
            tree_vertices = set_union(tree_vertices, make_set(*att));
        }
        used_vertices = set_union(used_vertices, tree_vertices);
    }

    GraphBuilder b;
    for (VertexId v : used_vertices) b.add_vertex_with_id(v, c.host.name(v));
    for (const Edge& e : used_edges) b.add_edge(e.a, e.b);
    Graph lifted = b.build();

    // Construction audit: spanning-tree shape, root coverage, degree cap.
    if (!is_connected(lifted) || lifted.size() + 1 != static_cast<std::size_t>(lifted.order()))
        throw std::logic_error("lift_tree: lifted structure is not a tree");
    for (VertexId x : c.roots)
        if (!lifted.has_vertex(x)) throw std::logic_error("lift_tree: lifted tree misses a root");
    for (VertexId v : lifted.vertices())
        if (lifted.degree(v) > bound + 1)
            throw std::logic_error("lift_tree: lifted tree exceeds the degree bound");
    return {std::move(lifted), bound + 1};
}

Graph lift_subdivision(const SubdivisionEmbedding& e, const Graph& h) {
    if (auto r = verify_embedding(e); !r)
        throw std::invalid_argument(std::string("lift_subdivision: invalid embedding: ") + r.reason);
    for (VertexId v : h.vertices())
        require(e.minor.has_vertex(v), "lift_subdivision: subgraph vertex outside the minor");
    for (const Edge& he : h.edges())
        require(e.minor.has_edge(he.a, he.b), "lift_subdivision: subgraph edge outside the minor");

    VertexSet verts = h.vertices();
    std::vector<Edge> edges;
    for (const Edge& he : h.edges()) {
        const auto& path = e.path_map.at({std::min(he.a, he.b), std::max(he.a, he.b)});
        for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.push_back({path[i], path[i + 1]});
        for (VertexId p : path) verts = set_union(verts, {p});
    }
    GraphBuilder b;
    for (VertexId v : verts) b.add_vertex_with_id(v, e.host.name(v));
    for (const Edge& pe : edges) b.add_edge(pe.a, pe.b);
    return b.build();
}

VerifyResult verify_generalized(const Graph& g, const VertexSet& roots,
                                const GeneralizedStructure& s) {
    if (s.spine.empty()) return VerifyResult::fail("spine validity: empty spine");
    VertexSet spine_set;
    for (VertexId v : s.spine) {
        if (!g.has_vertex(v)) return VerifyResult::fail("spine validity: unknown vertex");
        spine_set.push_back(v);
    }
    std::sort(spine_set.begin(), spine_set.end());
    if (std::adjacent_find(spine_set.begin(), spine_set.end()) != spine_set.end())
        return VerifyResult::fail("spine validity: repeated vertex");
    for (std::size_t i = 0; i + 1 < s.spine.size(); ++i)
        if (!g.has_edge(s.spine[i], s.spine[i + 1]))
            return VerifyResult::fail("spine validity: non-edge step");
    if (s.cyclic) {
        if (s.spine.size() < 3) return VerifyResult::fail("spine validity: short cycle");
        if (!g.has_edge(s.spine.back(), s.spine.front()))
            return VerifyResult::fail("spine validity: cycle does not close");
    }

    std::vector<std::pair<VertexId, VertexId>> spine_edges;
    for (std::size_t i = 0; i + 1 < s.spine.size(); ++i)
        spine_edges.emplace_back(std::min(s.spine[i], s.spine[i + 1]),
                                 std::max(s.spine[i], s.spine[i + 1]));
    if (s.cyclic)
        spine_edges.emplace_back(std::min(s.spine.back(), s.spine.front()),
                                 std::max(s.spine.back(), s.spine.front()));
    std::sort(spine_edges.begin(), spine_edges.end());

    VertexSet attachment_vertices;
    VertexSet covered = set_intersection(spine_set, roots);
    for (const auto& att : s.attachments) {
        if (att.path.empty() || att.path.front() != att.root || !set_contains(roots, att.root))
            return VerifyResult::fail("attachment validity: root " + std::to_string(att.root));
        VertexSet pv;
        for (VertexId v : att.path) {
            if (!g.has_vertex(v))
                return VerifyResult::fail("attachment validity: unknown vertex in attachment of " +
                                          std::to_string(att.root));
            pv.push_back(v);
        }
        std::sort(pv.begin(), pv.end());
        if (std::adjacent_find(pv.begin(), pv.end()) != pv.end())
            return VerifyResult::fail("attachment validity: repeated vertex in attachment of " +
                                      std::to_string(att.root));
        for (std::size_t i = 0; i + 1 < att.path.size(); ++i)
            if (!g.has_edge(att.path[i], att.path[i + 1]))
                return VerifyResult::fail("attachment validity: non-edge step in attachment of " +
                                          std::to_string(att.root));
        if (!set_contains(spine_set, att.path.back()))
            return VerifyResult::fail("attachment validity: attachment of " +
                                      std::to_string(att.root) + " misses the spine");
        for (std::size_t i = 0; i + 1 < att.path.size(); ++i) {
            if (set_contains(spine_set, att.path[i]))
                return VerifyResult::fail("attachment validity: attachment of " +
                                          std::to_string(att.root) + " touches the spine early");
            if (i > 0 && set_contains(roots, att.path[i]))
                return VerifyResult::fail("attachment validity: attachment of " +
                                          std::to_string(att.root) + " passes another root");
        }
        if (att.path.size() > 1 && set_contains(roots, att.path.back()))
            return VerifyResult::fail("attachment validity: attachment of " +
                                      std::to_string(att.root) + " ends on a root");
        for (VertexId v : pv)
            if (set_contains(attachment_vertices, v))
                return VerifyResult::fail("attachment disjointness: vertex " + std::to_string(v));
        attachment_vertices = set_union(attachment_vertices, pv);
        for (std::size_t i = 0; i + 1 < att.path.size(); ++i) {
            auto e = std::make_pair(std::min(att.path[i], att.path[i + 1]),
                                    std::max(att.path[i], att.path[i + 1]));
            if (std::binary_search(spine_edges.begin(), spine_edges.end(), e))
                return VerifyResult::fail("edge disjointness: attachment of " +
                                          std::to_string(att.root) + " reuses a spine edge");
        }
        covered = set_union(covered, {att.root});
    }
    for (VertexId x : roots)
        if (!set_contains(covered, x))
            return VerifyResult::fail("root coverage: root " + std::to_string(x));
    return VerifyResult::pass();
}

VerifyResult verify_degree_bounded_tree(const Graph& g, const VertexSet& roots,
                                        const DegreeBoundedTree& t) {
    for (VertexId v : t.tree.vertices())
        if (!g.has_vertex(v))
            return VerifyResult::fail("tree containment: vertex " + std::to_string(v));
    for (const Edge& e : t.tree.edges())
        if (!g.has_edge(e.a, e.b))
            return VerifyResult::fail("tree containment: edge " + std::to_string(e.a) + " " +
                                      std::to_string(e.b));
    if (t.tree.order() == 0) return VerifyResult::fail("tree shape: empty");
    if (!is_connected(t.tree) || t.tree.size() + 1 != static_cast<std::size_t>(t.tree.order()))
        return VerifyResult::fail("tree shape: not a tree");
    for (VertexId x : roots)
        if (!t.tree.has_vertex(x))
            return VerifyResult::fail("root coverage: root " + std::to_string(x));
    for (VertexId v : t.tree.vertices())
        if (t.tree.degree(v) > t.bound)
            return VerifyResult::fail("degree bound: vertex " + std::to_string(v));
    return VerifyResult::pass();
}

} // namespace rminor

#include "rminor/minor.hpp"

#include <algorithm>
#include <stdexcept>

#include "rminor/oracles.hpp"

namespace rminor {

namespace {

// The component holding the roots; kappa_x >= 1 already forces all roots
// into one component.
Graph root_component(const RootedGraph& rg) {
    for (const VertexSet& comp : components(rg.graph)) {
        if (!set_contains(comp, rg.roots.front())) continue;
        for (VertexId x : rg.roots)
            if (!set_contains(comp, x))
                throw std::invalid_argument("roots are split across components");
        return induced_subgraph(rg.graph, comp);
    }
    throw std::logic_error("root component not found");
}

// First X-legal directed pair (x kept, y absorbed) in (x, y) order.
std::optional<Edge> first_legal_pair(const Graph& g, const VertexSet& roots) {
    for (VertexId x : g.vertices())
        for (VertexId y : g.neighbors(x))
            if (!set_contains(roots, y)) return Edge{x, y};
    return std::nullopt;
}

// Lexicographically least separator of size < k in a connected graph that is
// not k-connected (k <= 3): an articulation point, else a two-cut found by
// peeling one vertex and looking for articulation points of the rest.
VertexSet small_separator(const Graph& g, int k) {
    if (k >= 2)
        for (VertexId v : g.vertices())
            if (components(delete_vertices(g, {v})).size() >= 2) return {v};
    if (k >= 3)
        for (VertexId u : g.vertices()) {
            Graph gu = delete_vertices(g, {u});
            for (VertexId w : gu.vertices()) {
                if (w <= u) continue;
                if (components(delete_vertices(gu, {w})).size() >= 2) return VertexSet{u, w};
            }
        }
    throw std::logic_error("no small separator in a graph that is not k-connected");
}

} // namespace

bool is_x_legal(const RootedGraph& rg, VertexId x, VertexId y) {
    if (!rg.graph.has_edge(x, y)) throw std::invalid_argument("is_x_legal: xy must be an edge");
    return !set_contains(rg.roots, y);
}

std::optional<Separator> kappa_drop_witness(const RootedGraph& rg, VertexId v, VertexId y) {
    if (!is_x_legal(rg, v, y))
        throw std::invalid_argument("kappa_drop_witness: contraction must be X-legal");
    const int kappa = kappa_x(rg);
    RootedGraph contracted(contract_edge(rg.graph, v, y), rg.roots);
    if (kappa_x_at_least(contracted, kappa)) return std::nullopt;

    // The drop is exactly one, and every minimum X-separator of G/vy contains
    // v (a missing v would lift it unchanged into G, beating kappa). Adding y
    // back gives a minimum X-separator of G through both v and y.
    auto sp = min_x_separator(contracted);
    if (!sp) throw std::logic_error("kappa_drop_witness: kappa dropped but no separator exists");
    if (static_cast<int>(sp->vertices.size()) != kappa - 1 || !set_contains(sp->vertices, v))
        throw std::logic_error("kappa_drop_witness: contracted separator violates the drop dichotomy");

    Separator out{set_union(sp->vertices, {y}), sp->witnesses};
    Graph rest = delete_vertices(rg.graph, out.vertices);
    int rooted = 0;
    for (const VertexSet& comp : components(rest))
        if (!set_intersection(comp, rg.roots).empty()) ++rooted;
    if (rooted < 2) throw std::logic_error("kappa_drop_witness: lifted separator fails to separate");
    return out;
}

std::optional<Edge> find_safe_contraction(const RootedGraph& rg) {
    if (!is_connected(rg.graph))
        throw std::invalid_argument("find_safe_contraction: graph must be connected");
    const int kappa = kappa_x(rg);
    if (kappa < 4) throw std::invalid_argument("find_safe_contraction: kappa_x must be >= 4");
    if (is_k_connected(rg.graph, 4)) return std::nullopt;
    if (kappa >= 5) {
        // Any X-legal contraction drops kappa by at most one, hence stays >= 4.
        auto edge = first_legal_pair(rg.graph, rg.roots);
        if (!edge) throw std::logic_error("find_safe_contraction: rootless graph escaped 4-connectivity");
        return edge;
    }
    for (VertexId x : rg.graph.vertices())
        for (VertexId y : rg.graph.neighbors(x)) {
            if (set_contains(rg.roots, y)) continue;
            RootedGraph contracted(contract_edge(rg.graph, x, y), rg.roots);
            if (kappa_x_at_least(contracted, 4)) return Edge{x, y};
        }
    throw std::logic_error("find_safe_contraction: no safe contraction in a non-4-connected graph");
}

std::pair<Certificate, ContractionTrace> four_connected_x_minor(const RootedGraph& rg) {
    if (!kappa_x_at_least(rg, 4))
        throw std::invalid_argument("four_connected_x_minor: kappa_x must be >= 4");
    Graph initial = root_component(rg);
    Graph cur = initial;
    std::map<VertexId, VertexSet> bags;
    for (VertexId v : cur.vertices()) bags[v] = {v};
    std::vector<Edge> steps;

    auto apply = [&](Edge e) {
        steps.push_back(e);
        bags[e.a] = set_union(bags[e.a], bags[e.b]);
        bags.erase(e.b);
        cur = contract_edge(cur, e.a, e.b);
    };

    for (;;) {
        if (kappa_x_at_least(RootedGraph(cur, rg.roots), 5)) {
            // Fast regime: every X-legal contraction is safe.
            auto edge = first_legal_pair(cur, rg.roots);
            if (!edge) break;
            apply(*edge);
            continue;
        }
        // kappa == 4: scan for a contraction keeping kappa >= 4. None found
        // means the graph is 4-connected (checked below); stalling earlier
        // would contradict the safe-contraction guarantee.
        std::optional<Edge> safe;
        for (VertexId x : cur.vertices()) {
            for (VertexId y : cur.neighbors(x)) {
                if (set_contains(rg.roots, y)) continue;
                RootedGraph contracted(contract_edge(cur, x, y), rg.roots);
                if (kappa_x_at_least(contracted, 4)) {
                    safe = Edge{x, y};
                    break;
                }
            }
            if (safe) break;
        }
        if (!safe) break;
        apply(*safe);
    }
    if (!is_k_connected(cur, 4))
        throw std::logic_error("four_connected_x_minor: contraction stalled before 4-connectivity");
    Certificate cert{cur, std::move(bags), rg.graph, rg.roots};
    ContractionTrace trace{std::move(steps), std::move(initial), cur};
    return {std::move(cert), std::move(trace)};
}

std::pair<Graph, SubdivisionEmbedding> topological_x_minor(const RootedGraph& rg, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("topological_x_minor: k must be in 1..3");
    if (!kappa_x_at_least(rg, k))
        throw std::invalid_argument("topological_x_minor: kappa_x must be >= k");
    Graph cur = root_component(rg);

    // Peel: repeatedly cut off the rootless side of a smallest separator and
    // complete the separator into a clique; since kappa_x exceeds the
    // separator size exactly one component keeps the roots.
    struct Level {
        Graph graph;                // graph at this level
        VertexSet dropped;          // its rootless fragment union
        std::optional<Edge> added;  // clique edge absent from `graph`
    };
    std::vector<Level> levels;

    while (!is_k_connected(cur, k)) {
        VertexSet sep = small_separator(cur, k);
        Graph rest = delete_vertices(cur, sep);
        VertexSet keep = sep;
        VertexSet dropped;
        int rooted_count = 0;
        for (const VertexSet& comp : components(rest)) {
            if (!set_intersection(comp, rg.roots).empty()) {
                keep = set_union(keep, comp);
                ++rooted_count;
            } else {
                dropped = set_union(dropped, comp);
            }
        }
        if (rooted_count != 1)
            throw std::logic_error("separator smaller than kappa_x separates the roots");
        if (dropped.empty())
            throw std::logic_error("no rootless fragment beside a small separator");
        Graph next = induced_subgraph(cur, keep);
        std::optional<Edge> added;
        if (sep.size() == 2 && !next.has_edge(sep[0], sep[1])) {
            next = next.add_edge(sep[0], sep[1]);
            added = Edge{sep[0], sep[1]};
        }
        levels.push_back({std::move(cur), std::move(dropped), added});
        cur = std::move(next);
    }

    SubdivisionEmbedding emb;
    emb.minor = cur;
    emb.host = rg.graph;
    for (const Edge& e : cur.edges()) emb.path_map[{e.a, e.b}] = {e.a, e.b};

    // Unwind inner-to-outer: an added clique edge can be traversed by at most
    // one embedding path (two traversals would breach internal disjointness);
    // replace that step by the lexicographically least shortest detour through
    // the fragment the edge stood in for.
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        if (!it->added) continue;
        const VertexId u = it->added->a, v = it->added->b;
        std::vector<VertexId>* user = nullptr;
        std::size_t pos = 0;
        for (auto& [key, path] : emb.path_map) {
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                if ((path[i] == u && path[i + 1] == v) || (path[i] == v && path[i + 1] == u)) {
                    if (user) throw std::logic_error("added clique edge used by two embedding paths");
                    user = &path;
                    pos = i;
                }
            }
        }
        if (!user) continue;
        Graph detour_host =
            induced_subgraph(it->graph, set_union(it->dropped, make_set({u, v})));
        auto detour = lex_shortest_path(detour_host, (*user)[pos], {(*user)[pos + 1]});
        if (!detour || detour->size() < 3)
            throw std::logic_error("no interior detour for an added clique edge");
        user->insert(user->begin() + static_cast<std::ptrdiff_t>(pos) + 1, detour->begin() + 1,
                     detour->end() - 1);
    }
    return {cur, std::move(emb)};
}

VerifyResult verify_certificate(const Certificate& c) {
    const VertexSet mv = c.minor.vertices();
    if (static_cast<int>(c.bags.size()) != c.minor.order())
        return VerifyResult::fail("bag keys: one bag per minor vertex required");
    for (const auto& [v, bag] : c.bags) {
        if (!c.minor.has_vertex(v))
            return VerifyResult::fail("bag keys: bag for non-minor vertex " + std::to_string(v));
        if (bag.empty())
            return VerifyResult::fail("bag nonempty: minor vertex " + std::to_string(v));
        if (!std::is_sorted(bag.begin(), bag.end()) ||
            std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            return VerifyResult::fail("bag nonempty: malformed bag for minor vertex " +
                                      std::to_string(v));
        for (VertexId h : bag)
            if (!c.host.has_vertex(h))
                return VerifyResult::fail("bag nonempty: bag vertex outside host for minor vertex " +
                                          std::to_string(v));
        if (!set_contains(bag, v))
            return VerifyResult::fail("self-containment: minor vertex " + std::to_string(v));
    }
    std::size_t total = 0;
    VertexSet all;
    for (const auto& [v, bag] : c.bags) {
        total += bag.size();
        all = set_union(all, bag);
    }
    if (all.size() != total) return VerifyResult::fail("bag disjointness");
    for (const auto& [v, bag] : c.bags)
        if (!is_connected(induced_subgraph(c.host, bag)))
            return VerifyResult::fail("bag connectivity: minor vertex " + std::to_string(v));
    for (VertexId x : c.roots)
        if (!set_contains(mv, x))
            return VerifyResult::fail("root coverage: root " + std::to_string(x));
    for (const Edge& e : c.minor.edges()) {
        const VertexSet& ba = c.bags.at(e.a);
        const VertexSet& bb = c.bags.at(e.b);
        bool witnessed = false;
        for (VertexId h : ba) {
            if (!set_intersection(c.host.neighbors(h), bb).empty()) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed)
            return VerifyResult::fail("edge witness: minor edge " + std::to_string(e.a) + " " +
                                      std::to_string(e.b));
    }
    return VerifyResult::pass();
}

VerifyResult verify_embedding(const SubdivisionEmbedding& e) {
    for (VertexId v : e.minor.vertices())
        if (!e.host.has_vertex(v))
            return VerifyResult::fail("minor containment: vertex " + std::to_string(v));
    for (const Edge& me : e.minor.edges())
        if (!e.path_map.contains({me.a, me.b}))
            return VerifyResult::fail("path coverage: minor edge " + std::to_string(me.a) + " " +
                                      std::to_string(me.b));
    VertexSet seen_interior;
    for (const auto& [key, path] : e.path_map) {
        auto [a, b] = key;
        std::string label = std::to_string(a) + " " + std::to_string(b);
        if (a >= b || !e.minor.has_edge(a, b))
            return VerifyResult::fail("path keys: " + label);
        if (path.size() < 2 || path.front() != a || path.back() != b)
            return VerifyResult::fail("path endpoints: " + label);
        VertexSet within;
        for (VertexId p : path) {
            if (!e.host.has_vertex(p)) return VerifyResult::fail("path validity: " + label);
            within.push_back(p);
        }
        std::sort(within.begin(), within.end());
        if (std::adjacent_find(within.begin(), within.end()) != within.end())
            return VerifyResult::fail("path validity: repeated vertex in " + label);
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!e.host.has_edge(path[i], path[i + 1]))
                return VerifyResult::fail("path validity: non-edge step in " + label);
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            VertexId p = path[i];
            if (e.minor.has_vertex(p))
                return VerifyResult::fail("branch vertices: " + label + " passes through " +
                                          std::to_string(p));
            if (set_contains(seen_interior, p))
                return VerifyResult::fail("internal disjointness: vertex " + std::to_string(p));
            seen_interior.insert(std::lower_bound(seen_interior.begin(), seen_interior.end(), p), p);
        }
    }
    return VerifyResult::pass();
}

VerifyResult verify_trace(const ContractionTrace& t, const VertexSet& roots) {
    Graph cur = t.initial;
    for (const Edge& step : t.steps) {
        std::string label = std::to_string(step.a) + " " + std::to_string(step.b);
        if (!cur.has_vertex(step.a) || !cur.has_vertex(step.b))
            return VerifyResult::fail("step vertices: " + label);
        if (!cur.has_edge(step.a, step.b)) return VerifyResult::fail("step edge: " + label);
        if (set_contains(roots, step.b)) return VerifyResult::fail("step legality: " + label);
        cur = contract_edge(cur, step.a, step.b);
    }
    if (!(cur == t.final_graph)) return VerifyResult::fail("final graph: replay mismatch");
    return VerifyResult::pass();
}

Certificate embedding_to_certificate(const SubdivisionEmbedding& e, const VertexSet& roots) {
    if (auto r = verify_embedding(e); !r)
        throw std::invalid_argument("embedding_to_certificate: " + r.reason);
    for (VertexId x : roots)
        if (!e.minor.has_vertex(x))
            throw std::invalid_argument("embedding_to_certificate: root outside the minor");
    Certificate c{e.minor, {}, e.host, roots};
    for (VertexId v : e.minor.vertices()) c.bags[v] = {v};
    for (const auto& [key, path] : e.path_map) {
        VertexId owner = std::min(key.first, key.second);
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            c.bags[owner] = set_union(c.bags[owner], {path[i]});
    }
    return c;
}

} // namespace rminor

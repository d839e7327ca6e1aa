#include "rminor/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

#include "flow.hpp"

namespace rminor {

namespace {

void require_flow_pair(const Graph& g, VertexId x, VertexId y, const char* op) {
    if (!g.has_vertex(x) || !g.has_vertex(y))
        throw std::invalid_argument(std::string(op) + ": unknown vertex");
    if (x == y) throw std::invalid_argument(std::string(op) + ": identical endpoints");
    if (g.has_edge(x, y)) throw std::invalid_argument(std::string(op) + ": endpoints are adjacent");
}

bool roots_complete(const RootedGraph& rg) {
    for (std::size_t i = 0; i < rg.roots.size(); ++i)
        for (std::size_t j = i + 1; j < rg.roots.size(); ++j)
            if (!rg.graph.has_edge(rg.roots[i], rg.roots[j])) return false;
    return true;
}

} // namespace

RootedGraph::RootedGraph(Graph g, VertexSet x) : graph(std::move(g)), roots(std::move(x)) {
    std::sort(roots.begin(), roots.end());
    if (roots.empty()) throw std::invalid_argument("RootedGraph: empty root set");
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
        throw std::invalid_argument("RootedGraph: duplicate root");
    for (VertexId v : roots)
        if (!graph.has_vertex(v))
            throw std::invalid_argument("RootedGraph: root " + std::to_string(v) + " not a vertex");
}

int local_connectivity(const Graph& g, VertexId x, VertexId y) {
    require_flow_pair(g, x, y, "local_connectivity");
    return detail::vertex_disjoint_paths(g, x, y);
}

bool local_connectivity_at_least(const Graph& g, VertexId x, VertexId y, int k) {
    require_flow_pair(g, x, y, "local_connectivity");
    if (k <= 0) return true;
    return detail::vertex_disjoint_paths(g, x, y, k) >= k;
}

int kappa_x(const RootedGraph& rg) {
    const int bound = static_cast<int>(rg.roots.size()) - 1;
    int best = bound;
    for (std::size_t i = 0; i < rg.roots.size() && best > 0; ++i) {
        for (std::size_t j = i + 1; j < rg.roots.size() && best > 0; ++j) {
            VertexId x = rg.roots[i], y = rg.roots[j];
            if (rg.graph.has_edge(x, y)) continue;
            best = std::min(best, detail::vertex_disjoint_paths(rg.graph, x, y, best));
        }
    }
    return best;
}

bool kappa_x_at_least(const RootedGraph& rg, int k) {
    if (k <= 0) return true;
    if (k > static_cast<int>(rg.roots.size()) - 1) return false;
    for (std::size_t i = 0; i < rg.roots.size(); ++i) {
        for (std::size_t j = i + 1; j < rg.roots.size(); ++j) {
            VertexId x = rg.roots[i], y = rg.roots[j];
            if (rg.graph.has_edge(x, y)) continue;
            if (detail::vertex_disjoint_paths(rg.graph, x, y, k) < k) return false;
        }
    }
    return true;
}

std::optional<Separator> min_x_separator(const RootedGraph& rg) {
    if (roots_complete(rg)) return std::nullopt;
    // The minimum X-separator size equals the minimum local connectivity over
    // nonadjacent root pairs; take the lexicographically least minimizing pair.
    int best = -1;
    std::pair<VertexId, VertexId> best_pair{-1, -1};
    for (std::size_t i = 0; i < rg.roots.size(); ++i) {
        for (std::size_t j = i + 1; j < rg.roots.size(); ++j) {
            VertexId x = rg.roots[i], y = rg.roots[j];
            if (rg.graph.has_edge(x, y)) continue;
            int cut = detail::vertex_disjoint_paths(rg.graph, x, y, best);
            if (best < 0 || cut < best) {
                best = cut;
                best_pair = {x, y};
                if (best == 0) break;
            }
        }
        if (best == 0) break;
    }
    return Separator{detail::min_vertex_cut(rg.graph, best_pair.first, best_pair.second), best_pair};
}

std::vector<Fragment> x_fragments(const RootedGraph& rg, const Separator& s) {
    for (VertexId v : s.vertices)
        if (!rg.graph.has_vertex(v))
            throw std::invalid_argument("x_fragments: separator vertex not in graph");
    if (static_cast<int>(s.vertices.size()) >= rg.graph.order())
        throw std::invalid_argument("x_fragments: separator is not a proper vertex subset");
    Graph rest = delete_vertices(rg.graph, s.vertices);
    std::vector<Fragment> out;
    int rooted_components = 0;
    for (VertexSet& comp : components(rest)) {
        bool rooted = !set_intersection(comp, rg.roots).empty();
        rooted_components += rooted ? 1 : 0;
        out.push_back(Fragment{rg.graph, std::move(comp), s, rooted});
    }
    if (rooted_components < 2)
        throw std::invalid_argument("x_fragments: not an X-separator (fewer than two rooted components)");
    return out;
}

RootedGraph clique_completion_reduce(const RootedGraph& rg, const Separator& s, const Fragment& f) {
    if (!set_intersection(f.vertices, rg.roots).empty())
        throw std::invalid_argument("clique_completion_reduce: fragment is not X-free");
    if (!set_intersection(f.vertices, s.vertices).empty())
        throw std::invalid_argument("clique_completion_reduce: fragment meets its separator");
    Graph reduced = delete_vertices(rg.graph, f.vertices);
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < s.vertices.size(); ++j)
            if (!reduced.has_edge(s.vertices[i], s.vertices[j]))
                reduced = reduced.add_edge(s.vertices[i], s.vertices[j]);
    return RootedGraph(std::move(reduced), rg.roots);
}

VertexSet cross_separator(const Fragment& f, const Fragment& fp) {
    if (!(f.graph == fp.graph))
        throw std::invalid_argument("cross_separator: fragments from different graphs");
    const VertexSet& s = f.separator.vertices;
    const VertexSet& sp = fp.separator.vertices;
    return set_union(set_union(set_intersection(f.vertices, sp), set_intersection(sp, s)),
                     set_intersection(s, fp.vertices));
}

} // namespace rminor

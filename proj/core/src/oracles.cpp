#include "rminor/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "rminor/errors.hpp"

namespace rminor {

namespace {

// Bitmask view of a small graph; position i = g.vertices()[i].
struct MaskView {
    const Graph* g;
    std::vector<std::uint32_t> adj;
    std::uint32_t all = 0;

    explicit MaskView(const Graph& graph) : g(&graph) {
        const auto& verts = graph.vertices();
        adj.assign(verts.size(), 0);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            all |= (1u << i);
            for (VertexId w : graph.neighbors(verts[i])) adj[i] |= (1u << index(w));
        }
    }
    std::size_t index(VertexId v) const {
        const auto& verts = g->vertices();
        return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    }
    VertexId vertex(int i) const { return g->vertices()[static_cast<std::size_t>(i)]; }

    std::uint32_t neighbors_of(std::uint32_t mask) const {
        std::uint32_t out = 0;
        for (std::uint32_t s = mask; s;) {
            int i = std::countr_zero(s);
            s &= s - 1;
            out |= adj[static_cast<std::size_t>(i)];
        }
        return out & ~mask;
    }
    bool connected(std::uint32_t mask) const {
        if (mask == 0) return false;
        std::uint32_t seen = mask & (~mask + 1);  // lowest bit
        for (;;) {
            std::uint32_t next = seen;
            for (std::uint32_t s = seen; s;) {
                int i = std::countr_zero(s);
                s &= s - 1;
                next |= adj[static_cast<std::size_t>(i)] & mask;
            }
            if (next == seen) break;
            seen = next;
        }
        return seen == mask;
    }
    VertexSet to_set(std::uint32_t mask) const {
        VertexSet out;
        for (std::uint32_t s = mask; s;) {
            int i = std::countr_zero(s);
            s &= s - 1;
            out.push_back(vertex(i));
        }
        return out;
    }
};

void guard_size(const Graph& g, int limit, const char* op) {
    if (g.order() > limit)
        throw resource_limit_error(std::string(op) + ": graph exceeds " + std::to_string(limit) +
                                   " vertices (" + std::to_string(g.order()) + ")");
}

void require_subgraph(const Graph& g, const Graph& h, const char* op) {
    for (VertexId v : h.vertices())
        if (!g.has_vertex(v)) throw std::invalid_argument(std::string(op) + ": anchor vertex not in graph");
    for (const Edge& e : h.edges())
        if (!g.has_edge(e.a, e.b)) throw std::invalid_argument(std::string(op) + ": anchor edge not in graph");
}

void require_path(const Graph& g, const std::vector<VertexId>& p, const char* op) {
    if (p.size() < 2) throw std::invalid_argument(std::string(op) + ": path needs at least 2 vertices");
    VertexSet seen;
    for (VertexId v : p) {
        if (!g.has_vertex(v)) throw std::invalid_argument(std::string(op) + ": path vertex not in graph");
        seen.push_back(v);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument(std::string(op) + ": repeated path vertex");
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1]))
            throw std::invalid_argument(std::string(op) + ": consecutive path vertices not adjacent");
}

BridgeDecomposition decompose(const Graph& g, const Graph& h) {
    BridgeDecomposition out;
    const VertexSet hv = h.vertices();
    Graph rest = delete_vertices(g, set_intersection(g.vertices(), hv));
    for (const VertexSet& comp : components(rest)) {
        VertexSet attach;
        for (VertexId v : comp)
            for (VertexId w : g.neighbors(v))
                if (set_contains(hv, w)) attach.push_back(w);
        out.bridges.push_back({comp, make_set(std::move(attach))});
    }
    for (const Edge& e : g.edges())
        if (set_contains(hv, e.a) && set_contains(hv, e.b) && !h.has_edge(e.a, e.b))
            out.trivial_bridges.push_back(e);
    return out;
}

Graph path_subgraph(const Graph& g, const std::vector<VertexId>& p) {
    GraphBuilder b;
    VertexSet sorted(p.begin(), p.end());
    std::sort(sorted.begin(), sorted.end());
    for (VertexId v : sorted) b.add_vertex_with_id(v, g.name(v));
    for (std::size_t i = 0; i + 1 < p.size(); ++i) b.add_edge(p[i], p[i + 1]);
    return b.build();
}

} // namespace

int kappa_x_brute(const RootedGraph& rg) {
    guard_size(rg.graph, 14, "kappa_x_brute");
    const MaskView mv(rg.graph);
    const int n = rg.graph.order();
    std::uint32_t root_mask = 0;
    for (VertexId x : rg.roots) root_mask |= (1u << mv.index(x));

    auto separates = [&](std::uint32_t s) {
        std::uint32_t rest = mv.all & ~s;
        int rooted_components = 0;
        std::uint32_t left = rest;
        while (left) {
            std::uint32_t comp = left & (~left + 1);
            for (;;) {
                std::uint32_t next = comp;
                for (std::uint32_t t = comp; t;) {
                    int i = std::countr_zero(t);
                    t &= t - 1;
                    next |= mv.adj[static_cast<std::size_t>(i)] & rest;
                }
                if (next == comp) break;
                comp = next;
            }
            if (comp & root_mask) ++rooted_components;
            left &= ~comp;
        }
        return rooted_components >= 2;
    };

    const int bound = static_cast<int>(rg.roots.size()) - 1;
    for (int size = 0; size < bound; ++size) {
        if (size > n) break;
        // Gosper's hack over n-bit masks of the given popcount.
        if (size == 0) {
            if (separates(0)) return 0;
            continue;
        }
        std::uint32_t s = (1u << size) - 1;
        const std::uint32_t limit = 1u << n;
        while (s < limit) {
            if (separates(s)) return size;
            std::uint32_t c = s & (~s + 1);
            std::uint32_t r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return bound;
}

BridgeDecomposition bridges(const Graph& g, const Graph& h) {
    require_subgraph(g, h, "bridges");
    if (!is_connected(g)) throw std::invalid_argument("bridges: graph must be connected");
    return decompose(g, h);
}

bool is_tutte_path(const Graph& g, const std::vector<VertexId>& p, const Graph* anchor) {
    require_path(g, p, "is_tutte_path");
    if (anchor) require_subgraph(g, *anchor, "is_tutte_path");
    Graph hp = path_subgraph(g, p);
    BridgeDecomposition d = decompose(g, hp);
    for (const auto& b : d.bridges) {
        if (b.attachments.size() > 3) return false;
        if (anchor) {
            // The bridge contains an anchor edge iff some anchor edge lies in
            // its inner part or joins inner to an attachment. Trivial bridges
            // have exactly two attachments, so only these need the check.
            bool holds_anchor_edge = false;
            for (const Edge& e : anchor->edges()) {
                bool a_in = set_contains(b.inner, e.a), b_in = set_contains(b.inner, e.b);
                if ((a_in && b_in) || (a_in && set_contains(b.attachments, e.b)) ||
                    (b_in && set_contains(b.attachments, e.a))) {
                    holds_anchor_edge = true;
                    break;
                }
            }
            if (holds_anchor_edge && b.attachments.size() != 2) return false;
        }
    }
    return true;
}

std::optional<std::vector<VertexId>> find_tutte_path_brute(const Graph& g, VertexId y, VertexId z,
                                                           Edge e, const Graph* anchor) {
    guard_size(g, 12, "find_tutte_path_brute");
    if (!g.has_vertex(y) || !g.has_vertex(z) || y == z)
        throw std::invalid_argument("find_tutte_path_brute: endpoints must be distinct vertices");
    if (!g.has_edge(e.a, e.b)) throw std::invalid_argument("find_tutte_path_brute: forced edge missing");
    if (!is_k_connected(g, 2)) throw std::invalid_argument("find_tutte_path_brute: graph not 2-connected");
    if (anchor) require_subgraph(g, *anchor, "find_tutte_path_brute");

    std::vector<VertexId> path{y};
    VertexSet visited{y};
    std::optional<std::vector<VertexId>> result;

    auto edge_used = [&]() {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if ((path[i] == e.a && path[i + 1] == e.b) || (path[i] == e.b && path[i + 1] == e.a))
                return true;
        }
        return false;
    };

    auto dfs = [&](auto&& self, VertexId cur) -> bool {
        if (cur == z) {
            if (edge_used() && is_tutte_path(g, path, anchor)) {
                result = path;
                return true;
            }
            return false;
        }
        // Forced-edge feasibility: once both ends are on the path the edge
        // must already have been traversed.
        if (set_contains(visited, e.a) && set_contains(visited, e.b) && !edge_used()) return false;
        for (VertexId w : g.neighbors(cur)) {
            if (set_contains(visited, w)) continue;
            path.push_back(w);
            visited.insert(std::lower_bound(visited.begin(), visited.end(), w), w);
            if (self(self, w)) return true;
            path.pop_back();
            visited.erase(std::lower_bound(visited.begin(), visited.end(), w));
        }
        return false;
    };
    dfs(dfs, y);
    return result;
}

std::optional<DegreeBoundedTree> exists_x_spanning_tree(
    const RootedGraph& rg, int t, std::optional<std::pair<VertexId, VertexId>> leaf_roots) {
    guard_size(rg.graph, 14, "exists_x_spanning_tree");
    if (t < 1) throw std::invalid_argument("exists_x_spanning_tree: degree bound must be >= 1");
    if (leaf_roots) {
        auto [l1, l2] = *leaf_roots;
        if (!set_contains(rg.roots, l1) || !set_contains(rg.roots, l2) || l1 == l2)
            throw std::invalid_argument("exists_x_spanning_tree: designated leaves must be distinct roots");
    }
    const MaskView mv(rg.graph);
    const int n = rg.graph.order();
    std::uint32_t root_mask = 0;
    for (VertexId x : rg.roots) root_mask |= (1u << mv.index(x));

    auto cap_of = [&](int i) {
        VertexId v = mv.vertex(i);
        if (leaf_roots && (v == leaf_roots->first || v == leaf_roots->second)) return 1;
        return t;
    };

    // Spanning-tree search on the vertices of `mask`: grow a connected
    // subtree from the least vertex, branching over frontier edges, with
    // degree caps and a (covered, residual-capacity) memo.
    auto try_tree = [&](std::uint32_t mask) -> std::optional<Graph> {
        if (!mv.connected(mask)) return std::nullopt;
        std::vector<int> order;
        for (std::uint32_t s = mask; s;) {
            int i = std::countr_zero(s);
            s &= s - 1;
            order.push_back(i);
        }
        std::vector<int> used(static_cast<std::size_t>(n), 0);
        std::vector<std::pair<int, int>> tree_edges;
        std::set<std::pair<std::uint32_t, std::uint64_t>> dead;

        auto residual_key = [&](std::uint32_t covered) {
            std::uint64_t key = 0;
            for (int i : order)
                if (covered & (1u << i))
                    key = key * 15u + static_cast<std::uint64_t>(cap_of(i) - used[static_cast<std::size_t>(i)]);
            return key;
        };
        // Reachability prune: every uncovered vertex of mask must be reachable
        // from an unsaturated covered vertex through uncovered vertices.
        auto feasible = [&](std::uint32_t covered) {
            std::uint32_t sources = 0;
            for (int i : order)
                if ((covered & (1u << i)) && used[static_cast<std::size_t>(i)] < cap_of(i))
                    sources |= (1u << i);
            std::uint32_t reach = sources;
            for (;;) {
                std::uint32_t next = reach;
                for (std::uint32_t s = reach; s;) {
                    int i = std::countr_zero(s);
                    s &= s - 1;
                    next |= mv.adj[static_cast<std::size_t>(i)] & mask & ~covered;
                }
                // only traverse through uncovered vertices
                next = (next & ~covered) | sources;
                std::uint32_t grown = next | reach;
                if (grown == reach) break;
                reach = grown;
            }
            return (mask & ~covered & ~reach) == 0;
        };

        int start = order[0];
        auto dfs = [&](auto&& self, std::uint32_t covered) -> bool {
            if (covered == mask) return true;
            if (!feasible(covered)) return false;
            auto key = std::make_pair(covered, residual_key(covered));
            if (dead.contains(key)) return false;
            for (int i : order) {
                if (!(covered & (1u << i))) continue;
                if (used[static_cast<std::size_t>(i)] >= cap_of(i)) continue;
                std::uint32_t cand = mv.adj[static_cast<std::size_t>(i)] & mask & ~covered;
                for (std::uint32_t s = cand; s;) {
                    int j = std::countr_zero(s);
                    s &= s - 1;
                    if (cap_of(j) < 1) continue;
                    used[static_cast<std::size_t>(i)]++;
                    used[static_cast<std::size_t>(j)]++;
                    tree_edges.emplace_back(i, j);
                    if (self(self, covered | (1u << j))) return true;
                    tree_edges.pop_back();
                    used[static_cast<std::size_t>(i)]--;
                    used[static_cast<std::size_t>(j)]--;
                }
            }
            dead.insert(key);
            return false;
        };
        if (!dfs(dfs, 1u << start)) return std::nullopt;
        GraphBuilder b;
        for (int i : order) b.add_vertex_with_id(mv.vertex(i), rg.graph.name(mv.vertex(i)));
        for (auto [i, j] : tree_edges) b.add_edge(mv.vertex(i), mv.vertex(j));
        return b.build();
    };

    std::uint32_t nonroot = mv.all & ~root_mask;
    std::vector<int> nonroot_idx;
    for (std::uint32_t s = nonroot; s;) {
        int i = std::countr_zero(s);
        s &= s - 1;
        nonroot_idx.push_back(i);
    }
    const int extra = static_cast<int>(nonroot_idx.size());
    for (int size = 0; size <= extra; ++size) {
        // All subsets of non-root vertices of the given size, in ascending
        // mask order for determinism.
        std::vector<int> pick(static_cast<std::size_t>(size));
        auto combos = [&](auto&& self, int from, int depth, std::uint32_t acc) -> std::optional<Graph> {
            if (depth == size) return try_tree(acc | root_mask);
            for (int p = from; p <= extra - (size - depth); ++p) {
                auto r = self(self, p + 1, depth + 1, acc | (1u << nonroot_idx[static_cast<std::size_t>(p)]));
                if (r) return r;
            }
            return std::nullopt;
        };
        if (auto tree = combos(combos, 0, 0, 0)) return DegreeBoundedTree{*tree, t};
    }
    return std::nullopt;
}

std::optional<std::vector<VertexId>> exists_x_spanning_path(const RootedGraph& rg, VertexId x1,
                                                            VertexId x2,
                                                            const std::vector<Edge>& forced) {
    guard_size(rg.graph, 14, "exists_x_spanning_path");
    if (!set_contains(rg.roots, x1) || !set_contains(rg.roots, x2) || x1 == x2)
        throw std::invalid_argument("exists_x_spanning_path: endpoints must be distinct roots");
    if (forced.size() > 1) throw std::invalid_argument("exists_x_spanning_path: at most one forced edge");
    for (const Edge& e : forced) {
        if (!rg.graph.has_edge(e.a, e.b) || !set_contains(rg.roots, e.a) || !set_contains(rg.roots, e.b))
            throw std::invalid_argument("exists_x_spanning_path: forced edge must join roots in G");
        if ((e.a == x1 && e.b == x2) || (e.a == x2 && e.b == x1))
            throw std::invalid_argument("exists_x_spanning_path: forced edge equals the endpoint pair");
    }
    const MaskView mv(rg.graph);
    std::uint32_t root_mask = 0;
    for (VertexId x : rg.roots) root_mask |= (1u << mv.index(x));
    const std::uint32_t b1 = 1u << mv.index(x1);
    const std::uint32_t b2 = 1u << mv.index(x2);
    const bool has_forced = !forced.empty();
    const std::uint32_t fa = has_forced ? (1u << mv.index(forced[0].a)) : 0;
    const std::uint32_t fb = has_forced ? (1u << mv.index(forced[0].b)) : 0;

    std::vector<VertexId> path{x1};
    std::optional<std::vector<VertexId>> result;

    auto dfs = [&](auto&& self, int cur, std::uint32_t visited, bool used) -> bool {
        if (mv.vertex(cur) == x2) {
            if ((root_mask & ~visited) == 0 && (!has_forced || used)) {
                result = path;
                return true;
            }
            return false;
        }
        if (has_forced && !used && (visited & fa) && (visited & fb)) return false;
        // Unvisited roots and x2 must remain reachable from cur.
        std::uint32_t open = mv.all & ~visited;
        std::uint32_t reach = 1u << cur;
        for (;;) {
            std::uint32_t next = reach;
            for (std::uint32_t s = reach; s;) {
                int i = std::countr_zero(s);
                s &= s - 1;
                next |= mv.adj[static_cast<std::size_t>(i)] & open;
            }
            if (next == reach) break;
            reach = next;
        }
        if (((root_mask | b2) & ~visited & ~reach) != 0) return false;
        std::uint32_t cand = mv.adj[static_cast<std::size_t>(cur)] & ~visited;
        for (std::uint32_t s = cand; s;) {
            int j = std::countr_zero(s);
            s &= s - 1;
            std::uint32_t jb = 1u << j;
            bool step_forced = has_forced && (((1u << cur) == fa && jb == fb) || ((1u << cur) == fb && jb == fa));
            path.push_back(mv.vertex(j));
            if (self(self, j, visited | jb, used || step_forced)) return true;
            path.pop_back();
        }
        return false;
    };
    dfs(dfs, static_cast<int>(mv.index(x1)), b1, false);
    return result;
}

std::optional<std::vector<VertexId>> exists_x_spanning_cycle(const RootedGraph& rg,
                                                             const VertexSet& avoid) {
    guard_size(rg.graph, 14, "exists_x_spanning_cycle");
    VertexSet av = make_set(avoid);
    if (av.size() > 2) throw std::invalid_argument("exists_x_spanning_cycle: at most two avoided vertices");
    for (VertexId v : av)
        if (!rg.graph.has_vertex(v))
            throw std::invalid_argument("exists_x_spanning_cycle: avoided vertex not in graph");
    VertexSet targets = set_difference(rg.roots, av);
    if (targets.empty())
        throw std::invalid_argument("exists_x_spanning_cycle: no roots remain after avoidance");
    Graph g = delete_vertices(rg.graph, av);

    const MaskView mv(g);
    std::uint32_t target_mask = 0;
    for (VertexId x : targets) target_mask |= (1u << mv.index(x));
    const VertexId start = targets[0];
    const int start_i = static_cast<int>(mv.index(start));

    std::vector<VertexId> path{start};
    std::optional<std::vector<VertexId>> result;

    auto dfs = [&](auto&& self, int cur, std::uint32_t visited) -> bool {
        if (path.size() >= 3 && (mv.adj[static_cast<std::size_t>(cur)] & (1u << start_i)) &&
            (target_mask & ~visited) == 0) {
            result = path;
            return true;
        }
        // Remaining targets and the start must stay reachable.
        std::uint32_t open = (mv.all & ~visited) | (1u << start_i);
        std::uint32_t reach = 1u << cur;
        for (;;) {
            std::uint32_t next = reach;
            for (std::uint32_t s = reach; s;) {
                int i = std::countr_zero(s);
                s &= s - 1;
                next |= mv.adj[static_cast<std::size_t>(i)] & open;
            }
            if (next == reach) break;
            reach = next;
        }
        if (((target_mask & ~visited) & ~reach) != 0) return false;
        if (!(reach & (1u << start_i))) return false;
        std::uint32_t cand = mv.adj[static_cast<std::size_t>(cur)] & ~visited & ~(1u << start_i);
        for (std::uint32_t s = cand; s;) {
            int j = std::countr_zero(s);
            s &= s - 1;
            path.push_back(mv.vertex(j));
            if (self(self, j, visited | (1u << j))) return true;
            path.pop_back();
        }
        return false;
    };
    dfs(dfs, start_i, 1u << start_i);
    return result;
}

bool has_minor_brute(const Graph& g, const Graph& pattern) {
    guard_size(g, 12, "has_minor_brute");
    if (pattern.order() > 6)
        throw resource_limit_error("has_minor_brute: pattern exceeds 6 vertices");
    if (pattern.order() == 0) return true;
    if (pattern.order() > g.order()) return false;

    const MaskView mv(g);
    // Pattern vertices by descending degree (ties: ascending id) so the most
    // constrained bags are placed first.
    std::vector<VertexId> pv = pattern.vertices();
    std::stable_sort(pv.begin(), pv.end(),
                     [&](VertexId a, VertexId b) { return pattern.degree(a) > pattern.degree(b); });

    const int k = pattern.order();
    std::vector<std::uint32_t> bag(static_cast<std::size_t>(k), 0);

    // Enumerate connected subsets of `allowed` exactly once each (canonical
    // seed = least vertex of the subset), invoking cb; cb returns true to stop.
    auto for_connected_subsets = [&](std::uint32_t allowed, auto&& cb) -> bool {
        std::vector<int> seeds;
        for (std::uint32_t s = allowed; s;) {
            int i = std::countr_zero(s);
            s &= s - 1;
            seeds.push_back(i);
        }
        for (int seed : seeds) {
            std::uint32_t seed_bit = 1u << seed;
            std::uint32_t scope = allowed & ~(seed_bit - 1);  // vertices >= seed
            auto grow = [&](auto&& self, std::uint32_t cur, std::uint32_t ext, std::uint32_t banned) -> bool {
                if (cb(cur)) return true;
                std::uint32_t avail = ext & ~banned;
                while (avail) {
                    int v = std::countr_zero(avail);
                    std::uint32_t vb = 1u << v;
                    avail &= ~vb;
                    std::uint32_t next_ext =
                        (ext | (mv.adj[static_cast<std::size_t>(v)] & scope)) & ~(cur | vb) & ~banned;
                    if (self(self, cur | vb, next_ext, banned)) return true;
                    banned |= vb;  // subsets without v at this branch point
                }
                return false;
            };
            if (grow(grow, seed_bit, mv.adj[static_cast<std::size_t>(seed)] & scope, 0)) return true;
        }
        return false;
    };

    auto place = [&](auto&& self, int p, std::uint32_t free) -> bool {
        if (p == k) return true;
        VertexId pvert = pv[static_cast<std::size_t>(p)];
        return for_connected_subsets(free, [&](std::uint32_t cand) {
            if (std::popcount(free & ~cand) < k - p - 1) return false;
            std::uint32_t cand_nbrs = mv.neighbors_of(cand);
            for (int q = 0; q < p; ++q) {
                if (pattern.has_edge(pvert, pv[static_cast<std::size_t>(q)]) &&
                    (cand_nbrs & bag[static_cast<std::size_t>(q)]) == 0)
                    return false;
            }
            bag[static_cast<std::size_t>(p)] = cand;
            if (self(self, p + 1, free & ~cand)) return true;
            return false;
        });
    };
    return place(place, 0, mv.all);
}

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0) return true;
    const int n = g.order();
    if (n < k + 1) return false;
    if (k == 1) return is_connected(g);

    // Minimum-degree vertex u0. A minimum separator either misses u0 (then it
    // cuts u0 from some nonneighbor) or contains it (then it cuts two of u0's
    // neighbors lying in different components, which are nonadjacent).
    VertexId u0 = g.vertices()[0];
    for (VertexId v : g.vertices())
        if (g.degree(v) < g.degree(u0)) u0 = v;
    if (g.degree(u0) < k) return false;

    for (VertexId v : g.vertices()) {
        if (v == u0 || g.has_edge(u0, v)) continue;
        if (!local_connectivity_at_least(g, u0, v, k)) return false;
    }
    const VertexSet& nbrs = g.neighbors(u0);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            if (g.has_edge(nbrs[i], nbrs[j])) continue;
            if (!local_connectivity_at_least(g, nbrs[i], nbrs[j], k)) return false;
        }
    return true;
}

std::optional<Graph> exists_spanning_two_connected_bounded_degree(const Graph& g, int maxdeg) {
    guard_size(g, 14, "exists_spanning_two_connected_bounded_degree");
    if (maxdeg < 2) throw std::invalid_argument("bounded-degree search: maxdeg must be >= 2");
    if (g.order() < 3 || !is_k_connected(g, 2)) return std::nullopt;

    std::set<std::vector<std::pair<VertexId, VertexId>>> seen;
    auto removed_key = [](const Graph& cur) {
        std::vector<std::pair<VertexId, VertexId>> key;
        for (const Edge& e : cur.edges()) key.emplace_back(e.a, e.b);
        return key;
    };

    auto dfs = [&](auto&& self, Graph cur) -> std::optional<Graph> {
        VertexId over = -1;
        for (VertexId v : cur.vertices())
            if (cur.degree(v) > maxdeg) {
                over = v;
                break;
            }
        if (over < 0) return cur;
        if (!seen.insert(removed_key(cur)).second) return std::nullopt;
        for (VertexId w : cur.neighbors(over)) {
            Graph next = cur.remove_edge(over, w);
            if (!is_k_connected(next, 2)) continue;
            if (auto r = self(self, std::move(next))) return r;
        }
        return std::nullopt;
    };
    return dfs(dfs, g);
}

} // namespace rminor

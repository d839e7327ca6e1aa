#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rminor/connectivity.hpp"
#include "rminor/graph.hpp"
#include "rminor/lifting.hpp"

namespace rminor {

// Bridges of an anchor subgraph H in G: one entry per component K of G-V(H)
// (inner = V(K), attachments = N_G(V(K)) within V(H)), plus the trivial
// bridges (edges of G-E(H) with both ends in H).
struct BridgeDecomposition {
    struct Bridge {
        VertexSet inner;
        VertexSet attachments;
    };
    std::vector<Bridge> bridges;
    std::vector<Edge> trivial_bridges;
};

// Exhaustive minimum X-separator size, capped at |X|-1. Guard: |V| <= 14.
int kappa_x_brute(const RootedGraph& rg);

// Complete bridge decomposition of subgraph h in connected g.
BridgeDecomposition bridges(const Graph& g, const Graph& h);

// True iff every non-trivial bridge of path p has at most three attachments
// and (when an anchor is given) every bridge containing an anchor edge has
// exactly two. p must be a path in g on >= 2 vertices.
bool is_tutte_path(const Graph& g, const std::vector<VertexId>& p, const Graph* anchor = nullptr);

// First (in DFS id order) path from y to z through edge e that passes
// is_tutte_path with the anchor, or nullopt. Guard: |V| <= 12; g 2-connected.
std::optional<std::vector<VertexId>> find_tutte_path_brute(const Graph& g, VertexId y, VertexId z,
                                                           Edge e, const Graph* anchor = nullptr);

// Steiner tree for X with max degree <= t (and the designated roots as leaves
// if requested), found by iterating over non-root vertex subsets in
// increasing size. Guard: |V| <= 14.
std::optional<DegreeBoundedTree> exists_x_spanning_tree(
    const RootedGraph& rg, int t,
    std::optional<std::pair<VertexId, VertexId>> leaf_roots = std::nullopt);

// Path from x1 to x2 through every root, containing the forced edges
// (|forced| <= 1, forced within G[X], x1x2 not forced). Guard: |V| <= 14.
std::optional<std::vector<VertexId>> exists_x_spanning_path(const RootedGraph& rg, VertexId x1,
                                                            VertexId x2,
                                                            const std::vector<Edge>& forced = {});

// Cycle of G - avoid through every root outside `avoid` (|avoid| <= 2; avoid
// may leave X). Guard: |V| <= 14.
std::optional<std::vector<VertexId>> exists_x_spanning_cycle(const RootedGraph& rg,
                                                             const VertexSet& avoid = {});

// Unrooted minor containment by exhaustive bag search. Guards: |V(g)| <= 12,
// |V(pattern)| <= 6.
bool has_minor_brute(const Graph& g, const Graph& pattern);

// True iff |V| >= k+1 and every vertex pair has k internally disjoint paths
// (flow-based; no size guard).
bool is_k_connected(const Graph& g, int k);

// Spanning 2-connected subgraph with maximum degree <= maxdeg, by deterministic
// search over edge removals. Guard: |V| <= 14. Pipeline support oracle.
std::optional<Graph> exists_spanning_two_connected_bounded_degree(const Graph& g, int maxdeg);

} // namespace rminor

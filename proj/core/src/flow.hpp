#pragma once

// Internal unit-capacity vertex-split max-flow used by the connectivity layer.
// Deterministic: arcs are laid out in vertex/edge id order and augmentation is
// BFS (shortest augmenting path, first-found in arc order).

#include "rminor/graph.hpp"

namespace rminor::detail {

// Maximum number of pairwise internally vertex-disjoint x-y paths (x, y
// uncapacitated). `cap >= 0` stops once that many augmenting paths are found
// (decision use); `cap < 0` computes the exact maximum.
// Precondition (checked by callers): x != y, both present, xy not an edge.
int vertex_disjoint_paths(const Graph& g, VertexId x, VertexId y, int cap = -1);

// The source-side minimum vertex cut between nonadjacent x and y: the unique
// minimum cut nearest x (vertices v with v_in residually reachable from x but
// v_out not). |cut| == vertex_disjoint_paths(g, x, y).
VertexSet min_vertex_cut(const Graph& g, VertexId x, VertexId y);

} // namespace rminor::detail

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rminor/graph.hpp"

namespace rminor {

// A graph together with its nonempty root set X.
struct RootedGraph {
    Graph graph;
    VertexSet roots;

    RootedGraph(Graph g, VertexSet x);  // validates: x nonempty and a subset of V(g)
};

// An X-separator: removing `vertices` leaves at least two components that
// contain a root; `witnesses` is one such separated root pair. Roots may
// appear inside separators.
struct Separator {
    VertexSet vertices;
    std::pair<VertexId, VertexId> witnesses;
};

// Union of component vertex sets of G - S. As produced by x_fragments these
// are single components flagged with whether they contain a root; callers
// compose unions for coarser fragments.
struct Fragment {
    Graph graph;  // the graph the fragment was cut from
    VertexSet vertices;
    Separator separator;
    bool rooted;
};

// Maximum number of internally vertex-disjoint x-y paths. Requires x != y and
// xy not an edge (invalid_argument otherwise).
int local_connectivity(const Graph& g, VertexId x, VertexId y);

// Capped decision form: true iff local_connectivity(g, x, y) >= k.
bool local_connectivity_at_least(const Graph& g, VertexId x, VertexId y, int k);

// Local connectivity of the root set: min(|X|-1, min over nonadjacent root
// pairs of local_connectivity); |X|-1 when G[X] is complete.
int kappa_x(const RootedGraph& rg);

// Capped decision form: true iff kappa_x(rg) >= k.
bool kappa_x_at_least(const RootedGraph& rg, int k);

// A minimum-cardinality X-separator with its witness pair, or nullopt iff
// G[X] is complete (no X-separator exists). Deterministic: the cut nearest the
// source side of the lexicographically least minimizing root pair.
std::optional<Separator> min_x_separator(const RootedGraph& rg);

// The finest fragments of a valid X-separator: one per component of G - S,
// each flagged whether it contains a root. Order: by least contained vertex.
std::vector<Fragment> x_fragments(const RootedGraph& rg, const Separator& s);

// For an X-free fragment F: the graph on (V - F) with S completed into a
// clique, same roots. Guarantees kappa_x(result) >= kappa_x(input).
RootedGraph clique_completion_reduce(const RootedGraph& rg, const Separator& s, const Fragment& f);

// T(F, F') = (F cap S') u (S' cap S) u (S cap F') for fragments of separators
// S resp. S' in the same graph (invalid_argument on mismatched graphs).
VertexSet cross_separator(const Fragment& f, const Fragment& fp);

} // namespace rminor

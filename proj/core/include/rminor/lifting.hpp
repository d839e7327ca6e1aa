#pragma once

#include <vector>

#include "rminor/graph.hpp"
#include "rminor/minor.hpp"

namespace rminor {

// A path-or-cycle spine plus one attachment path per off-spine root: the
// attachment for root x runs from x to its spine contact y, meets the spine
// only in y, contains no other root, and is vertex-disjoint from the other
// attachments.
struct GeneralizedStructure {
    bool cyclic;
    std::vector<VertexId> spine;  // vertex sequence; for cycles the last edge closes to spine.front()
    struct Attachment {
        VertexId root;
        std::vector<VertexId> path;  // from the root to the spine contact (last element)
    };
    std::vector<Attachment> attachments;
};

// Acyclic connected X-spanning subgraph with maximum degree at most `bound`.
struct DegreeBoundedTree {
    Graph tree;
    int bound;
};

// Lifts an X-spanning path p of the certified minor to an X-spanning
// generalized path of the host: spine = chosen inter-bag edges plus
// shortest intra-bag connectors; every off-spine root gets an attachment path
// inside its own bag.
GeneralizedStructure lift_path(const Certificate& c, const std::vector<VertexId>& p);

// Same construction with cyclic closure; cy lists the cycle's vertices once.
GeneralizedStructure lift_cycle(const Certificate& c, const std::vector<VertexId>& cy);

// Lifts a spanning tree t of the minor (max degree <= bound) to an X-spanning
// tree of the host with max degree <= bound + 1: one host edge per tree edge,
// a terminal-spanning tree inside each bag (nearest-terminal-first greedy),
// then one bag-internal attachment path per missed root. The returned bound
// is the guaranteed cap bound + 1.
DegreeBoundedTree lift_tree(const Certificate& c, const Graph& t, int bound);

// The subdivision image of a subgraph h of the embedded minor: every h-edge
// replaced by its embedding path. Subdivision preserves max degree (>= 2) and
// leaves; if h contains X the image is X-spanning.
Graph lift_subdivision(const SubdivisionEmbedding& e, const Graph& h);

// Structural checks used by tests and the verify command.
VerifyResult verify_generalized(const Graph& g, const VertexSet& roots, const GeneralizedStructure& s);
VerifyResult verify_degree_bounded_tree(const Graph& g, const VertexSet& roots, const DegreeBoundedTree& t);

} // namespace rminor

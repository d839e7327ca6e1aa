#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rminor/connectivity.hpp"
#include "rminor/graph.hpp"

namespace rminor {

// Witness that `minor` is an X-minor of `host`: disjoint nonempty connected
// bags, one per minor vertex, with v in its own bag and every minor edge
// backed by a host edge between the bags.
struct Certificate {
    Graph minor;
    std::map<VertexId, VertexSet> bags;  // minor vertex -> host vertices
    Graph host;
    VertexSet roots;
};

// Ordered list of directed contractions (kept, absorbed) leading from
// `initial` to `final_graph`; every step is X-legal at its moment.
struct ContractionTrace {
    std::vector<Edge> steps;
    Graph initial;
    Graph final_graph;
};

// Embedding of a subdivision of `minor` into `host` fixing all minor
// vertices: one host path per minor edge, internally disjoint from each other
// and from all branch vertices.
struct SubdivisionEmbedding {
    Graph minor;
    Graph host;
    // Key (a, b) with a < b; the stored path runs from a to b.
    std::map<std::pair<VertexId, VertexId>, std::vector<VertexId>> path_map;
};

// Outcome of a structural check; `reason` names the first violated clause.
struct VerifyResult {
    bool ok;
    std::string reason;
    explicit operator bool() const { return ok; }

    static VerifyResult pass() { return {true, ""}; }
    static VerifyResult fail(std::string why) { return {false, std::move(why)}; }
};

// True iff y is not a root; the contraction (x absorbs y) keeps the roots.
// Requires xy in E (invalid_argument otherwise).
bool is_x_legal(const RootedGraph& rg, VertexId x, VertexId y);

// For an X-legal edge (v, y): a minimum X-separator of size kappa_x(rg)
// containing both v and y if one exists, else nullopt. Nullopt iff
// kappa_x(G/vy) >= kappa_x(G); otherwise the witness is S' u {y} where S' is a
// minimum X-separator of G/vy (it necessarily contains v).
std::optional<Separator> kappa_drop_witness(const RootedGraph& rg, VertexId v, VertexId y);

// An X-legal edge whose contraction keeps kappa_x >= 4 (least id pair among
// valid candidates), or nullopt when G is already 4-connected. Requires G
// connected and kappa_x >= 4.
std::optional<Edge> find_safe_contraction(const RootedGraph& rg);

// Iterated safe contraction: a certified 4-connected minor rooted at X plus
// the replayable trace from the root component of G down to it. Requires
// kappa_x >= 4.
std::pair<Certificate, ContractionTrace> four_connected_x_minor(const RootedGraph& rg);

// k-connected topological X-minor for k in 1..3 with an embedding of a
// subdivision into G fixing V(M). Requires kappa_x >= k.
std::pair<Graph, SubdivisionEmbedding> topological_x_minor(const RootedGraph& rg, int k);

// Checks all Certificate invariants; the diagnostic names the first violated
// clause (bag nonempty/disjointness, bag connectivity, self-containment,
// root coverage, edge witness).
VerifyResult verify_certificate(const Certificate& c);

// Checks all SubdivisionEmbedding invariants (paths valid in host, endpoints
// match, internal disjointness, branch vertices fixed and avoided).
VerifyResult verify_embedding(const SubdivisionEmbedding& e);

// Replays the trace: every step must be an X-legal edge at its moment and the
// result must equal final_graph.
VerifyResult verify_trace(const ContractionTrace& t, const VertexSet& roots);

// The certificate a subdivision embedding induces: each path's interior joins
// the bag of the path's lexicographically smaller endpoint. Useful because a
// topological X-minor is in particular an X-minor.
Certificate embedding_to_certificate(const SubdivisionEmbedding& e, const VertexSet& roots);

} // namespace rminor

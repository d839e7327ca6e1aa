#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rminor/graph.hpp"
#include "rminor/lifting.hpp"
#include "rminor/minor.hpp"

namespace rminor::tools {

// On-disk structure kinds accepted by `verify` and emitted by the lift and
// oracle commands.
enum class StructureKind { Tree, GeneralizedPath, GeneralizedCycle, TuttePath };

std::string kind_name(StructureKind k);
std::optional<StructureKind> kind_from_name(const std::string& name);

// One parsed structure file; `kind` selects which member is meaningful.
struct Structure {
    StructureKind kind = StructureKind::Tree;
    DegreeBoundedTree tree{Graph(), 0};   // Tree
    GeneralizedStructure generalized;     // GeneralizedPath / GeneralizedCycle
    std::vector<VertexId> path;           // TuttePath
    std::vector<Edge> anchor;             // TuttePath; may be empty
};

// Text format, tokenized like the graph format (# comments, free whitespace).
// Counts precede every list so the reader never guesses:
//
//   structure tree              structure generalized-path     structure tutte-path
//   bound 3                     spine 4                        path 5
//   edges 2                     0 1 2 3                        0 1 2 3 4
//   0 1                         attachments 1                  anchor 1
//   1 2                         attach 2                       0 4
//                               5 2
//
// generalized-cycle reads like generalized-path with the spine closing back
// to its first vertex. Attachment paths run from the root to the spine
// contact. Vertex tokens are names when the graph names its vertices,
// decimal ids otherwise; reading resolves them against g.
void write_structure(std::ostream& out, const Graph& g, const Structure& s);
Structure read_structure(std::istream& in, const Graph& g);
Structure read_structure_file(const std::string& path, const Graph& g);

// Certificate JSON: {"schema": "rminor/certificate/v1", "minor": [[a,b],...],
// "bags": {"v": [host vertices]}, "trace": [[kept,absorbed],...]}, plus an
// optional "embedding" block {"paths": [{"edge": [a,b], "path": [...]}]}
// carrying subdivision paths. The host graph and the roots live in the graph
// file, not here; minor vertices are exactly the bag keys.
nlohmann::json certificate_to_json(const Certificate& c, const std::vector<Edge>& trace_steps);
nlohmann::json embedding_to_json(const SubdivisionEmbedding& e, const VertexSet& roots);

struct LoadedCertificate {
    Certificate cert;
    std::vector<Edge> trace_steps;                  // empty when the file has none
    std::optional<SubdivisionEmbedding> embedding;  // present when the file has one
};
LoadedCertificate certificate_from_json(const nlohmann::json& j, const Graph& host,
                                        const VertexSet& roots);
LoadedCertificate certificate_from_file(const std::string& path, const Graph& host,
                                        const VertexSet& roots);

} // namespace rminor::tools

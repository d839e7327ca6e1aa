#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "rminor/graph.hpp"

namespace rminor {

// Text graph format (one stream = one rooted graph):
//   line 1: `n m k` (vertex, edge and root counts)
//   line 2: k whitespace-separated vertex names (the root set; empty when k=0)
//   then m lines `u v`
// `#` starts a comment anywhere; names are ASCII tokens without whitespace.
// Loops and duplicate edges are rejected.
//
// Vertex identity in files is by name. If every mentioned name is a decimal
// integer in [0, n), ids are taken literally and unmentioned ids are isolated
// vertices; otherwise names are symbolic, ids are assigned in first-mention
// order, and all n vertices must be mentioned.
struct ParsedGraph {
    Graph graph;
    VertexSet roots;
};

ParsedGraph read_graph(std::istream& in);
ParsedGraph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g, const VertexSet& roots);
void write_graph_file(const std::string& path, const Graph& g, const VertexSet& roots);

// The name a vertex is rendered as in files: its explicit name, else decimal id.
std::string render_name(const Graph& g, VertexId v);

// Resolves a rendered name back to a vertex of g (nullopt if absent).
std::optional<VertexId> find_by_name(const Graph& g, const std::string& name);

} // namespace rminor

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rminor {

// Stable small-integer vertex identifier. Ids are assigned at creation, are
// never reused within one graph lineage, and all iteration is in id order so
// every "choose any" step downstream is reproducible.
using VertexId = int;

// Sorted, duplicate-free vector of vertex ids. All set-valued results use this
// representation.
using VertexSet = std::vector<VertexId>;

// Unordered for membership; ordered (a, b) when used as a contraction
// directive: a is kept, b is absorbed.
struct Edge {
    VertexId a;
    VertexId b;

    friend bool operator==(const Edge& l, const Edge& r) = default;
};

// Simple undirected graph with stable vertex ids and optional vertex names.
// Immutable value type: every operation returns a new graph; copies share the
// underlying representation.
class Graph {
public:
    Graph();

    // Vertices may carry names (ASCII tokens, used by the text format); a
    // vertex without an explicit name is rendered as its decimal id.
    Graph add_vertex(VertexId v, std::string name = {}) const;
    Graph add_edge(VertexId u, VertexId v) const;     // endpoints must exist; loops/duplicates rejected
    Graph remove_edge(VertexId u, VertexId v) const;  // edge must exist

    int order() const;           // |V|
    std::size_t size() const;    // |E|
    bool has_vertex(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;
    const VertexSet& vertices() const;
    const VertexSet& neighbors(VertexId v) const;  // sorted; v must exist
    int degree(VertexId v) const;
    std::vector<Edge> edges() const;  // each with a < b, lexicographically sorted
    const std::string& name(VertexId v) const;

    // Structural equality (vertex set + edge set); names do not participate.
    friend bool operator==(const Graph& l, const Graph& r);

    struct Rep;  // definition private to graph.cpp

private:
    std::shared_ptr<const Rep> rep_;
    explicit Graph(std::shared_ptr<const Rep> rep);
    friend class GraphBuilder;
};

// Mutable construction helper; use for generators and parsers where
// edge-at-a-time immutable updates would be quadratic.
class GraphBuilder {
public:
    // Adds a vertex with the next unused id (or the given id, which must be fresh).
    VertexId add_vertex(std::string name = {});
    void add_vertex_with_id(VertexId v, std::string name = {});
    void add_edge(VertexId u, VertexId v);
    bool has_edge(VertexId u, VertexId v) const;
    Graph build();

private:
    std::vector<VertexId> verts_;
    std::vector<std::string> names_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
};

// --- VertexSet helpers (inputs and outputs sorted) ---
bool set_contains(const VertexSet& s, VertexId v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet make_set(std::vector<VertexId> items);  // sorts and dedups

// --- Kernel operations ---

// Subgraph induced by s: vertex set s, exactly the edges of g inside s.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Directed contraction G/xy: removes y; every former neighbor z of y (z != x)
// becomes a neighbor of x unless it already was. The result stays simple.
Graph contract_edge(const Graph& g, VertexId x, VertexId y);

// Maximal connected vertex sets, ordered by least contained id.
std::vector<VertexSet> components(const Graph& g);

// Equals induced_subgraph(g, V(g) \ s).
Graph delete_vertices(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);  // true for the empty graph's degenerate case n <= 1

// Lexicographically least shortest path from `from` to the nearest member of
// `targets` (path includes both ends; nullopt if unreachable or targets empty).
// Among all shortest paths it returns the one whose vertex sequence is
// lexicographically least, by walking a BFS distance field toward the targets
// and always taking the least-id next vertex.
std::optional<std::vector<VertexId>> lex_shortest_path(const Graph& g, VertexId from,
                                                       const VertexSet& targets);

} // namespace rminor

#include "rminor/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rminor {

namespace {

std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

std::optional<long> parse_decimal(const std::string& s) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

long require_count(const std::vector<std::string>& tokens, std::size_t i, const char* what) {
    if (i >= tokens.size()) throw std::invalid_argument(std::string("graph format: missing ") + what);
    auto v = parse_decimal(tokens[i]);
    if (!v || *v < 0)
        throw std::invalid_argument(std::string("graph format: bad ") + what + " '" + tokens[i] + "'");
    return *v;
}

} // namespace

ParsedGraph read_graph(std::istream& in) {
    const auto tokens = tokenize(in);
    const long n = require_count(tokens, 0, "vertex count");
    const long m = require_count(tokens, 1, "edge count");
    const long k = require_count(tokens, 2, "root count");
    const std::size_t expected = 3 + static_cast<std::size_t>(k) + 2 * static_cast<std::size_t>(m);
    if (tokens.size() < expected) throw std::invalid_argument("graph format: truncated input");
    if (tokens.size() > expected) throw std::invalid_argument("graph format: trailing tokens");
    if (k > n) throw std::invalid_argument("graph format: more roots than vertices");

    const auto names_begin = tokens.begin() + 3;
    std::vector<std::string> mentioned(names_begin, tokens.end());

    bool numeric = true;
    for (const auto& s : mentioned) {
        auto v = parse_decimal(s);
        if (!v || *v >= n) {
            numeric = false;
            break;
        }
    }

    std::map<std::string, VertexId> ids;
    GraphBuilder b;
    if (numeric) {
        for (long v = 0; v < n; ++v) b.add_vertex_with_id(static_cast<VertexId>(v));
        for (const auto& s : mentioned) ids.emplace(s, static_cast<VertexId>(*parse_decimal(s)));
    } else {
        VertexId next = 0;
        for (const auto& s : mentioned)
            if (ids.emplace(s, next).second) ++next;
        if (next != n)
            throw std::invalid_argument("graph format: " + std::to_string(n) + " vertices declared but " +
                                        std::to_string(next) + " distinct names mentioned");
        // Ids follow first-mention order; names must be registered in id order.
        std::vector<std::string> by_id(ids.size());
        for (const auto& [name, id] : ids) by_id[id] = name;
        for (VertexId v = 0; v < next; ++v) b.add_vertex_with_id(v, by_id[v]);
    }

    VertexSet roots;
    for (long i = 0; i < k; ++i) roots.push_back(ids.at(tokens[3 + i]));
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
        throw std::invalid_argument("graph format: duplicate root");

    const std::size_t edges_at = 3 + static_cast<std::size_t>(k);
    for (long e = 0; e < m; ++e) {
        VertexId u = ids.at(tokens[edges_at + 2 * e]);
        VertexId v = ids.at(tokens[edges_at + 2 * e + 1]);
        if (u == v) throw std::invalid_argument("graph format: loop at '" + tokens[edges_at + 2 * e] + "'");
        if (b.has_edge(u, v)) throw std::invalid_argument("graph format: duplicate edge");
        b.add_edge(u, v);
    }
    return ParsedGraph{b.build(), std::move(roots)};
}

ParsedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return read_graph(in);
}

std::string render_name(const Graph& g, VertexId v) {
    const std::string& n = g.name(v);
    return n.empty() ? std::to_string(v) : n;
}

std::optional<VertexId> find_by_name(const Graph& g, const std::string& name) {
    for (VertexId v : g.vertices())
        if (render_name(g, v) == name) return v;
    return std::nullopt;
}

void write_graph(std::ostream& out, const Graph& g, const VertexSet& roots) {
    out << g.order() << ' ' << g.size() << ' ' << roots.size() << '\n';
    for (std::size_t i = 0; i < roots.size(); ++i) out << (i ? " " : "") << render_name(g, roots[i]);
    out << '\n';
    for (const Edge& e : g.edges())
        out << render_name(g, e.a) << ' ' << render_name(g, e.b) << '\n';
}

void write_graph_file(const std::string& path, const Graph& g, const VertexSet& roots) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    write_graph(out, g, roots);
}

} // namespace rminor

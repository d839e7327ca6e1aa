#include "formats.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rminor/graph_io.hpp"

namespace rminor::tools {

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

class TokenReader {
public:
    TokenReader(std::istream& in, const Graph& g) : tokens_(tokenize(in)), g_(g) {}

    std::string word(const char* what) {
        if (pos_ >= tokens_.size())
            throw std::invalid_argument(std::string("structure format: missing ") + what);
        return tokens_[pos_++];
    }

    void keyword(const char* expected) {
        std::string tok = word(expected);
        if (tok != expected)
            throw std::invalid_argument("structure format: expected '" + std::string(expected) +
                                        "', got '" + tok + "'");
    }

    long count(const char* what) {
        std::string tok = word(what);
        try {
            std::size_t used = 0;
            long v = std::stol(tok, &used);
            if (used == tok.size() && v >= 0) return v;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument(std::string("structure format: bad ") + what + " '" + tok + "'");
    }

    VertexId vertex(const char* what) {
        std::string tok = word(what);
        if (auto v = find_by_name(g_, tok)) return *v;
        throw std::invalid_argument("structure format: unknown vertex '" + tok + "'");
    }

    std::vector<VertexId> vertex_list(long len, const char* what) {
        std::vector<VertexId> out;
        for (long i = 0; i < len; ++i) out.push_back(vertex(what));
        return out;
    }

    void done() {
        if (pos_ != tokens_.size())
            throw std::invalid_argument("structure format: trailing tokens");
    }

private:
    std::vector<std::string> tokens_;
    const Graph& g_;
    std::size_t pos_ = 0;
};

Graph graph_from_edges(const Graph& host, const std::vector<Edge>& edges) {
    VertexSet verts;
    for (const Edge& e : edges) verts = set_union(verts, make_set({e.a, e.b}));
    GraphBuilder b;
    for (VertexId v : verts) b.add_vertex_with_id(v, host.has_vertex(v) ? host.name(v) : "");
    for (const Edge& e : edges) {
        if (b.has_edge(e.a, e.b))
            throw std::invalid_argument("structure format: duplicate edge");
        b.add_edge(e.a, e.b);
    }
    return b.build();
}

void write_vertex_line(std::ostream& out, const Graph& g, const std::vector<VertexId>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << render_name(g, vs[i]);
    out << '\n';
}

} // namespace

std::string kind_name(StructureKind k) {
    switch (k) {
        case StructureKind::Tree: return "tree";
        case StructureKind::GeneralizedPath: return "generalized-path";
        case StructureKind::GeneralizedCycle: return "generalized-cycle";
        case StructureKind::TuttePath: return "tutte-path";
    }
    return "tree";
}

std::optional<StructureKind> kind_from_name(const std::string& name) {
    if (name == "tree") return StructureKind::Tree;
    if (name == "generalized-path") return StructureKind::GeneralizedPath;
    if (name == "generalized-cycle") return StructureKind::GeneralizedCycle;
    if (name == "tutte-path") return StructureKind::TuttePath;
    return std::nullopt;
}

void write_structure(std::ostream& out, const Graph& g, const Structure& s) {
    out << "structure " << kind_name(s.kind) << '\n';
    switch (s.kind) {
        case StructureKind::Tree: {
            auto edges = s.tree.tree.edges();
            out << "bound " << s.tree.bound << '\n';
            out << "edges " << edges.size() << '\n';
            for (const Edge& e : edges)
                out << render_name(g, e.a) << ' ' << render_name(g, e.b) << '\n';
            break;
        }
        case StructureKind::GeneralizedPath:
        case StructureKind::GeneralizedCycle: {
            out << "spine " << s.generalized.spine.size() << '\n';
            write_vertex_line(out, g, s.generalized.spine);
            out << "attachments " << s.generalized.attachments.size() << '\n';
            for (const auto& a : s.generalized.attachments) {
                out << "attach " << a.path.size() << '\n';
                write_vertex_line(out, g, a.path);
            }
            break;
        }
        case StructureKind::TuttePath: {
            out << "path " << s.path.size() << '\n';
            write_vertex_line(out, g, s.path);
            out << "anchor " << s.anchor.size() << '\n';
            for (const Edge& e : s.anchor)
                out << render_name(g, e.a) << ' ' << render_name(g, e.b) << '\n';
            break;
        }
    }
}

Structure read_structure(std::istream& in, const Graph& g) {
    TokenReader r(in, g);
    r.keyword("structure");
    std::string kind_tok = r.word("structure kind");
    auto kind = kind_from_name(kind_tok);
    if (!kind)
        throw std::invalid_argument("structure format: unknown kind '" + kind_tok + "'");

    Structure s;
    s.kind = *kind;
    switch (*kind) {
        case StructureKind::Tree: {
            r.keyword("bound");
            long bound = r.count("bound");
            r.keyword("edges");
            long m = r.count("edge count");
            std::vector<Edge> edges;
            for (long i = 0; i < m; ++i) {
                VertexId u = r.vertex("edge endpoint");
                VertexId v = r.vertex("edge endpoint");
                edges.push_back({u, v});
            }
            s.tree = DegreeBoundedTree{graph_from_edges(g, edges), static_cast<int>(bound)};
            break;
        }
        case StructureKind::GeneralizedPath:
        case StructureKind::GeneralizedCycle: {
            s.generalized.cyclic = *kind == StructureKind::GeneralizedCycle;
            r.keyword("spine");
            long len = r.count("spine length");
            s.generalized.spine = r.vertex_list(len, "spine vertex");
            r.keyword("attachments");
            long k = r.count("attachment count");
            for (long i = 0; i < k; ++i) {
                r.keyword("attach");
                long plen = r.count("attachment length");
                if (plen == 0)
                    throw std::invalid_argument("structure format: empty attachment");
                auto path = r.vertex_list(plen, "attachment vertex");
                s.generalized.attachments.push_back({path.front(), std::move(path)});
            }
            break;
        }
        case StructureKind::TuttePath: {
            r.keyword("path");
            long len = r.count("path length");
            s.path = r.vertex_list(len, "path vertex");
            r.keyword("anchor");
            long m = r.count("anchor edge count");
            for (long i = 0; i < m; ++i) {
                VertexId u = r.vertex("anchor endpoint");
                VertexId v = r.vertex("anchor endpoint");
                s.anchor.push_back({u, v});
            }
            break;
        }
    }
    r.done();
    return s;
}

Structure read_structure_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open structure file: " + path);
    return read_structure(in, g);
}

nlohmann::json certificate_to_json(const Certificate& c, const std::vector<Edge>& trace_steps) {
    nlohmann::json j;
    j["schema"] = "rminor/certificate/v1";
    auto minor_edges = nlohmann::json::array();
    for (const Edge& e : c.minor.edges()) minor_edges.push_back({e.a, e.b});
    j["minor"] = std::move(minor_edges);
    nlohmann::json bags(nlohmann::json::value_t::object);
    for (const auto& [v, bag] : c.bags) bags[std::to_string(v)] = bag;
    j["bags"] = std::move(bags);
    auto trace = nlohmann::json::array();
    for (const Edge& e : trace_steps) trace.push_back({e.a, e.b});
    j["trace"] = std::move(trace);
    return j;
}

nlohmann::json embedding_to_json(const SubdivisionEmbedding& e, const VertexSet& roots) {
    nlohmann::json j = certificate_to_json(embedding_to_certificate(e, roots), {});
    auto paths = nlohmann::json::array();
    for (const auto& [key, path] : e.path_map)
        paths.push_back({{"edge", {key.first, key.second}}, {"path", path}});
    j["embedding"] = {{"paths", std::move(paths)}};
    return j;
}

LoadedCertificate certificate_from_json(const nlohmann::json& j, const Graph& host,
                                        const VertexSet& roots) {
    try {
        const auto& jbags = j.at("bags");
        if (!jbags.is_object())
            throw std::invalid_argument("certificate json: 'bags' must be an object");
        std::map<VertexId, VertexSet> bags;
        std::vector<VertexId> keys;
        for (const auto& [key, val] : jbags.items()) {
            int v = 0;
            try {
                std::size_t used = 0;
                v = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw std::invalid_argument("certificate json: bad bag key '" + key + "'");
            }
            bags[v] = make_set(val.get<std::vector<VertexId>>());
            keys.push_back(v);
        }
        VertexSet minor_vertices = make_set(std::move(keys));

        GraphBuilder mb;
        for (VertexId v : minor_vertices)
            mb.add_vertex_with_id(v, host.has_vertex(v) ? host.name(v) : "");
        for (const auto& je : j.at("minor")) {
            auto pair = je.get<std::vector<VertexId>>();
            if (pair.size() != 2)
                throw std::invalid_argument("certificate json: minor edges are pairs");
            if (!set_contains(minor_vertices, pair[0]) || !set_contains(minor_vertices, pair[1]))
                throw std::invalid_argument("certificate json: minor edge endpoint has no bag");
            if (mb.has_edge(pair[0], pair[1]))
                throw std::invalid_argument("certificate json: duplicate minor edge");
            mb.add_edge(pair[0], pair[1]);
        }
        Graph minor = mb.build();

        LoadedCertificate out{Certificate{minor, std::move(bags), host, roots}, {}, std::nullopt};
        for (const auto& je : j.value("trace", nlohmann::json::array())) {
            auto pair = je.get<std::vector<VertexId>>();
            if (pair.size() != 2)
                throw std::invalid_argument("certificate json: trace steps are pairs");
            out.trace_steps.push_back({pair[0], pair[1]});
        }
        if (j.contains("embedding")) {
            SubdivisionEmbedding emb{minor, host, {}};
            for (const auto& jp : j.at("embedding").at("paths")) {
                auto edge = jp.at("edge").get<std::vector<VertexId>>();
                if (edge.size() != 2)
                    throw std::invalid_argument("certificate json: embedding edges are pairs");
                auto key = std::minmax(edge[0], edge[1]);
                emb.path_map[{key.first, key.second}] = jp.at("path").get<std::vector<VertexId>>();
            }
            out.embedding = std::move(emb);
        }
        return out;
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("certificate json: ") + ex.what());
    }
}

LoadedCertificate certificate_from_file(const std::string& path, const Graph& host,
                                        const VertexSet& roots) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open certificate file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("certificate json: ") + ex.what());
    }
    return certificate_from_json(j, host, roots);
}

} // namespace rminor::tools

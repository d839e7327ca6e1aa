#include "pipelines.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>

#include "formats.hpp"
#include "rminor/errors.hpp"
#include "rminor/graph_io.hpp"
#include "rminor/lifting.hpp"
#include "rminor/minor.hpp"
#include "rminor/oracles.hpp"

namespace rminor::tools {

namespace {

using Clock = std::chrono::steady_clock;

// Thrown by step bodies to record a failed postcondition and stop the run.
struct StepFail {
    std::string reason;
};

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs one step, recording outcome and timing; the body returns the detail
// string. Returns false when the pipeline must stop.
bool step(PipelineReport& r, const std::string& name,
          const std::function<std::string()>& body) {
    auto t0 = Clock::now();
    StepReport s{name, "ok", "", 0.0};
    bool ok = true;
    try {
        s.detail = body();
    } catch (const StepFail& f) {
        s.outcome = "fail";
        s.detail = f.reason;
        ok = false;
    } catch (const resource_limit_error& e) {
        s.outcome = "resource-limit";
        s.detail = e.what();
        ok = false;
    } catch (const std::invalid_argument& e) {
        s.outcome = "fail";
        s.detail = e.what();
        ok = false;
    }
    s.seconds = secs_since(t0);
    r.steps.push_back(std::move(s));
    return ok;
}

void fill_input(PipelineReport& r, const RootedGraph& rg) {
    r.n = rg.graph.order();
    r.m = static_cast<int>(rg.graph.size());
    r.root_count = static_cast<int>(rg.roots.size());
    r.kappa = kappa_x(rg);
}

std::optional<Edge> least_root_edge(const RootedGraph& rg) {
    for (std::size_t i = 0; i < rg.roots.size(); ++i)
        for (std::size_t j = i + 1; j < rg.roots.size(); ++j)
            if (rg.graph.has_edge(rg.roots[i], rg.roots[j]))
                return Edge{rg.roots[i], rg.roots[j]};
    return std::nullopt;
}

std::string size_detail(const Graph& g) {
    return std::to_string(g.order()) + " vertices, " + std::to_string(g.size()) + " edges";
}

int max_degree(const Graph& g) {
    int d = 0;
    for (VertexId v : g.vertices()) d = std::max(d, g.degree(v));
    return d;
}

nlohmann::json edges_json(const Graph& g) {
    auto out = nlohmann::json::array();
    for (const Edge& e : g.edges()) out.push_back({e.a, e.b});
    return out;
}

void write_artifact(PipelineReport& r, const std::string& dir, const std::string& name,
                    const std::function<void(std::ostream&)>& body) {
    std::filesystem::create_directories(dir);
    std::string path = (std::filesystem::path(dir) / name).string();
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    body(out);
    r.artifacts.push_back(path);
}

} // namespace

int report_exit_code(const PipelineReport& r) {
    if (r.pass) return 0;
    for (const StepReport& s : r.steps)
        if (s.outcome == "resource-limit") return 3;
    return 1;
}

nlohmann::json report_to_json(const PipelineReport& r, bool with_timing) {
    nlohmann::json j;
    j["schema"] = "rminor/report/v1";
    j["command"] = r.command;
    j["input"] = {{"n", r.n}, {"m", r.m}, {"roots", r.root_count}, {"kappa", r.kappa}};
    auto steps = nlohmann::json::array();
    for (const StepReport& s : r.steps) {
        nlohmann::json js{{"name", s.name}, {"outcome", s.outcome}};
        if (!s.detail.empty()) js["detail"] = s.detail;
        if (with_timing) js["seconds"] = s.seconds;
        steps.push_back(std::move(js));
    }
    j["steps"] = std::move(steps);
    j["verdict"] = r.pass ? "pass" : "fail";
    if (!r.result.is_null()) j["result"] = r.result;
    j["artifacts"] = r.artifacts;
    return j;
}

PipelineReport run_theorem1(const RootedGraph& rg, const PipelineOptions& opt) {
    PipelineReport r;
    r.command = "pipeline thm1 --variant " + opt.variant;
    fill_input(r, rg);

    if (!step(r, "require local connectivity 3", [&]() -> std::string {
            if (r.kappa < 3) throw StepFail{"kappa is " + std::to_string(r.kappa)};
            return "kappa " + std::to_string(r.kappa);
        }))
        return r;

    const int t = opt.t > 0 ? opt.t : 4;  // variant iii; the lifted tree bound is t-1
    VertexId x1 = -1, x2 = -1;            // variant i leaf pair
    if (opt.variant == "i" &&
        !step(r, "choose the designated leaf pair", [&]() -> std::string {
            if (opt.from && opt.to) {
                x1 = *opt.from;
                x2 = *opt.to;
                if (x1 == x2) throw StepFail{"the designated leaves coincide"};
                if (!set_contains(rg.roots, x1) || !set_contains(rg.roots, x2))
                    throw StepFail{"designated leaves must be roots"};
                if (!rg.graph.has_edge(x1, x2))
                    throw StepFail{"designated leaves must span a host edge"};
            } else {
                auto e = least_root_edge(rg);
                if (!e) throw StepFail{"no edge joins two roots"};
                x1 = e->a;
                x2 = e->b;
            }
            return "leaves " + render_name(rg.graph, x1) + " and " + render_name(rg.graph, x2);
        }))
        return r;

    Graph minor;
    SubdivisionEmbedding emb{Graph(), Graph(), {}};
    if (!step(r, "extract a 3-connected topological minor", [&]() -> std::string {
            auto [m, e] = topological_x_minor(rg, 3);
            minor = m;
            emb = std::move(e);
            return "minor on " + size_detail(minor);
        }))
        return r;

    if (!step(r, "check the extraction", [&]() -> std::string {
            if (auto v = verify_embedding(emb); !v) throw StepFail{"embedding: " + v.reason};
            if (!(emb.minor == minor) || !(emb.host == rg.graph))
                throw StepFail{"embedding does not tie the minor to the host"};
            if (!is_k_connected(minor, 3)) throw StepFail{"minor is not 3-connected"};
            for (VertexId x : rg.roots)
                if (!minor.has_vertex(x)) throw StepFail{"minor misses a root"};
            return "embedding and connectivity verified";
        }))
        return r;

    Graph found;
    int bound = 0;  // degree bound carried by the lifted tree (variants i, iii)
    if (opt.variant == "i") {
        if (!step(r, "search the minor for a 3-tree with the designated leaves",
                  [&]() -> std::string {
                      auto tr = exists_x_spanning_tree(RootedGraph(minor, rg.roots), 3,
                                                       std::make_pair(x1, x2));
                      if (!tr) throw StepFail{"no such tree in the minor"};
                      found = tr->tree;
                      bound = 3;
                      return "tree on " + size_detail(found);
                  }))
            return r;
    } else if (opt.variant == "ii") {
        if (!step(r, "search the minor for a spanning 2-connected subgraph of degree at most 6",
                  [&]() -> std::string {
                      auto h = exists_spanning_two_connected_bounded_degree(minor, 6);
                      if (!h) throw StepFail{"no such subgraph in the minor"};
                      found = *h;
                      return "subgraph on " + size_detail(found);
                  }))
            return r;
    } else {
        if (!step(r, "search the minor for a degree-bounded tree", [&]() -> std::string {
                auto tr = exists_x_spanning_tree(RootedGraph(minor, rg.roots), t - 1);
                if (!tr)
                    throw StepFail{"no tree of degree at most " + std::to_string(t - 1) +
                                   " in the minor"};
                found = tr->tree;
                bound = t - 1;
                return "tree on " + size_detail(found);
            }))
            return r;
    }

    Graph lifted;
    if (!step(r, "lift through the embedding", [&]() -> std::string {
            lifted = lift_subdivision(emb, found);
            return "lifted structure on " + size_detail(lifted);
        }))
        return r;

    if (!step(r, "verify the lifted structure", [&]() -> std::string {
            if (opt.variant == "ii") {
                for (VertexId x : rg.roots)
                    if (!lifted.has_vertex(x)) throw StepFail{"a root is missing"};
                if (!is_k_connected(lifted, 2)) throw StepFail{"lift is not 2-connected"};
                if (max_degree(lifted) > 6) throw StepFail{"degree exceeds 6"};
                return "2-connected, max degree " + std::to_string(max_degree(lifted));
            }
            if (auto v = verify_degree_bounded_tree(rg.graph, rg.roots,
                                                    DegreeBoundedTree{lifted, bound});
                !v)
                throw StepFail{v.reason};
            if (opt.variant == "i" && (lifted.degree(x1) != 1 || lifted.degree(x2) != 1))
                throw StepFail{"a designated leaf has degree above 1"};
            return "tree verified, max degree " + std::to_string(max_degree(lifted));
        }))
        return r;

    r.result = edges_json(lifted);
    if (!opt.out_dir.empty()) {
        write_artifact(r, opt.out_dir, "minor.json", [&](std::ostream& out) {
            out << embedding_to_json(emb, rg.roots).dump(2) << '\n';
        });
        if (opt.variant != "ii")
            write_artifact(r, opt.out_dir, "tree.txt", [&](std::ostream& out) {
                Structure s;
                s.kind = StructureKind::Tree;
                s.tree = DegreeBoundedTree{lifted, bound};
                write_structure(out, rg.graph, s);
            });
    }
    r.pass = true;
    return r;
}

PipelineReport run_theorem3(const RootedGraph& rg, const PipelineOptions& opt) {
    PipelineReport r;
    r.command = "pipeline thm3 --variant " + opt.variant;
    fill_input(r, rg);

    if (!step(r, "require local connectivity 4", [&]() -> std::string {
            if (r.kappa < 4) throw StepFail{"kappa is " + std::to_string(r.kappa)};
            return "kappa " + std::to_string(r.kappa);
        }))
        return r;

    if (opt.variant == "i") {
        VertexId x1 = -1, x2 = -1;
        if (!step(r, "choose the endpoints", [&]() -> std::string {
                if (opt.from && opt.to) {
                    x1 = *opt.from;
                    x2 = *opt.to;
                    if (x1 == x2) throw StepFail{"the endpoints coincide"};
                    if (!set_contains(rg.roots, x1) || !set_contains(rg.roots, x2))
                        throw StepFail{"endpoints must be roots"};
                } else {
                    x1 = rg.roots[0];
                    x2 = rg.roots[1];
                }
                return "endpoints " + render_name(rg.graph, x1) + " and " +
                       render_name(rg.graph, x2);
            }))
            return r;

        std::vector<Edge> forced;
        if (opt.forced) forced.push_back(*opt.forced);
        std::vector<VertexId> path;
        if (!step(r, "search an X-spanning path in the host", [&]() -> std::string {
                auto p = exists_x_spanning_path(rg, x1, x2, forced);
                if (!p) throw StepFail{"no X-spanning path with these constraints"};
                path = *p;
                return "path on " + std::to_string(path.size()) + " vertices";
            }))
            return r;

        if (!step(r, "verify the path", [&]() -> std::string {
                if (path.front() != x1 || path.back() != x2)
                    throw StepFail{"endpoints do not match"};
                for (const Edge& f : forced) {
                    bool used = false;
                    for (std::size_t i = 0; i + 1 < path.size(); ++i)
                        if ((path[i] == f.a && path[i + 1] == f.b) ||
                            (path[i] == f.b && path[i + 1] == f.a))
                            used = true;
                    if (!used) throw StepFail{"the forced edge is not on the path"};
                }
                GeneralizedStructure gs{false, path, {}};
                if (auto v = verify_generalized(rg.graph, rg.roots, gs); !v)
                    throw StepFail{v.reason};
                return "path covers every root";
            }))
            return r;

        r.result = path;
        if (!opt.out_dir.empty())
            write_artifact(r, opt.out_dir, "path.txt", [&](std::ostream& out) {
                Structure s;
                s.kind = StructureKind::GeneralizedPath;
                s.generalized = GeneralizedStructure{false, path, {}};
                write_structure(out, rg.graph, s);
            });
        r.pass = true;
        return r;
    }

    if (opt.variant == "ii") {
        VertexSet kept_roots = set_difference(rg.roots, opt.avoid);
        if (!step(r, "exclude the avoided vertices", [&]() -> std::string {
                if (opt.avoid.size() > 2) throw StepFail{"at most two vertices may be avoided"};
                if (kept_roots.empty()) throw StepFail{"every root is excluded"};
                std::string who;
                for (VertexId v : opt.avoid) who += " " + render_name(rg.graph, v);
                return opt.avoid.empty() ? "nothing excluded" : "excluding" + who;
            }))
            return r;

        std::vector<VertexId> cycle;
        if (!step(r, "search a spanning cycle off the excluded vertices", [&]() -> std::string {
                auto c = exists_x_spanning_cycle(rg, opt.avoid);
                if (!c) throw StepFail{"no spanning cycle avoiding the excluded vertices"};
                cycle = *c;
                return "cycle on " + std::to_string(cycle.size()) + " vertices";
            }))
            return r;

        Graph reduced = delete_vertices(rg.graph, opt.avoid);
        if (!step(r, "verify the cycle", [&]() -> std::string {
                GeneralizedStructure gs{true, cycle, {}};
                if (auto v = verify_generalized(reduced, kept_roots, gs); !v)
                    throw StepFail{v.reason};
                return "cycle covers every remaining root";
            }))
            return r;

        r.result = cycle;
        if (!opt.out_dir.empty()) {
            write_artifact(r, opt.out_dir, "instance.txt", [&](std::ostream& out) {
                write_graph(out, reduced, kept_roots);
            });
            write_artifact(r, opt.out_dir, "cycle.txt", [&](std::ostream& out) {
                Structure s;
                s.kind = StructureKind::GeneralizedCycle;
                s.generalized = GeneralizedStructure{true, cycle, {}};
                write_structure(out, reduced, s);
            });
        }
        r.pass = true;
        return r;
    }

    // Variant iii: minor route with a lift.
    const int t = opt.t > 0 ? opt.t : 2;
    Certificate cert{Graph(), {}, Graph(), {}};
    ContractionTrace trace{{}, Graph(), Graph()};
    if (!step(r, "extract a 4-connected minor", [&]() -> std::string {
            auto [c, tr] = four_connected_x_minor(rg);
            cert = std::move(c);
            trace = std::move(tr);
            return "minor on " + size_detail(cert.minor) + " after " +
                   std::to_string(trace.steps.size()) + " contractions";
        }))
        return r;

    if (!step(r, "check the extraction", [&]() -> std::string {
            if (auto v = verify_certificate(cert); !v) throw StepFail{"certificate: " + v.reason};
            if (!is_k_connected(cert.minor, 4)) throw StepFail{"minor is not 4-connected"};
            if (auto v = verify_trace(trace, rg.roots); !v) throw StepFail{"trace: " + v.reason};
            if (!(trace.final_graph == cert.minor))
                throw StepFail{"trace does not land on the minor"};
            return "certificate, connectivity and trace verified";
        }))
        return r;

    Graph minor_tree;
    if (!step(r, "search a degree-bounded spanning tree of the minor", [&]() -> std::string {
            auto tr = exists_x_spanning_tree(RootedGraph(cert.minor, cert.minor.vertices()), t);
            if (!tr)
                throw StepFail{"no spanning tree of degree at most " + std::to_string(t) +
                               " in the minor"};
            minor_tree = tr->tree;
            return "tree of max degree " + std::to_string(max_degree(minor_tree));
        }))
        return r;

    DegreeBoundedTree lifted{Graph(), 0};
    if (!step(r, "lift the tree", [&]() -> std::string {
            lifted = lift_tree(cert, minor_tree, t);
            return "lifted tree on " + size_detail(lifted.tree) + ", bound " +
                   std::to_string(lifted.bound);
        }))
        return r;

    if (!step(r, "verify the lifted structure", [&]() -> std::string {
            if (auto v = verify_degree_bounded_tree(rg.graph, rg.roots, lifted); !v)
                throw StepFail{v.reason};
            return "tree verified, max degree " + std::to_string(max_degree(lifted.tree));
        }))
        return r;

    r.result = edges_json(lifted.tree);
    if (!opt.out_dir.empty()) {
        write_artifact(r, opt.out_dir, "minor.json", [&](std::ostream& out) {
            out << certificate_to_json(cert, trace.steps).dump(2) << '\n';
        });
        write_artifact(r, opt.out_dir, "tree.txt", [&](std::ostream& out) {
            Structure s;
            s.kind = StructureKind::Tree;
            s.tree = lifted;
            write_structure(out, rg.graph, s);
        });
    }
    r.pass = true;
    return r;
}

} // namespace rminor::tools

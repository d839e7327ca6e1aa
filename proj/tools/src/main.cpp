#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "formats.hpp"
#include "pipelines.hpp"
#include "rminor/connectivity.hpp"
#include "rminor/errors.hpp"
#include "rminor/generators.hpp"
#include "rminor/graph_io.hpp"
#include "rminor/lifting.hpp"
#include "rminor/minor.hpp"
#include "rminor/oracles.hpp"

using namespace rminor;
using namespace rminor::tools;

namespace {

VertexId resolve_vertex(const Graph& g, const std::string& token) {
    if (auto v = find_by_name(g, token)) return *v;
    throw std::invalid_argument("unknown vertex '" + token + "'");
}

RootedGraph load_rooted(const std::string& path) {
    ParsedGraph p = read_graph_file(path);
    return RootedGraph(p.graph, p.roots);
}

void with_output(const std::string& out_path, const std::function<void(std::ostream&)>& body) {
    if (out_path.empty()) {
        body(std::cout);
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open for writing: " + out_path);
    body(out);
}

// The structure text emitted by the lift and oracle commands.
void print_structure(const std::string& out_path, const Graph& g, const Structure& s) {
    with_output(out_path, [&](std::ostream& out) { write_structure(out, g, s); });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rooted spanning structures: local connectivity, certified minors, lifts and "
                 "exhaustive oracles over text graph files"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    bool deterministic = false;
    bool no_timing = false;
    bool json_out = false;
    app.add_option("--seed", seed, "seed for the random planar generator")->capture_default_str();
    app.add_flag("--deterministic", deterministic,
                 "force sequential search order (searches are sequential already; reserved)");
    app.add_flag("--no-timing", no_timing, "omit timing fields from JSON reports");
    app.add_flag("--json", json_out, "machine-readable output for query commands");

    int rc = 0;

    // generate ---------------------------------------------------------------
    auto* gen = app.add_subcommand("generate", "write a rooted instance in the text graph format");
    gen->require_subcommand(1);
    std::string gen_out;
    gen->add_option("--out", gen_out, "output file (default stdout)");
    auto emit = [&](const FamilyInstance& inst) {
        with_output(gen_out, [&](std::ostream& out) {
            write_graph(out, inst.rooted.graph, inst.rooted.roots);
        });
        rc = 0;
    };

    auto* gen_gt_cmd = gen->add_subcommand("gt", "rotational family: root degree 6, kappa 6");
    int gt_t = 7;
    gen_gt_cmd->add_option("--t", gt_t, "sector count (at least 7)")
        ->capture_default_str()
        ->check(CLI::Range(7, 1000));
    gen_gt_cmd->callback([&] { emit(gen_gt(gt_t)); });

    auto* gen_fl_cmd =
        gen->add_subcommand("fl", "brick-wall strip family: root degree l, kappa l");
    int fl_l = 4, fl_whites = 5;
    gen_fl_cmd->add_option("--l", fl_l, "strip depth (at least 4)")
        ->capture_default_str()
        ->check(CLI::Range(4, 1000));
    gen_fl_cmd->add_option("--whites", fl_whites, "root count (at least l+1)")
        ->capture_default_str();
    gen_fl_cmd->callback([&] { emit(gen_fl(fl_l, fl_whites)); });

    auto* gen_hl_cmd = gen->add_subcommand("hl", "grid strip family: root degree l, kappa l");
    int hl_l = 4;
    gen_hl_cmd->add_option("--l", hl_l, "strip depth (at least 2)")
        ->capture_default_str()
        ->check(CLI::Range(2, 1000));
    gen_hl_cmd->callback([&] { emit(gen_hl(hl_l)); });

    auto* gen_planar_cmd =
        gen->add_subcommand("planar", "random planar triangulation with greedily sampled roots");
    int planar_n = 12, planar_roots = 4;
    gen_planar_cmd->add_option("--n", planar_n, "vertex count (at least 4)")
        ->capture_default_str()
        ->check(CLI::Range(4, 100000));
    gen_planar_cmd->add_option("--roots", planar_roots, "root sample size")
        ->capture_default_str()
        ->check(CLI::Range(1, 100000));
    gen_planar_cmd->callback(
        [&] { emit(make_random_planar_instance(planar_n, seed, planar_roots)); });

    // kappa ------------------------------------------------------------------
    auto* kap = app.add_subcommand("kappa", "local connectivity of the root set");
    std::string kappa_file;
    kap->add_option("file", kappa_file, "graph file")->required();
    kap->callback([&] {
        RootedGraph rg = load_rooted(kappa_file);
        int k = kappa_x(rg);
        if (json_out)
            std::cout << nlohmann::json{{"schema", "rminor/kappa/v1"}, {"kappa", k}}.dump()
                      << '\n';
        else
            std::cout << k << '\n';
        rc = 0;
    });

    // separator ----------------------------------------------------------------
    auto* sep = app.add_subcommand("separator",
                                   "minimum root-set separator with its separated witness pair");
    std::string sep_file;
    sep->add_option("file", sep_file, "graph file")->required();
    sep->callback([&] {
        RootedGraph rg = load_rooted(sep_file);
        auto s = min_x_separator(rg);
        if (json_out) {
            nlohmann::json j{{"schema", "rminor/separator/v1"}};
            if (s) {
                j["separator"] = s->vertices;
                j["witness"] = {s->witnesses.first, s->witnesses.second};
            } else {
                j["separator"] = nullptr;
            }
            std::cout << j.dump() << '\n';
        } else if (!s) {
            std::cout << "none\n";
        } else {
            std::cout << "size " << s->vertices.size() << '\n';
            std::cout << "separator";
            for (VertexId v : s->vertices) std::cout << ' ' << render_name(rg.graph, v);
            std::cout << '\n';
            std::cout << "witness " << render_name(rg.graph, s->witnesses.first) << ' '
                      << render_name(rg.graph, s->witnesses.second) << '\n';
        }
        rc = 0;
    });

    // minor --------------------------------------------------------------------
    auto* mnr = app.add_subcommand(
        "minor", "extract a k-connected rooted minor and write its certificate as JSON");
    std::string minor_file, minor_out;
    int minor_k = 4;
    bool topological = false;
    mnr->add_option("file", minor_file, "graph file")->required();
    mnr->add_option("--k", minor_k, "connectivity target")->required()->check(CLI::Range(1, 4));
    mnr->add_flag("--topological", topological, "subdivision route (k at most 3)");
    mnr->add_option("--out", minor_out, "output file (default stdout)");
    mnr->callback([&] {
        if (topological && minor_k > 3)
            throw std::invalid_argument("--topological is only available for k at most 3");
        RootedGraph rg = load_rooted(minor_file);
        nlohmann::json j;
        Graph extracted;
        if (minor_k == 4) {
            auto [cert, trace] = four_connected_x_minor(rg);
            extracted = cert.minor;
            j = certificate_to_json(cert, trace.steps);
        } else {
            auto [m, emb] = topological_x_minor(rg, minor_k);
            extracted = m;
            j = topological ? embedding_to_json(emb, rg.roots)
                            : certificate_to_json(embedding_to_certificate(emb, rg.roots), {});
        }
        if (!is_k_connected(extracted, minor_k)) {
            std::cerr << "error: the extracted minor fails its connectivity check\n";
            rc = 1;
            return;
        }
        with_output(minor_out, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
        rc = 0;
    });

    // lift-tree / lift-path / lift-cycle ----------------------------------------
    std::string lift_graph, lift_cert, lift_out, lift_from, lift_to;
    int lift_bound = 2;

    auto add_lift_common = [&](CLI::App* cmd) {
        cmd->add_option("graph", lift_graph, "host graph file")->required();
        cmd->add_option("cert", lift_cert, "certificate JSON file")->required();
        cmd->add_option("--out", lift_out, "output file (default stdout)");
    };

    auto* lt = app.add_subcommand(
        "lift-tree", "spanning tree of the certified minor, lifted to a rooted host tree");
    add_lift_common(lt);
    lt->add_option("--bound", lift_bound, "degree bound of the tree searched in the minor")
        ->required()
        ->check(CLI::Range(1, 1000));
    lt->callback([&] {
        ParsedGraph p = read_graph_file(lift_graph);
        LoadedCertificate lc = certificate_from_file(lift_cert, p.graph, p.roots);
        auto tree = exists_x_spanning_tree(
            RootedGraph(lc.cert.minor, lc.cert.minor.vertices()), lift_bound);
        if (!tree) {
            std::cerr << "no spanning tree of the minor within the bound\n";
            rc = 1;
            return;
        }
        DegreeBoundedTree lifted = lift_tree(lc.cert, tree->tree, lift_bound);
        Structure s;
        s.kind = StructureKind::Tree;
        s.tree = lifted;
        print_structure(lift_out, p.graph, s);
        rc = 0;
    });

    auto* lp = app.add_subcommand(
        "lift-path", "root-spanning path of the certified minor, lifted to a generalized path");
    add_lift_common(lp);
    lp->add_option("--from", lift_from, "first endpoint (root)");
    lp->add_option("--to", lift_to, "second endpoint (root)");
    lp->callback([&] {
        ParsedGraph p = read_graph_file(lift_graph);
        LoadedCertificate lc = certificate_from_file(lift_cert, p.graph, p.roots);
        RootedGraph mrg(lc.cert.minor, lc.cert.roots);
        std::optional<std::vector<VertexId>> path;
        if (!lift_from.empty() || !lift_to.empty()) {
            if (lift_from.empty() || lift_to.empty())
                throw std::invalid_argument("--from and --to come together");
            path = exists_x_spanning_path(mrg, resolve_vertex(p.graph, lift_from),
                                          resolve_vertex(p.graph, lift_to));
        } else {
            for (std::size_t i = 0; !path && i < mrg.roots.size(); ++i)
                for (std::size_t j = i + 1; !path && j < mrg.roots.size(); ++j)
                    path = exists_x_spanning_path(mrg, mrg.roots[i], mrg.roots[j]);
        }
        if (!path) {
            std::cerr << "no root-spanning path in the minor\n";
            rc = 1;
            return;
        }
        Structure s;
        s.kind = StructureKind::GeneralizedPath;
        s.generalized = lift_path(lc.cert, *path);
        print_structure(lift_out, p.graph, s);
        rc = 0;
    });

    auto* lcyc = app.add_subcommand(
        "lift-cycle", "root-spanning cycle of the certified minor, lifted to a generalized cycle");
    add_lift_common(lcyc);
    lcyc->callback([&] {
        ParsedGraph p = read_graph_file(lift_graph);
        LoadedCertificate lc = certificate_from_file(lift_cert, p.graph, p.roots);
        auto cyc = exists_x_spanning_cycle(RootedGraph(lc.cert.minor, lc.cert.roots));
        if (!cyc) {
            std::cerr << "no root-spanning cycle in the minor\n";
            rc = 1;
            return;
        }
        Structure s;
        s.kind = StructureKind::GeneralizedCycle;
        s.generalized = lift_cycle(lc.cert, *cyc);
        print_structure(lift_out, p.graph, s);
        rc = 0;
    });

    // oracle ---------------------------------------------------------------------
    auto* orc = app.add_subcommand("oracle", "exhaustive desk-scale searches (size-guarded)");
    orc->require_subcommand(1);
    std::string orc_file, orc_from, orc_to, orc_pattern, orc_out;
    std::vector<std::string> orc_force, orc_avoid;
    int orc_maxdeg = 3;

    auto* otree = orc->add_subcommand("tree", "root-spanning tree within a degree bound");
    otree->add_option("file", orc_file, "graph file")->required();
    otree->add_option("--maxdeg", orc_maxdeg, "degree bound")->required()->check(CLI::Range(1, 1000));
    otree->add_option("--from", orc_from, "designated leaf root");
    otree->add_option("--to", orc_to, "designated leaf root");
    otree->add_option("--out", orc_out, "output file (default stdout)");
    otree->callback([&] {
        RootedGraph rg = load_rooted(orc_file);
        std::optional<std::pair<VertexId, VertexId>> leaves;
        if (!orc_from.empty() || !orc_to.empty()) {
            if (orc_from.empty() || orc_to.empty())
                throw std::invalid_argument("--from and --to come together");
            leaves = {resolve_vertex(rg.graph, orc_from), resolve_vertex(rg.graph, orc_to)};
        }
        auto tree = exists_x_spanning_tree(rg, orc_maxdeg, leaves);
        if (!tree) {
            std::cout << "none\n";
            rc = 1;
            return;
        }
        Structure s;
        s.kind = StructureKind::Tree;
        s.tree = *tree;
        print_structure(orc_out, rg.graph, s);
        rc = 0;
    });

    auto* opath = orc->add_subcommand("path", "root-spanning path between two roots");
    opath->add_option("file", orc_file, "graph file")->required();
    opath->add_option("--from", orc_from, "first endpoint (root)")->required();
    opath->add_option("--to", orc_to, "second endpoint (root)")->required();
    opath->add_option("--force", orc_force, "edge the path must use (two vertices)")->expected(2);
    opath->add_option("--out", orc_out, "output file (default stdout)");
    opath->callback([&] {
        RootedGraph rg = load_rooted(orc_file);
        std::vector<Edge> forced;
        if (!orc_force.empty())
            forced.push_back({resolve_vertex(rg.graph, orc_force[0]),
                              resolve_vertex(rg.graph, orc_force[1])});
        auto path = exists_x_spanning_path(rg, resolve_vertex(rg.graph, orc_from),
                                           resolve_vertex(rg.graph, orc_to), forced);
        if (!path) {
            std::cout << "none\n";
            rc = 1;
            return;
        }
        Structure s;
        s.kind = StructureKind::GeneralizedPath;
        s.generalized = GeneralizedStructure{false, *path, {}};
        print_structure(orc_out, rg.graph, s);
        rc = 0;
    });

    auto* ocycle = orc->add_subcommand("cycle", "root-spanning cycle avoiding excluded vertices");
    ocycle->add_option("file", orc_file, "graph file")->required();
    ocycle->add_option("--avoid", orc_avoid, "vertex to exclude (repeatable, at most twice)");
    ocycle->add_option("--out", orc_out, "output file (default stdout)");
    ocycle->callback([&] {
        RootedGraph rg = load_rooted(orc_file);
        VertexSet avoid;
        for (const std::string& tok : orc_avoid)
            avoid = set_union(avoid, {resolve_vertex(rg.graph, tok)});
        auto cyc = exists_x_spanning_cycle(rg, avoid);
        if (!cyc) {
            std::cout << "none\n";
            rc = 1;
            return;
        }
        Structure s;
        s.kind = StructureKind::GeneralizedCycle;
        s.generalized = GeneralizedStructure{true, *cyc, {}};
        print_structure(orc_out, rg.graph, s);
        rc = 0;
    });

    auto* ominor = orc->add_subcommand("minor", "unrooted minor containment");
    ominor->add_option("file", orc_file, "graph file")->required();
    ominor->add_option("--pattern", orc_pattern, "pattern graph file")->required();
    ominor->callback([&] {
        ParsedGraph p = read_graph_file(orc_file);
        ParsedGraph pattern = read_graph_file(orc_pattern);
        bool found = has_minor_brute(p.graph, pattern.graph);
        if (json_out)
            std::cout << nlohmann::json{{"schema", "rminor/minor-test/v1"}, {"minor", found}}.dump()
                      << '\n';
        else
            std::cout << (found ? "true" : "false") << '\n';
        rc = found ? 0 : 1;
    });

    auto* otutte = orc->add_subcommand(
        "tutte", "path between two vertices through a forced edge whose bridges obey the "
                 "attachment bounds");
    otutte->add_option("file", orc_file, "graph file")->required();
    otutte->add_option("--from", orc_from, "path start")->required();
    otutte->add_option("--to", orc_to, "path end")->required();
    otutte->add_option("--force", orc_force, "edge the path must contain (two vertices)")
        ->required()
        ->expected(2);
    otutte->add_option("--pattern", orc_pattern,
                       "anchor subgraph file; its bridges must have exactly two attachments");
    otutte->add_option("--out", orc_out, "output file (default stdout)");
    otutte->callback([&] {
        ParsedGraph p = read_graph_file(orc_file);
        Edge e{resolve_vertex(p.graph, orc_force[0]), resolve_vertex(p.graph, orc_force[1])};
        std::optional<Graph> anchor;
        if (!orc_pattern.empty()) anchor = read_graph_file(orc_pattern).graph;
        auto path = find_tutte_path_brute(p.graph, resolve_vertex(p.graph, orc_from),
                                          resolve_vertex(p.graph, orc_to), e,
                                          anchor ? &*anchor : nullptr);
        if (!path) {
            std::cout << "none\n";
            rc = 1;
            return;
        }
        Structure s;
        s.kind = StructureKind::TuttePath;
        s.path = *path;
        if (anchor) s.anchor = anchor->edges();
        print_structure(orc_out, p.graph, s);
        rc = 0;
    });

    // pipeline -------------------------------------------------------------------
    auto* pipe = app.add_subcommand("pipeline", "theorem pipelines with JSON reports");
    pipe->require_subcommand(1);
    std::string pipe_file, pipe_variant, pipe_from, pipe_to, pipe_out_dir;
    std::vector<std::string> pipe_force, pipe_avoid;
    int pipe_t = 0;

    auto add_pipe_common = [&](CLI::App* cmd) {
        cmd->add_option("file", pipe_file, "graph file")->required();
        cmd->add_option("--variant", pipe_variant, "which statement to run")
            ->required()
            ->check(CLI::IsMember({"i", "ii", "iii"}));
        cmd->add_option("--out", pipe_out_dir, "directory for re-checkable artifacts");
    };
    auto run_pipe = [&](bool first) {
        RootedGraph rg = load_rooted(pipe_file);
        PipelineOptions opt;
        opt.variant = pipe_variant;
        opt.t = pipe_t;
        opt.out_dir = pipe_out_dir;
        if (!pipe_from.empty()) opt.from = resolve_vertex(rg.graph, pipe_from);
        if (!pipe_to.empty()) opt.to = resolve_vertex(rg.graph, pipe_to);
        if (!pipe_force.empty())
            opt.forced = Edge{resolve_vertex(rg.graph, pipe_force[0]),
                              resolve_vertex(rg.graph, pipe_force[1])};
        for (const std::string& tok : pipe_avoid)
            opt.avoid = set_union(opt.avoid, {resolve_vertex(rg.graph, tok)});
        PipelineReport r = first ? run_theorem1(rg, opt) : run_theorem3(rg, opt);
        std::cout << report_to_json(r, !no_timing).dump(2) << '\n';
        rc = report_exit_code(r);
    };

    auto* thm1 = pipe->add_subcommand(
        "thm1", "topological route at connectivity 3: extract, search, lift, verify");
    add_pipe_common(thm1);
    thm1->add_option("--t", pipe_t, "variant iii parameter; the tree bound is t-1 (default 4)")
        ->check(CLI::Range(4, 1000));
    thm1->add_option("--from", pipe_from, "designated leaf root (variant i)");
    thm1->add_option("--to", pipe_to, "designated leaf root (variant i)");
    thm1->callback([&] { run_pipe(true); });

    auto* thm3 = pipe->add_subcommand(
        "thm3", "connectivity-4 spanning structures: direct oracles or the minor route");
    add_pipe_common(thm3);
    thm3->add_option("--t", pipe_t, "variant iii minor tree bound; the lift adds one (default 2)")
        ->check(CLI::Range(1, 1000));
    thm3->add_option("--from", pipe_from, "path endpoint (variant i)");
    thm3->add_option("--to", pipe_to, "path endpoint (variant i)");
    thm3->add_option("--force", pipe_force, "forced path edge (variant i, two vertices)")
        ->expected(2);
    thm3->add_option("--avoid", pipe_avoid, "excluded vertex (variant ii, repeatable)");
    thm3->callback([&] { run_pipe(false); });

    // verify ----------------------------------------------------------------------
    auto* ver = app.add_subcommand("verify",
                                   "re-check a certificate or structure file against a graph");
    std::string ver_graph, ver_file, ver_kind;
    ver->add_option("graph", ver_graph, "graph file")->required();
    ver->add_option("structure", ver_file, "certificate JSON or structure text file")->required();
    ver->add_option("--kind", ver_kind, "expected kind")
        ->check(CLI::IsMember(
            {"certificate", "tree", "generalized-path", "generalized-cycle", "tutte-path"}));
    ver->callback([&] {
        ParsedGraph p = read_graph_file(ver_graph);
        std::ifstream probe(ver_file);
        if (!probe) throw std::invalid_argument("cannot open structure file: " + ver_file);
        char first = 0;
        probe >> first;
        probe.close();
        bool is_certificate = first == '{';
        if (!ver_kind.empty() && (ver_kind == "certificate") != is_certificate)
            throw std::invalid_argument("the file does not look like a " + ver_kind);

        VerifyResult res = VerifyResult::pass();
        if (is_certificate) {
            LoadedCertificate lc = certificate_from_file(ver_file, p.graph, p.roots);
            res = verify_certificate(lc.cert);
            if (res && lc.embedding) {
                res = verify_embedding(*lc.embedding);
                if (res && !(lc.embedding->minor == lc.cert.minor))
                    res = VerifyResult::fail("embedding does not match the certificate");
            }
            if (res && !lc.trace_steps.empty()) {
                VertexSet root_comp;
                for (const VertexSet& comp : components(p.graph))
                    if (set_contains(comp, p.roots.front())) root_comp = comp;
                ContractionTrace trace{lc.trace_steps, induced_subgraph(p.graph, root_comp),
                                       lc.cert.minor};
                res = verify_trace(trace, p.roots);
            }
        } else {
            Structure s = read_structure_file(ver_file, p.graph);
            if (!ver_kind.empty() && ver_kind != kind_name(s.kind))
                throw std::invalid_argument("the file holds a " + kind_name(s.kind) + ", not a " +
                                            ver_kind);
            switch (s.kind) {
                case StructureKind::Tree:
                    res = verify_degree_bounded_tree(p.graph, p.roots, s.tree);
                    break;
                case StructureKind::GeneralizedPath:
                case StructureKind::GeneralizedCycle:
                    res = verify_generalized(p.graph, p.roots, s.generalized);
                    break;
                case StructureKind::TuttePath: {
                    std::optional<Graph> anchor;
                    if (!s.anchor.empty()) {
                        for (const Edge& e : s.anchor)
                            if (!p.graph.has_edge(e.a, e.b)) {
                                res = VerifyResult::fail("anchor edge not in the graph");
                                break;
                            }
                        if (res) {
                            GraphBuilder b;
                            VertexSet verts;
                            for (const Edge& e : s.anchor)
                                verts = set_union(verts, make_set({e.a, e.b}));
                            for (VertexId v : verts) b.add_vertex_with_id(v);
                            for (const Edge& e : s.anchor) b.add_edge(e.a, e.b);
                            anchor = b.build();
                        }
                    }
                    if (res) {
                        try {
                            if (!is_tutte_path(p.graph, s.path, anchor ? &*anchor : nullptr))
                                res = VerifyResult::fail(
                                    "a bridge violates the attachment bounds");
                        } catch (const std::invalid_argument& e) {
                            res = VerifyResult::fail(e.what());
                        }
                    }
                    break;
                }
            }
        }

        if (json_out)
            std::cout << nlohmann::json{{"schema", "rminor/verify/v1"},
                                        {"ok", res.ok},
                                        {"reason", res.reason}}
                             .dump()
                      << '\n';
        else
            std::cout << (res.ok ? "ok" : res.reason) << '\n';
        rc = res.ok ? 0 : 1;
    });

    // Let the global flags parse after any subcommand token, nested ones included.
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough();
            allow_fallthrough(sub);
        }
    };
    allow_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}

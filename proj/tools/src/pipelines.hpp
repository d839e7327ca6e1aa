#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rminor/connectivity.hpp"
#include "rminor/graph.hpp"

namespace rminor::tools {

struct StepReport {
    std::string name;
    std::string outcome;  // "ok", "fail" or "resource-limit"
    std::string detail;
    double seconds = 0.0;
};

// One pipeline run: input summary, ordered steps, verdict and any files
// written. The verdict is pass exactly when every step's check passed.
struct PipelineReport {
    std::string command;
    int n = 0;
    int m = 0;
    int root_count = 0;
    int kappa = 0;
    std::vector<StepReport> steps;
    bool pass = false;
    nlohmann::json result;  // edge list / vertex sequence of the found structure
    std::vector<std::string> artifacts;
};

// 0 pass, 1 fail, 3 when the failing step hit a search guard.
int report_exit_code(const PipelineReport& r);

nlohmann::json report_to_json(const PipelineReport& r, bool with_timing);

struct PipelineOptions {
    std::string variant = "i";          // i | ii | iii
    int t = 0;                          // 0 = variant default
    std::optional<VertexId> from, to;   // designated roots (leaf pair / path endpoints)
    std::optional<Edge> forced;         // forced path edge
    VertexSet avoid;                    // excluded vertices for the cycle variant
    std::string out_dir;                // artifact directory; empty = write none
};

// Topological route at connectivity 3: extract a 3-connected topological
// minor, search it for the variant's structure (i: 3-tree with a designated
// leaf pair; ii: spanning 2-connected subgraph of max degree 6; iii:
// (t-1)-tree), then lift through the subdivision embedding and re-verify.
PipelineReport run_theorem1(const RootedGraph& rg, const PipelineOptions& opt);

// Connectivity-4 route: variants i and ii query the spanning path / cycle
// oracles directly on the host; variant iii extracts a 4-connected minor,
// finds a degree-t spanning tree of it and lifts to a (t+1)-tree.
PipelineReport run_theorem3(const RootedGraph& rg, const PipelineOptions& opt);

} // namespace rminor::tools

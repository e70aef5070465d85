#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rotevl/arc_union.hpp"
#include "rotevl/entry_law.hpp"
#include "rotevl/sampling.hpp"
#include "rotevl/step_survival.hpp"

namespace rotevl::harness {

/// Text form of a CFSpec:
///   periodic:<c1,c2,...>            purely periodic
///   periodic:<pre1,...|c1,...>      preperiod before '|'
///   block:<N>                       N-1 ones then 2, N-1 ones then 3, ...
///   affine:<a>,<b>                  c_n = a*n + b
///   explicit:<c1,c2,...>            finite list
CFSpec parse_spec(const std::string& text);
std::string format_spec(const CFSpec& spec);

struct RunConfig {
    std::string command;
    std::string spec_text;
    int k = -1;      // -1: largest k in K with q_k <= 1e5
    int jmax = 8;
    std::string grid_text = "auto"; // auto | log:<lo>,<hi>,<n> | list:<y1,y2,...>
    std::int64_t n_samples = 20000;
    std::uint64_t seed = 1;
    double tol_emp_finite = 0.02;
    double tol_emp_limit = 0.03;
    int threads = 0;
    bool plot = false;
    std::string out_dir = ".";
};

struct ComparisonRow {
    Rational y;
    double h_limit = 0;
    double h_finite = 0;
    double h_empirical = 0;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    double sup_emp_vs_finite = 0;
    double sup_emp_vs_limit = 0;
    double sup_finite_vs_limit = 0;
    std::int64_t aborted = 0;
    int k = 0;
    bool passed = false;
};

/// The limit law for the spec: analytic when the family has a closed form,
/// numeric ratios otherwise.
LimitProfile profile_for(const CFSpec& spec, int jmax);

/// Largest k in the spec's subsequence K with q_k <= 1e5 (or the validated
/// user choice). Throws ConfigError when k is not in K.
int resolve_k(const CFSpec& spec, int requested);

/// Resolved y grid. Generated grids are nudged off breakpoints by a 1e-3
/// relative offset; explicit list grids that contain a breakpoint exactly
/// are rejected.
std::vector<Rational> resolve_grid(const std::string& text, const StepSurvival& h);

// Commands; each writes its CSV outputs plus manifest.json under
// config.out_dir and returns a process exit code (0 ok, 1 tolerance
// failure).
int cmd_limits(const RunConfig& config);
int cmd_evl(const RunConfig& config);
int cmd_entry_dist(const RunConfig& config);
int cmd_compare(const RunConfig& config, ComparisonReport* out = nullptr);
int cmd_phi(const RunConfig& config);

/// Exit code for an exception per the CLI contract: 2 configuration,
/// 3 precision/depth exhaustion.
int exit_code_for(const std::exception& e);

} // namespace rotevl::harness

#include <cstdio>
#include <exception>

#include <CLI11.hpp>

#include "harness.hpp"

int main(int argc, char** argv) {
    CLI::App app{"rotation-evl: extreme-value laws of irrational circle rotations"};
    app.require_subcommand(1);

    rotevl::harness::RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--spec", cfg.spec_text, "rotation number spec, e.g. periodic:1, block:3")
            ->required();
        sub->add_option("--k", cfg.k, "convergent index (default: largest q_k <= 1e5 in K)");
        sub->add_option("--jmax", cfg.jmax, "profile depth (default 8)");
        sub->add_option("--samples", cfg.n_samples, "Monte Carlo sample count");
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--grid", cfg.grid_text, "y grid: auto | log:<lo>,<hi>,<n> | list:...");
        sub->add_option("--tol", cfg.tol_emp_finite, "tolerance for |emp - finite-k|");
        sub->add_option("--tol-limit", cfg.tol_emp_limit, "tolerance for |emp - limit|");
        sub->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
        sub->add_option("--out", cfg.out_dir, "output directory")->required();
        sub->add_flag("--plot", cfg.plot, "also write an SVG plot");
    };

    CLI::App* limits = app.add_subcommand("limits", "limit profile nu/theta/gamma/delta");
    CLI::App* evl = app.add_subcommand("evl", "limiting extreme-value staircase");
    CLI::App* entry = app.add_subcommand("entry-dist", "exact entry law vs arc-union oracle");
    CLI::App* compare = app.add_subcommand("compare", "limit vs finite-k vs Monte Carlo");
    CLI::App* phi = app.add_subcommand("phi", "limiting entry-time CDFs and fixed points");
    for (auto* sub : {limits, evl, entry, compare, phi}) add_common(sub);

    CLI11_PARSE(app, argc, argv);

    try {
        if (limits->parsed()) {
            cfg.command = "limits";
            return rotevl::harness::cmd_limits(cfg);
        }
        if (evl->parsed()) {
            cfg.command = "evl";
            return rotevl::harness::cmd_evl(cfg);
        }
        if (entry->parsed()) {
            cfg.command = "entry-dist";
            return rotevl::harness::cmd_entry_dist(cfg);
        }
        if (compare->parsed()) {
            cfg.command = "compare";
            return rotevl::harness::cmd_compare(cfg);
        }
        cfg.command = "phi";
        return rotevl::harness::cmd_phi(cfg);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return rotevl::harness::exit_code_for(e);
    }
}

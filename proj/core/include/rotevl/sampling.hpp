#pragma once

#include <cstdint>

#include "rotevl/rotation.hpp"

namespace rotevl {

/// Empirical survival counts of the rescaled maximum M_{q_k}/q_k.
struct EmpiricalSurvival {
    std::vector<Rational> y_grid;      // sorted
    std::vector<std::int64_t> counts;  // #{samples with M/q_k > y_i}; non-increasing
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
    int k = 0;
    std::int64_t aborted = 0;          // precision-aborted samples; 0 in healthy runs

    double estimate(std::size_t i) const {
        return static_cast<double>(counts.at(i)) / static_cast<double>(n_samples);
    }
};

struct SamplingOptions {
    int threads = 0;                        // 0 = hardware concurrency
    std::int64_t max_orbit_steps = 200'000'000;  // refuse infeasible q_k
};

/// Monte Carlo estimate of H_{q_k} on the grid: samples x uniformly
/// (dyadic rationals with odd 65-bit numerators, so no orbit point ever
/// hits an arc endpoint), computes M_{q_k}(x)/q_k and tallies exceedances.
/// Per-sample RNG streams are derived from (seed, sample index) and counts
/// are reduced by integer summation, so the result is bit-identical for a
/// fixed seed regardless of the thread count.
EmpiricalSurvival empirical_survival(const ConvergentTable& table, int k,
                                     std::int64_t n_samples, std::uint64_t seed,
                                     std::vector<Rational> y_grid,
                                     const SamplingOptions& opts = {});

} // namespace rotevl

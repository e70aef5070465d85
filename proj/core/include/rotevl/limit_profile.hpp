#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rotevl/convergents.hpp"
#include "rotevl/ext_real.hpp"

namespace rotevl {

enum class Provenance { Analytic, Numeric };

/// Subsequential limits along K:
///   nu_j    = lim q_{k+j-1}/q_{k+j}   (reversed-quotient limits)
///   theta_j = lim eta_{k+j}/eta_{k+j-1} (tail limits)
///   gamma_j = lim q_{k+j}/q_k, delta_j = lim eta_{k+j}/eta_k
/// gamma_0 = delta_0 = 1 by definition; gamma is non-decreasing and once
/// infinite stays infinite; delta is non-increasing in [0,1].
struct LimitProfile {
    int jmax = 0;
    Provenance provenance = Provenance::Analytic;
    std::string k_description;

    // gamma[j], delta[j] valid for j = 0..jmax; nu[j], theta[j] for j >= 1.
    std::vector<ExtReal> nu, theta, gamma, delta;

    // Set for constant-type specs: the quadratic alpha with
    // gamma_{j+1} = gamma_j / alpha, delta_{j+1} = delta_j * alpha.
    std::optional<QuadIrr> geometric_ratio;

    const ExtReal& gamma_at(int j) const;
    const ExtReal& delta_at(int j) const;
    const ExtReal& nu_at(int j) const;
    const ExtReal& theta_at(int j) const;
    bool gamma_finite(int j) const { return gamma_at(j).is_finite(); }
    /// First j with gamma_j = +inf, or nullopt if all stored are finite.
    std::optional<int> first_infinite_gamma() const;
};

/// Exact profiles for the built-in families:
///  - eventually periodic with a single-term period c (any preperiod):
///    nu_j = theta_j = alpha = (sqrt(c^2+4)-c)/2, gamma_j = alpha^-j,
///    delta_j = alpha^j, K = all indices;
///  - block family N: nu_j = s_j/s_{j+1} (Fibonacci s), gamma_j = s_{j+1}
///    for j < N and +inf from j = N on; delta_j = s_{N-j-1}/s_{N-1} for
///    j < N and 0 after; K = multiples of N;
///  - affine rules with slope > 0 (quotients diverge): gamma_j = +inf and
///    delta_j = 0 for j >= 1; slope == 0 is constant type.
/// Throws UnsupportedSpec for explicit specs and multi-term periods
/// (use profile_numeric).
LimitProfile profile_analytic(const CFSpec& spec, int jmax);

/// Ratio estimates at the largest k in K; the error bar is the maximum
/// deviation over the last three k in K plus enclosure widths. Entries are
/// flagged non-converged when the Cauchy gap exceeds cauchy_tol.
LimitProfile profile_numeric(const ConvergentTable& table, const std::vector<int>& K,
                             int jmax, double cauchy_tol = 1e-6);

} // namespace rotevl

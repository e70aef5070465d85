#pragma once

#include <cstdint>
#include <optional>

#include "rotevl/limit_profile.hpp"

namespace rotevl {

/// The limiting survival law H(y) = P(M > y): right-continuous,
/// non-increasing, H = 1 for y < 1 and constant on [gamma_j, gamma_{j+1}).
/// breakpoints[j] = gamma_j (breakpoints[0] = 1); values[j] is the plateau
/// on [gamma_j, gamma_{j+1}). The last breakpoint may be +inf, in which
/// case the preceding plateau extends to +inf and values has one entry
/// fewer than breakpoints. Duplicate breakpoints (gamma_1 = 1) are stored
/// as printed and collapse on evaluation.
class StepSurvival {
public:
    std::vector<ExtReal> breakpoints;
    std::vector<ExtReal> values;

    /// For geometric staircases (constant type): extends the ladder
    /// indefinitely with breakpoint ratio 1/alpha and value ratio alpha.
    std::optional<QuadIrr> tail_ratio;

    /// Plateau index for y (rightmost j with gamma_j <= y); -1 for y < 1.
    /// Indices past the stored ladder are valid only with a tail_ratio.
    int plateau_index(const Rational& y) const;

    /// H(y); exact when the underlying profile is analytic. Throws
    /// ProfileIncomplete when y is past a truncated ladder without a tail.
    ExtReal eval(const Rational& y) const;
    double eval_double(double y) const;

    /// Plateau value for index j >= 0 (tail-extended when needed).
    ExtReal value_at(int j) const;
    /// Breakpoint gamma_j (tail-extended when needed).
    ExtReal breakpoint_at(int j) const;

    bool is_indicator() const; // H = 1_{y<1}
};

/// The step law of the main theorem: plateau
/// v_j = (delta_j + delta_{j+1})/(gamma_1 + delta_1) on [gamma_j, gamma_{j+1});
/// the indicator of y < 1 when gamma_1 = +inf; when gamma_N is the first
/// infinite breakpoint (N >= 2) the final plateau is v_{N-1} = 0.
StepSurvival limiting_survival(const LimitProfile& profile);

/// Closed form for [c,c,c,...]: breakpoints alpha^-j and plateau values
/// alpha^j (alpha + alpha^2)/(1 + alpha^2), alpha = (sqrt(c^2+4)-c)/2.
/// Computed independently of limiting_survival (regression pair).
StepSurvival constant_type_survival(std::uint64_t c);

/// lim q_k eta_k along K = 1/(gamma_1 + delta_1); 0 when gamma_1 = +inf.
ExtReal qk_eta_limit(const LimitProfile& profile);

} // namespace rotevl

#pragma once

#include "rotevl/step_survival.hpp"

namespace rotevl {

/// Continuous piecewise-linear CDF given by knots (x, F(x)) with both
/// coordinates non-decreasing; first knot (0,0), last knot has F = 1.
struct PiecewiseLinearCDF {
    std::vector<std::pair<ExtReal, ExtReal>> knots;

    /// Linear interpolation; exact when the inputs are exact.
    ExtReal eval(const ExtReal& x) const;
};

/// g(y) = lim q_k mu(L(q_k y)) = (delta_j + delta_{j+1})/(gamma_1 + delta_1)
/// for y strictly inside (gamma_j, gamma_{j+1}) with gamma_{j+1} finite.
/// Throws BreakpointHit at a gamma_j, OutOfScope for y < 1 or past the
/// last finite breakpoint.
ExtReal g_value(const LimitProfile& profile, const Rational& y);

/// The limiting entry-time CDF for the plateau (gamma_j, gamma_{j+1}):
/// knots (0,0), (A,A), (B,1) with
///   A = (1+theta_{j+1}) nu_{j+1} / (1 + theta_{j+1} nu_{j+1}),
///   B = (1+theta_{j+1}) / (1 + theta_{j+1} nu_{j+1}).
/// The middle knot lies on the diagonal by construction (same expression
/// on both coordinates). Requires nu_{j+1} finite and nonzero and
/// theta_{j+1} finite (zero is admissible: the CDF degenerates to the
/// identity on [0,1]).
PiecewiseLinearCDF phi_y(const LimitProfile& profile, int plateau_j);

struct FixedPointReport {
    int plateau_j = 0;
    double g = 0.0;
    double phi_of_g = 0.0;
    double abs_diff = 0.0;
    bool exact_equal = false;     // both sides identical exact values
    bool within_tolerance = false; // |phi(g) - g| <= combined error bars
    bool g_le_first_knot = false; // g <= diagonal knot x-coordinate
    bool diagonal_exact = false;  // middle knot has x == F exactly

    bool passed() const { return within_tolerance && g_le_first_knot && diagonal_exact; }
};

/// Checks phi_y(g(y)) = g(y) at y plus the inequality g(y) <= A.
FixedPointReport fixed_point_check(const LimitProfile& profile, const Rational& y);

} // namespace rotevl

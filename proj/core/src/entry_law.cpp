#include "rotevl/entry_law.hpp"

#include <cmath>

#include "profile_detail.hpp"

namespace rotevl {

namespace {

/// Index j with y strictly inside (gamma_j, gamma_{j+1}); gamma_{j+1} is
/// finite and stored (or tail-extended). Throws per the g/phi contracts.
int locate_plateau(const LimitProfile& pr, const Rational& y) {
    if (y < 1) throw OutOfScope("g/phi: y < 1 is outside the proposition's scope");
    int last = -1;
    for (int j = 0;; ++j) {
        const ExtReal g = detail::gamma_ext(pr, j); // throws ProfileIncomplete past ladder
        if (!g.is_finite()) {
            if (last < 0) throw OutOfScope("g/phi: no finite breakpoint below y");
            throw OutOfScope("g/phi: gamma_{j+1} is infinite at y");
        }
        if (g.is_approx()) {
            const auto& a = g.approx();
            if (std::abs(y.get_d() - a.value) <= a.err)
                throw BreakpointHit("y indistinguishable from gamma_" + std::to_string(j));
        }
        const int c = g.compare(y);
        if (c == 0) throw BreakpointHit("y equals the breakpoint gamma_" + std::to_string(j));
        if (c > 0) break; // gamma_j > y: plateau is j-1
        last = j;
    }
    return last;
}

} // namespace

ExtReal PiecewiseLinearCDF::eval(const ExtReal& x) const {
    if (knots.size() < 2) throw Error("PiecewiseLinearCDF: needs at least two knots");
    bool all_exact = x.is_exact();
    for (const auto& kn : knots)
        all_exact = all_exact && kn.first.is_exact() && kn.second.is_exact();
    if (all_exact) {
        const QuadIrr& xv = x.exact();
        if (xv.compare(knots.front().first.exact()) <= 0) return knots.front().second;
        if (xv.compare(knots.back().first.exact()) >= 0) return knots.back().second;
        for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
            const QuadIrr& x0 = knots[i].first.exact();
            const QuadIrr& x1 = knots[i + 1].first.exact();
            if (x0 == x1) continue;
            if (xv.compare(x0) >= 0 && xv.compare(x1) <= 0) {
                const QuadIrr& f0 = knots[i].second.exact();
                const QuadIrr& f1 = knots[i + 1].second.exact();
                return ExtReal(f0 + (f1 - f0) * (xv - x0) / (x1 - x0));
            }
        }
        return knots.back().second;
    }
    // numeric path: interpolate midpoints, carry error bars through
    const double xd = x.to_double();
    double err = x.err();
    for (const auto& kn : knots) err = std::max(err, kn.first.err() + kn.second.err());
    const double first = knots.front().first.to_double();
    const double last = knots.back().first.to_double();
    double val;
    if (xd <= first)
        val = knots.front().second.to_double();
    else if (xd >= last)
        val = knots.back().second.to_double();
    else {
        val = knots.back().second.to_double();
        for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
            const double x0 = knots[i].first.to_double();
            const double x1 = knots[i + 1].first.to_double();
            if (x1 <= x0) continue;
            if (xd >= x0 && xd <= x1) {
                const double f0 = knots[i].second.to_double();
                const double f1 = knots[i + 1].second.to_double();
                val = f0 + (f1 - f0) * (xd - x0) / (x1 - x0);
                break;
            }
        }
    }
    return ApproxReal{val, 2 * err, true};
}

ExtReal g_value(const LimitProfile& profile, const Rational& y) {
    const int j = locate_plateau(profile, y);
    return detail::plateau_value(profile, j);
}

PiecewiseLinearCDF phi_y(const LimitProfile& profile, int plateau_j) {
    if (plateau_j < 0) throw OutOfScope("phi_y: plateau index must be >= 0");
    const ExtReal nu = detail::nu_ext(profile, plateau_j + 1);
    const ExtReal theta = detail::theta_ext(profile, plateau_j + 1);
    if (!nu.is_finite() || !theta.is_finite())
        throw ProfileIncomplete("phi_y: nu/theta_{j+1} not finite");
    const bool nu_zero = nu.is_exact() ? nu.exact().is_zero() : std::abs(nu.to_double()) < 1e-15;
    if (nu_zero)
        throw ProfileIncomplete("phi_y: nu_{j+1} = 0 (gamma_{j+1} infinite)");

    PiecewiseLinearCDF cdf;
    const ExtReal zero{Rational(0)};
    const ExtReal one{Rational(1)};
    if (nu.is_exact() && theta.is_exact()) {
        const QuadIrr qone{Rational(1)};
        const QuadIrr t = theta.exact();
        const QuadIrr v = nu.exact();
        const QuadIrr den = qone + t * v;
        const QuadIrr a = (qone + t) * v / den;
        const QuadIrr b = (qone + t) / den;
        const ExtReal diag{a}; // same value on both coordinates
        cdf.knots = {{zero, zero}, {diag, diag}, {ExtReal(b), one}};
        return cdf;
    }
    const double t = theta.to_double();
    const double v = nu.to_double();
    const double den = 1 + t * v;
    const double rel = theta.err() + nu.err();
    const ExtReal diag{ApproxReal{(1 + t) * v / den, 4 * rel, true}};
    cdf.knots = {{zero, zero}, {diag, diag}, {ExtReal(ApproxReal{(1 + t) / den, 4 * rel, true}), one}};
    return cdf;
}

FixedPointReport fixed_point_check(const LimitProfile& profile, const Rational& y) {
    FixedPointReport rep;
    rep.plateau_j = locate_plateau(profile, y);
    const ExtReal g = detail::plateau_value(profile, rep.plateau_j);
    const PiecewiseLinearCDF cdf = phi_y(profile, rep.plateau_j);
    const ExtReal phi_g = cdf.eval(g);

    rep.g = g.to_double();
    rep.phi_of_g = phi_g.to_double();
    rep.abs_diff = std::abs(rep.phi_of_g - rep.g);

    if (g.is_exact() && phi_g.is_exact()) {
        rep.exact_equal = g.exact() == phi_g.exact();
        rep.within_tolerance = rep.exact_equal;
    } else {
        rep.within_tolerance = rep.abs_diff <= g.err() + phi_g.err() + 1e-12;
    }

    const ExtReal& diag_x = cdf.knots[1].first;
    if (g.is_exact() && diag_x.is_exact())
        rep.g_le_first_knot = (diag_x.exact() - g.exact()).sign() >= 0;
    else
        rep.g_le_first_knot = rep.g <= diag_x.to_double() + g.err() + diag_x.err() + 1e-12;

    const ExtReal& dx = cdf.knots[1].first;
    const ExtReal& df = cdf.knots[1].second;
    if (dx.is_exact() && df.is_exact())
        rep.diagonal_exact = dx.exact() == df.exact();
    else
        rep.diagonal_exact = dx.to_double() == df.to_double();
    return rep;
}

} // namespace rotevl

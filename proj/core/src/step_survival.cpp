#include "rotevl/step_survival.hpp"

#include <cmath>

#include "profile_detail.hpp"

namespace rotevl {

namespace detail {

namespace {

RatInterval tight_enclosure(const ExtReal& x) {
    Rational w(1);
    w /= Int("1000000000000000000000000000000"); // 1e-30
    return x.enclosure(w);
}

ExtReal from_interval(const RatInterval& iv, bool converged) {
    return ApproxReal{iv.mid().get_d(), iv.width().get_d() / 2 + 1e-300, converged};
}

bool both_converged(const ExtReal& x) { return !x.is_approx() || x.approx().converged; }

} // namespace

ExtReal ext_add(const ExtReal& x, const ExtReal& y) {
    if (x.is_infinite() || y.is_infinite()) return ExtReal::infinity();
    if (x.is_exact() && y.is_exact()) return ExtReal(x.exact() + y.exact());
    return from_interval(tight_enclosure(x) + tight_enclosure(y),
                         both_converged(x) && both_converged(y));
}

ExtReal ext_div(const ExtReal& num, const ExtReal& den) {
    if (num.is_infinite() || den.is_infinite())
        throw Error("ext_div: infinite operand");
    if (num.is_exact() && den.is_exact()) return ExtReal(num.exact() / den.exact());
    return from_interval(tight_enclosure(num) / tight_enclosure(den),
                         both_converged(num) && both_converged(den));
}

ExtReal gamma_ext(const LimitProfile& pr, int j) {
    if (j <= pr.jmax) return pr.gamma_at(j);
    if (pr.geometric_ratio)
        return ExtReal(pr.geometric_ratio->pow(-j)); // gamma_j = alpha^-j
    throw ProfileIncomplete("gamma[" + std::to_string(j) + "] beyond stored profile");
}

ExtReal delta_ext(const LimitProfile& pr, int j) {
    if (j <= pr.jmax) return pr.delta_at(j);
    if (pr.geometric_ratio) return ExtReal(pr.geometric_ratio->pow(j));
    throw ProfileIncomplete("delta[" + std::to_string(j) + "] beyond stored profile");
}

ExtReal nu_ext(const LimitProfile& pr, int j) {
    if (j <= pr.jmax) return pr.nu_at(j);
    if (pr.geometric_ratio) return ExtReal(*pr.geometric_ratio);
    throw ProfileIncomplete("nu[" + std::to_string(j) + "] beyond stored profile");
}

ExtReal theta_ext(const LimitProfile& pr, int j) {
    if (j <= pr.jmax) return pr.theta_at(j);
    if (pr.geometric_ratio) return ExtReal(*pr.geometric_ratio);
    throw ProfileIncomplete("theta[" + std::to_string(j) + "] beyond stored profile");
}

ExtReal plateau_value(const LimitProfile& pr, int j) {
    const ExtReal& g1 = pr.gamma_at(1);
    if (!g1.is_finite()) throw Error("plateau_value: gamma_1 is infinite");
    const ExtReal num = ext_add(delta_ext(pr, j), delta_ext(pr, j + 1));
    const ExtReal den = ext_add(g1, pr.delta_at(1));
    return ext_div(num, den);
}

} // namespace detail

int StepSurvival::plateau_index(const Rational& y) const {
    if (y < 1) return -1;
    int last = -1;
    for (std::size_t j = 0; j < breakpoints.size(); ++j) {
        const ExtReal& bp = breakpoints[j];
        if (bp.is_infinite()) break;
        if (bp.compare(y) <= 0)
            last = static_cast<int>(j);
        else
            break;
    }
    if (last < 0) throw Error("StepSurvival: y >= 1 below first breakpoint");
    const bool ends_infinite =
        !breakpoints.empty() && breakpoints.back().is_infinite();
    if (last + 1 == static_cast<int>(breakpoints.size()) && !ends_infinite) {
        // y at or past a truncated ladder
        if (!tail_ratio)
            throw ProfileIncomplete("StepSurvival: evaluation past the stored ladder");
        QuadIrr bp = breakpoints.back().exact();
        const QuadIrr inv_ratio = QuadIrr(Rational(1)) / *tail_ratio;
        while (true) {
            const QuadIrr next = bp * inv_ratio;
            if (next.compare(y) > 0) break;
            bp = next;
            ++last;
        }
    }
    return last;
}

ExtReal StepSurvival::value_at(int j) const {
    if (j < 0) return ExtReal(Rational(1));
    if (static_cast<std::size_t>(j) < values.size()) return values[static_cast<std::size_t>(j)];
    if (!tail_ratio) throw ProfileIncomplete("StepSurvival: plateau past the stored ladder");
    const int last = static_cast<int>(values.size()) - 1;
    return ExtReal(values.back().exact() * tail_ratio->pow(j - last));
}

ExtReal StepSurvival::breakpoint_at(int j) const {
    if (static_cast<std::size_t>(j) < breakpoints.size())
        return breakpoints[static_cast<std::size_t>(j)];
    if (!tail_ratio) throw ProfileIncomplete("StepSurvival: breakpoint past the stored ladder");
    const int last = static_cast<int>(breakpoints.size()) - 1;
    return ExtReal(breakpoints.back().exact() * tail_ratio->pow(-(j - last)));
}

ExtReal StepSurvival::eval(const Rational& y) const { return value_at(plateau_index(y)); }

double StepSurvival::eval_double(double y) const {
    return eval(rational_from_double(y)).to_double();
}

bool StepSurvival::is_indicator() const {
    for (std::size_t j = 0; j < values.size(); ++j) {
        // plateau j is visible iff [gamma_j, gamma_{j+1}) is non-empty
        const ExtReal& lo = breakpoints[j];
        const ExtReal& hi = j + 1 < breakpoints.size() ? breakpoints[j + 1] : ExtReal::infinity();
        const bool empty =
            lo.is_finite() && hi.is_finite() && lo.is_exact() && hi.is_exact() &&
            lo.exact() == hi.exact();
        if (empty) continue;
        const ExtReal& v = values[j];
        const bool zero = v.is_exact() ? v.exact().is_zero() : std::abs(v.to_double()) < 1e-12;
        if (!zero) return false;
    }
    return !tail_ratio;
}

StepSurvival limiting_survival(const LimitProfile& profile) {
    if (profile.jmax < 1 || profile.gamma.size() < 2 || profile.delta.size() < 2)
        throw ProfileIncomplete("limiting_survival: profile needs gamma_1 and delta_1");
    StepSurvival h;
    const ExtReal& g1 = profile.gamma_at(1);
    if (!g1.is_finite()) {
        // degenerate law: the indicator of y < 1
        h.breakpoints = {ExtReal(Rational(1)), ExtReal::infinity()};
        h.values = {ExtReal(Rational(0))};
        return h;
    }
    for (int j = 0; j <= profile.jmax; ++j) {
        const ExtReal& gj = profile.gamma_at(j);
        h.breakpoints.push_back(gj);
        if (!gj.is_finite()) break;               // final plateau was j-1
        if (j == profile.jmax) break;             // truncated ladder; no v_jmax
        h.values.push_back(detail::plateau_value(profile, j));
    }
    const bool ends_infinite = h.breakpoints.back().is_infinite();
    if (ends_infinite && profile.provenance == Provenance::Analytic) {
        // first infinite breakpoint: the law must reach zero exactly
        const ExtReal& last = h.values.back();
        if (!last.is_exact() || !last.exact().is_zero())
            throw Error("limiting_survival: final plateau before +inf is not zero");
    }
    if (!ends_infinite) h.tail_ratio = profile.geometric_ratio;
    return h;
}

StepSurvival constant_type_survival(std::uint64_t c) {
    if (c < 1) throw ConfigError("constant_type_survival: c must be >= 1");
    const QuadIrr alpha = QuadIrr::constant_type_alpha(c);
    const QuadIrr one{Rational(1)};
    // (alpha + alpha^2)/(1 + alpha^2), the closed-form plateau height at j = 0
    const QuadIrr a2 = alpha * alpha;
    const QuadIrr v0 = (alpha + a2) / (one + a2);
    StepSurvival h;
    constexpr int kStored = 8;
    for (int j = 0; j <= kStored; ++j) {
        h.breakpoints.emplace_back(alpha.pow(-j));
        if (j < kStored) h.values.emplace_back(alpha.pow(j) * v0);
    }
    h.tail_ratio = alpha;
    return h;
}

ExtReal qk_eta_limit(const LimitProfile& profile) {
    const ExtReal& g1 = profile.gamma_at(1);
    if (!g1.is_finite()) return ExtReal(Rational(0));
    const ExtReal den = detail::ext_add(g1, profile.delta_at(1));
    return detail::ext_div(ExtReal(Rational(1)), den);
}

} // namespace rotevl

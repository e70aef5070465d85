#include "rotevl/limit_profile.hpp"

#include <algorithm>
#include <cmath>

namespace rotevl {

namespace {

const ExtReal& checked(const std::vector<ExtReal>& v, int j, const char* name) {
    if (j < 0 || static_cast<std::size_t>(j) >= v.size())
        throw ProfileIncomplete(std::string(name) + "[" + std::to_string(j) +
                                "] not stored in profile");
    return v[static_cast<std::size_t>(j)];
}

/// Fibonacci s_0 = 0, s_1 = 1, ..., up to index n inclusive.
std::vector<Int> fibonacci(int n) {
    std::vector<Int> s(static_cast<std::size_t>(n) + 1);
    s[0] = 0;
    if (n >= 1) s[1] = 1;
    for (int i = 2; i <= n; ++i)
        s[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i - 1)] + s[static_cast<std::size_t>(i - 2)];
    return s;
}

LimitProfile constant_type_profile(std::uint64_t c, int jmax) {
    LimitProfile pr;
    pr.jmax = jmax;
    pr.provenance = Provenance::Analytic;
    pr.k_description = "all k";
    const QuadIrr alpha = QuadIrr::constant_type_alpha(c);
    pr.geometric_ratio = alpha;
    pr.nu.assign(static_cast<std::size_t>(jmax) + 1, ExtReal(alpha));
    pr.theta.assign(static_cast<std::size_t>(jmax) + 1, ExtReal(alpha));
    pr.gamma.reserve(static_cast<std::size_t>(jmax) + 1);
    pr.delta.reserve(static_cast<std::size_t>(jmax) + 1);
    for (int j = 0; j <= jmax; ++j) {
        pr.gamma.emplace_back(alpha.pow(-j));
        pr.delta.emplace_back(alpha.pow(j));
    }
    return pr;
}

LimitProfile divergent_profile(int jmax, std::string k_desc) {
    LimitProfile pr;
    pr.jmax = jmax;
    pr.provenance = Provenance::Analytic;
    pr.k_description = std::move(k_desc);
    const ExtReal zero{Rational(0)};
    pr.nu.assign(static_cast<std::size_t>(jmax) + 1, zero);
    pr.theta.assign(static_cast<std::size_t>(jmax) + 1, zero);
    pr.gamma.emplace_back(Rational(1));
    pr.delta.emplace_back(Rational(1));
    for (int j = 1; j <= jmax; ++j) {
        pr.gamma.emplace_back(ExtReal::infinity());
        pr.delta.emplace_back(zero);
    }
    return pr;
}

LimitProfile block_family_profile(int block_len, int jmax) {
    const int n = block_len;
    if (n == 1) return divergent_profile(jmax, "all k");
    LimitProfile pr;
    pr.jmax = jmax;
    pr.provenance = Provenance::Analytic;
    pr.k_description = "k = multiples of " + std::to_string(n);
    const auto s = fibonacci(std::max(jmax + 1, n) + 1);
    auto s_at = [&](int i) { return Rational(s[static_cast<std::size_t>(i)]); };

    for (int j = 0; j <= jmax; ++j) {
        const int r = j % n;
        // reversed quotients repeat block-wise; a leading diverging term
        // kills the limit at multiples of n
        if (r == 0)
            pr.nu.emplace_back(Rational(0));
        else
            pr.nu.emplace_back(Rational(s_at(r) / s_at(r + 1)));
        // tails start with n-1-r ones before the diverging term
        pr.theta.emplace_back(Rational(s_at(n - 1 - r) / s_at(n - r)));

        if (j == 0) {
            pr.gamma.emplace_back(Rational(1));
            pr.delta.emplace_back(Rational(1));
        } else if (j <= n - 1) {
            pr.gamma.emplace_back(Rational(s_at(j + 1)));
            pr.delta.emplace_back(Rational(s_at(n - 1 - j) / s_at(n - 1)));
        } else {
            pr.gamma.emplace_back(ExtReal::infinity());
            pr.delta.emplace_back(Rational(0));
        }
    }
    return pr;
}

struct RatioSeries {
    double value = 0;
    double err = 0;
    bool converged = true;
};

RatioSeries summarize(const std::vector<double>& estimates, const std::vector<double>& widths,
                      double cauchy_tol) {
    RatioSeries out;
    const std::size_t m = estimates.size();
    out.value = estimates[m - 1];
    double dev = 0;
    for (std::size_t i = m >= 3 ? m - 3 : 0; i + 1 < m; ++i)
        dev = std::max(dev, std::abs(estimates[i] - out.value));
    double w = 0;
    for (std::size_t i = m >= 3 ? m - 3 : 0; i < m; ++i) w += widths[i];
    out.err = dev + w;
    out.converged = std::abs(estimates[m - 1] - estimates[m - 2]) <= cauchy_tol;
    return out;
}

} // namespace

const ExtReal& LimitProfile::gamma_at(int j) const { return checked(gamma, j, "gamma"); }
const ExtReal& LimitProfile::delta_at(int j) const { return checked(delta, j, "delta"); }
const ExtReal& LimitProfile::nu_at(int j) const { return checked(nu, j, "nu"); }
const ExtReal& LimitProfile::theta_at(int j) const { return checked(theta, j, "theta"); }

std::optional<int> LimitProfile::first_infinite_gamma() const {
    for (int j = 0; j <= jmax; ++j)
        if (!gamma_finite(j)) return j;
    return std::nullopt;
}

LimitProfile profile_analytic(const CFSpec& spec, int jmax) {
    if (jmax < 1) throw ConfigError("profile_analytic: jmax must be >= 1");
    if (const auto* p = std::get_if<EventuallyPeriodic>(&spec.kind())) {
        if (p->period.size() != 1)
            throw UnsupportedSpec(
                "profile_analytic: only single-term periods have a built-in closed form; "
                "use profile_numeric");
        // the preperiod washes out of both reversed quotients and tails
        return constant_type_profile(p->period[0], jmax);
    }
    if (const auto* b = std::get_if<BlockFamily>(&spec.kind()))
        return block_family_profile(b->block_len, jmax);
    if (const auto* a = std::get_if<AffineRule>(&spec.kind())) {
        if (a->slope == 0) return constant_type_profile(a->offset, jmax);
        return divergent_profile(jmax, "all k");
    }
    throw UnsupportedSpec("profile_analytic: explicit specs have no closed form; "
                          "use profile_numeric");
}

LimitProfile profile_numeric(const ConvergentTable& table, const std::vector<int>& K, int jmax,
                             double cauchy_tol) {
    if (jmax < 1) throw ConfigError("profile_numeric: jmax must be >= 1");
    std::vector<int> ks = K;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    if (ks.size() < 3) throw InsufficientDepth("profile_numeric: need at least 3 indices in K");
    if (ks.front() < 0 || ks.back() + jmax > table.depth())
        throw InsufficientDepth("profile_numeric: K must lie in [0, depth - jmax]");

    // tighten eta enclosures so their widths do not dominate the error bars
    const Int qd = table.q(table.depth());
    Rational width_target(1);
    width_target /= Rational(qd * qd);
    width_target /= 1000000000000L;
    ConvergentTable t = table.refined_for_alpha_width(width_target);

    LimitProfile pr;
    pr.jmax = jmax;
    pr.provenance = Provenance::Numeric;
    {
        std::string d = "K = {";
        for (std::size_t i = 0; i < ks.size(); ++i)
            d += (i ? "," : "") + std::to_string(ks[i]);
        pr.k_description = d + "}";
    }

    std::vector<RatInterval> eta_cache(static_cast<std::size_t>(t.depth()) + 1);
    for (int m = 0; m <= t.depth(); ++m) eta_cache[static_cast<std::size_t>(m)] = t.eta(m);
    auto eta_ratio = [&](int num, int den) {
        return eta_cache[static_cast<std::size_t>(num)] / eta_cache[static_cast<std::size_t>(den)];
    };

    for (int j = 0; j <= jmax; ++j) {
        if (j == 0) {
            pr.nu.emplace_back(ApproxReal{});   // unused at j = 0
            pr.theta.emplace_back(ApproxReal{});
            pr.gamma.emplace_back(Rational(1)); // ratio of a quantity with itself
            pr.delta.emplace_back(Rational(1));
            continue;
        }
        std::vector<double> g_est, g_w, d_est, d_w, n_est, n_w, th_est, th_w;
        for (int k : ks) {
            g_est.push_back(Rational(Rational(t.q(k + j)) / Rational(t.q(k))).get_d());
            g_w.push_back(0.0);
            n_est.push_back(Rational(Rational(t.q(k + j - 1)) / Rational(t.q(k + j))).get_d());
            n_w.push_back(0.0);
            const RatInterval dr = eta_ratio(k + j, k);
            d_est.push_back(dr.mid().get_d());
            d_w.push_back(dr.width().get_d() / 2);
            const RatInterval tr = eta_ratio(k + j, k + j - 1);
            th_est.push_back(tr.mid().get_d());
            th_w.push_back(tr.width().get_d() / 2);
        }
        const auto g = summarize(g_est, g_w, cauchy_tol);
        const auto d = summarize(d_est, d_w, cauchy_tol);
        const auto nn = summarize(n_est, n_w, cauchy_tol);
        const auto th = summarize(th_est, th_w, cauchy_tol);
        pr.gamma.emplace_back(ApproxReal{g.value, g.err, g.converged});
        pr.delta.emplace_back(ApproxReal{d.value, d.err, d.converged});
        pr.nu.emplace_back(ApproxReal{nn.value, nn.err, nn.converged});
        pr.theta.emplace_back(ApproxReal{th.value, th.err, th.converged});
    }
    return pr;
}

} // namespace rotevl

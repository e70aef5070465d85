#include "rotevl/convergents.hpp"

#include <algorithm>

namespace rotevl {

Rational eval_finite_cf(const std::vector<std::uint64_t>& terms) {
    // [c_1,...,c_m] = 1/(c_1 + 1/(c_2 + ...)); fold from the back.
    Rational x(0);
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        x += static_cast<unsigned long>(*it);
        x = 1 / x;
    }
    return x;
}

RatInterval tail_enclosure(const CFSpec& spec, int j, int depth) {
    if (j < 0 || depth < 1) throw ConfigError("tail_enclosure: bad arguments");
    int take = depth + 1; // straddling pair of truncations
    bool exact_tail = false;
    if (auto avail = spec.available_depth()) {
        const int remaining = *avail - j;
        if (remaining < 1)
            throw DepthExceeded("tail_enclosure: no terms available past index " +
                                std::to_string(j));
        if (take >= remaining) {
            take = remaining; // finite list: the full tail is exact
            exact_tail = true;
        }
    }
    std::vector<std::uint64_t> terms;
    terms.reserve(static_cast<std::size_t>(take));
    for (int i = 1; i <= take; ++i) terms.push_back(spec.term(j + i));
    const Rational full = eval_finite_cf(terms);
    if (exact_tail) return RatInterval(full);
    terms.pop_back();
    return RatInterval::hull(eval_finite_cf(terms), full);
}

ConvergentTable::ConvergentTable(CFSpec spec, int k_max, int alpha_depth)
    : spec_(std::move(spec)), k_max_(k_max), alpha_depth_(alpha_depth) {
    p_.resize(static_cast<std::size_t>(alpha_depth_) + 1);
    q_.resize(static_cast<std::size_t>(alpha_depth_) + 1);
    p_[0] = 0;
    q_[0] = 1;
    if (alpha_depth_ >= 1) {
        p_[1] = 1;
        q_[1] = static_cast<unsigned long>(spec_.term(1));
    }
    for (int k = 2; k <= alpha_depth_; ++k) {
        const Int c(static_cast<unsigned long>(spec_.term(k)));
        p_[static_cast<std::size_t>(k)] = c * p_[static_cast<std::size_t>(k - 1)] + p_[static_cast<std::size_t>(k - 2)];
        q_[static_cast<std::size_t>(k)] = c * q_[static_cast<std::size_t>(k - 1)] + q_[static_cast<std::size_t>(k - 2)];
    }
}

ConvergentTable ConvergentTable::build(const CFSpec& spec, int k_max) {
    if (k_max < 0) throw ConfigError("ConvergentTable::build: k_max must be >= 0");
    const int alpha_depth = k_max + 2;
    if (auto avail = spec.available_depth(); avail && *avail < alpha_depth)
        throw DepthExceeded("ConvergentTable::build: spec supplies " + std::to_string(*avail) +
                            " terms, need " + std::to_string(alpha_depth));
    return ConvergentTable(spec, k_max, alpha_depth);
}

ConvergentTable ConvergentTable::refined(int extra) const {
    if (extra <= 0) return *this;
    int target = alpha_depth_ + extra;
    if (auto avail = spec_.available_depth()) target = std::min(target, *avail);
    if (target > spec_.max_depth()) target = std::max(alpha_depth_, spec_.max_depth());
    if (target <= alpha_depth_)
        throw PrecisionExhausted("ConvergentTable::refined: cannot refine past depth " +
                                 std::to_string(alpha_depth_));
    return ConvergentTable(spec_, k_max_, target);
}

ConvergentTable ConvergentTable::refined_for_alpha_width(const Rational& max_width) const {
    if (sgn(max_width) <= 0) throw ConfigError("refined_for_alpha_width: width must be positive");
    ConvergentTable t = *this;
    int step = 8;
    while (t.alpha().width() > max_width) {
        t = t.refined(step); // throws PrecisionExhausted when stuck
        step *= 2;
    }
    return t;
}

void ConvergentTable::check_k(int k, int limit) const {
    if (k < 0 || k > limit)
        throw DepthExceeded("convergent index " + std::to_string(k) + " out of range [0," +
                            std::to_string(limit) + "]");
}

const Int& ConvergentTable::p(int k) const {
    check_k(k, alpha_depth_);
    return p_[static_cast<std::size_t>(k)];
}

const Int& ConvergentTable::q(int k) const {
    check_k(k, alpha_depth_);
    return q_[static_cast<std::size_t>(k)];
}

RatInterval ConvergentTable::alpha() const {
    const auto a = static_cast<std::size_t>(alpha_depth_);
    Rational lo(p_[a - 1], q_[a - 1]);
    Rational hi(p_[a], q_[a]);
    lo.canonicalize();
    hi.canonicalize();
    return RatInterval::hull(lo, hi);
}

RatInterval ConvergentTable::eta(int k) const {
    check_k(k, k_max_);
    const RatInterval signed_err = Rational(q(k)) * alpha() - RatInterval(Rational(p(k)));
    const RatInterval e = (k % 2 == 0) ? signed_err : -signed_err;
    if (!e.strictly_positive())
        throw PrecisionExhausted("eta enclosure touches zero at k = " + std::to_string(k));
    return e;
}

Rational ConvergentTable::reversed_quotient(int k) const {
    if (k < 1) throw ConfigError("reversed_quotient: k must be >= 1");
    check_k(k, k_max_);
    Rational r(q(k - 1), q(k));
    r.canonicalize();
    return r;
}

} // namespace rotevl

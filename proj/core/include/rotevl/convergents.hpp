#pragma once

#include <vector>

#include "rotevl/cf_spec.hpp"
#include "rotevl/interval.hpp"

namespace rotevl {

/// Exact value of the finite continued fraction [c_1,...,c_m]
/// = 1/(c_1 + 1/(c_2 + ...)). The empty fraction is 0.
Rational eval_finite_cf(const std::vector<std::uint64_t>& terms);

/// Rigorous enclosure of the tail [c_{j+1}, c_{j+2}, ...]. Consecutive
/// truncations straddle the limit, so the hull of the depth and depth+1
/// truncations encloses it. For explicit specs whose list ends first, the
/// full finite tail is returned as a point interval.
RatInterval tail_enclosure(const CFSpec& spec, int j, int depth);

/// Convergents p_k/q_k of the spec's number together with a rigorous
/// enclosure of alpha obtained from the two deepest consecutive convergents.
/// Immutable; refinement returns a new table with a deeper alpha enclosure.
class ConvergentTable {
public:
    /// Needs k_max + 2 terms from the spec: the alpha enclosure uses the
    /// convergents at k_max+1 and k_max+2.
    static ConvergentTable build(const CFSpec& spec, int k_max);

    /// Same k_max, alpha straddled `extra` convergents deeper.
    ConvergentTable refined(int extra) const;

    /// Refine (doubling) until width(alpha) <= max_width. Throws
    /// PrecisionExhausted if the spec cannot supply enough terms or the
    /// max_depth budget is hit first.
    ConvergentTable refined_for_alpha_width(const Rational& max_width) const;

    const CFSpec& spec() const { return spec_; }
    int depth() const { return k_max_; }
    int alpha_depth() const { return alpha_depth_; }

    const Int& p(int k) const;
    const Int& q(int k) const;

    /// Enclosure of alpha; endpoints are the convergents at alpha_depth-1
    /// and alpha_depth, so the width is exactly 1/(q_{A-1} q_A).
    RatInterval alpha() const;

    /// Enclosure of eta_k = |q_k alpha - p_k|, strictly positive.
    /// Sign fixed by parity: q_k alpha - p_k > 0 iff k is even.
    RatInterval eta(int k) const;

    /// q_{k-1}/q_k as an exact rational, 1 <= k <= depth. Equals the exact
    /// value of the reversed finite fraction [c_k, c_{k-1}, ..., c_1].
    Rational reversed_quotient(int k) const;

private:
    ConvergentTable(CFSpec spec, int k_max, int alpha_depth);
    void check_k(int k, int limit) const;

    CFSpec spec_;
    int k_max_;
    int alpha_depth_;             // p_, q_ run up to this index
    std::vector<Int> p_, q_;
};

} // namespace rotevl

#pragma once

#include "rotevl/convergents.hpp"

namespace rotevl {

/// Point on the circle [0,1) carried as a rigorous rational enclosure of
/// width < 1/2 (the width comes from alpha's enclosure along orbits).
class CirclePoint {
public:
    explicit CirclePoint(RatInterval pos);
    static CirclePoint from_rational(const Rational& x);

    const RatInterval& position() const { return pos_; }

private:
    RatInterval pos_;
};

/// Open arc on the circle in signed coordinates around 0: (left, right)
/// with left < 0 < right permitted; projected mod 1 when used as a subset
/// of [0,1).
struct Arc {
    RatInterval left, right;
    RatInterval length() const { return right - left; }
};

/// B_k = (-eta_{k+1}, eta_k) for k even, (-eta_k, eta_{k+1}) for k odd.
/// Nested: b_arc(k+1) is contained in b_arc(k).
Arc b_arc(const ConvergentTable& table, int k);

/// The observable: X(x) = q_m with m = min{l : x not in B_l}, the height
/// profile over the nested arcs. Membership is circle-aware (the arcs wrap
/// around 0) and refines alpha adaptively until each test decides.
/// Throws PrecisionExhausted if x is indistinguishable from 0 and
/// DepthExceeded if x lies inside the deepest testable arc.
Int observable_X(const ConvergentTable& table, const CirclePoint& x);

/// Return time of x in B_k: q_{k+1} on the sgn(q_k alpha - p_k)-positive
/// side of 0, q_k on the other side. x must lie in B_k.
Int return_time(const ConvergentTable& table, int k, const CirclePoint& x);

/// Exact entry-time distribution mu(tau_{B_k} <= s):
///   1                              if s >= q_{k+1}
///   q_k eta_{k+1} + eta_k floor(s) if s in [q_k, q_{k+1})
///   (eta_k + eta_{k+1}) floor(s)   if s in [0, q_k).
RatInterval entry_cdf_exact(const ConvergentTable& table, int k, const Rational& s);

/// H_{q_k}(y) = mu(tau_{L(q_k y)} <= q_k): locates m with q_m < q_k y <
/// q_{m+1} (level set = B_m) and evaluates the entry law. Exactly 1 when
/// q_k y <= 1. Throws BreakpointHit when q_k y equals some q_m.
RatInterval finite_k_survival(const ConvergentTable& table, int k, const Rational& y);

/// M_n(x) = max over j = 1..n of X(T^j x) (j = 0 excluded).
/// Deterministic; refines alpha internally as needed.
Int sample_maximum(const ConvergentTable& table, const CirclePoint& x, const Int& n);

} // namespace rotevl

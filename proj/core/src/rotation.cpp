#include "rotevl/rotation.hpp"

#include <utility>

namespace rotevl {

namespace {

enum class Tri { In, Out, Unknown };

/// Right/left radii of B_l: (same index pattern for both parities of l,
/// the right radius is eta_l for l even and eta_{l+1} for l odd).
std::pair<RatInterval, RatInterval> arc_radii(const ConvergentTable& t, int l) {
    const RatInterval el = t.eta(l);
    const RatInterval el1 = t.eta(l + 1);
    if (l % 2 == 0) return {el, el1};   // B_l = (-eta_{l+1}, eta_l)
    return {el1, el};                   // B_l = (-eta_l, eta_{l+1})
}

/// Membership of a position z (lo in [0,1), width < 1/2) in the arc around 0
/// with right radius R and left radius L. Unwrapped on [0, 1.5): the arc is
/// [0, R) together with (1-L, 1+R).
Tri arc_membership(const RatInterval& z, const RatInterval& right, const RatInterval& left) {
    const Rational one(1);
    if (z.hi() < right.lo()) return Tri::In;
    if (z.lo() > one - left.lo() && z.hi() < one + right.lo()) return Tri::In;
    if (z.lo() >= right.hi() && z.hi() <= one - left.hi()) return Tri::Out;
    return Tri::Unknown;
}

RatInterval normalize_mod1(const RatInterval& z) {
    const Int shift = floor_int(z.lo());
    if (shift == 0) return z;
    const Rational s(shift);
    return RatInterval(z.lo() - s, z.hi() - s);
}

/// Exit level of z: min{l : z not in B_l}. Refines the local table while
/// the arc enclosures, not z's own width, are what blocks the decision.
int exit_level(ConvergentTable& cur, const RatInterval& z) {
    for (int l = 0;; ++l) {
        if (l + 1 > cur.depth())
            throw DepthExceeded("observable: point lies inside the deepest arc B_" +
                                std::to_string(cur.depth() - 1));
        for (;;) {
            const auto [right, left] = arc_radii(cur, l);
            const Tri t = arc_membership(z, right, left);
            if (t == Tri::In) break;
            if (t == Tri::Out) return l;
            const Rational boundary_width = right.width() + left.width();
            if (boundary_width * 4 <= z.width())
                throw PrecisionExhausted(
                    "observable: position enclosure too wide to decide membership in B_" +
                    std::to_string(l));
            cur = cur.refined(cur.alpha_depth());
        }
    }
}

} // namespace

CirclePoint::CirclePoint(RatInterval pos) : pos_(normalize_mod1(pos)) {
    if (pos_.width() * 2 >= 1)
        throw PrecisionExhausted("CirclePoint: enclosure width must be < 1/2");
}

CirclePoint CirclePoint::from_rational(const Rational& x) {
    return CirclePoint(RatInterval(x));
}

Arc b_arc(const ConvergentTable& table, int k) {
    const auto [right, left] = arc_radii(table, k);
    return Arc{-left, right};
}

Int observable_X(const ConvergentTable& table, const CirclePoint& x) {
    const RatInterval& z = x.position();
    if (z.is_point() && sgn(z.lo()) == 0)
        throw PrecisionExhausted("observable_X: x = 0 lies in every B_l");
    ConvergentTable cur = table;
    const int l = exit_level(cur, z);
    return cur.q(l);
}

Int return_time(const ConvergentTable& table, int k, const CirclePoint& x) {
    if (k + 1 > table.depth()) throw DepthExceeded("return_time: k+1 exceeds table depth");
    const RatInterval& z = x.position();
    ConvergentTable cur = table;
    const Rational one(1);
    for (;;) {
        const auto [right, left] = arc_radii(cur, k);
        // positive side of 0: z in (0, right); negative side: z in (1-left, 1)
        if (sgn(z.lo()) > 0 && z.hi() < right.lo()) {
            // paper formula in signed coordinates: q_{k+1} on the
            // sgn(q_k alpha - p_k) side, i.e. the positive side for k even
            return (k % 2 == 0) ? cur.q(k + 1) : cur.q(k);
        }
        if (z.lo() > one - left.lo() && z.hi() < one) {
            return (k % 2 == 0) ? cur.q(k) : cur.q(k + 1);
        }
        if (z.lo() >= right.hi() && z.hi() <= one - left.hi())
            throw Error("return_time: x is not in B_k");
        const Rational boundary_width = right.width() + left.width();
        if (boundary_width * 4 <= z.width())
            throw PrecisionExhausted("return_time: sign of the position undecidable");
        cur = cur.refined(cur.alpha_depth());
    }
}

RatInterval entry_cdf_exact(const ConvergentTable& table, int k, const Rational& s) {
    if (sgn(s) < 0) throw ConfigError("entry_cdf_exact: s must be nonnegative");
    if (k + 1 > table.depth()) throw DepthExceeded("entry_cdf_exact: k+1 exceeds table depth");
    const Rational qk(table.q(k));
    const Rational qk1(table.q(k + 1));
    if (s >= qk1) return RatInterval(Rational(1));
    const Rational fl(floor_int(s));
    if (s >= qk) return qk * table.eta(k + 1) + fl * table.eta(k);
    return fl * (table.eta(k) + table.eta(k + 1));
}

RatInterval finite_k_survival(const ConvergentTable& table, int k, const Rational& y) {
    if (k > table.depth()) throw DepthExceeded("finite_k_survival: k exceeds table depth");
    const Rational t = y * Rational(table.q(k));
    if (t < 1) return RatInterval(Rational(1));
    int m = -1;
    for (int i = 0;; ++i) {
        if (i > table.depth())
            throw DepthExceeded("finite_k_survival: q_k y exceeds the deepest convergent");
        const Rational qi(table.q(i));
        if (t == qi)
            throw BreakpointHit("finite_k_survival: q_k y collides with q_" + std::to_string(i));
        if (qi < t)
            m = i;
        else
            break;
    }
    return entry_cdf_exact(table, m, Rational(table.q(k)));
}

Int sample_maximum(const ConvergentTable& table, const CirclePoint& x, const Int& n) {
    if (n < 1) throw ConfigError("sample_maximum: n must be >= 1");
    if (!n.fits_slong_p() || n.get_si() > 2000000)
        throw Error("sample_maximum: n too large for the reference path");
    const long steps = n.get_si();

    ConvergentTable cur = table;
    {
        // keep orbit enclosures narrow relative to the deepest arcs
        Rational target = cur.eta(cur.depth() - 1).lo();
        target /= 8 * steps;
        cur = cur.refined_for_alpha_width(target);
    }
    Int best = 0;
    for (long j = 1; j <= steps; ++j) {
        for (;;) {
            const RatInterval pos =
                normalize_mod1(x.position() + Rational(j) * cur.alpha());
            try {
                ConvergentTable scratch = cur;
                const int l = exit_level(scratch, pos);
                const Int qx = cur.q(l);
                if (qx > best) best = qx;
                break;
            } catch (const PrecisionExhausted&) {
                cur = cur.refined(cur.alpha_depth()); // throws when out of budget
            }
        }
    }
    return best;
}

} // namespace rotevl

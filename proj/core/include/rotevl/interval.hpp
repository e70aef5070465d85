#pragma once

#include "rotevl/errors.hpp"
#include "rotevl/rational.hpp"

namespace rotevl {

/// Three-way comparison of enclosures. Undecided is a value, not an error:
/// callers refine their inputs and retry.
enum class Ordering { Less, Greater, Undecided };

/// Closed interval with exact rational endpoints. All arithmetic is exact,
/// so enclosures are rigorous without any outward rounding.
class RatInterval {
public:
    RatInterval() : lo_(0), hi_(0) {}
    RatInterval(const Rational& point) : lo_(point), hi_(point) {} // NOLINT: implicit by design
    RatInterval(Rational lo, Rational hi);

    static RatInterval hull(const Rational& a, const Rational& b);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }
    bool overlaps(const RatInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
    bool strictly_positive() const { return sgn(lo_) > 0; }

    RatInterval operator-() const { return RatInterval(-hi_, -lo_); }
    RatInterval& operator+=(const RatInterval& o);
    RatInterval& operator-=(const RatInterval& o);

    friend RatInterval operator+(RatInterval a, const RatInterval& b) { return a += b; }
    friend RatInterval operator-(RatInterval a, const RatInterval& b) { return a -= b; }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b);
    friend RatInterval operator*(const Rational& s, const RatInterval& a);
    friend RatInterval operator*(const RatInterval& a, const Rational& s) { return s * a; }

    /// Reciprocal; requires the interval not to contain zero.
    RatInterval reciprocal() const;
    RatInterval operator/(const RatInterval& o) const { return *this * o.reciprocal(); }

    /// Enclosure of |x| over the interval.
    RatInterval abs_value() const;

private:
    Rational lo_, hi_;
};

Ordering compare(const RatInterval& a, const RatInterval& b);

} // namespace rotevl

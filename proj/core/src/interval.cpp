#include "rotevl/interval.hpp"

#include <algorithm>

namespace rotevl {

RatInterval::RatInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw Error("RatInterval: lo > hi");
}

RatInterval RatInterval::hull(const Rational& a, const Rational& b) {
    return a <= b ? RatInterval(a, b) : RatInterval(b, a);
}

RatInterval& RatInterval::operator+=(const RatInterval& o) {
    lo_ += o.lo_;
    hi_ += o.hi_;
    return *this;
}

RatInterval& RatInterval::operator-=(const RatInterval& o) {
    lo_ -= o.hi_;
    hi_ -= o.lo_;
    return *this;
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    const Rational p1 = a.lo_ * b.lo_;
    const Rational p2 = a.lo_ * b.hi_;
    const Rational p3 = a.hi_ * b.lo_;
    const Rational p4 = a.hi_ * b.hi_;
    return RatInterval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

RatInterval operator*(const Rational& s, const RatInterval& a) {
    if (sgn(s) >= 0) return RatInterval(s * a.lo_, s * a.hi_);
    return RatInterval(s * a.hi_, s * a.lo_);
}

RatInterval RatInterval::reciprocal() const {
    if (contains_zero()) throw Error("RatInterval::reciprocal: interval contains zero");
    return RatInterval(1 / hi_, 1 / lo_);
}

RatInterval RatInterval::abs_value() const {
    if (sgn(lo_) >= 0) return *this;
    if (sgn(hi_) <= 0) return -*this;
    return RatInterval(Rational(0), std::max(Rational(-lo_), hi_));
}

Ordering compare(const RatInterval& a, const RatInterval& b) {
    if (a.hi() < b.lo()) return Ordering::Less;
    if (a.lo() > b.hi()) return Ordering::Greater;
    return Ordering::Undecided;
}

} // namespace rotevl

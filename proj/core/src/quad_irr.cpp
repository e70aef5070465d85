#include "rotevl/quad_irr.hpp"

#include <utility>

namespace rotevl {

namespace {

/// Extract square factors: d = s^2 * d' with d' square-free over small
/// primes, so equal fields get equal d tags.
void extract_square(Int& d, Int& scale) {
    scale = 1;
    for (unsigned long f = 2; f <= 1000000UL && Int(f) * f <= d; ++f) {
        const Int ff = Int(f) * f;
        while (d % ff == 0) {
            d /= ff;
            scale *= f;
        }
    }
}

bool is_perfect_square(const Int& d, Int& root) {
    if (sgn(d) < 0) return false;
    mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
    return root * root == d;
}

void require_same_field(const QuadIrr& x, const QuadIrr& y) {
    if (!x.is_rational() && !y.is_rational() && x.d() != y.d())
        throw Error("QuadIrr: mixing sqrt(" + x.d().get_str() + ") with sqrt(" +
                    y.d().get_str() + ")");
}

} // namespace

QuadIrr::QuadIrr(const Rational& r) : a_(r.get_num()), b_(0), c_(r.get_den()), d_(0) {
    normalize();
}

QuadIrr::QuadIrr(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (sgn(c_) == 0) throw Error("QuadIrr: zero denominator");
    if (sgn(d_) < 0) throw Error("QuadIrr: negative radicand");
    normalize();
}

void QuadIrr::normalize() {
    if (sgn(c_) < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    if (sgn(b_) != 0) {
        Int scale;
        extract_square(d_, scale);
        b_ *= scale;
        Int root;
        if (d_ <= 1 || is_perfect_square(d_, root)) {
            a_ += b_ * (d_ <= 1 ? d_ : root);
            b_ = 0;
        }
    }
    if (sgn(b_) == 0) d_ = 0;
    Int g = gcd(gcd(a_, b_), c_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

QuadIrr QuadIrr::sqrt_of(const Int& d) { return QuadIrr(0, 1, 1, d); }

QuadIrr QuadIrr::constant_type_alpha(std::uint64_t c) {
    const Int ci(static_cast<unsigned long>(c));
    return QuadIrr(-ci, 1, 2, ci * ci + 4);
}

Rational QuadIrr::as_rational() const {
    if (!is_rational()) throw Error("QuadIrr::as_rational on irrational value");
    Rational r(a_, c_);
    r.canonicalize();
    return r;
}

int QuadIrr::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2 d
    return (a_ * a_ > b_ * b_ * d_) ? sa : sb;
}

QuadIrr operator+(const QuadIrr& x, const QuadIrr& y) {
    require_same_field(x, y);
    const Int d = x.is_rational() ? y.d_ : x.d_;
    return QuadIrr(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, d);
}

QuadIrr operator-(const QuadIrr& x, const QuadIrr& y) { return x + (-y); }

QuadIrr operator*(const QuadIrr& x, const QuadIrr& y) {
    require_same_field(x, y);
    const Int d = x.is_rational() ? y.d_ : x.d_;
    return QuadIrr(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_, d);
}

QuadIrr operator/(const QuadIrr& x, const QuadIrr& y) {
    if (y.is_zero()) throw Error("QuadIrr: division by zero");
    // 1/((a+b sqrt d)/c) = c (a - b sqrt d) / (a^2 - b^2 d)
    const QuadIrr inv(y.c_ * y.a_, -y.c_ * y.b_, y.a_ * y.a_ - y.b_ * y.b_ * y.d_, y.d_);
    return x * inv;
}

QuadIrr QuadIrr::pow(int e) const {
    if (e < 0) return QuadIrr(Rational(1)) / pow(-e);
    QuadIrr acc{Rational(1)};
    QuadIrr base = *this;
    for (int n = e; n > 0; n >>= 1) {
        if (n & 1) acc = acc * base;
        base = base * base;
    }
    return acc;
}

bool QuadIrr::operator==(const QuadIrr& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

RatInterval QuadIrr::enclosure(const Rational& max_width) const {
    if (sgn(max_width) <= 0) throw Error("QuadIrr::enclosure: width must be positive");
    if (is_rational()) return RatInterval(as_rational());
    Int iroot;
    mpz_sqrt(iroot.get_mpz_t(), d_.get_mpz_t());
    Rational lo(iroot), hi(iroot + 1);
    // Newton from above for sqrt(d); lower bound from d/hi.
    const Rational need = max_width * Rational(c_) / Rational(abs(b_));
    while (hi - lo > need) {
        hi = (hi + Rational(d_) / hi) / 2;
        lo = Rational(d_) / hi;
    }
    const RatInterval root(lo, hi);
    RatInterval out = RatInterval(Rational(a_)) + Rational(b_) * root;
    return out * (Rational(1) / Rational(c_));
}

double QuadIrr::to_double() const {
    if (is_rational()) return as_rational().get_d();
    return enclosure(Rational(1, 1000000000000000000L)).mid().get_d();
}

std::string QuadIrr::to_string() const {
    if (is_rational()) {
        const Rational r = as_rational();
        if (r.get_den() == 1) return r.get_num().get_str();
        return r.get_num().get_str() + "/" + r.get_den().get_str();
    }
    std::string s = "(" + a_.get_str();
    s += (sgn(b_) < 0 ? " - " : " + ");
    const Int ab = abs(b_);
    if (ab != 1) s += ab.get_str() + "*";
    s += "sqrt(" + d_.get_str() + "))";
    if (c_ != 1) s += "/" + c_.get_str();
    return s;
}

} // namespace rotevl

#pragma once

#include "rotevl/interval.hpp"
#include "rotevl/rational.hpp"

namespace rotevl {

/// Exact arithmetic in Q(sqrt(d)): value = (a + b*sqrt(d)) / c with integer
/// a, b, c > 0 and d >= 2 not a perfect square. b == 0 represents a plain
/// rational (d is then 0). Mixing two different irrational fields is an
/// error; profiles never need it.
class QuadIrr {
public:
    QuadIrr() : a_(0), b_(0), c_(1), d_(0) {}
    QuadIrr(const Rational& r); // NOLINT: implicit by design
    QuadIrr(Int a, Int b, Int c, Int d);

    static QuadIrr sqrt_of(const Int& d);
    /// The constant-type number [c,c,c,...] = (sqrt(c^2+4) - c)/2.
    static QuadIrr constant_type_alpha(std::uint64_t c);

    bool is_rational() const { return sgn(b_) == 0; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    Rational as_rational() const;

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    int sign() const;

    QuadIrr operator-() const { return QuadIrr(-a_, -b_, c_, d_); }
    friend QuadIrr operator+(const QuadIrr& x, const QuadIrr& y);
    friend QuadIrr operator-(const QuadIrr& x, const QuadIrr& y);
    friend QuadIrr operator*(const QuadIrr& x, const QuadIrr& y);
    friend QuadIrr operator/(const QuadIrr& x, const QuadIrr& y);

    /// Integer power, possibly negative.
    QuadIrr pow(int e) const;

    bool operator==(const QuadIrr& o) const;
    /// -1, 0, +1; exact.
    int compare(const QuadIrr& o) const { return (*this - o).sign(); }
    int compare(const Rational& r) const { return compare(QuadIrr(r)); }

    /// Rigorous rational enclosure of width <= max_width.
    RatInterval enclosure(const Rational& max_width) const;
    double to_double() const;
    std::string to_string() const;

private:
    void normalize();
    Int a_, b_, c_, d_;
};

} // namespace rotevl

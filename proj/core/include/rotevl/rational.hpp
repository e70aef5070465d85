#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rotevl {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Exact floor of a rational.
Int floor_int(const Rational& x);

inline double to_double(const Rational& x) { return x.get_d(); }

/// Doubles are dyadic rationals, so this conversion is exact.
Rational rational_from_double(double x);

/// Decimal rendering with a fixed number of fractional digits
/// (round half away from zero). Deterministic across platforms.
std::string decimal_string(const Rational& x, int digits);

} // namespace rotevl

#include "rotevl/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace rotevl {

Int floor_int(const Rational& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite");
    Rational r;
    mpq_set_d(r.get_mpq_t(), x);
    return r;
}

std::string decimal_string(const Rational& x, int digits) {
    const bool neg = sgn(x) < 0;
    Rational a = neg ? Rational(-x) : x;
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round(a * 10^digits), half away from zero
    Rational scaled = a * Rational(scale);
    Int twice_num = 2 * scaled.get_num();
    Int rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), Int(twice_num + scaled.get_den()).get_mpz_t(),
               Int(2 * scaled.get_den()).get_mpz_t());
    Int ip = rounded / scale;
    Int fp = rounded % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    std::string out = neg ? "-" : "";
    out += ip.get_str();
    if (digits > 0) {
        out += '.';
        out += frac;
    }
    return out;
}

} // namespace rotevl

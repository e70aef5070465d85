#include "rotevl/ext_real.hpp"

#include <cmath>

#include "rotevl/errors.hpp"

namespace rotevl {

const QuadIrr& ExtReal::exact() const {
    if (!is_exact()) throw Error("ExtReal::exact on non-exact value");
    return std::get<QuadIrr>(v_);
}

const ApproxReal& ExtReal::approx() const {
    if (!is_approx()) throw Error("ExtReal::approx on non-approx value");
    return std::get<ApproxReal>(v_);
}

double ExtReal::to_double() const {
    if (is_infinite()) return HUGE_VAL;
    if (is_exact()) return exact().to_double();
    return approx().value;
}

double ExtReal::err() const {
    if (is_approx()) return approx().err;
    return 0.0;
}

RatInterval ExtReal::enclosure(const Rational& max_width) const {
    if (is_infinite()) throw OutOfScope("ExtReal::enclosure of +infinity");
    if (is_exact()) return exact().enclosure(max_width);
    const auto& a = approx();
    return RatInterval::hull(rational_from_double(a.value - a.err),
                             rational_from_double(a.value + a.err));
}

int ExtReal::compare(const Rational& y) const {
    if (is_infinite()) return 1;
    if (is_exact()) return exact().compare(y);
    const double v = approx().value;
    const double yd = y.get_d();
    if (v < yd) return -1;
    if (v > yd) return 1;
    return 0;
}

std::string ExtReal::to_string() const {
    if (is_infinite()) return "inf";
    if (is_exact()) return exact().to_string();
    const auto& a = approx();
    std::string s = std::to_string(a.value) + " +- " + std::to_string(a.err);
    if (!a.converged) s += " [non-convergent]";
    return s;
}

} // namespace rotevl

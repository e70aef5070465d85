#pragma once

#include <string>
#include <variant>

#include "rotevl/quad_irr.hpp"

namespace rotevl {

/// Numeric limit estimate with an error bar and a convergence diagnostic.
struct ApproxReal {
    double value = 0.0;
    double err = 0.0;
    bool converged = true;
};

struct PosInfinity {};

/// Extended nonnegative real: exact value (rational or quadratic
/// irrational), numeric estimate with an error bar, or +infinity.
class ExtReal {
public:
    ExtReal() : v_(QuadIrr()) {}
    ExtReal(QuadIrr x) : v_(std::move(x)) {}         // NOLINT: implicit by design
    ExtReal(const Rational& r) : v_(QuadIrr(r)) {}   // NOLINT
    ExtReal(ApproxReal a) : v_(a) {}                 // NOLINT
    ExtReal(PosInfinity i) : v_(i) {}                // NOLINT

    static ExtReal infinity() { return ExtReal(PosInfinity{}); }

    bool is_exact() const { return std::holds_alternative<QuadIrr>(v_); }
    bool is_approx() const { return std::holds_alternative<ApproxReal>(v_); }
    bool is_infinite() const { return std::holds_alternative<PosInfinity>(v_); }
    bool is_finite() const { return !is_infinite(); }

    const QuadIrr& exact() const;
    const ApproxReal& approx() const;

    /// +inf maps to HUGE_VAL.
    double to_double() const;
    /// Half-width of what this value is known to lie in (0 for exact).
    double err() const;

    /// Enclosure of a finite value; throws OutOfScope on infinity.
    RatInterval enclosure(const Rational& max_width) const;

    /// Exact/infinite values compare exactly; approx values by midpoint.
    int compare(const Rational& y) const;

    std::string to_string() const;

private:
    std::variant<QuadIrr, ApproxReal, PosInfinity> v_;
};

} // namespace rotevl

#pragma once

// Internal helpers shared by the survival-law and entry-law translation
// units; not part of the public surface.

#include "rotevl/limit_profile.hpp"

namespace rotevl::detail {

/// gamma_j / delta_j / nu_j / theta_j with geometric-tail extension past the
/// stored jmax for constant-type profiles. Throws ProfileIncomplete when the
/// entry is neither stored nor extendable.
ExtReal gamma_ext(const LimitProfile& pr, int j);
ExtReal delta_ext(const LimitProfile& pr, int j);
ExtReal nu_ext(const LimitProfile& pr, int j);
ExtReal theta_ext(const LimitProfile& pr, int j);

/// The theorem's plateau value (delta_j + delta_{j+1})/(gamma_1 + delta_1);
/// exact when every input is exact, interval-propagated otherwise.
/// Requires gamma_1 finite.
ExtReal plateau_value(const LimitProfile& pr, int j);

/// a/b on ExtReal values (finite); exact when both exact.
ExtReal ext_div(const ExtReal& num, const ExtReal& den);
/// a+b on finite ExtReal values.
ExtReal ext_add(const ExtReal& x, const ExtReal& y);

} // namespace rotevl::detail

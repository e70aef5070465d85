#pragma once

#include <stdexcept>
#include <string>

namespace rotevl {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A quotient stream was asked for more terms than it can supply.
struct DepthExceeded : Error {
    using Error::Error;
};

/// A comparison stayed undecided after refining to the spec's depth budget.
struct PrecisionExhausted : Error {
    using Error::Error;
};

/// The requested closed form is not defined for this spec kind.
struct UnsupportedSpec : Error {
    using Error::Error;
};

/// A numeric limit estimate needs more table depth than is available.
struct InsufficientDepth : Error {
    using Error::Error;
};

/// Evaluation was requested exactly at a discontinuity of the limit law.
struct BreakpointHit : Error {
    using Error::Error;
};

/// A profile entry needed for the computation is missing or degenerate.
struct ProfileIncomplete : Error {
    using Error::Error;
};

/// The quantity is not defined for this argument (e.g. g(y) for y < 1).
struct OutOfScope : Error {
    using Error::Error;
};

/// Invalid run configuration (CLI arguments, grids, spec strings).
struct ConfigError : Error {
    using Error::Error;
};

} // namespace rotevl

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rotevl/errors.hpp"

namespace rotevl {

// Partial-quotient generators for the built-in rotation-number families.
// Terms are indexed from 1 and every term is >= 1.

/// Finite list c_1..c_m; queries past the list are a reported error.
struct ExplicitTerms {
    std::vector<std::uint64_t> terms;
};

/// Preperiod followed by a repeating period. periodic:c is the constant-type
/// number [c,c,c,...].
struct EventuallyPeriodic {
    std::vector<std::uint64_t> preperiod;
    std::vector<std::uint64_t> period;
};

/// N-1 ones then 2, N-1 ones then 3, N-1 ones then 4, ...
/// block_len = 1 degenerates to 2,3,4,...
struct BlockFamily {
    int block_len = 1;
};

/// c_n = slope*n + offset.
struct AffineRule {
    std::uint64_t slope = 0;
    std::uint64_t offset = 1;
};

using SpecKind = std::variant<ExplicitTerms, EventuallyPeriodic, BlockFamily, AffineRule>;

/// The subsequence K of indices k along which limits are taken.
struct KAll {};
struct KArithmetic {
    int step = 1;
    int offset = 0;
};
struct KList {
    std::vector<int> ks;
};
using KSubsequence = std::variant<KAll, KArithmetic, KList>;

class CFSpec {
public:
    explicit CFSpec(SpecKind kind, int max_depth = 4096);

    /// c_i for i >= 1. Throws DepthExceeded for explicit specs queried past
    /// their list.
    std::uint64_t term(int i) const;

    /// Number of terms the spec can supply; nullopt means unbounded.
    std::optional<int> available_depth() const;

    const SpecKind& kind() const { return kind_; }
    int max_depth() const { return max_depth_; }

    /// K consistent with the family: multiples of N for block specs,
    /// everything otherwise.
    KSubsequence default_subsequence() const;
    bool k_in_subsequence(int k) const;

    bool is_explicit() const { return std::holds_alternative<ExplicitTerms>(kind_); }

private:
    SpecKind kind_;
    int max_depth_;
};

std::vector<int> k_indices(const KSubsequence& sub, int k_lo, int k_hi);

} // namespace rotevl

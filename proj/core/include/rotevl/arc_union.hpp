#pragma once

#include "rotevl/rotation.hpp"

namespace rotevl {

/// Disjoint arcs on [0,1) after normalization and merging; measure is the
/// exact sum of the lengths.
struct ArcSet {
    std::vector<Arc> arcs;
    RatInterval measure() const;
};

/// The union of the first n preimages T^{-j} B_k, j = 1..n, built directly
/// from the entry-time definition: translate B_k by -j alpha, reduce mod 1,
/// split wrapping arcs and merge overlaps. Endpoint positions are kept in
/// the exact form u + v*alpha (integers u, v), so every overlap decision is
/// an exact sign computation.
ArcSet entry_preimage_arcs(const ConvergentTable& table, int k, const Int& n);

/// Measure of the union above: the independent oracle for the exact
/// entry-time law. Must agree with entry_cdf_exact(table, k, n).
RatInterval arcset_entry_oracle(const ConvergentTable& table, int k, const Int& n);

/// Incremental sweep: the oracle measure for every n = 1..n_max in a
/// single pass (one arc insertion per step).
std::vector<RatInterval> arcset_entry_measures(const ConvergentTable& table, int k,
                                               long n_max);

} // namespace rotevl

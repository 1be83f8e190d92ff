#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qtop/arith.hpp"
#include "qtop/weight.hpp"

namespace qtop {

/// Outcome of the open half-space test for a finite set of lattice vectors.
///
/// Exactly one alternative holds (Gordan): either an integer direction with
/// <w_j, direction> >= 1 for all j, or nonnegative integers y, not all zero,
/// with sum_j y_j w_j = 0.
struct HalfSpaceCertificate {
  bool feasible = false;
  Weight direction;
  std::vector<Integer> gordan_witness;
};

/// Decides the test exactly by Fourier-Motzkin elimination on
/// <w_j, x> >= 1, tracking multipliers for the infeasible case.
HalfSpaceCertificate open_half_space(std::span<const Weight> vectors, std::size_t rank);

/// Among integer directions of sup-norm <= radius that put every vector in the
/// open half-space, the one minimising |direction|_1 / min_j <w_j, direction>.
/// Falls back to the elimination certificate when the box has no candidate.
std::optional<Weight> compact_direction(std::span<const Weight> vectors, std::size_t rank,
                                        std::int64_t radius);

}  // namespace qtop

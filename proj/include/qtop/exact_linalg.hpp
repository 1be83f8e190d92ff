#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qtop/arith.hpp"
#include "qtop/weight.hpp"

namespace qtop {

using RVector = std::vector<Rational>;

RVector to_rational(const Weight& w);
Rational dot(const RVector& a, const RVector& b);

/// Rank of the span of the given vectors.
std::size_t rank_of(std::span<const RVector> vectors);

/// True iff v lies in the span of the given vectors.
bool in_span(std::span<const RVector> vectors, const RVector& v);

/// Basis of {x : <v, x> = 0 for every v} under the standard dot product.
std::vector<RVector> annihilator(std::span<const RVector> vectors, std::size_t dim);

/// Orthogonal projection (standard dot product) of v onto the span of the vectors.
RVector project_onto_span(std::span<const RVector> vectors, const RVector& v);

/// Solution x of sum_j x_j cols[j] = rhs when the columns are independent,
/// nullopt when inconsistent. Throws InvalidInput for dependent columns.
std::optional<RVector> solve_columns(std::span<const RVector> cols, const RVector& rhs);

/// Indices of a maximal independent subset, chosen greedily from the front.
std::vector<std::size_t> independent_subset(std::span<const RVector> vectors);

}  // namespace qtop

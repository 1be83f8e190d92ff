#pragma once

#include <map>

#include "qtop/character.hpp"
#include "qtop/kcycle.hpp"

namespace qtop {

/// Exact fixed-point sum of a closed component, returned as a Laurent
/// polynomial. The sum is formed over a common denominator of binomials
/// (1 - t^u) and divided out exactly; a remainder raises NotClosed.
WeightPolynomial closed_index(const RootDatum& datum, const ClosedComponent& c);

/// Signed sum of closed_index over a finite cycle. Families raise EnumerationUnbounded.
WeightPolynomial closed_cycle_index(const DiscreteKCycle& k);

/// Expansion of every factor (1 - t^{-w})^{-1} as a geometric series supported
/// in the half-space <., xi> >= 0, summed over fixed points, components and
/// family members, and read off as exact multiplicities on the window.
FormalCharacter polarized_index(const DiscreteKCycle& k, const Weight& xi, std::int64_t window);

/// Truncated polarized expansion of a single fixed point: every coefficient at a
/// weight of level <xi, .> <= max_level. Orbifold averaging applied.
std::map<Weight, Integer> point_series(const FixedPointDatum& p, const Weight& xi, std::int64_t max_level);

/// Smallest deterministic integer direction that is generic for every tangent
/// weight of k and makes every family step strictly increasing.
Weight default_polarization(const DiscreteKCycle& k);

/// Window restriction of an exact R(G)-valued polynomial; type A polynomials
/// are decomposed into irreducibles first.
FormalCharacter formal_from_polynomial(const RootDatum& datum, const WeightPolynomial& p, std::int64_t window);

/// Clears denominators of a rational direction: positive multiple with integer coordinates.
Weight integral_direction(const std::vector<Rational>& xi);

}  // namespace qtop

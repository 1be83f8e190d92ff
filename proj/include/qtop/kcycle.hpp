#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtop/root_datum.hpp"
#include "qtop/weight_polynomial.hpp"

namespace qtop {

/// Local data at an isolated fixed point.
///
/// The contribution convention is chi(t) * prod_j (1 - t^{-w_j})^{-1}; the
/// orientation of the stable complex structure is carried by the signs of the
/// tangent weights. An orbifold point of order m has local group the m-torsion
/// subgroup of the torus, and its contribution is averaged over it.
struct FixedPointDatum {
  std::vector<Weight> tangent_weights;
  WeightPolynomial fiber;
  std::int64_t orbifold_order = 1;

  friend bool operator==(const FixedPointDatum&, const FixedPointDatum&) = default;
};

/// A closed orbifold presented by its fixed points.
struct ClosedComponent {
  std::string label;
  std::vector<FixedPointDatum> fixed_points;

  friend bool operator==(const ClosedComponent&, const ClosedComponent&) = default;
};

/// A signed component, or an infinite family when `family_step` is set:
/// member k (k = 0, 1, ...) is the component with every fiber multiplied by
/// t^{k * step}.
struct CycleComponent {
  int sign = 1;
  ClosedComponent component;
  std::optional<Weight> family_step;

  friend bool operator==(const CycleComponent&, const CycleComponent&) = default;
};

struct DiscreteKCycle {
  RootDatum datum;
  std::vector<CycleComponent> components;
  /// Largest family member index the engine may generate.
  std::optional<std::int64_t> enumeration_bound;

  explicit DiscreteKCycle(RootDatum d) : datum(std::move(d)) {}

  bool is_finite() const;
  friend bool operator==(const DiscreteKCycle&, const DiscreteKCycle&) = default;
};

/// Structural checks: matching ranks, nonempty fibers and fixed-point lists,
/// positive orbifold orders, signs in {+1, -1}. Throws InvalidInput.
void validate(const RootDatum& datum, const ClosedComponent& c);
void validate(const DiscreteKCycle& k);

/// Reverses the stable complex structure of every component.
DiscreteKCycle cycle_negate(const DiscreteKCycle& k);

/// Single fixed point with no tangent directions.
ClosedComponent point_component(const Weight& fiber_weight, std::string label = "pt");

/// Two-pole sphere {(t^minus_fiber, tangent -w), (t^plus_fiber, tangent +w)}.
/// Index (t^minus - t^{plus + w}) / (1 - t^w); plus = minus gives t^minus.
ClosedComponent sphere_component(const Weight& w, const Weight& minus_fiber, const Weight& plus_fiber,
                                 std::string label = "S2");

}  // namespace qtop

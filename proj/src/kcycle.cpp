#include "qtop/kcycle.hpp"

#include "qtop/error.hpp"

namespace qtop {

bool DiscreteKCycle::is_finite() const {
  for (const auto& c : components)
    if (c.family_step) return false;
  return true;
}

void validate(const RootDatum& datum, const ClosedComponent& c) {
  const auto r = static_cast<std::size_t>(datum.rank());
  if (c.fixed_points.empty())
    throw Error(Errc::InvalidInput, "component '" + c.label + "' has no fixed points");
  for (const auto& p : c.fixed_points) {
    if (p.fiber.empty()) throw Error(Errc::InvalidInput, "component '" + c.label + "' has an empty fiber");
    if (p.orbifold_order < 1) throw Error(Errc::InvalidInput, "orbifold order must be positive");
    for (const auto& w : p.tangent_weights)
      if (w.rank() != r) throw Error(Errc::InvalidInput, "tangent weight rank mismatch");
    for (const auto& [w, m] : p.fiber.terms())
      if (w.rank() != r) throw Error(Errc::InvalidInput, "fiber weight rank mismatch");
  }
}

void validate(const DiscreteKCycle& k) {
  for (const auto& c : k.components) {
    if (c.sign != 1 && c.sign != -1) throw Error(Errc::InvalidInput, "component sign must be +1 or -1");
    if (c.family_step && c.family_step->rank() != static_cast<std::size_t>(k.datum.rank()))
      throw Error(Errc::InvalidInput, "family step rank mismatch");
    validate(k.datum, c.component);
  }
  if (k.enumeration_bound && *k.enumeration_bound < 0)
    throw Error(Errc::InvalidInput, "enumeration_bound must be nonnegative");
}

DiscreteKCycle cycle_negate(const DiscreteKCycle& k) {
  DiscreteKCycle out = k;
  for (auto& c : out.components) c.sign = -c.sign;
  return out;
}

ClosedComponent point_component(const Weight& fiber_weight, std::string label) {
  ClosedComponent c{std::move(label), {}};
  c.fixed_points.push_back({{}, WeightPolynomial::monomial(fiber_weight), 1});
  return c;
}

ClosedComponent sphere_component(const Weight& w, const Weight& minus_fiber, const Weight& plus_fiber,
                                 std::string label) {
  ClosedComponent c{std::move(label), {}};
  c.fixed_points.push_back({{-w}, WeightPolynomial::monomial(minus_fiber), 1});
  c.fixed_points.push_back({{w}, WeightPolynomial::monomial(plus_fiber), 1});
  return c;
}

}  // namespace qtop

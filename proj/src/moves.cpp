#include "qtop/moves.hpp"

#include <algorithm>
#include <set>

#include "qtop/error.hpp"

namespace qtop {

namespace {

FixedPointDatum point_product(const FixedPointDatum& p, const FixedPointDatum& q) {
  if (p.orbifold_order > 1 || q.orbifold_order > 1)
    throw Error(Errc::OrbifoldAveragingUnsupported, "products of orbifold points are not modelled");
  FixedPointDatum out;
  out.tangent_weights = p.tangent_weights;
  out.tangent_weights.insert(out.tangent_weights.end(), q.tangent_weights.begin(), q.tangent_weights.end());
  out.fiber = p.fiber * q.fiber;
  return out;
}

ClosedComponent component_product(const ClosedComponent& a, const ClosedComponent& b) {
  ClosedComponent out{a.label + "x" + b.label, {}};
  for (const auto& p : a.fixed_points)
    for (const auto& q : b.fixed_points) out.fixed_points.push_back(point_product(p, q));
  return out;
}

DiscreteKCycle single(const RootDatum& datum, ClosedComponent c, int sign = 1) {
  DiscreteKCycle k(datum);
  k.components.push_back({sign, std::move(c), std::nullopt});
  return k;
}

}  // namespace

RewriteCertificate make_certificate(std::string move, FormalCharacter before, FormalCharacter after) {
  const auto window = std::min(before.window(), after.window());
  const bool ok = agree_on_shared_window(before, after);
  return RewriteCertificate{std::move(move), std::move(before), std::move(after), window, ok};
}

DiscreteKCycle disjoint_union(const DiscreteKCycle& a, const DiscreteKCycle& b) {
  if (!(a.datum == b.datum)) throw Error(Errc::DatumMismatch, a.datum.label() + " vs " + b.datum.label());
  DiscreteKCycle out = a;
  out.components.insert(out.components.end(), b.components.begin(), b.components.end());
  if (b.enumeration_bound)
    out.enumeration_bound = std::max(a.enumeration_bound.value_or(0), *b.enumeration_bound);
  return out;
}

DiscreteKCycle disk_cycle() {
  const auto circle = RootDatum::build(GroupKind::Torus, 1);
  ClosedComponent disk{"D2", {}};
  disk.fixed_points.push_back({{Weight{-1}}, WeightPolynomial::monomial(Weight{0}), 1});
  return single(circle, std::move(disk));
}

DiscreteKCycle disk_decomposition(int sign, std::int64_t truncation) {
  if (sign != 1 && sign != -1) throw Error(Errc::InvalidInput, "disk sign must be +1 or -1");
  if (truncation < 0) throw Error(Errc::InvalidInput, "truncation must be nonnegative");
  DiscreteKCycle out(RootDatum::build(GroupKind::Torus, 1));
  if (sign > 0) {
    for (std::int64_t n = 0; n <= truncation; ++n)
      out.components.push_back(
          {1, sphere_component(Weight{1}, Weight{n}, Weight{n}, "F" + std::to_string(n)), std::nullopt});
  } else {
    for (std::int64_t n = 1; n <= truncation + 1; ++n)
      out.components.push_back(
          {-1, sphere_component(Weight{1}, Weight{-n}, Weight{-n}, "F-" + std::to_string(n)), std::nullopt});
  }
  return out;
}

RewriteCertificate certify_disk_decomposition(int sign, std::int64_t truncation) {
  const Weight xi{sign};
  const std::int64_t window = std::max<std::int64_t>(truncation, 1);
  auto before = polarized_index(disk_cycle(), xi, window).restricted(truncation);
  auto after = polarized_index(disk_decomposition(sign, truncation), xi, window).restricted(truncation);
  return make_certificate("disk_decomposition", std::move(before), std::move(after));
}

std::pair<DiscreteKCycle, DiscreteKCycle> glue_split(const RootDatum& datum, const ClosedComponent& c,
                                                     const std::vector<std::size_t>& block_a,
                                                     const std::vector<std::size_t>& block_b) {
  validate(datum, c);
  if (block_a.empty() || block_b.empty())
    throw Error(Errc::EmptyBlock, "both blocks of a glue split must be nonempty");
  std::set<std::size_t> seen;
  for (const auto* block : {&block_a, &block_b})
    for (auto i : *block) {
      if (i >= c.fixed_points.size()) throw Error(Errc::InvalidInput, "fixed point index out of range");
      if (!seen.insert(i).second) throw Error(Errc::InvalidInput, "blocks overlap");
    }
  if (seen.size() != c.fixed_points.size())
    throw Error(Errc::InvalidInput, "blocks do not cover every fixed point");

  ClosedComponent piece_a{c.label + "/a", {}}, piece_b{c.label + "/b", {}};
  for (auto i : block_a) piece_a.fixed_points.push_back(c.fixed_points[i]);
  for (auto i : block_b) piece_b.fixed_points.push_back(c.fixed_points[i]);

  const FixedPointDatum& anchor = c.fixed_points[block_b.front()];
  if (!anchor.tangent_weights.empty()) {
    const Weight w = anchor.tangent_weights.front();
    FixedPointDatum cap_b = anchor;
    cap_b.tangent_weights.front() = -w;
    FixedPointDatum cap_a = anchor;
    cap_a.fiber = anchor.fiber.shifted(-w);
    piece_b.fixed_points.push_back(std::move(cap_b));
    piece_a.fixed_points.push_back(std::move(cap_a));
  }
  return {single(datum, std::move(piece_a)), single(datum, std::move(piece_b))};
}

RewriteCertificate certify_glue_split(const RootDatum& datum, const ClosedComponent& c,
                                      const std::pair<DiscreteKCycle, DiscreteKCycle>& pieces,
                                      std::int64_t window) {
  auto before = formal_from_polynomial(datum, closed_index(datum, c), window);
  const Weight xi = default_polarization(disjoint_union(pieces.first, pieces.second));
  auto after = polarized_index(pieces.first, xi, window) + polarized_index(pieces.second, xi, window);
  return make_certificate("glue_split", std::move(before), std::move(after));
}

std::pair<DiscreteKCycle, RewriteCertificate> bundle_modification(const DiscreteKCycle& k,
                                                                  const ClosedComponent& fiber,
                                                                  std::int64_t window) {
  validate(k);
  validate(k.datum, fiber);
  const auto dim = fiber.fixed_points.front().tangent_weights.size();
  for (const auto& q : fiber.fixed_points)
    if (q.tangent_weights.size() != dim)
      throw Error(Errc::OddFiber, "fiber fixed points disagree on the complex dimension");
  const WeightPolynomial unit = WeightPolynomial::monomial(k.datum.zero());
  const WeightPolynomial fiber_index = closed_index(k.datum, fiber);
  if (fiber_index != unit)
    throw Error(Errc::FiberIndexNotUnit, "fiber index is " + fiber_index.to_string() + ", not 1");

  DiscreteKCycle out = k;
  for (auto& c : out.components) c.component = component_product(c.component, fiber);

  if (k.components.empty()) {
    FormalCharacter zero(k.datum, window);
    return {out, make_certificate("bundle_modification", zero, zero)};
  }
  const Weight xi = default_polarization(out);
  auto cert = make_certificate("bundle_modification", polarized_index(k, xi, window),
                               polarized_index(out, xi, window));
  return {std::move(out), std::move(cert)};
}

DiscreteKCycle product_cycle(const DiscreteKCycle& a, const DiscreteKCycle& b) {
  if (!(a.datum == b.datum)) throw Error(Errc::DatumMismatch, a.datum.label() + " vs " + b.datum.label());
  if (!b.is_finite()) throw Error(Errc::SecondFactorInfinite, "second factor of a product must be finite");
  validate(a);
  validate(b);
  DiscreteKCycle out(a.datum);
  out.enumeration_bound = a.enumeration_bound;
  for (const auto& ca : a.components)
    for (const auto& cb : b.components)
      out.components.push_back({ca.sign * cb.sign, component_product(ca.component, cb.component), ca.family_step});
  return out;
}

RewriteCertificate certify_disjoint_union(const DiscreteKCycle& a, const DiscreteKCycle& b, std::int64_t window) {
  const DiscreteKCycle u = disjoint_union(a, b);
  const Weight xi = default_polarization(u);
  return make_certificate("disjoint_union", polarized_index(a, xi, window) + polarized_index(b, xi, window),
                          polarized_index(u, xi, window));
}

RewriteCertificate certify_product(const DiscreteKCycle& a, const DiscreteKCycle& b, std::int64_t window) {
  const DiscreteKCycle prod = product_cycle(a, b);
  const Weight xi = default_polarization(disjoint_union(prod, a));
  const Character cb = decompose(b.datum, closed_cycle_index(b));
  std::int64_t shrink = 0;
  const WeightPolynomial cw = cb.weight_polynomial();
  for (const auto& [w, m] : cw.terms()) shrink = std::max(shrink, w.sup_norm());
  auto before = formal_multiply(polarized_index(a, xi, window + shrink), cb);
  auto after = polarized_index(prod, xi, window);
  return make_certificate("product", std::move(before), std::move(after));
}

}  // namespace qtop

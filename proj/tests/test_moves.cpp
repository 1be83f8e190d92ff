#include <gtest/gtest.h>

#include <random>

#include "qtop/error.hpp"
#include "qtop/moves.hpp"

using namespace qtop;

namespace {

const RootDatum kT1 = RootDatum::build(GroupKind::Torus, 1);
const RootDatum kT2 = RootDatum::build(GroupKind::Torus, 2);

WeightPolynomial mono(const Weight& w, int c = 1) { return WeightPolynomial::monomial(w, c); }

DiscreteKCycle single(const RootDatum& d, ClosedComponent c, int sign = 1) {
  DiscreteKCycle k(d);
  k.components.push_back({sign, std::move(c), std::nullopt});
  return k;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::InvalidInput;
}

ClosedComponent line_bundle_sphere(std::int64_t k) {
  return ClosedComponent{"O(" + std::to_string(k) + ")",
                         {{{Weight{-1}}, mono(Weight{0}), 1}, {{Weight{1}}, mono(Weight{k}), 1}}};
}

// Brute-force truncated series of (1 - t)^{-1} times a polynomial.
std::int64_t geometric_times(const WeightPolynomial& p, std::int64_t n) {
  std::int64_t s = 0;
  for (const auto& [w, c] : p.terms())
    if (w[0] <= n) s += static_cast<std::int64_t>(c);
  return s;
}

FixedPointDatum random_point(std::mt19937& rng, std::size_t rank, int tangents) {
  std::uniform_int_distribution<int> small(-3, 3);
  FixedPointDatum p;
  for (int j = 0; j < tangents; ++j) {
    Weight w(rank);
    do {
      for (std::size_t i = 0; i < rank; ++i) w[i] = small(rng);
    } while (w.is_zero());
    p.tangent_weights.push_back(w);
  }
  Weight f(rank);
  for (std::size_t i = 0; i < rank; ++i) f[i] = small(rng);
  p.fiber = mono(f, small(rng) == 0 ? 2 : 1);
  return p;
}

std::vector<ClosedComponent> closed_corpus(std::size_t rank) {
  std::mt19937 rng(rank == 1 ? 11 : 12);
  std::uniform_int_distribution<int> small(-3, 3);
  std::vector<ClosedComponent> out;
  for (int i = 0; i < 10; ++i) {
    Weight w(rank), lo(rank);
    do {
      for (std::size_t j = 0; j < rank; ++j) w[j] = small(rng);
    } while (w.is_zero());
    for (std::size_t j = 0; j < rank; ++j) lo[j] = small(rng);
    out.push_back(sphere_component(w, lo, lo + std::uniform_int_distribution<int>(0, 3)(rng) * w, "S" + std::to_string(i)));
  }
  return out;
}

}  // namespace

TEST(DisjointUnion, Examples) {
  const auto a = single(kT1, line_bundle_sphere(2));
  EXPECT_EQ(disjoint_union(a, DiscreteKCycle(kT1)), a);
  const auto p = single(kT1, point_component(Weight{3}));
  const auto f = polarized_index(disjoint_union(p, p), Weight{1}, 5);
  EXPECT_EQ(f.multiplicity(Weight{3}), 2);
  EXPECT_EQ(f.nonzero().size(), 1u);
  EXPECT_EQ(code_of([&] { disjoint_union(a, DiscreteKCycle(kT2)); }), Errc::DatumMismatch);
}

TEST(DisjointUnion, FibersAddAcrossIdenticalFixedPoints) {
  ClosedComponent e = line_bundle_sphere(2);
  ClosedComponent f = e;
  for (auto& p : f.fixed_points) p.fiber = p.fiber.shifted(Weight{1});
  ClosedComponent sum = e;
  for (std::size_t i = 0; i < sum.fixed_points.size(); ++i) sum.fixed_points[i].fiber += f.fixed_points[i].fiber;
  const auto lhs = polarized_index(disjoint_union(single(kT1, e), single(kT1, f)), Weight{1}, 8);
  EXPECT_TRUE(agree_on_shared_window(lhs, polarized_index(single(kT1, sum), Weight{1}, 8)));
  EXPECT_TRUE(certify_disjoint_union(single(kT1, e), single(kT1, f), 10).verdict);
}

TEST(DiskDecomposition, PositiveSide) {
  const auto k = disk_decomposition(1, 3);
  EXPECT_EQ(k.components.size(), 4u);
  const auto f = polarized_index(k, Weight{1}, 5);
  for (std::int64_t n = -5; n <= 5; ++n) EXPECT_EQ(f.multiplicity(Weight{n}), n >= 0 && n <= 3 ? 1 : 0);
  const auto base = polarized_index(disk_decomposition(1, 0), Weight{1}, 3);
  EXPECT_EQ(base.multiplicity(Weight{0}), 1);
  EXPECT_EQ(base.nonzero().size(), 1u);
}

TEST(DiskDecomposition, NegativeSide) {
  const auto k = disk_decomposition(-1, 1);
  EXPECT_EQ(k.components.size(), 2u);
  for (const auto& c : k.components) EXPECT_EQ(c.sign, -1);
  const auto f = polarized_index(k, Weight{-1}, 4);
  for (std::int64_t n = -4; n <= 4; ++n) EXPECT_EQ(f.multiplicity(Weight{n}), n == -1 || n == -2 ? -1 : 0);
}

TEST(DiskDecomposition, Certificates) {
  for (int sign : {1, -1})
    for (std::int64_t n : {0, 1, 5, 12}) {
      const auto cert = certify_disk_decomposition(sign, n);
      EXPECT_TRUE(cert.verdict) << sign << " " << n;
      EXPECT_EQ(cert.window, n);
    }
}

TEST(DiskDecomposition, TwoSidedSeriesHasNoCrossTerms) {
  const auto k = disjoint_union(disk_decomposition(1, 4), cycle_negate(disk_decomposition(-1, 3)));
  const auto f = polarized_index(k, Weight{1}, 6);
  for (std::int64_t n = -6; n <= 6; ++n) EXPECT_EQ(f.multiplicity(Weight{n}), (n >= 0 && n <= 4) || (n <= -1 && n >= -4) ? 1 : 0) << n;
}

TEST(GlueSplit, LineBundleAtEquator) {
  const auto c = line_bundle_sphere(2);
  const auto [a, b] = glue_split(kT1, c, {0}, {1});
  const auto fa = formal_from_polynomial(kT1, closed_cycle_index(a), 6);
  const auto fb = formal_from_polynomial(kT1, closed_cycle_index(b), 6);
  EXPECT_EQ(closed_cycle_index(a), mono(Weight{0}) + mono(Weight{1}));
  EXPECT_EQ(closed_cycle_index(b), mono(Weight{2}));
  EXPECT_TRUE(certify_glue_split(kT1, c, {a, b}, 10).verdict);
}

TEST(GlueSplit, TrivialSphereCapCancels) {
  for (std::int64_t n = -3; n <= 3; ++n) {
    const auto c = sphere_component(Weight{1}, Weight{n}, Weight{n});
    const auto [a, b] = glue_split(kT1, c, {0}, {1});
    EXPECT_TRUE(closed_cycle_index(a).empty());
    EXPECT_EQ(closed_cycle_index(b), mono(Weight{n}));
  }
}

TEST(GlueSplit, Errors) {
  const auto pt = point_component(Weight{0});
  EXPECT_EQ(code_of([&] { glue_split(kT1, pt, {0}, {}); }), Errc::EmptyBlock);
  EXPECT_EQ(code_of([&] { glue_split(kT1, pt, {}, {0}); }), Errc::EmptyBlock);
  const auto c = line_bundle_sphere(1);
  EXPECT_EQ(code_of([&] { glue_split(kT1, c, {0}, {0}); }), Errc::InvalidInput);
  EXPECT_EQ(code_of([&] { glue_split(kT1, c, {0}, {2}); }), Errc::InvalidInput);
}

TEST(GlueSplit, CertificatesOnCorpus) {
  for (std::size_t rank : {1u, 2u}) {
    const auto& d = rank == 1 ? kT1 : kT2;
    for (const auto& c : closed_corpus(rank)) {
      EXPECT_TRUE(certify_glue_split(d, c, glue_split(d, c, {0}, {1}), 10).verdict) << c.label;
      EXPECT_TRUE(certify_glue_split(d, c, glue_split(d, c, {1}, {0}), 10).verdict) << c.label;
    }
  }
  // Four-point product component split two against two.
  const auto prod = product_cycle(single(kT2, sphere_component(Weight{1, 0}, Weight{0, 0}, Weight{2, 0})),
                                  single(kT2, sphere_component(Weight{0, 1}, Weight{0, 1}, Weight{0, 2})));
  const auto& c = prod.components.front().component;
  EXPECT_TRUE(certify_glue_split(kT2, c, glue_split(kT2, c, {0, 3}, {1, 2}), 10).verdict);
  EXPECT_TRUE(certify_glue_split(kT2, c, glue_split(kT2, c, {2}, {0, 1, 3}), 10).verdict);
}

TEST(BundleModification, TrivialSphereFiber) {
  for (std::int64_t m : {-2, 0, 3}) {
    const auto k = single(kT1, point_component(Weight{m}));
    const auto [out, cert] = bundle_modification(k, sphere_component(Weight{1}, Weight{0}, Weight{0}), 10);
    EXPECT_EQ(out.components.front().component.fixed_points.size(), 2u);
    EXPECT_EQ(closed_cycle_index(out), mono(Weight{m}));
    EXPECT_TRUE(cert.verdict);
  }
}

TEST(BundleModification, RejectsFibersWithoutUnitIndex) {
  const auto k = single(kT1, point_component(Weight{0}));
  EXPECT_EQ(code_of([&] { bundle_modification(k, sphere_component(Weight{1}, Weight{4}, Weight{3}), 10); }),
            Errc::FiberIndexNotUnit);
  EXPECT_EQ(code_of([&] { bundle_modification(k, line_bundle_sphere(2), 10); }), Errc::FiberIndexNotUnit);
  ClosedComponent ragged{"r", {{{Weight{1}}, mono(Weight{0}), 1}, {{}, mono(Weight{0}), 1}}};
  EXPECT_EQ(code_of([&] { bundle_modification(k, ragged, 10); }), Errc::OddFiber);
}

TEST(BundleModification, EmptyCycle) {
  const auto [out, cert] = bundle_modification(DiscreteKCycle(kT1), sphere_component(Weight{1}, Weight{0}, Weight{0}), 10);
  EXPECT_TRUE(out.components.empty());
  EXPECT_TRUE(cert.verdict);
}

TEST(BundleModification, CertificatesOnCorpus) {
  const auto fiber1 = sphere_component(Weight{2}, Weight{0}, Weight{0});
  for (const auto& c : closed_corpus(1)) EXPECT_TRUE(bundle_modification(single(kT1, c), fiber1, 10).second.verdict);
  const auto fiber2 = sphere_component(Weight{1, -1}, Weight{0, 0}, Weight{0, 0});
  for (const auto& c : closed_corpus(2)) EXPECT_TRUE(bundle_modification(single(kT2, c), fiber2, 10).second.verdict);
  auto disk = disk_decomposition(1, 6);
  EXPECT_TRUE(bundle_modification(disk, fiber1, 10).second.verdict);
}

TEST(Product, DiskFamilyTimesSphere) {
  DiscreteKCycle family(kT1);
  family.components.push_back({1, sphere_component(Weight{1}, Weight{0}, Weight{0}, "F"), Weight{1}});
  family.enumeration_bound = 40;
  const auto prod = product_cycle(family, single(kT1, line_bundle_sphere(1)));
  ASSERT_TRUE(prod.components.front().family_step);
  const auto f = polarized_index(prod, Weight{1}, 8);
  for (std::int64_t n = -8; n <= 8; ++n) {
    const std::int64_t expect = n < 0 ? 0 : (n == 0 ? 1 : 2);
    EXPECT_EQ(f.multiplicity(Weight{n}), expect) << n;
    EXPECT_EQ(expect, geometric_times(mono(Weight{0}) + mono(Weight{1}), n));
  }
  EXPECT_TRUE(certify_product(family, single(kT1, line_bundle_sphere(1)), 8).verdict);
}

TEST(Product, UnitAndCommutativity) {
  const auto a = single(kT1, line_bundle_sphere(3));
  const auto unit = single(kT1, point_component(Weight{0}));
  EXPECT_TRUE(agree_on_shared_window(polarized_index(product_cycle(a, unit), Weight{1}, 6),
                                     polarized_index(a, Weight{1}, 6)));
  const auto b = single(kT1, sphere_component(Weight{2}, Weight{-1}, Weight{3}));
  EXPECT_EQ(closed_cycle_index(product_cycle(a, b)), closed_cycle_index(product_cycle(b, a)));
  EXPECT_EQ(closed_cycle_index(product_cycle(a, b)), closed_cycle_index(a) * closed_cycle_index(b));
}

TEST(Product, Errors) {
  DiscreteKCycle family(kT1);
  family.components.push_back({1, point_component(Weight{0}), Weight{1}});
  family.enumeration_bound = 5;
  const auto a = single(kT1, line_bundle_sphere(1));
  EXPECT_EQ(code_of([&] { product_cycle(a, family); }), Errc::SecondFactorInfinite);
  EXPECT_EQ(code_of([&] { product_cycle(a, single(kT2, point_component(Weight{0, 0}))); }), Errc::DatumMismatch);
  ClosedComponent orb{"o", {{{}, mono(Weight{0}), 2}}};
  EXPECT_EQ(code_of([&] { product_cycle(a, single(kT1, orb)); }), Errc::OrbifoldAveragingUnsupported);
}

TEST(Product, MultiplicativityOnRandomPairs) {
  std::mt19937 rng(5);
  for (int i = 0; i < 12; ++i) {
    DiscreteKCycle plane(kT2);
    auto p = random_point(rng, 2, 2);
    plane.components.push_back({1, ClosedComponent{"C2", {p}}, std::nullopt});
    const auto b = single(kT2, closed_corpus(2)[static_cast<std::size_t>(i % 10)]);
    EXPECT_TRUE(certify_product(plane, b, 6).verdict) << i;
  }
}

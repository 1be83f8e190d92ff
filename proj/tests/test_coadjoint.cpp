#include <gtest/gtest.h>

#include <random>

#include "qtop/coadjoint.hpp"
#include "qtop/error.hpp"
#include "qtop/localization.hpp"
#include "qtop/moves.hpp"

using namespace qtop;

namespace {

const RootDatum kT1 = RootDatum::build(GroupKind::Torus, 1);
const RootDatum kT2 = RootDatum::build(GroupKind::Torus, 2);
const RootDatum kA1 = RootDatum::build(GroupKind::TypeA, 1);
const RootDatum kA2 = RootDatum::build(GroupKind::TypeA, 2);

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::InvalidInput;
}

FormalCharacter random_gamma(std::mt19937& rng, const RootDatum& d, std::int64_t window) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::bernoulli_distribution keep(0.3);
  FormalCharacter g(d, window);
  for (const auto& w : dominant_window(d, window)) {
    if (!d.is_torus() && !d.is_regular_dominant(w)) continue;
    if (keep(rng)) g.set(w, coef(rng));
  }
  return g;
}


}  // namespace

TEST(OrbitCycle, TorusPoint) {
  const auto o = orbit_cycle(kT1, Weight{4});
  ASSERT_EQ(o.component.fixed_points.size(), 1u);
  EXPECT_TRUE(o.component.fixed_points[0].tangent_weights.empty());
  EXPECT_EQ(closed_index(kT1, o.component), WeightPolynomial::monomial(Weight{4}));
}

TEST(OrbitCycle, A1TwoPoints) {
  const auto o = orbit_cycle(kA1, Weight{2});
  ASSERT_EQ(o.component.fixed_points.size(), 2u);
  for (const auto& p : o.component.fixed_points) {
    ASSERT_EQ(p.tangent_weights.size(), 1u);
    const Weight top = p.fiber.terms().begin()->first;
    EXPECT_EQ(p.tangent_weights[0], top[0] > 0 ? Weight{2} : Weight{-2});
  }
  WeightPolynomial chi2;
  for (std::int64_t n : {-2, 0, 2}) chi2.add_term(Weight{n}, 1);
  EXPECT_EQ(closed_index(kA1, o.component), chi2);
  WeightPolynomial chi1;
  chi1.add_term(Weight{1}, 1);
  chi1.add_term(Weight{-1}, 1);
  EXPECT_EQ(closed_index(kA1, orbit_cycle(kA1, Weight{1}).component), chi1);
}

TEST(OrbitCycle, Errors) {
  EXPECT_EQ(code_of([] { orbit_cycle(kA1, Weight{-1}); }), Errc::NotDominant);
  EXPECT_EQ(code_of([] { orbit_cycle(kA1, Weight{0}); }), Errc::SingularOrbitUnsupported);
  EXPECT_EQ(code_of([] { orbit_cycle(kA2, Weight{1, 0}); }), Errc::SingularOrbitUnsupported);
}

TEST(OrbitCycle, BorelWeilExhaustive) {
  for (const auto& d : {kT1, kT2, kA1, kA2}) {
    for (const auto& g : dominant_window(d, 6)) {
      if (!d.is_torus() && !d.is_regular_dominant(g)) continue;
      const auto o = orbit_cycle(d, g);
      EXPECT_EQ(o.component.fixed_points.size(), static_cast<std::size_t>(d.weyl_order()));
      EXPECT_EQ(closed_index(d, o.component), weyl_character(d, g)) << d.label() << g.to_string();
    }
  }
}

TEST(OrbitCycle, A3Sample) {
  const auto a3 = RootDatum::build(GroupKind::TypeA, 3);
  for (const auto& g : {Weight{1, 1, 1}, Weight{2, 1, 1}, Weight{1, 2, 1}})
    EXPECT_EQ(closed_index(a3, orbit_cycle(a3, g).component), weyl_character(a3, g));
}

TEST(PMap, Examples) {
  FormalCharacter g(kT1, 8);
  g.set(Weight{0}, 2);
  g.set(Weight{3}, 1);
  const auto k = p_map(g);
  EXPECT_EQ(k.components.size(), 3u);
  WeightPolynomial expect = WeightPolynomial::monomial(Weight{0}, 2);
  expect.add_term(Weight{3}, 1);
  EXPECT_EQ(closed_cycle_index(k), expect);

  FormalCharacter v1(kA1, 8);
  v1.set(Weight{1}, 1);
  const auto k1 = p_map(v1);
  ASSERT_EQ(k1.components.size(), 1u);
  EXPECT_EQ(k1.components[0].component.fixed_points.size(), 2u);
  EXPECT_EQ(closed_cycle_index(k1), weyl_character(kA1, Weight{1}));

  EXPECT_TRUE(p_map(FormalCharacter(kA1, 8)).components.empty());
}

TEST(PMap, NegativeMultiplicitiesFlipSigns) {
  FormalCharacter g(kA1, 8);
  g.set(Weight{3}, -2);
  const auto k = p_map(g);
  ASSERT_EQ(k.components.size(), 2u);
  for (const auto& c : k.components) EXPECT_EQ(c.sign, -1);
}

TEST(PMap, RoundTripRandomCorpus) {
  std::mt19937 rng(99);
  for (const auto& d : {kT1, kT2, kA1, kA2}) {
    const std::int64_t window = d.rank() == 2 && !d.is_torus() ? 5 : 8;
    for (int trial = 0; trial < 8; ++trial) {
      const auto g = random_gamma(rng, d, window);
      const auto k = p_map(g);
      if (k.components.empty()) continue;
      const auto f = polarized_index(k, default_polarization(k), window);
      EXPECT_TRUE(agree_on_shared_window(f, g)) << d.label() << " trial " << trial;
    }
  }
}

TEST(PMap, Additivity) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g1 = random_gamma(rng, kA1, 8);
    const auto g2 = random_gamma(rng, kA1, 8);
    const auto sum = p_map(g1 + g2);
    const auto parts = disjoint_union(p_map(g1), p_map(g2));
    const Weight xi{1};
    EXPECT_EQ(closed_cycle_index(sum), closed_cycle_index(parts));
    if (!sum.components.empty())
      EXPECT_TRUE(agree_on_shared_window(polarized_index(sum, xi, 8), polarized_index(parts, xi, 8)));
  }
}

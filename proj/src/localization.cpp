#include "qtop/localization.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "qtop/error.hpp"

namespace qtop {

namespace {

void check_isolated(const ClosedComponent& c) {
  for (const auto& p : c.fixed_points)
    for (const auto& w : p.tangent_weights)
      if (w.is_zero())
        throw Error(Errc::NonIsolatedFixedPoint, "zero tangent weight in component '" + c.label + "'");
}

void check_orbifold_support(const RootDatum& datum, const ClosedComponent& c) {
  if (datum.is_torus()) return;
  for (const auto& p : c.fixed_points)
    if (p.orbifold_order > 1)
      throw Error(Errc::OrbifoldAveragingUnsupported,
                  "orbifold points are modelled for torus data only (component '" + c.label + "')");
}

/// Contribution of one point as sign * numerator / prod (1 - t^{u}) with every u lex-positive.
struct NormalizedPoint {
  WeightPolynomial numerator;
  std::map<Weight, int> denominator;  // u -> multiplicity
};

NormalizedPoint normalize(const FixedPointDatum& p) {
  NormalizedPoint out{p.fiber, {}};
  const std::int64_t m = p.orbifold_order;
  for (const auto& w : p.tangent_weights) {
    Weight u = -w;
    if (!lex_positive(u)) {
      // (1 - t^{-w})^{-1} = -t^w (1 - t^w)^{-1}
      u = w;
      out.numerator = -out.numerator.shifted(w);
    }
    if (m > 1) {
      // 1/(1 - t^u) = (1 + ... + t^{(m-1)u}) / (1 - t^{mu})
      out.numerator = out.numerator * geometric_sum(u, m);
      u = m * u;
    }
    ++out.denominator[u];
  }
  // averaging over the m-torsion subgroup fixes the (invariant) denominator
  out.numerator = divisible_part(out.numerator, m);
  return out;
}

WeightPolynomial one_minus(const Weight& u) {
  WeightPolynomial f = WeightPolynomial::monomial(Weight(u.rank()));
  f.add_term(u, -1);
  return f;
}

std::int64_t min_level(const WeightPolynomial& p, const Weight& xi) {
  std::int64_t m = std::numeric_limits<std::int64_t>::max();
  for (const auto& [w, c] : p.terms()) m = std::min(m, pair(w, xi));
  return m;
}

/// Lowest level any term of the point's expansion can reach.
std::int64_t point_floor(const FixedPointDatum& p, const Weight& xi) {
  std::int64_t lvl = min_level(p.fiber, xi);
  for (const auto& w : p.tangent_weights) {
    const auto l = pair(w, xi);
    if (l > 0) lvl += l;
  }
  return lvl;
}

struct LevelKey {
  std::int64_t level;
  Weight weight;
  friend auto operator<=>(const LevelKey&, const LevelKey&) = default;
};

}  // namespace

WeightPolynomial closed_index(const RootDatum& datum, const ClosedComponent& c) {
  validate(datum, c);
  check_isolated(c);
  check_orbifold_support(datum, c);

  std::vector<NormalizedPoint> pts;
  std::map<Weight, int> common;
  for (const auto& p : c.fixed_points) {
    pts.push_back(normalize(p));
    for (const auto& [u, k] : pts.back().denominator) common[u] = std::max(common[u], k);
  }
  WeightPolynomial numerator;
  for (const auto& np : pts) {
    WeightPolynomial term = np.numerator;
    for (const auto& [u, k] : common) {
      auto it = np.denominator.find(u);
      const int have = it == np.denominator.end() ? 0 : it->second;
      for (int i = have; i < k; ++i) term = term * one_minus(u);
    }
    numerator += term;
  }
  for (const auto& [u, k] : common)
    for (int i = 0; i < k; ++i) {
      auto q = divide_by_binomial(numerator, u);
      if (!q)
        throw Error(Errc::NotClosed, "fixed-point sum of component '" + c.label +
                                         "' is not a Laurent polynomial (remainder modulo 1 - t^" +
                                         u.to_string() + ")");
      numerator = std::move(*q);
    }
  return numerator;
}

WeightPolynomial closed_cycle_index(const DiscreteKCycle& k) {
  validate(k);
  WeightPolynomial out;
  for (const auto& c : k.components) {
    if (c.family_step)
      throw Error(Errc::EnumerationUnbounded, "closed index of an infinite family '" + c.component.label + "'");
    WeightPolynomial idx = closed_index(k.datum, c.component);
    idx *= c.sign;
    out += idx;
  }
  return out;
}

std::map<Weight, Integer> point_series(const FixedPointDatum& p, const Weight& xi, std::int64_t max_level) {
  std::map<LevelKey, Integer> cur;
  for (const auto& [w, c] : p.fiber.terms()) {
    const auto l = pair(w, xi);
    if (l <= max_level) cur.emplace(LevelKey{l, w}, c);
  }
  for (const auto& w : p.tangent_weights) {
    const auto l = pair(w, xi);
    if (l == 0)
      throw Error(Errc::DegeneratePolarization, "tangent weight " + w.to_string() + " is orthogonal to " +
                                                    xi.to_string());
    Weight u = -w;
    std::int64_t step = -l;
    if (l > 0) {
      // -t^w sum_k t^{kw}
      std::map<LevelKey, Integer> moved;
      for (auto& [key, c] : cur)
        if (key.level + l <= max_level) moved.emplace(LevelKey{key.level + l, key.weight + w}, -c);
      cur = std::move(moved);
      u = w;
      step = l;
    }
    // multiply by sum_k t^{ku}: R(mu + u) += R(mu), swept in increasing level
    for (auto it = cur.begin(); it != cur.end(); ++it) {
      if (it->second == 0) continue;
      const auto next_level = it->first.level + step;
      if (next_level > max_level) continue;
      cur[LevelKey{next_level, it->first.weight + u}] += it->second;
    }
  }
  std::map<Weight, Integer> out;
  const std::int64_t m = p.orbifold_order;
  for (auto& [key, c] : cur) {
    if (c == 0) continue;
    bool keep = true;
    if (m > 1)
      for (auto x : key.weight.coords())
        if (x % m != 0) keep = false;
    if (keep) out.emplace(key.weight, c);
  }
  return out;
}

FormalCharacter polarized_index(const DiscreteKCycle& k, const Weight& xi, std::int64_t window) {
  validate(k);
  const RootDatum& datum = k.datum;
  if (xi.rank() != static_cast<std::size_t>(datum.rank()))
    throw Error(Errc::InvalidInput, "polarization rank mismatch");
  if (window <= 0) throw Error(Errc::WindowExhausted, "polarized index needs a window bound >= 1");
  for (const auto& c : k.components) {
    check_isolated(c.component);
    check_orbifold_support(datum, c.component);
    for (const auto& p : c.component.fixed_points)
      for (const auto& w : p.tangent_weights)
        if (pair(w, xi) == 0)
          throw Error(Errc::DegeneratePolarization,
                      "tangent weight " + w.to_string() + " is orthogonal to " + xi.to_string());
  }

  // Weights whose series coefficients are needed.
  const std::vector<Weight> lambdas = dominant_window(datum, window);
  const WeightPolynomial delta = positive_root_product(datum);
  std::set<Weight> targets;
  for (const auto& l : lambdas)
    for (const auto& [nu, c] : delta.terms()) targets.insert(l + nu);
  std::int64_t max_level = std::numeric_limits<std::int64_t>::min();
  for (const auto& t : targets) max_level = std::max(max_level, pair(t, xi));

  std::map<Weight, Integer> series;
  std::int64_t floor_level = std::numeric_limits<std::int64_t>::max();
  for (const auto& c : k.components) {
    std::int64_t comp_floor = std::numeric_limits<std::int64_t>::max();
    for (const auto& p : c.component.fixed_points) comp_floor = std::min(comp_floor, point_floor(p, xi));
    floor_level = std::min(floor_level, comp_floor);

    std::int64_t members = 1;
    Weight step(static_cast<std::size_t>(datum.rank()));
    if (c.family_step) {
      step = *c.family_step;
      const auto s = pair(step, xi);
      if (s <= 0)
        throw Error(Errc::EnumerationUnbounded, "family '" + c.component.label +
                                                    "' is not monotone along the polarization");
      if (!k.enumeration_bound)
        throw Error(Errc::EnumerationUnbounded, "family '" + c.component.label + "' without enumeration_bound");
      const std::int64_t needed = max_level < comp_floor ? -1 : floor_div(max_level - comp_floor, s);
      if (needed > *k.enumeration_bound)
        throw Error(Errc::EnumerationUnbounded,
                    "family '" + c.component.label + "' needs members up to " + std::to_string(needed) +
                        " but enumeration_bound is " + std::to_string(*k.enumeration_bound));
      members = needed + 1;
    }
    if (members <= 0) continue;

    std::map<Weight, Integer> base;
    for (const auto& p : c.component.fixed_points)
      for (auto& [w, v] : point_series(p, xi, max_level)) base[w] += v;
    for (const auto& t : targets) {
      Integer acc = 0;
      Weight probe = t;
      for (std::int64_t m = 0; m < members; ++m) {
        auto it = base.find(probe);
        if (it != base.end()) acc += it->second;
        probe -= step;
      }
      if (acc != 0) series[t] += c.sign * acc;
    }
  }

  FormalCharacter out(datum, window);
  for (const auto& l : lambdas) {
    Integer m = 0;
    for (const auto& [nu, c] : delta.terms()) {
      auto it = series.find(l + nu);
      if (it != series.end()) m += c * it->second;
    }
    if (m != 0) out.set(l, m);
  }
  std::int64_t delta_top = 0;
  for (const auto& [nu, c] : delta.terms()) delta_top = std::max(delta_top, pair(nu, xi));
  if (floor_level != std::numeric_limits<std::int64_t>::max())
    out.set_certificate({xi, floor_level - delta_top});
  return out;
}

Weight default_polarization(const DiscreteKCycle& k) {
  const auto r = static_cast<std::size_t>(k.datum.rank());
  std::vector<Weight> generic, increasing;
  for (const auto& c : k.components) {
    if (c.family_step) increasing.push_back(*c.family_step);
    for (const auto& p : c.component.fixed_points)
      for (const auto& w : p.tangent_weights) generic.push_back(w);
  }
  for (std::int64_t radius = 1; radius <= 16; ++radius) {
    // lexicographically descending through the box, so (1,...) comes before (-1,...)
    Weight cur(r);
    for (std::size_t i = 0; i < r; ++i) cur[i] = radius;
    while (true) {
      if (cur.sup_norm() == radius) {
        bool ok = true;
        for (const auto& w : generic)
          if (pair(w, cur) == 0) ok = false;
        for (const auto& s : increasing)
          if (pair(s, cur) <= 0) ok = false;
        if (ok) return cur;
      }
      std::size_t i = r;
      bool done = true;
      while (i > 0) {
        --i;
        if (cur[i] > -radius) {
          --cur[i];
          done = false;
          break;
        }
        cur[i] = radius;
      }
      if (done) break;
    }
  }
  throw Error(Errc::DegeneratePolarization, "no generic polarization with small coordinates");
}

FormalCharacter formal_from_polynomial(const RootDatum& datum, const WeightPolynomial& p, std::int64_t window) {
  if (datum.is_torus()) {
    FormalCharacter out(datum, window);
    for (const auto& [w, c] : p.terms())
      if (w.sup_norm() <= window) out.set(w, c);
    return out;
  }
  return FormalCharacter::from_character(decompose(datum, p), window);
}

Weight integral_direction(const std::vector<Rational>& xi) {
  Integer l = 1;
  for (const auto& x : xi) l = boost::multiprecision::lcm(l, denominator(x));
  Weight out(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    const Integer v = numerator(Rational(xi[i] * l));
    auto as64 = to_int64(v);
    if (!as64) throw Error(Errc::InvalidInput, "polarization coordinate out of range");
    out[i] = *as64;
  }
  return out;
}

}  // namespace qtop

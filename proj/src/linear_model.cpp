#include "qtop/linear_model.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "qtop/error.hpp"
#include "qtop/localization.hpp"

namespace qtop {

namespace {

std::vector<RVector> columns(const LinearModel& m, const std::vector<std::size_t>& idx) {
  std::vector<RVector> out;
  out.reserve(idx.size());
  for (auto j : idx) out.push_back(to_rational(m.weights[j]));
  return out;
}

std::vector<std::size_t> bits(std::uint32_t mask, std::size_t d) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < d; ++j)
    if (mask & (1u << j)) out.push_back(j);
  return out;
}

void require_proper(const LinearModel& m) {
  if (!check_proper(m)) throw Error(Errc::NotProper, "weights do not lie in an open half-space");
}

RVector sub(RVector a, const RVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

/// Vertices of {a >= 0 supported on s : sum_j a_j w_j = target}, as d-vectors.
std::vector<RVector> polytope_vertices(const LinearModel& m, const std::vector<std::size_t>& s, const RVector& target) {
  const auto cols = columns(m, s);
  const std::size_t rk = rank_of(cols);
  std::set<RVector> found;
  const std::size_t k = s.size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != rk) continue;
    const auto pick = bits(mask, k);
    std::vector<RVector> basis;
    for (auto i : pick) basis.push_back(cols[i]);
    if (rank_of(basis) != rk) continue;
    const auto x = solve_columns(basis, target);
    if (!x) continue;
    if (std::any_of(x->begin(), x->end(), [](const Rational& v) { return v < 0; })) continue;
    RVector a(m.weights.size(), Rational(0));
    for (std::size_t i = 0; i < pick.size(); ++i) a[s[pick[i]]] = (*x)[i];
    found.insert(std::move(a));
  }
  return {found.begin(), found.end()};
}

RVector mu_at(const LinearModel& m, const RVector& a) {
  RVector out = to_rational(m.shift);
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += a[j] * m.weights[j][i];
  return out;
}

std::int64_t checked_int(const Rational& v) {
  if (denominator(v) != 1) throw Error(Errc::InvalidInput, "non-integral adjugate entry");
  const auto x = to_int64(numerator(v));
  if (!x) throw Error(Errc::InvalidInput, "adjugate entry out of range");
  return *x;
}

/// Lattice-point counter for sum_j a_j w_j = y: enumerates the non-basis
/// coordinates under the level bound <y, xi> and solves the basis block by
/// an integer adjugate.
class LatticeCounter {
 public:
  explicit LatticeCounter(const LinearModel& m) : m_(m), xi_(model_polarization(m)) {
    const std::size_t d = m.weights.size();
    const std::size_t r = m.rank();
    const auto all = columns(m, [&] {
      std::vector<std::size_t> v(d);
      for (std::size_t j = 0; j < d; ++j) v[j] = j;
      return v;
    }());
    basis_ = independent_subset(all);
    std::vector<bool> in_basis(d, false);
    for (auto j : basis_) in_basis[j] = true;
    for (std::size_t j = 0; j < d; ++j)
      if (!in_basis[j]) free_.push_back(j);
    for (std::size_t j = 0; j < d; ++j) level_.push_back(pair(m.weights[j], xi_));

    const std::size_t k = basis_.size();
    if (k > 0) {
      std::vector<RVector> row_vecs(r, RVector(k));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < k; ++c) row_vecs[i][c] = m.weights[basis_[c]][i];
      rows_ = independent_subset(row_vecs);
      std::vector<RVector> square(k, RVector(k));  // columns of the k x k block
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < k; ++i) square[c][i] = m.weights[basis_[c]][rows_[i]];
      // det by elimination, inverse by unit solves, adjugate = det * inverse
      std::vector<RVector> mat(k, RVector(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < k; ++c) mat[i][c] = square[c][i];
      Rational det = 1;
      for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (mat[p][c] == 0) ++p;
        if (p != c) {
          std::swap(mat[p], mat[c]);
          det = -det;
        }
        det *= mat[c][c];
        for (std::size_t i = c + 1; i < k; ++i) {
          const Rational f = mat[i][c] / mat[c][c];
          for (std::size_t j = c; j < k; ++j) mat[i][j] -= f * mat[c][j];
        }
      }
      det_ = checked_int(det);
      adj_.assign(k, std::vector<std::int64_t>(k));
      for (std::size_t i = 0; i < k; ++i) {
        RVector e(k, Rational(0));
        e[i] = 1;
        const auto col = solve_columns(square, e);
        for (std::size_t c = 0; c < k; ++c) adj_[c][i] = checked_int((*col)[c] * det);
      }
    }

    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
      const auto cols = columns(m, bits(mask, d));
      if (rank_of(cols) >= r) continue;
      std::vector<std::vector<std::int64_t>> normals;
      for (const auto& n : annihilator(cols, r)) {
        const Weight v = integral_direction(n);
        normals.emplace_back(v.coords().begin(), v.coords().end());
      }
      walls_.insert(std::move(normals));
    }
  }

  ReductionCount count(const Weight& gamma) const {
    const Weight y = gamma - m_.shift;
    ReductionCount out{0, is_regular(y)};
    const std::int64_t level = pair(y, xi_);
    if (level < 0) return out;
    Weight rest = y;
    walk(0, rest, level, out.count);
    return out;
  }

  const Weight& polarization() const { return xi_; }

 private:
  bool is_regular(const Weight& y) const {
    for (const auto& normals : walls_) {
      bool on_wall = true;
      for (const auto& n : normals) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < n.size(); ++i) s += n[i] * y[i];
        if (s != 0) {
          on_wall = false;
          break;
        }
      }
      if (on_wall) return false;
    }
    return true;
  }

  void walk(std::size_t pos, Weight& rest, std::int64_t level, Integer& acc) const {
    if (pos == free_.size()) {
      if (solve_basis(rest)) ++acc;
      return;
    }
    const std::size_t j = free_[pos];
    const Weight& w = m_.weights[j];
    std::int64_t used = 0;
    std::int64_t steps = 0;
    while (used <= level) {
      walk(pos + 1, rest, level - used, acc);
      rest -= w;
      used += level_[j];
      ++steps;
    }
    rest += steps * w;
  }

  bool solve_basis(const Weight& rest) const {
    const std::size_t k = basis_.size();
    if (k == 0) return rest.is_zero();
    std::vector<std::int64_t> x(k);
    for (std::size_t c = 0; c < k; ++c) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < k; ++i) s += adj_[c][i] * rest[rows_[i]];
      if (s % det_ != 0) return false;
      x[c] = s / det_;
      if (x[c] < 0) return false;
    }
    for (std::size_t i = 0; i < rest.rank(); ++i) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < k; ++c) s += x[c] * m_.weights[basis_[c]][i];
      if (s != rest[i]) return false;
    }
    return true;
  }

  const LinearModel& m_;
  Weight xi_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> free_;
  std::vector<std::size_t> rows_;
  std::vector<std::int64_t> level_;
  std::int64_t det_ = 1;
  std::vector<std::vector<std::int64_t>> adj_;
  std::set<std::vector<std::vector<std::int64_t>>> walls_;
};

}  // namespace

LinearModel make_linear_model(int rank, std::vector<Weight> weights, Weight shift) {
  if (rank < 1) throw Error(Errc::InvalidInput, "linear model rank must be positive");
  const auto r = static_cast<std::size_t>(rank);
  if (shift.rank() != r) throw Error(Errc::InvalidInput, "shift rank does not match the torus");
  for (const auto& w : weights) {
    if (w.rank() != r) throw Error(Errc::InvalidInput, "weight " + w.to_string() + " has the wrong rank");
    if (w.is_zero()) throw Error(Errc::InvalidInput, "action weights must be nonzero");
  }
  return LinearModel{RootDatum::build(GroupKind::Torus, rank), std::move(weights), std::move(shift)};
}

LinearModel product_model(const LinearModel& a, const LinearModel& b) {
  if (!(a.datum == b.datum)) throw Error(Errc::DatumMismatch, a.datum.label() + " vs " + b.datum.label());
  LinearModel out = a;
  out.weights.insert(out.weights.end(), b.weights.begin(), b.weights.end());
  out.shift = a.shift + b.shift;
  return out;
}

HalfSpaceCertificate properness_certificate(const LinearModel& m) { return open_half_space(m.weights, m.rank()); }

bool check_proper(const LinearModel& m) { return properness_certificate(m).feasible; }

Weight model_polarization(const LinearModel& m) {
  auto xi = compact_direction(m.weights, m.rank(), 3);
  if (!xi) throw Error(Errc::NotProper, "weights do not lie in an open half-space");
  return *xi;
}

std::vector<VanishingComponent> vanishing_decomposition(const LinearModel& m) {
  require_proper(m);
  const std::size_t d = m.weights.size();
  const std::size_t r = m.rank();
  const RVector c = to_rational(m.shift);
  std::map<RVector, VanishingComponent> by_value;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    const auto s = bits(mask, d);
    const auto cols = columns(m, s);
    const RVector proj = project_onto_span(cols, c);
    RVector target(r);
    for (std::size_t i = 0; i < r; ++i) target[i] = -proj[i];
    auto verts = polytope_vertices(m, s, target);
    std::set<std::size_t> covered;
    for (const auto& v : verts)
      for (std::size_t j = 0; j < d; ++j)
        if (v[j] > 0) covered.insert(j);
    if (covered != std::set<std::size_t>(s.begin(), s.end()) || verts.empty()) continue;
    const RVector value = sub(c, proj);
    auto& comp = by_value[value];
    comp.mu_value = value;
    comp.strata.push_back({s, annihilator(cols, r), std::move(verts)});
  }

  std::vector<VanishingComponent> out;
  for (auto& [value, comp] : by_value) {
    std::set<std::size_t> support;
    std::vector<RVector> mus;
    for (const auto& st : comp.strata) {
      support.insert(st.support.begin(), st.support.end());
      for (const auto& v : st.vertices) mus.push_back(mu_at(m, v));
    }
    comp.support.assign(support.begin(), support.end());
    std::vector<Weight> ws;
    for (auto j : comp.support) ws.push_back(m.weights[j]);
    comp.compact = open_half_space(ws, r).feasible;
    comp.mu_diameter_sq = 0;
    for (const auto& a : mus)
      for (const auto& b : mus) {
        const RVector diff = sub(a, b);
        comp.mu_diameter_sq = std::max(comp.mu_diameter_sq, dot(diff, diff));
      }
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const VanishingComponent& a, const VanishingComponent& b) {
    if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
    if (a.support != b.support) return a.support < b.support;
    return a.mu_value < b.mu_value;
  });
  return out;
}

Rational vanishing_mu_bound_sq(const std::vector<VanishingComponent>& components) {
  Rational best = 0;
  for (const auto& c : components) best = std::max(best, dot(c.mu_value, c.mu_value));
  return best;
}

OffsetTable uniform_offset(const std::vector<VanishingComponent>& components, const RVector& v) {
  OffsetTable out;
  for (std::size_t i = 0; i < components.size(); ++i) out.emplace(i, v);
  return out;
}

bool check_compatibility(const LinearModel& m, const OffsetTable& offsets, const Rational& k) {
  if (k < 0) throw Error(Errc::InvalidInput, "compatibility constant must be nonnegative");
  const auto comps = vanishing_decomposition(m);
  bool ok = true;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto it = offsets.find(i);
    if (it == offsets.end())
      throw Error(Errc::NotOnVanishingSet, "no deviation given for vanishing component " + std::to_string(i));
    if (it->second.size() != m.rank()) throw Error(Errc::InvalidInput, "deviation rank mismatch");
    for (const auto& st : comps[i].strata) {
      const RVector p = project_onto_span(st.stabilizer, it->second);
      if (dot(p, p) > k * k) ok = false;
    }
  }
  return ok;
}

FormalCharacter formal_quantization(const LinearModel& m, std::int64_t window, const std::optional<Weight>& xi) {
  require_proper(m);
  if (window < 0) throw Error(Errc::WindowExhausted, "window must be nonnegative");
  const Weight dir = xi ? *xi : model_polarization(m);
  DiscreteKCycle k(m.datum);
  FixedPointDatum origin;
  for (const auto& w : m.weights) origin.tangent_weights.push_back(-w);
  origin.fiber = WeightPolynomial::monomial(m.shift);
  k.components.push_back({1, ClosedComponent{"C" + std::to_string(m.weights.size()), {origin}}, std::nullopt});
  return polarized_index(k, dir, std::max<std::int64_t>(window, 1)).restricted(window);
}

ReductionCount reduction_multiplicity(const LinearModel& m, const Weight& gamma) {
  require_proper(m);
  if (gamma.rank() != m.rank()) throw Error(Errc::InvalidInput, "weight rank does not match the torus");
  return LatticeCounter(m).count(gamma);
}

QrReport verify_qr(const LinearModel& m, std::int64_t window, const std::optional<Weight>& xi) {
  require_proper(m);
  const LatticeCounter counter(m);
  QrReport report;
  report.window = window;
  report.polarization = xi ? *xi : counter.polarization();
  const FormalCharacter top = formal_quantization(m, window, report.polarization);
  for (const auto& g : dominant_window(m.datum, window)) {
    const auto red = counter.count(g);
    QrRow row{g, top.multiplicity(g), red.count, red.regular, false};
    row.match = row.q_top == row.q_red;
    ++report.checked;
    if (!row.match) ++report.mismatches;
    if (!row.match || row.q_top != 0 || row.q_red != 0) report.rows.push_back(std::move(row));
  }
  report.verdict = report.mismatches == 0;
  return report;
}

}  // namespace qtop

#include "qtop/character.hpp"

#include <algorithm>

#include "qtop/error.hpp"

namespace qtop {

Integer Character::multiplicity(const Weight& lambda) const {
  auto it = mult_.find(lambda);
  return it == mult_.end() ? Integer(0) : it->second;
}

void Character::add(const Weight& lambda, const Integer& m) {
  if (!datum_.is_dominant(lambda))
    throw Error(Errc::NotDominant, "character key " + lambda.to_string() + " is not dominant");
  if (m == 0) return;
  auto [it, inserted] = mult_.try_emplace(lambda, m);
  if (inserted) return;
  it->second += m;
  if (it->second == 0) mult_.erase(it);
}

WeightPolynomial Character::weight_polynomial() const {
  WeightPolynomial out;
  for (const auto& [lambda, m] : mult_) {
    WeightPolynomial chi = weyl_character(datum_, lambda);
    chi *= m;
    out += chi;
  }
  return out;
}

FormalCharacter::FormalCharacter(RootDatum datum, std::int64_t window)
    : datum_(std::move(datum)), window_(window) {
  if (window < 0) throw Error(Errc::WindowExhausted, "negative window bound");
}

bool FormalCharacter::in_window(const Weight& lambda) const {
  return lambda.rank() == static_cast<std::size_t>(datum_.rank()) &&
         lambda.sup_norm() <= window_ && datum_.is_dominant(lambda);
}

Integer FormalCharacter::multiplicity(const Weight& lambda) const {
  if (!in_window(lambda))
    throw Error(Errc::InvalidInput, lambda.to_string() + " lies outside the window");
  auto it = mult_.find(lambda);
  return it == mult_.end() ? Integer(0) : it->second;
}

void FormalCharacter::set(const Weight& lambda, const Integer& m) {
  if (!in_window(lambda))
    throw Error(Errc::InvalidInput, lambda.to_string() + " lies outside the window");
  if (m == 0)
    mult_.erase(lambda);
  else
    mult_[lambda] = m;
}

FormalCharacter FormalCharacter::restricted(std::int64_t window) const {
  FormalCharacter out(datum_, std::min(window, window_));
  for (const auto& [w, m] : mult_)
    if (w.sup_norm() <= out.window_) out.mult_.emplace(w, m);
  out.cert_ = cert_;
  return out;
}

FormalCharacter FormalCharacter::negated() const {
  FormalCharacter out(datum_, window_);
  for (const auto& [w, m] : mult_) out.mult_.emplace(w, -m);
  return out;
}

FormalCharacter FormalCharacter::from_character(const Character& c, std::int64_t window) {
  FormalCharacter out(c.datum(), window);
  for (const auto& [w, m] : c.multiplicities())
    if (w.sup_norm() <= window) out.mult_.emplace(w, m);
  return out;
}

bool agree_on_shared_window(const FormalCharacter& a, const FormalCharacter& b) {
  if (!(a.datum() == b.datum())) return false;
  const auto bound = std::min(a.window(), b.window());
  auto restrict_map = [bound](const FormalCharacter& f) {
    std::map<Weight, Integer> out;
    for (const auto& [w, m] : f.nonzero())
      if (w.sup_norm() <= bound) out.emplace(w, m);
    return out;
  };
  return restrict_map(a) == restrict_map(b);
}

FormalCharacter operator+(const FormalCharacter& a, const FormalCharacter& b) {
  if (!(a.datum() == b.datum())) throw Error(Errc::DatumMismatch, "adding characters of different groups");
  FormalCharacter out(a.datum(), std::min(a.window(), b.window()));
  for (const auto* f : {&a, &b})
    for (const auto& [w, m] : f->nonzero())
      if (out.in_window(w)) out.set(w, out.multiplicity(w) + m);
  return out;
}

std::vector<Weight> weight_box(std::size_t rank, std::int64_t bound) {
  std::vector<Weight> out;
  if (bound < 0) return out;
  Weight cur(rank);
  for (std::size_t i = 0; i < rank; ++i) cur[i] = -bound;
  while (true) {
    out.push_back(cur);
    std::size_t i = rank;
    while (i > 0) {
      --i;
      if (cur[i] < bound) {
        ++cur[i];
        break;
      }
      cur[i] = -bound;
      if (i == 0) return out;
    }
    if (rank == 0) return out;
  }
}

std::vector<Weight> dominant_window(const RootDatum& datum, std::int64_t bound) {
  std::vector<Weight> out;
  for (auto& w : weight_box(static_cast<std::size_t>(datum.rank()), bound))
    if (datum.is_dominant(w)) out.push_back(std::move(w));
  return out;
}

WeightPolynomial weyl_character(const RootDatum& datum, const Weight& lambda) {
  if (!datum.is_dominant(lambda))
    throw Error(Errc::NotDominant, lambda.to_string() + " is not dominant");
  if (datum.is_torus()) return WeightPolynomial::monomial(lambda);
  // chi = A_{lambda+rho} / A_rho with A_rho = t^rho prod_{alpha>0} (1 - t^{-alpha})
  WeightPolynomial numerator;
  for (const auto& [w, sign] : datum.signed_orbit(lambda + datum.rho())) numerator.add_term(w, sign);
  WeightPolynomial q = numerator.shifted(-datum.rho());
  for (const auto& alpha : datum.positive_roots()) {
    auto next = divide_by_binomial(q, -alpha);
    if (!next) throw Error(Errc::NotClosed, "Weyl alternant not divisible (internal error)");
    q = std::move(*next);
  }
  return q;
}

bool is_weyl_invariant(const RootDatum& datum, const WeightPolynomial& p) {
  for (std::size_t i = 0; i < datum.simple_roots().size(); ++i)
    for (const auto& [w, c] : p.terms())
      if (p.coefficient(datum.reflect(i, w)) != c) return false;
  return true;
}

Character decompose(const RootDatum& datum, const WeightPolynomial& p) {
  if (!is_weyl_invariant(datum, p))
    throw Error(Errc::NotInvariant, "polynomial is not Weyl-invariant");
  Character out(datum);
  WeightPolynomial rest = p;
  while (!rest.empty()) {
    // highest dominant term by (height, lex)
    const Weight* best = nullptr;
    std::int64_t best_h = 0;
    for (const auto& [w, c] : rest.terms()) {
      if (!datum.is_dominant(w)) continue;
      const auto h = datum.scaled_height(w);
      if (!best || h > best_h || (h == best_h && *best < w)) {
        best = &w;
        best_h = h;
      }
    }
    if (!best) throw Error(Errc::NotInvariant, "no dominant term left while stripping");
    const Weight lambda = *best;
    const Integer m = rest.coefficient(lambda);
    out.add(lambda, m);
    WeightPolynomial chi = weyl_character(datum, lambda);
    chi *= m;
    rest -= chi;
  }
  return out;
}

WeightPolynomial char_product(const WeightPolynomial& a, const WeightPolynomial& b) { return a * b; }

WeightPolynomial positive_root_product(const RootDatum& datum) {
  WeightPolynomial out = WeightPolynomial::monomial(datum.zero());
  for (const auto& alpha : datum.positive_roots()) {
    WeightPolynomial factor = WeightPolynomial::monomial(datum.zero());
    factor.add_term(alpha, -1);
    out = out * factor;
  }
  return out;
}

FormalCharacter formal_multiply(const FormalCharacter& f, const Character& c) {
  if (!(f.datum() == c.datum())) throw Error(Errc::DatumMismatch, "formal_multiply across different groups");
  const RootDatum& datum = f.datum();
  const WeightPolynomial cw = c.weight_polynomial();
  std::int64_t shrink = 0;
  for (const auto& [w, m] : cw.terms()) shrink = std::max(shrink, w.sup_norm());
  const std::int64_t window = f.window() - shrink;
  if (window < 0)
    throw Error(Errc::WindowExhausted, "window " + std::to_string(f.window()) + " cannot absorb shift " +
                                           std::to_string(shrink));
  FormalCharacter out(datum, window);
  if (c.empty()) return out;
  // Brauer-Klimyk: chi_mu * c = sum_nu c_nu chi_{mu+nu}, each non-dominant
  // chi_kappa straightened by the dot action.
  std::map<Weight, Integer> acc;
  for (const auto& [mu, fm] : f.nonzero()) {
    for (const auto& [nu, cm] : cw.terms()) {
      Weight kappa = mu + nu + datum.rho();
      int sign = 1;
      bool singular = false;
      bool changed = true;
      while (changed && !singular) {
        changed = false;
        for (std::size_t i = 0; i < datum.simple_roots().size(); ++i) {
          const auto p = datum.coroot_pairing(i, kappa);
          if (p == 0) {
            singular = true;
            break;
          }
          if (p < 0) {
            kappa = datum.reflect(i, kappa);
            sign = -sign;
            changed = true;
          }
        }
      }
      if (singular) continue;
      Weight target = kappa - datum.rho();
      if (target.sup_norm() > window) continue;
      acc[target] += fm * cm * sign;
    }
  }
  for (const auto& [w, m] : acc)
    if (m != 0) out.set(w, m);
  return out;
}

}  // namespace qtop

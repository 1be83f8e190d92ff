#include "qtop/weight_polynomial.hpp"

#include "qtop/error.hpp"

namespace qtop {

WeightPolynomial WeightPolynomial::monomial(const Weight& w, const Integer& c) {
  WeightPolynomial p;
  p.add_term(w, c);
  return p;
}

Integer WeightPolynomial::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer WeightPolynomial::dimension() const {
  Integer s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

void WeightPolynomial::add_term(const Weight& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

WeightPolynomial& WeightPolynomial::operator-=(const WeightPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

WeightPolynomial& WeightPolynomial::operator*=(const Integer& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= k;
  return *this;
}

WeightPolynomial WeightPolynomial::shifted(const Weight& w) const {
  WeightPolynomial out;
  for (const auto& [u, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), u + w, c);
  return out;
}

WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b) {
  WeightPolynomial out;
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) out.add_term(u + v, cu * cv);
  return out;
}

std::string WeightPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (w.is_zero()) {
      s += mag.str();
      continue;
    }
    if (mag != 1) s += mag.str() + "*";
    s += "t^" + w.to_string();
  }
  return s;
}

std::optional<WeightPolynomial> divide_by_binomial(const WeightPolynomial& f, const Weight& v) {
  if (v.is_zero()) throw Error(Errc::InvalidInput, "division by 1 - t^0");
  if (!lex_positive(v)) {
    // 1 - t^v = -t^v (1 - t^{-v})
    auto q = divide_by_binomial(f, -v);
    if (!q) return std::nullopt;
    return -q->shifted(-v);
  }
  if (f.empty()) return WeightPolynomial{};
  // Lex order is a translation-invariant total order with v > 0, so the lowest
  // remaining term of f - g(1 - t^v) always belongs to g.
  const Weight top = f.terms().rbegin()->first;
  WeightPolynomial::Terms rem = f.terms();
  WeightPolynomial q;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (it->first > top) return std::nullopt;
    const Weight mu = it->first;
    const Integer c = it->second;
    rem.erase(it);
    q.add_term(mu, c);
    auto [jt, inserted] = rem.try_emplace(mu + v, c);
    if (!inserted) {
      jt->second += c;
      if (jt->second == 0) rem.erase(jt);
    }
  }
  return q;
}

WeightPolynomial geometric_sum(const Weight& v, std::int64_t n) {
  WeightPolynomial out;
  Weight cur(v.rank());
  for (std::int64_t k = 0; k < n; ++k) {
    out.add_term(cur, 1);
    cur += v;
  }
  return out;
}

WeightPolynomial divisible_part(const WeightPolynomial& f, std::int64_t m) {
  if (m == 1) return f;
  WeightPolynomial out;
  for (const auto& [w, c] : f.terms()) {
    bool keep = true;
    for (auto x : w.coords())
      if (x % m != 0) keep = false;
    if (keep) out.add_term(w, c);
  }
  return out;
}

}  // namespace qtop

#pragma once

#include <map>
#include <optional>
#include <string>

#include "qtop/arith.hpp"
#include "qtop/weight.hpp"

namespace qtop {

/// Finitely supported map Weight -> nonzero Integer: a Laurent polynomial in
/// the torus variables, i.e. the character of a virtual T-representation.
class WeightPolynomial {
 public:
  using Terms = std::map<Weight, Integer>;

  WeightPolynomial() = default;
  static WeightPolynomial monomial(const Weight& w, const Integer& c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Integer coefficient(const Weight& w) const;
  /// Sum of coefficients: the virtual dimension.
  Integer dimension() const;

  void add_term(const Weight& w, const Integer& c);

  WeightPolynomial& operator+=(const WeightPolynomial& o);
  WeightPolynomial& operator-=(const WeightPolynomial& o);
  WeightPolynomial& operator*=(const Integer& k);
  /// Multiplication by the monomial t^w.
  WeightPolynomial shifted(const Weight& w) const;

  friend WeightPolynomial operator+(WeightPolynomial a, const WeightPolynomial& b) { return a += b; }
  friend WeightPolynomial operator-(WeightPolynomial a, const WeightPolynomial& b) { return a -= b; }
  friend WeightPolynomial operator-(WeightPolynomial a) { return a *= -1; }
  friend WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b);

  friend bool operator==(const WeightPolynomial&, const WeightPolynomial&) = default;

  /// Human-readable form, "0" for the empty polynomial.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Exact quotient f / (1 - t^v), or nullopt when the division leaves a remainder.
std::optional<WeightPolynomial> divide_by_binomial(const WeightPolynomial& f, const Weight& v);

/// 1 + t^v + ... + t^{(n-1)v}
WeightPolynomial geometric_sum(const Weight& v, std::int64_t n);

/// Keep only the terms whose weights have every coordinate divisible by m.
WeightPolynomial divisible_part(const WeightPolynomial& f, std::int64_t m);

}  // namespace qtop

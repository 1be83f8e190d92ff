#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qtop/root_datum.hpp"
#include "qtop/weight_polynomial.hpp"

namespace qtop {

/// Element of R(G): finitely many dominant weights with nonzero multiplicity.
class Character {
 public:
  explicit Character(RootDatum datum) : datum_(std::move(datum)) {}

  const RootDatum& datum() const noexcept { return datum_; }
  const std::map<Weight, Integer>& multiplicities() const noexcept { return mult_; }
  bool empty() const noexcept { return mult_.empty(); }
  Integer multiplicity(const Weight& lambda) const;

  /// Throws NotDominant for a non-dominant key.
  void add(const Weight& lambda, const Integer& m);

  /// Weight polynomial sum_lambda m_lambda * chi_lambda.
  WeightPolynomial weight_polynomial() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.datum_ == b.datum_ && a.mult_ == b.mult_;
  }

 private:
  RootDatum datum_;
  std::map<Weight, Integer> mult_;
};

/// Half-space promise on the support: every nonzero multiplicity sits at
/// <gamma, direction> >= lower_bound.
struct SupportCertificate {
  Weight direction;
  std::int64_t lower_bound = 0;
};

/// Window-truncated element of the completion: multiplicities are exact for
/// every dominant weight of sup-norm <= window and unspecified outside.
class FormalCharacter {
 public:
  FormalCharacter(RootDatum datum, std::int64_t window);

  const RootDatum& datum() const noexcept { return datum_; }
  std::int64_t window() const noexcept { return window_; }
  const std::map<Weight, Integer>& nonzero() const noexcept { return mult_; }
  const std::optional<SupportCertificate>& certificate() const noexcept { return cert_; }
  void set_certificate(SupportCertificate c) { cert_ = std::move(c); }

  bool in_window(const Weight& lambda) const;
  /// Throws InvalidInput outside the window.
  Integer multiplicity(const Weight& lambda) const;
  void set(const Weight& lambda, const Integer& m);

  /// Same multiplicities, window shrunk to `window`.
  FormalCharacter restricted(std::int64_t window) const;
  FormalCharacter negated() const;

  /// Restriction of a finite character to a window.
  static FormalCharacter from_character(const Character& c, std::int64_t window);

 private:
  RootDatum datum_;
  std::int64_t window_;
  std::map<Weight, Integer> mult_;
  std::optional<SupportCertificate> cert_;
};

/// Agreement on the intersection of the two windows.
bool agree_on_shared_window(const FormalCharacter& a, const FormalCharacter& b);

FormalCharacter operator+(const FormalCharacter& a, const FormalCharacter& b);

/// Dominant weights of sup-norm <= bound, in lexicographic order.
std::vector<Weight> dominant_window(const RootDatum& datum, std::int64_t bound);

/// All weights of sup-norm <= bound.
std::vector<Weight> weight_box(std::size_t rank, std::int64_t bound);

/// Full weight-multiplicity polynomial of the irreducible V_lambda, computed by
/// the Weyl character formula as an exact quotient of alternants.
WeightPolynomial weyl_character(const RootDatum& datum, const Weight& lambda);

/// True iff p is invariant under every simple reflection.
bool is_weyl_invariant(const RootDatum& datum, const WeightPolynomial& p);

/// Unique expansion of a Weyl-invariant polynomial in irreducible characters.
Character decompose(const RootDatum& datum, const WeightPolynomial& p);

WeightPolynomial char_product(const WeightPolynomial& a, const WeightPolynomial& b);

/// Module action of R(G) on the completion. The window shrinks by the largest
/// sup-norm among the weights of c's weight polynomial.
FormalCharacter formal_multiply(const FormalCharacter& f, const Character& c);

/// prod_{alpha > 0} (1 - t^alpha); multiplying a G-invariant series by its
/// reflection reads off irreducible multiplicities at dominant weights.
WeightPolynomial positive_root_product(const RootDatum& datum);

}  // namespace qtop

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtop/arith.hpp"
#include "qtop/weight.hpp"

namespace qtop {

enum class GroupKind { Torus, TypeA };

/// Weight lattice, roots and Weyl group of a rank-r torus or of SU(n+1).
///
/// Type A weights are written in the fundamental-weight basis, so the pairing
/// with the i-th simple coroot is just coordinate i and the i-th simple root
/// is row i of the Cartan matrix.
class RootDatum {
 public:
  /// Throws InvalidInput for rank < 1.
  static RootDatum build(GroupKind kind, int rank);
  /// Accepts "torus"/"T" and "A" (case-insensitive); other series throw UnsupportedKind.
  static RootDatum build(std::string_view kind, int rank);
  /// Compact labels such as "T2" or "A1".
  static RootDatum parse_label(std::string_view label);

  GroupKind kind() const noexcept { return kind_; }
  int rank() const noexcept { return rank_; }
  bool is_torus() const noexcept { return kind_ == GroupKind::Torus; }
  const std::vector<Weight>& simple_roots() const noexcept { return simple_; }
  const std::vector<Weight>& positive_roots() const noexcept { return positive_; }
  const Weight& rho() const noexcept { return rho_; }
  Weight zero() const { return Weight(static_cast<std::size_t>(rank_)); }
  std::string label() const;

  /// Order of the Weyl group.
  std::int64_t weyl_order() const;

  /// <w, alpha_i^vee>
  std::int64_t coroot_pairing(std::size_t i, const Weight& w) const;
  Weight reflect(std::size_t i, const Weight& w) const;
  bool is_dominant(const Weight& w) const;
  /// Strictly dominant: every coroot pairing positive (always true for tori).
  bool is_regular_dominant(const Weight& w) const;

  /// Orbit under the group generated by simple reflections, sorted.
  std::vector<Weight> weyl_orbit(const Weight& w) const;
  /// Orbit of a regular weight with the sign of the Weyl element reaching each point.
  std::vector<std::pair<Weight, int>> signed_orbit(const Weight& w) const;
  /// Unique dominant element of the orbit of w.
  Weight dominant_conjugate(const Weight& w) const;

  /// Twice the height <w, rho^vee>, scaled to an integer; positive roots have positive height.
  std::int64_t scaled_height(const Weight& w) const;

  /// Invariant form: orthonormal lattice basis for tori, inverse Cartan matrix for type A.
  Rational inner_product(const Weight& a, const Weight& b) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_;
  }

 private:
  RootDatum(GroupKind kind, int rank);

  GroupKind kind_;
  int rank_;
  std::vector<Weight> simple_;
  std::vector<Weight> positive_;
  Weight rho_;
};

}  // namespace qtop

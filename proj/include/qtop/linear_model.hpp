#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qtop/character.hpp"
#include "qtop/exact_linalg.hpp"
#include "qtop/farkas.hpp"

namespace qtop {

/// Hamiltonian torus action on C^d with weights w_j and moment map
/// mu(z) = 1/2 sum_j |z_j|^2 w_j + c.
struct LinearModel {
  RootDatum datum;
  std::vector<Weight> weights;
  Weight shift;

  std::size_t rank() const { return static_cast<std::size_t>(datum.rank()); }
};

/// Throws InvalidInput for a zero weight or mismatched ranks.
LinearModel make_linear_model(int rank, std::vector<Weight> weights, Weight shift);

/// Weights of both models on the same torus, shifts added.
LinearModel product_model(const LinearModel& a, const LinearModel& b);

HalfSpaceCertificate properness_certificate(const LinearModel& m);
bool check_proper(const LinearModel& m);

/// Direction with <w_j, xi> >= 1 for every weight, chosen small so the
/// polarized series stays short. Throws NotProper.
Weight model_polarization(const LinearModel& m);

/// Points z with support S lie in the vanishing set iff mu(z) annihilates
/// every w_j, j in S. On such a stratum mu is constant.
struct VanishingStratum {
  std::vector<std::size_t> support;
  /// Basis of the stabilizer subalgebra {xi : <w_j, xi> = 0, j in S}.
  std::vector<RVector> stabilizer;
  /// The values |z_j|^2 / 2 range over the positive part of
  /// {a >= 0 on S : sum_j a_j w_j = mu_value - c}; these are its vertices.
  std::vector<RVector> vertices;
};

/// Connected component of the vanishing set: the strata sharing one value of mu.
struct VanishingComponent {
  RVector mu_value;
  std::vector<VanishingStratum> strata;
  /// Union of the strata supports.
  std::vector<std::size_t> support;
  bool compact = false;
  /// Squared diameter of mu over the component.
  Rational mu_diameter_sq = 0;
};

/// Components ordered by support size, then support, then mu value.
/// Throws NotProper.
std::vector<VanishingComponent> vanishing_decomposition(const LinearModel& m);

/// Bound on |mu| over the whole vanishing set: the largest |mu_value|^2.
Rational vanishing_mu_bound_sq(const std::vector<VanishingComponent>& components);

/// phi - mu sampled on each component, keyed by component index.
using OffsetTable = std::map<std::size_t, RVector>;

/// The same constant deviation on every component.
OffsetTable uniform_offset(const std::vector<VanishingComponent>& components, const RVector& v);

/// True iff on every component the deviation paired with any stabilizer
/// direction xi is at most K |xi|, i.e. the projection of the deviation onto
/// each stratum's stabilizer has norm <= K. Throws NotOnVanishingSet for a
/// component missing from the table, InvalidInput for K < 0.
bool check_compatibility(const LinearModel& m, const OffsetTable& offsets, const Rational& k);

/// Polarized expansion of t^c prod_j (1 - t^{w_j})^{-1} on the window, by
/// default along model_polarization. Throws NotProper, WindowExhausted.
FormalCharacter formal_quantization(const LinearModel& m, std::int64_t window,
                                    const std::optional<Weight>& xi = std::nullopt);

struct ReductionCount {
  Integer count;
  bool regular = false;
};

/// #{a in Z_{>=0}^d : sum_j a_j w_j + c = gamma} by bounded enumeration, with
/// gamma flagged regular when gamma - c avoids every span of fewer than r
/// weights' rank. Throws NotProper.
ReductionCount reduction_multiplicity(const LinearModel& m, const Weight& gamma);

struct QrRow {
  Weight gamma;
  Integer q_top;
  Integer q_red;
  bool regular = false;
  bool match = false;
};

struct QrReport {
  std::int64_t window = 0;
  Weight polarization;
  /// Rows where either side is nonzero or the sides disagree.
  std::vector<QrRow> rows;
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  bool verdict = false;
};

/// Compares formal_quantization with reduction_multiplicity at every weight of
/// the window. Throws NotProper.
QrReport verify_qr(const LinearModel& m, std::int64_t window, const std::optional<Weight>& xi = std::nullopt);

}  // namespace qtop

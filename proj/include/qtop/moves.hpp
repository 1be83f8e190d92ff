#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qtop/localization.hpp"

namespace qtop {

/// Witness that a rewrite preserved the quantization on a window.
struct RewriteCertificate {
  std::string move;
  FormalCharacter before;
  FormalCharacter after;
  std::int64_t window = 0;
  bool verdict = false;
};

/// Compares two window-restricted characters and records the verdict.
RewriteCertificate make_certificate(std::string move, FormalCharacter before, FormalCharacter after);

/// Concatenation of component lists. Throws DatumMismatch.
DiscreteKCycle disjoint_union(const DiscreteKCycle& a, const DiscreteKCycle& b);

/// The open disk with the standard circle action and trivial bundle, as a
/// single noncompact fixed point. Its quantization is the expansion of
/// 1/(1 - t) in the direction of the sign of the auxiliary function.
DiscreteKCycle disk_cycle();

/// Sphere components F_n (n = 0..N) for sign +1, negated F_{-n}
/// (n = 1..N+1) for sign -1.
DiscreteKCycle disk_decomposition(int sign, std::int64_t truncation);

/// Certificate that the truncated decomposition reproduces the disk's
/// polarized index on the window |n| <= N.
RewriteCertificate certify_disk_decomposition(int sign, std::int64_t truncation);

/// Cuts a closed component along a hypersurface separating the two blocks of
/// fixed points and caps each piece.
///
/// The caps form a cancelling pair built from the anchor (first point of
/// block b) with first tangent weight w: block b receives the anchor's fiber
/// with w reversed, block a receives the fiber shifted by t^{-w} with w kept.
/// Throws EmptyBlock unless both blocks are nonempty, InvalidInput unless
/// they partition the fixed points.
std::pair<DiscreteKCycle, DiscreteKCycle> glue_split(const RootDatum& datum, const ClosedComponent& c,
                                                     const std::vector<std::size_t>& block_a,
                                                     const std::vector<std::size_t>& block_b);

/// closed_index(c) against the sum of the pieces' polarized indices.
RewriteCertificate certify_glue_split(const RootDatum& datum, const ClosedComponent& c,
                                      const std::pair<DiscreteKCycle, DiscreteKCycle>& pieces,
                                      std::int64_t window);

/// Replaces every fixed point p of k by the points p x q of the fiber.
/// Throws OddFiber for a fiber without a well-defined dimension and
/// FiberIndexNotUnit unless the fiber's closed index is 1.
std::pair<DiscreteKCycle, RewriteCertificate> bundle_modification(const DiscreteKCycle& k,
                                                                  const ClosedComponent& fiber,
                                                                  std::int64_t window);

/// Fixed-point-wise product; the second factor must be finite (compact).
DiscreteKCycle product_cycle(const DiscreteKCycle& a, const DiscreteKCycle& b);

/// polarized_index(a) + polarized_index(b) against polarized_index(a u b).
RewriteCertificate certify_disjoint_union(const DiscreteKCycle& a, const DiscreteKCycle& b, std::int64_t window);

/// polarized_index(a x b) against formal_multiply(polarized_index(a), index(b)).
RewriteCertificate certify_product(const DiscreteKCycle& a, const DiscreteKCycle& b, std::int64_t window);

}  // namespace qtop

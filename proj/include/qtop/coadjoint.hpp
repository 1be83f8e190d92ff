#pragma once

#include "qtop/character.hpp"
#include "qtop/kcycle.hpp"

namespace qtop {

/// Fixed-point model of the coadjoint orbit through gamma with its line bundle.
struct OrbitCycle {
  RootDatum datum;
  Weight gamma;
  ClosedComponent component;
};

/// Torus: a single point with fiber t^gamma. Type A, gamma strictly dominant:
/// one point per Weyl element w with fiber t^{w gamma} and tangent weights
/// {w alpha : alpha > 0}, so the fixed-point sum is the Weyl character formula
/// and the index is the irreducible with highest weight gamma.
/// Throws NotDominant, SingularOrbitUnsupported.
OrbitCycle orbit_cycle(const RootDatum& datum, const Weight& gamma);

/// Disjoint union over the support of Gamma of |n_gamma| copies of the orbit
/// cycle through gamma, signed by n_gamma.
DiscreteKCycle p_map(const FormalCharacter& gamma);

}  // namespace qtop

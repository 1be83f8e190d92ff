#include "qtop/coadjoint.hpp"

#include <deque>
#include <map>

#include "qtop/error.hpp"

namespace qtop {

OrbitCycle orbit_cycle(const RootDatum& datum, const Weight& gamma) {
  if (gamma.rank() != static_cast<std::size_t>(datum.rank()))
    throw Error(Errc::InvalidInput, "weight rank does not match the group");
  if (!datum.is_dominant(gamma)) throw Error(Errc::NotDominant, gamma.to_string() + " is not dominant");
  OrbitCycle out{datum, gamma, ClosedComponent{"O" + gamma.to_string(), {}}};
  if (datum.is_torus()) {
    out.component.fixed_points.push_back({{}, WeightPolynomial::monomial(gamma), 1});
    return out;
  }
  if (!datum.is_regular_dominant(gamma))
    throw Error(Errc::SingularOrbitUnsupported, gamma.to_string() + " lies on a wall");

  // Breadth-first over Weyl elements, identified by the image of gamma.
  std::map<Weight, std::vector<Weight>> seen;
  std::deque<Weight> queue;
  seen.emplace(gamma, datum.positive_roots());
  queue.push_back(gamma);
  while (!queue.empty()) {
    const Weight g = queue.front();
    queue.pop_front();
    const auto roots = seen.at(g);
    for (std::size_t i = 0; i < datum.simple_roots().size(); ++i) {
      Weight h = datum.reflect(i, g);
      if (seen.contains(h)) continue;
      std::vector<Weight> moved;
      moved.reserve(roots.size());
      for (const auto& a : roots) moved.push_back(datum.reflect(i, a));
      seen.emplace(h, std::move(moved));
      queue.push_back(std::move(h));
    }
  }
  for (auto& [g, roots] : seen)
    out.component.fixed_points.push_back({std::move(roots), WeightPolynomial::monomial(g), 1});
  return out;
}

DiscreteKCycle p_map(const FormalCharacter& gamma) {
  DiscreteKCycle out(gamma.datum());
  for (const auto& [w, n] : gamma.nonzero()) {
    const OrbitCycle orbit = orbit_cycle(gamma.datum(), w);
    const int sign = n > 0 ? 1 : -1;
    const Integer copies = n > 0 ? Integer(n) : Integer(-n);
    for (Integer k = 0; k < copies; ++k) out.components.push_back({sign, orbit.component, std::nullopt});
  }
  return out;
}

}  // namespace qtop

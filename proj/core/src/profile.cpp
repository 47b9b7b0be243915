#include "equisep/profile.hpp"

#include <algorithm>

namespace equisep {

SeparationProfile separation_profile(const Tree& t) {
  if (t.order() < 2) {
    throw ValidationError("separation profile needs at least 2 vertices");
  }
  SeparationProfile p;
  p.values.reserve(t.edges().size());
  for (const EdgeCut& c : all_edge_cuts(t)) {
    p.values.push_back(std::min(c.p_u, c.p_v));
  }
  std::sort(p.values.begin(), p.values.end());
  return p;
}

bool are_equiseparable(const Tree& t1, const Tree& t2) {
  if (t1.order() != t2.order()) return false;
  if (pendant_vertices(t1).size() != pendant_vertices(t2).size()) return false;
  if (t1.order() == 1) return true;  // no edges, nothing left to match
  return separation_profile(t1) == separation_profile(t2);
}

}  // namespace equisep

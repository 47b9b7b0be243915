#pragma once

#include <compare>
#include <vector>

#include "equisep/tree.hpp"

namespace equisep {

/// The equiseparability fingerprint: the sorted multiset of per-edge
/// min-side pendant counts, one entry per edge.
struct SeparationProfile {
  std::vector<int> values;  // ascending, length n-1

  friend bool operator==(const SeparationProfile&,
                         const SeparationProfile&) = default;
  friend auto operator<=>(const SeparationProfile&,
                          const SeparationProfile&) = default;
};

/// Throws ValidationError for n < 2 (no edges, no profile).
SeparationProfile separation_profile(const Tree& t);

/// Equiseparability with respect to the terminal Wiener index: same order,
/// same pendant count, and the edges can be matched with equal min-side
/// pendant counts -- equivalently, equal sorted profiles. Two one-vertex
/// trees are trivially equiseparable.
bool are_equiseparable(const Tree& t1, const Tree& t2);

}  // namespace equisep

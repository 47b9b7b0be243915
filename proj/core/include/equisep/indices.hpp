#pragma once

#include <cstdint>
#include <vector>

#include "equisep/tree.hpp"

namespace equisep {

/// Wiener index: sum of d(u,v) over unordered vertex pairs. 0 for n=1.
std::int64_t wiener_pairwise(const Tree& t);

/// Wiener index by edge cuts: sum over edges of n_u(e)*n_v(e). Agrees with
/// wiener_pairwise on every tree.
std::int64_t wiener_edge_cut(const Tree& t);

/// Terminal Wiener index: sum of d(u,v) over unordered pendant pairs.
/// 0 when there are fewer than two pendant vertices.
std::int64_t terminal_wiener_pairwise(const Tree& t);

/// Terminal transmission d+(u): sum of distances from u to every pendant
/// vertex. A pendant u contributes its own zero term.
std::int64_t d_plus(const Tree& t, int u);

/// d+ for every vertex at once.
std::vector<std::int64_t> d_plus_all(const Tree& t);

/// Terminal Wiener index as half the sum of d+ over pendant vertices.
/// The sum is always even; exact integer result.
std::int64_t terminal_wiener_dplus(const Tree& t);

/// Per-tree bundle of derived data.
struct TreeSummary {
  Tree tree;
  std::vector<int> pendants;
  std::vector<std::int64_t> d_plus;  // indexed by vertex
  std::int64_t wiener = 0;
  std::int64_t terminal_wiener = 0;
};

TreeSummary summarize(const Tree& t);

}  // namespace equisep

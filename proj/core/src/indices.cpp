#include "equisep/indices.hpp"

namespace equisep {

std::int64_t wiener_pairwise(const Tree& t) {
  std::int64_t total = 0;
  for (int v = 0; v < t.order(); ++v) {
    auto dist = distances_from(t, v);
    for (int w = v + 1; w < t.order(); ++w) {
      total = checked_add(total, dist[w]);
    }
  }
  return total;
}

std::int64_t wiener_edge_cut(const Tree& t) {
  std::int64_t total = 0;
  for (const EdgeCut& c : all_edge_cuts(t)) {
    total = checked_add(total, checked_mul(c.n_u, c.n_v));
  }
  return total;
}

std::int64_t terminal_wiener_pairwise(const Tree& t) {
  std::vector<int> pend = pendant_vertices(t);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < pend.size(); ++i) {
    auto dist = distances_from(t, pend[i]);
    for (std::size_t j = i + 1; j < pend.size(); ++j) {
      total = checked_add(total, dist[pend[j]]);
    }
  }
  return total;
}

std::int64_t d_plus(const Tree& t, int u) {
  t.require_vertex(u);
  auto dist = distances_from(t, u);
  std::int64_t total = 0;
  for (int p : pendant_vertices(t)) {
    total = checked_add(total, dist[p]);
  }
  return total;
}

std::vector<std::int64_t> d_plus_all(const Tree& t) {
  std::vector<std::int64_t> out(t.order(), 0);
  for (int p : pendant_vertices(t)) {
    auto dist = distances_from(t, p);
    for (int v = 0; v < t.order(); ++v) {
      out[v] = checked_add(out[v], dist[v]);
    }
  }
  return out;
}

std::int64_t terminal_wiener_dplus(const Tree& t) {
  auto dp = d_plus_all(t);
  std::int64_t total = 0;
  for (int p : pendant_vertices(t)) {
    total = checked_add(total, dp[p]);
  }
  if (total % 2 != 0) {
    throw VerificationError("sum of d+ over pendant vertices is odd");
  }
  return total / 2;
}

TreeSummary summarize(const Tree& t) {
  TreeSummary s{t, pendant_vertices(t), d_plus_all(t), 0, 0};
  s.wiener = wiener_pairwise(t);
  std::int64_t tw2 = 0;
  for (int p : s.pendants) tw2 = checked_add(tw2, s.d_plus[p]);
  if (tw2 % 2 != 0) {
    throw VerificationError("sum of d+ over pendant vertices is odd");
  }
  s.terminal_wiener = tw2 / 2;
  return s;
}

}  // namespace equisep

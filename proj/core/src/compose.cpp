#include "equisep/compose.hpp"

#include "equisep/indices.hpp"

namespace equisep {

namespace {

// Appends tb's edges with v mapped onto target and the remaining vertices
// shifted to offset, offset+1, ... in increasing original-id order.
void append_identified(std::vector<Edge>& edges, const Tree& tb, int v,
                       int target, int offset) {
  auto remap = [&](int w) {
    if (w == v) return target;
    return offset + (w < v ? w : w - 1);
  };
  for (const auto& [a, b] : tb.edges()) {
    edges.push_back({remap(a), remap(b)});
  }
}

void require_nonpendent(const Tree& t, int v, const char* role) {
  t.require_vertex(v);
  if (t.is_pendant(v)) {
    throw PreconditionError(std::string(role) + " vertex " +
                            std::to_string(v) +
                            " is pendant in its operand; the prediction "
                            "formula requires a nonpendent vertex");
  }
}

std::int64_t pendant_count(const Tree& t) {
  return static_cast<std::int64_t>(pendant_vertices(t).size());
}

}  // namespace

Tree identify_two(const Tree& ta, int u, const Tree& tb, int v) {
  ta.require_vertex(u);
  tb.require_vertex(v);
  std::vector<Edge> edges = ta.edges();
  append_identified(edges, tb, v, u, ta.order());
  return Tree::from_edges(ta.order() + tb.order() - 1, std::move(edges));
}

Tree identify_three(const Tree& ta, int u, const Tree& tb, int v,
                    const Tree& tc, int w) {
  tc.require_vertex(w);
  Tree ab = identify_two(ta, u, tb, v);
  return identify_two(ab, u, tc, w);  // u kept its id
}

Tree join_edge(const Tree& ta, int u, const Tree& tb, int v) {
  ta.require_vertex(u);
  tb.require_vertex(v);
  int offset = ta.order();
  std::vector<Edge> edges = ta.edges();
  for (const auto& [a, b] : tb.edges()) {
    edges.push_back({offset + a, offset + b});
  }
  edges.push_back({u, offset + v});
  return Tree::from_edges(ta.order() + tb.order(), std::move(edges));
}

std::int64_t predict_tw_identify_two(const Tree& ta, int u, const Tree& tb,
                                     int v) {
  require_nonpendent(ta, u, "first attachment");
  require_nonpendent(tb, v, "second attachment");
  std::int64_t l1 = pendant_count(ta), l2 = pendant_count(tb);
  std::int64_t total = checked_add(terminal_wiener_pairwise(ta),
                                   terminal_wiener_pairwise(tb));
  total = checked_add(total, checked_mul(l2, d_plus(ta, u)));
  total = checked_add(total, checked_mul(l1, d_plus(tb, v)));
  return total;
}

std::int64_t predict_tw_identify_three(const Tree& ta, int u, const Tree& tb,
                                       int v, const Tree& tc, int w) {
  require_nonpendent(ta, u, "first attachment");
  require_nonpendent(tb, v, "second attachment");
  require_nonpendent(tc, w, "third attachment");
  std::int64_t l1 = pendant_count(ta), l2 = pendant_count(tb),
               l3 = pendant_count(tc);
  std::int64_t total = checked_add(terminal_wiener_pairwise(ta),
                                   terminal_wiener_pairwise(tb));
  total = checked_add(total, terminal_wiener_pairwise(tc));
  total = checked_add(total, checked_mul(l2 + l3, d_plus(ta, u)));
  total = checked_add(total, checked_mul(l1 + l3, d_plus(tb, v)));
  total = checked_add(total, checked_mul(l1 + l2, d_plus(tc, w)));
  return total;
}

std::int64_t predict_tw_join_edge(const Tree& ta, int u, const Tree& tb,
                                  int v) {
  require_nonpendent(ta, u, "first attachment");
  require_nonpendent(tb, v, "second attachment");
  std::int64_t l1 = pendant_count(ta), l2 = pendant_count(tb);
  std::int64_t total = checked_add(terminal_wiener_pairwise(ta),
                                   terminal_wiener_pairwise(tb));
  total = checked_add(total, checked_mul(l2, d_plus(ta, u)));
  total = checked_add(total, checked_mul(l1, d_plus(tb, v)));
  total = checked_add(total, checked_mul(l1, l2));
  return total;
}

}  // namespace equisep

#include "equisep/isomorphism.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace equisep {

std::vector<int> tree_centers(const Tree& t) {
  int n = t.order();
  if (n == 1) return {0};
  if (n == 2) return {0, 1};
  std::vector<int> deg(n);
  std::deque<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::deque<int> next;
    remaining -= static_cast<int>(layer.size());
    for (int v : layer) {
      for (int w : t.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
      deg[v] = 0;
    }
    layer = std::move(next);
  }
  std::vector<int> centers(layer.begin(), layer.end());
  std::sort(centers.begin(), centers.end());
  return centers;
}

namespace {

// BFS orientation from the root: parent array plus a processing order where
// every vertex appears before its descendants.
struct Rooted {
  std::vector<int> parent;
  std::vector<int> order;
};

Rooted orient(const Tree& t, int root) {
  int n = t.order();
  Rooted r;
  r.parent.assign(n, -1);
  r.order.reserve(n);
  std::deque<int> queue{root};
  std::vector<char> visited(n, 0);
  visited[root] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    r.order.push_back(v);
    for (int w : t.neighbors(v)) {
      if (!visited[w]) {
        visited[w] = 1;
        r.parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return r;
}

// code[v] for every vertex of the rooted tree, children sorted so equal
// codes mean isomorphic rooted subtrees
std::vector<std::string> subtree_codes(const Tree& t, const Rooted& r) {
  int n = t.order();
  std::vector<std::string> code(n);
  std::vector<std::vector<int>> children(n);
  for (int v = 0; v < n; ++v) {
    if (r.parent[v] >= 0) children[r.parent[v]].push_back(v);
  }
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    int v = *it;
    std::vector<std::string> parts;
    parts.reserve(children[v].size());
    for (int c : children[v]) parts.push_back(code[c]);
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    s += ")";
    code[v] = std::move(s);
  }
  return code;
}

}  // namespace

std::string rooted_code(const Tree& t, int root) {
  t.require_vertex(root);
  Rooted r = orient(t, root);
  return subtree_codes(t, r)[root];
}

CanonicalCode canonical_code(const Tree& t) {
  std::vector<int> centers = tree_centers(t);
  int best_root = centers[0];
  Rooted best = orient(t, best_root);
  std::vector<std::string> best_codes = subtree_codes(t, best);
  if (centers.size() == 2) {
    Rooted alt = orient(t, centers[1]);
    std::vector<std::string> alt_codes = subtree_codes(t, alt);
    if (alt_codes[centers[1]] < best_codes[best_root]) {
      best_root = centers[1];
      best = std::move(alt);
      best_codes = std::move(alt_codes);
    }
  }

  int n = t.order();
  std::vector<std::vector<int>> children(n);
  for (int v = 0; v < n; ++v) {
    if (best.parent[v] >= 0) children[best.parent[v]].push_back(v);
  }
  for (auto& ch : children) {
    std::sort(ch.begin(), ch.end(), [&](int a, int b) {
      if (best_codes[a] != best_codes[b]) return best_codes[a] < best_codes[b];
      return a < b;
    });
  }
  // preorder in canonical child order
  CanonicalCode out;
  out.code = best_codes[best_root];
  out.relabeling.assign(n, -1);
  int next_id = 0;
  std::vector<int> stack{best_root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    out.relabeling[v] = next_id++;
    for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) {
      stack.push_back(*it);
    }
  }
  return out;
}

bool is_isomorphic(const Tree& a, const Tree& b) {
  if (a.order() != b.order()) return false;
  return canonical_code(a).code == canonical_code(b).code;
}

Tree relabel(const Tree& t, const std::vector<int>& perm) {
  int n = t.order();
  if (static_cast<int>(perm.size()) != n) {
    throw ValidationError("relabeling has wrong length");
  }
  std::vector<char> hit(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p]) {
      throw ValidationError("relabeling is not a permutation of 0..n-1");
    }
    hit[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(t.edges().size());
  for (const auto& [a, b] : t.edges()) {
    edges.push_back({perm[a], perm[b]});
  }
  return Tree::from_edges(n, std::move(edges));
}

Tree canonical_form(const Tree& t) {
  return relabel(t, canonical_code(t).relabeling);
}

}  // namespace equisep

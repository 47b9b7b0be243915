#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equisep/errors.hpp"

namespace equisep {

using Edge = std::pair<int, int>;
class Tree;
using TreePair = std::pair<Tree, Tree>;

/// Unrooted simple tree on vertices 0..n-1.
///
/// Validated on construction: exactly n-1 edges, connected, no self loops,
/// no duplicate edges, all ids in range. Immutable afterwards, so values can
/// be shared freely across threads.
class Tree {
 public:
  /// Builds a tree from an explicit order and edge list. Edges are
  /// normalized to (min,max) and stored sorted. Throws ValidationError.
  static Tree from_edges(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  /// A pendant (leaf) vertex has degree one; the isolated vertex of the
  /// one-vertex tree counts as pendant too.
  bool is_pendant(int v) const { return degree(v) <= 1; }
  bool has_edge(int u, int v) const;
  void require_vertex(int v) const;

 private:
  Tree(int n, std::vector<Edge> edges, std::vector<std::vector<int>> adj);

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Parses the edge-list format: one edge per line as two base-10 vertex ids
/// separated by whitespace; `#` comment lines and blank lines are ignored;
/// ids must be exactly 0..n-1 with n inferred as max id + 1. Each failure
/// mode gets its own diagnostic. The one-vertex tree has no edges and is not
/// expressible in this format.
Tree parse_tree(std::string_view text);

/// Canonical rendering: edges sorted by (min id, max id), one per line,
/// newline terminated. parse_tree(render_tree(t)) reproduces t exactly.
std::string render_tree(const Tree& t);

/// Degree-one vertices in ascending order (the single vertex for n=1, both
/// vertices for n=2).
std::vector<int> pendant_vertices(const Tree& t);

/// Path 0-1-...-(n-1).
Tree make_path(int n);

/// Star with center 0 and leaves 1..n-1.
Tree make_star(int n);

/// Exact hop distances, n x n, computed by one breadth-first traversal per
/// vertex.
struct DistanceMatrix {
  int n = 0;
  std::vector<int> d;  // row-major

  int at(int i, int j) const {
    return d[static_cast<std::size_t>(i) * n + j];
  }
};

DistanceMatrix distances(const Tree& t);

/// Hop distances from a single source vertex.
std::vector<int> distances_from(const Tree& t, int source);

/// The two components of T - e. n_u/n_v count all vertices on the side of
/// the edge's first/second endpoint; p_u/p_v count the vertices that are
/// pendant in T itself.
struct EdgeCut {
  Edge edge;
  int n_u = 0;
  int n_v = 0;
  int p_u = 0;
  int p_v = 0;
};

/// Cut data for one edge. Throws ValidationError if e is not an edge of t.
EdgeCut edge_cut(const Tree& t, Edge e);

/// Cut data for every edge, in the tree's edge order, via one traversal.
std::vector<EdgeCut> all_edge_cuts(const Tree& t);

}  // namespace equisep

#include "equisep/tree.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

namespace equisep {

Tree::Tree(int n, std::vector<Edge> edges, std::vector<std::vector<int>> adj)
    : n_(n), edges_(std::move(edges)), adj_(std::move(adj)) {}

Tree Tree::from_edges(int n, std::vector<Edge> edges) {
  if (n < 1) {
    throw ValidationError("tree order must be at least 1");
  }
  if (static_cast<int>(edges.size()) != n - 1) {
    std::ostringstream msg;
    if (static_cast<int>(edges.size()) > n - 1) {
      msg << "cycle detected: " << edges.size() << " edges on " << n
          << " vertices";
    } else {
      msg << "disconnected: " << edges.size() << " edges on " << n
          << " vertices";
    }
    throw ValidationError(msg.str());
  }
  std::set<Edge> seen;
  for (auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw ValidationError("vertex id out of range 0.." +
                            std::to_string(n - 1));
    }
    if (a == b) {
      throw ValidationError("self-loop at vertex " + std::to_string(a));
    }
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      throw ValidationError("duplicate edge " + std::to_string(a) + " " +
                            std::to_string(b));
    }
  }
  std::sort(edges.begin(), edges.end());

  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());

  // connectivity; n-1 edges + connected = tree
  std::vector<char> visited(n, 0);
  std::deque<int> queue{0};
  visited[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[v]) {
      if (!visited[w]) {
        visited[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != n) {
    throw ValidationError("disconnected: only " + std::to_string(reached) +
                          " of " + std::to_string(n) + " vertices reachable");
  }
  return Tree(n, std::move(edges), std::move(adj));
}

const std::vector<int>& Tree::neighbors(int v) const {
  require_vertex(v);
  return adj_[v];
}

int Tree::degree(int v) const {
  require_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool Tree::has_edge(int u, int v) const {
  require_vertex(u);
  require_vertex(v);
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

void Tree::require_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw ValidationError("vertex " + std::to_string(v) +
                          " out of range 0.." + std::to_string(n_ - 1));
  }
}

namespace {

bool parse_id(std::string_view token, int& out) {
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size() && out >= 0;
}

}  // namespace

Tree parse_tree(std::string_view text) {
  std::vector<Edge> edges;
  int max_id = -1;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos
                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;

    std::vector<std::string_view> tokens;
    std::size_t i = first;
    while (i < line.size()) {
      std::size_t j = line.find_first_of(" \t\r", i);
      if (j == std::string_view::npos) j = line.size();
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = line.find_first_not_of(" \t\r", j);
      if (i == std::string_view::npos) break;
    }
    int a = 0, b = 0;
    if (tokens.size() != 2 || !parse_id(tokens[0], a) ||
        !parse_id(tokens[1], b)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": malformed line, expected two vertex ids");
    }
    if (a == b) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": self-loop at vertex " + std::to_string(a));
    }
    edges.push_back({std::min(a, b), std::max(a, b)});
    max_id = std::max({max_id, a, b});
  }
  if (edges.empty()) {
    throw ParseError("empty document: no edges");
  }

  int n = max_id + 1;
  std::vector<char> used(n, 0);
  std::set<Edge> seen;
  for (const auto& [a, b] : edges) {
    used[a] = used[b] = 1;
    if (!seen.insert({a, b}).second) {
      throw ParseError("duplicate edge " + std::to_string(a) + " " +
                       std::to_string(b));
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!used[v]) {
      throw ParseError("non-contiguous vertex ids: " + std::to_string(v) +
                       " unused but " + std::to_string(max_id) + " present");
    }
  }
  try {
    return Tree::from_edges(n, std::move(edges));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

std::string render_tree(const Tree& t) {
  std::string out;
  for (const auto& [a, b] : t.edges()) {
    out += std::to_string(a);
    out += ' ';
    out += std::to_string(b);
    out += '\n';
  }
  return out;
}

std::vector<int> pendant_vertices(const Tree& t) {
  std::vector<int> out;
  for (int v = 0; v < t.order(); ++v) {
    if (t.is_pendant(v)) out.push_back(v);
  }
  return out;
}

Tree make_path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Tree::from_edges(n, std::move(edges));
}

Tree make_star(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i});
  return Tree::from_edges(n, std::move(edges));
}

std::vector<int> distances_from(const Tree& t, int source) {
  t.require_vertex(source);
  std::vector<int> dist(t.order(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : t.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix distances(const Tree& t) {
  int n = t.order();
  DistanceMatrix m;
  m.n = n;
  m.d.resize(static_cast<std::size_t>(n) * n);
  for (int v = 0; v < n; ++v) {
    auto row = distances_from(t, v);
    std::copy(row.begin(), row.end(),
              m.d.begin() + static_cast<std::size_t>(v) * n);
  }
  return m;
}

namespace {

struct CutSides {
  // per edge (in tree edge order): vertex and pendant counts on the side of
  // the edge's first endpoint
  std::vector<int> n_first;
  std::vector<int> p_first;
};

CutSides cut_sides(const Tree& t) {
  int n = t.order();
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  // iterative DFS from 0
  std::vector<int> stack{0};
  std::vector<char> visited(n, 0);
  visited[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : t.neighbors(v)) {
      if (!visited[w]) {
        visited[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> sz(n, 1), pend(n, 0);
  for (int v = 0; v < n; ++v) {
    if (t.is_pendant(v)) pend[v] = 1;
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (parent[v] >= 0) {
      sz[parent[v]] += sz[v];
      pend[parent[v]] += pend[v];
    }
  }
  int total_pend = pend[0];

  const auto& edges = t.edges();
  CutSides out;
  out.n_first.resize(edges.size());
  out.p_first.resize(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    int child = (parent[b] == a) ? b : a;  // deeper endpoint
    int n_child = sz[child], p_child = pend[child];
    if (child == a) {
      out.n_first[i] = n_child;
      out.p_first[i] = p_child;
    } else {
      out.n_first[i] = n - n_child;
      out.p_first[i] = total_pend - p_child;
    }
  }
  return out;
}

}  // namespace

std::vector<EdgeCut> all_edge_cuts(const Tree& t) {
  int n = t.order();
  int total_pend = static_cast<int>(pendant_vertices(t).size());
  CutSides sides = cut_sides(t);
  std::vector<EdgeCut> out;
  out.reserve(t.edges().size());
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    EdgeCut c;
    c.edge = t.edges()[i];
    c.n_u = sides.n_first[i];
    c.n_v = n - c.n_u;
    c.p_u = sides.p_first[i];
    c.p_v = total_pend - c.p_u;
    out.push_back(c);
  }
  return out;
}

EdgeCut edge_cut(const Tree& t, Edge e) {
  t.require_vertex(e.first);
  t.require_vertex(e.second);
  Edge norm{std::min(e.first, e.second), std::max(e.first, e.second)};
  if (!t.has_edge(norm.first, norm.second)) {
    throw ValidationError("edge " + std::to_string(e.first) + " " +
                          std::to_string(e.second) + " not in tree");
  }
  for (const EdgeCut& c : all_edge_cuts(t)) {
    if (c.edge == norm) {
      if (e.first == norm.first) return c;
      // caller named the edge in the other orientation
      EdgeCut flipped = c;
      flipped.edge = e;
      std::swap(flipped.n_u, flipped.n_v);
      std::swap(flipped.p_u, flipped.p_v);
      return flipped;
    }
  }
  throw ValidationError("edge lookup failed");  // unreachable
}

}  // namespace equisep

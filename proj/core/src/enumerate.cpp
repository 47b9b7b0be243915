#include "equisep/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "equisep/indices.hpp"
#include "equisep/isomorphism.hpp"

namespace equisep {

namespace {

std::vector<int> parents_of_levels(const std::vector<int>& levels) {
  // parent of position i is the nearest previous position one level up
  int n = static_cast<int>(levels.size());
  std::vector<int> parent(n, -1), last_at_level(n + 2, -1);
  for (int i = 0; i < n; ++i) {
    parent[i] = levels[i] > 1 ? last_at_level[levels[i] - 1] : -1;
    last_at_level[levels[i]] = i;
  }
  return parent;
}

// level sequence of the tree re-rooted at root, children blocks in
// nonincreasing lexicographic order (the canonical rooted form the
// generator emits)
std::vector<int> canonical_levels(const std::vector<std::vector<int>>& adj,
                                  int root) {
  struct Rec {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> operator()(int v, int parent, int depth) const {
      std::vector<std::vector<int>> blocks;
      for (int w : adj[v]) {
        if (w != parent) blocks.push_back((*this)(w, v, depth + 1));
      }
      std::sort(blocks.begin(), blocks.end(),
                [](const std::vector<int>& a, const std::vector<int>& b) {
                  return std::lexicographical_compare(b.begin(), b.end(),
                                                      a.begin(), a.end());
                });
      std::vector<int> out{depth};
      for (const auto& blk : blocks) {
        out.insert(out.end(), blk.begin(), blk.end());
      }
      return out;
    }
  };
  return Rec{adj}(root, -1, 1);
}

}  // namespace

FreeTreeIterator::FreeTreeIterator(int n, int cap) : n_(n) {
  if (n < 1 || n > cap) {
    throw ValidationError("order " + std::to_string(n) +
                          " outside 1.." + std::to_string(cap));
  }
  levels_.resize(n);
  std::iota(levels_.begin(), levels_.end(), 1);  // the path, rooted at an end
}

bool FreeTreeIterator::advance_() {
  // successor rule on canonical level sequences of rooted trees
  int n = n_;
  int p = -1;
  for (int i = n - 1; i >= 0; --i) {
    if (levels_[i] > 2) {
      p = i;
      break;
    }
  }
  if (p < 0) return false;  // all twos: the star was the last sequence
  int q = -1;
  for (int i = p - 1; i >= 0; --i) {
    if (levels_[i] == levels_[p] - 1) {
      q = i;
      break;
    }
  }
  for (int i = p; i < n; ++i) {
    levels_[i] = levels_[i - (p - q)];
  }
  return true;
}

bool FreeTreeIterator::accepted_() const {
  int n = n_;
  if (n <= 2) return true;
  std::vector<int> parent = parents_of_levels(levels_);
  std::vector<std::vector<int>> adj(n);
  std::vector<int> sz(n, 1);
  for (int i = 1; i < n; ++i) {
    adj[parent[i]].push_back(i);
    adj[i].push_back(parent[i]);
  }
  for (int i = n - 1; i >= 1; --i) sz[parent[i]] += sz[i];
  std::vector<int> centroids;
  for (int v = 0; v < n; ++v) {
    int maxcomp = n - sz[v];
    for (int w : adj[v]) {
      if (w != parent[v]) maxcomp = std::max(maxcomp, sz[w]);
    }
    if (2 * maxcomp <= n) centroids.push_back(v);
  }
  if (std::find(centroids.begin(), centroids.end(), 0) == centroids.end()) {
    return false;  // generator's root is not a centroid
  }
  if (centroids.size() == 1) return true;
  // bicentroid: keep the rooting whose canonical sequence is not smaller
  int other = centroids[0] == 0 ? centroids[1] : centroids[0];
  std::vector<int> alt = canonical_levels(adj, other);
  return !std::lexicographical_compare(levels_.begin(), levels_.end(),
                                       alt.begin(), alt.end());
}

Tree FreeTreeIterator::current_tree_() const {
  if (n_ == 1) return Tree::from_edges(1, {});
  std::vector<int> parent = parents_of_levels(levels_);
  std::vector<Edge> edges;
  edges.reserve(n_ - 1);
  for (int i = 1; i < n_; ++i) edges.push_back({parent[i], i});
  return Tree::from_edges(n_, std::move(edges));
}

std::optional<Tree> FreeTreeIterator::next() {
  while (!done_) {
    if (!started_) {
      started_ = true;
    } else if (!advance_()) {
      done_ = true;
      break;
    }
    if (accepted_()) return current_tree_();
  }
  return std::nullopt;
}

FreeTreeIterator enumerate_free_trees(int n, int cap) {
  return FreeTreeIterator(n, cap);
}

std::vector<Tree> all_free_trees(int n, int cap) {
  FreeTreeIterator it(n, cap);
  std::vector<Tree> out;
  while (auto t = it.next()) out.push_back(std::move(*t));
  return out;
}

MateReport mate_report(int n, int cap) {
  if (n < 2) {
    throw ValidationError("mate report needs order >= 2");
  }
  MateReport report;
  report.n = n;

  struct ClassData {
    std::int64_t tw = 0;
    std::vector<MemberRef> members;
  };
  std::map<std::pair<int, std::vector<int>>, ClassData> classes;
  std::map<std::int64_t, std::vector<MemberRef>> by_tw;

  FreeTreeIterator it(n, cap);
  while (auto t = it.next()) {
    ++report.total_trees;
    MemberRef ref{canonical_code(*t).code, render_tree(canonical_form(*t))};
    int pend = static_cast<int>(pendant_vertices(*t).size());
    SeparationProfile prof = separation_profile(*t);
    std::int64_t tw = terminal_wiener_pairwise(*t);
    auto [pos, fresh] =
        classes.try_emplace({pend, prof.values}, ClassData{tw, {}});
    if (!fresh && pos->second.tw != tw) {
      throw VerificationError(
          "profile class is not TW-homogeneous at order " +
          std::to_string(n));
    }
    pos->second.members.push_back(ref);
    by_tw[tw].push_back(std::move(ref));
  }

  std::int64_t with_mate = 0;
  for (auto& [key, data] : classes) {
    std::sort(data.members.begin(), data.members.end(),
              [](const MemberRef& a, const MemberRef& b) {
                return a.code < b.code;
              });
    if (data.members.size() >= 2) {
      with_mate += static_cast<std::int64_t>(data.members.size());
    }
    ProfileClass pc;
    pc.pendant_count = key.first;
    pc.profile.values = key.second;
    pc.tw = data.tw;
    pc.members = std::move(data.members);
    report.classes.push_back(std::move(pc));
  }
  for (auto& [tw, members] : by_tw) {
    std::sort(members.begin(), members.end(),
              [](const MemberRef& a, const MemberRef& b) {
                return a.code < b.code;
              });
    report.tw_classes.push_back({tw, std::move(members)});
  }
  std::int64_t g = std::gcd(with_mate, report.total_trees);
  report.mate_fraction = {with_mate / g, report.total_trees / g};
  return report;
}

std::vector<TreePair> find_equal_tw_pairs(int n, int cap) {
  if (n < 4) {
    throw ValidationError("equal-TW pair search needs order >= 4");
  }
  std::map<std::int64_t, std::vector<Tree>> by_tw;
  FreeTreeIterator it(n, cap);
  while (auto t = it.next()) {
    by_tw[terminal_wiener_pairwise(*t)].push_back(canonical_form(*t));
  }
  std::vector<TreePair> out;
  for (auto& [tw, trees] : by_tw) {
    std::sort(trees.begin(), trees.end(), [](const Tree& a, const Tree& b) {
      return render_tree(a) < render_tree(b);
    });
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i + 1; j < trees.size(); ++j) {
        if (terminal_wiener_pairwise(trees[i]) !=
            terminal_wiener_pairwise(trees[j])) {
          throw VerificationError("equal-TW grouping self-check failed");
        }
        out.push_back({trees[i], trees[j]});
      }
    }
  }
  return out;
}

std::vector<DplusPair> scan_equal_dplus_vertices(const Tree& t) {
  std::vector<std::int64_t> dp = d_plus_all(t);
  std::vector<std::string> rooted(t.order());
  for (int v = 0; v < t.order(); ++v) rooted[v] = rooted_code(t, v);
  std::vector<DplusPair> out;
  for (int u = 0; u < t.order(); ++u) {
    for (int v = u + 1; v < t.order(); ++v) {
      if (dp[u] == dp[v]) {
        out.push_back({u, v, dp[u], rooted[u] == rooted[v]});
      }
    }
  }
  return out;
}

}  // namespace equisep

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equisep/profile.hpp"
#include "equisep/tree.hpp"

namespace equisep {

inline constexpr int kDefaultEnumerationCap = 16;

/// Streams every nonisomorphic free tree of order n exactly once, in a
/// deterministic order. Generation walks the canonical level sequences of
/// rooted trees and keeps exactly the rootings canonical under the
/// centroid-split rule. Single consumer; independent iterators may run
/// concurrently.
class FreeTreeIterator {
 public:
  explicit FreeTreeIterator(int n, int cap = kDefaultEnumerationCap);

  std::optional<Tree> next();
  int order() const { return n_; }

 private:
  bool advance_();
  bool accepted_() const;
  Tree current_tree_() const;

  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> levels_;
};

FreeTreeIterator enumerate_free_trees(int n,
                                      int cap = kDefaultEnumerationCap);

/// Materializes the whole family; convenient at desk scale.
std::vector<Tree> all_free_trees(int n, int cap = kDefaultEnumerationCap);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// One tree inside a report, referenced by its canonical code and its
/// canonical edge-list rendering.
struct MemberRef {
  std::string code;
  std::string edges;
};

struct ProfileClass {
  int pendant_count = 0;
  SeparationProfile profile;
  std::int64_t tw = 0;  // shared by every member of the class
  std::vector<MemberRef> members;
};

struct TwClass {
  std::int64_t tw = 0;
  std::vector<MemberRef> members;
};

/// Partition of all order-n trees by (pendant count, separation profile),
/// plus the coarser partition by TW value. A tree "has a mate" when its
/// profile class has at least two members.
struct MateReport {
  int n = 0;
  std::int64_t total_trees = 0;
  std::vector<ProfileClass> classes;
  std::vector<TwClass> tw_classes;
  Rational mate_fraction;
};

MateReport mate_report(int n, int cap = kDefaultEnumerationCap);

/// All unordered pairs of nonisomorphic order-n trees with equal TW, as
/// canonical forms. Every returned pair is re-verified against the pairwise
/// definition before being emitted. Requires n >= 4.
std::vector<TreePair> find_equal_tw_pairs(int n,
                                          int cap = kDefaultEnumerationCap);

struct DplusPair {
  int u = 0;
  int v = 0;
  std::int64_t d_plus = 0;
  bool automorphic = false;  // some automorphism of t maps u to v
};

/// All unordered vertex pairs with equal terminal transmission, each
/// annotated with whether the pair is related by an automorphism (equal
/// rooted codes).
std::vector<DplusPair> scan_equal_dplus_vertices(const Tree& t);

}  // namespace equisep

#pragma once

#include <string>
#include <vector>

#include "equisep/tree.hpp"

namespace equisep {

/// Canonical form of an unlabeled tree. Two trees have equal codes exactly
/// when they are isomorphic. The relabeling permutation sends the tree onto
/// its canonical labeled form: relabel(t, relabeling) is byte-identical for
/// isomorphic inputs.
struct CanonicalCode {
  std::string code;
  std::vector<int> relabeling;  // relabeling[old id] = new id
};

/// Center vertices (1 or 2), found by stripping leaves layer by layer.
std::vector<int> tree_centers(const Tree& t);

/// Recursive sorted-subtree encoding of t rooted at the given vertex.
/// Equal strings exactly when the rooted trees are isomorphic.
std::string rooted_code(const Tree& t, int root);

/// Roots at the tree center; for a bicentral tree both rooted codes are
/// computed and the lexicographically smaller one wins.
CanonicalCode canonical_code(const Tree& t);

bool is_isomorphic(const Tree& a, const Tree& b);

/// Applies a permutation of 0..n-1 to the vertex ids.
Tree relabel(const Tree& t, const std::vector<int>& perm);

/// relabel(t, canonical_code(t).relabeling)
Tree canonical_form(const Tree& t);

}  // namespace equisep

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "equisep/compose.hpp"
#include "equisep/tree.hpp"

namespace equisep {

/// A fragment tree plus the vertex through which it gets attached.
struct AttachmentSpec {
  Tree fragment;
  int attach_at;

  /// 1 if the attachment vertex is pendant in the fragment, else 0.
  int pendant_indicator() const {
    fragment.require_vertex(attach_at);
    return fragment.is_pendant(attach_at) ? 1 : 0;
  }
};

/// Hypothesis handling for the theorem constructors. `enforce` refuses
/// inputs that violate the theorem's hypotheses (PreconditionError);
/// `skip` builds the trees anyway so callers can measure what actually
/// holds (the CLI's --force path).
enum class Hypotheses { enforce, skip };

/// Swap construction: T1 glues X at u and Y at v, T2 glues them the other
/// way around. Requires all three trees to have more than two vertices and
/// the balance condition p_x - p_s = p_y - p_r on the pendant counts and
/// attachment indicators. Outputs are equiseparable with equal TW.
TreePair construct_thm1(const Tree& t, int u, int v, const AttachmentSpec& x,
                        const AttachmentSpec& y,
                        Hypotheses hyp = Hypotheses::enforce);

/// Same construction under the weaker disjunctive hypothesis: the balance
/// condition OR d+(u) = d+(v) in the host (the distance branch additionally
/// needs u and v to agree in pendant status). Guarantees equal TW; profile
/// equality under the distance branch alone is measured, not asserted.
TreePair construct_thm2(const Tree& t, int u, int v, const AttachmentSpec& x,
                        const AttachmentSpec& y,
                        Hypotheses hyp = Hypotheses::enforce);

/// Inputs of the closed-form TW expansion for the swap construction.
struct Thm2Inputs {
  Tree t;
  int u;
  int v;
  Tree x;
  int s;
  Tree y;
  int r;
};

/// The two expansion values (TW of T1, TW of T2), including the
/// -p_s d+(s) - p_r d+(r) correction terms that cover pendant attachment
/// vertices of the fragments. The expansion itself is only valid when u and
/// v are nonpendent in the host; that is enforced.
std::pair<std::int64_t, std::int64_t> predict_tw_thm2_pair(
    const Thm2Inputs& in);

/// Two path pairs realizing two partitions of the same n, each joined by a
/// cut edge at nonpendent vertices. Equal TW regardless of the attachment
/// choices.
TreePair construct_partition_pair(int n1, int n2, int n3, int n4, int a1,
                                  int a2, int a3, int a4,
                                  Hypotheses hyp = Hypotheses::enforce);

/// Attach the same fragment at i or at j; TW is preserved when
/// d+(i) = d+(j) in the host and i, j agree in pendant status.
TreePair construct_thm3(const Tree& t, int i, int j, const AttachmentSpec& z,
                        Hypotheses hyp = Hypotheses::enforce);

struct Thm4Anchor {
  int at;  // host vertex i_a
  AttachmentSpec z;
};

/// Attach each fragment Z_a at i_a (first output) or at i_a + j (second
/// output), reading i_a + j as plain vertex-id arithmetic. Requires
/// d+(i_a) = d+(i_a + j) for every anchor and pairwise distinct targets.
TreePair construct_thm4(const Tree& t, const std::vector<Thm4Anchor>& anchors,
                        int j, Hypotheses hyp = Hypotheses::enforce);

/// One member of the STW family: k copies of X and k copies of Y attached
/// to the 2k vertices of a path. Path positions are numbered 1..2k; the
/// assignment lists the positions that receive X.
struct StwFamilySpec {
  int k;
  AttachmentSpec x;
  AttachmentSpec y;
  std::vector<int> assignment;
};

Tree stw_member(const StwFamilySpec& spec,
                Hypotheses hyp = Hypotheses::enforce);

/// All C(2k,k) members, ordered by assignment subset.
std::vector<Tree> stw_family_all(int k, const AttachmentSpec& x,
                                 const AttachmentSpec& y,
                                 Hypotheses hyp = Hypotheses::enforce);

/// T.T'(u,x) vs T.T'(v,x) for d+(u) = d+(v) in T, with u, v of equal
/// pendant status.
TreePair construct_thm7(const Tree& t, int u, int v,
                        const AttachmentSpec& frag,
                        Hypotheses hyp = Hypotheses::enforce);

/// Extends an equal-TW nonisomorphic pair by gluing the same fragment at
/// nonpendent vertices with matching d+. Nonisomorphism of the outputs is
/// measured by the caller, never assumed.
TreePair construct_thm8(const Tree& t1, int u, const Tree& t2, int v,
                        const AttachmentSpec& frag,
                        Hypotheses hyp = Hypotheses::enforce);

}  // namespace equisep

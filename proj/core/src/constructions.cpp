#include "equisep/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "equisep/indices.hpp"
#include "equisep/isomorphism.hpp"

namespace equisep {

namespace {

void require_order_at_least(const Tree& t, int min, const char* role) {
  if (t.order() < min) {
    throw PreconditionError(std::string(role) + " must have at least " +
                            std::to_string(min) + " vertices, got " +
                            std::to_string(t.order()));
  }
}

std::int64_t pendant_count(const Tree& t) {
  return static_cast<std::int64_t>(pendant_vertices(t).size());
}

// balance value p_f - p_a for a fragment: pendant count minus the pendant
// indicator of the attachment vertex
std::int64_t balance(const AttachmentSpec& a) {
  return pendant_count(a.fragment) - a.pendant_indicator();
}

TreePair build_swap_pair(const Tree& t, int u, int v, const AttachmentSpec& x,
                         const AttachmentSpec& y) {
  t.require_vertex(u);
  t.require_vertex(v);
  // the host keeps its ids through the first gluing, so v stays valid
  Tree t1 = identify_two(identify_two(t, u, x.fragment, x.attach_at), v,
                         y.fragment, y.attach_at);
  Tree t2 = identify_two(identify_two(t, u, y.fragment, y.attach_at), v,
                         x.fragment, x.attach_at);
  return {std::move(t1), std::move(t2)};
}

}  // namespace

TreePair construct_thm1(const Tree& t, int u, int v, const AttachmentSpec& x,
                        const AttachmentSpec& y, Hypotheses hyp) {
  t.require_vertex(u);
  t.require_vertex(v);
  x.fragment.require_vertex(x.attach_at);
  y.fragment.require_vertex(y.attach_at);
  if (hyp == Hypotheses::enforce) {
    require_order_at_least(t, 3, "host tree");
    require_order_at_least(x.fragment, 3, "fragment X");
    require_order_at_least(y.fragment, 3, "fragment Y");
    if (u == v) {
      throw PreconditionError("attachment vertices u and v must differ");
    }
    if (balance(x) != balance(y)) {
      throw PreconditionError(
          "condition violated: p_x - p_s = " + std::to_string(balance(x)) +
          " but p_y - p_r = " + std::to_string(balance(y)));
    }
  }
  return build_swap_pair(t, u, v, x, y);
}

TreePair construct_thm2(const Tree& t, int u, int v, const AttachmentSpec& x,
                        const AttachmentSpec& y, Hypotheses hyp) {
  t.require_vertex(u);
  t.require_vertex(v);
  x.fragment.require_vertex(x.attach_at);
  y.fragment.require_vertex(y.attach_at);
  if (hyp == Hypotheses::enforce) {
    require_order_at_least(t, 3, "host tree");
    require_order_at_least(x.fragment, 3, "fragment X");
    require_order_at_least(y.fragment, 3, "fragment Y");
    if (u == v) {
      throw PreconditionError("attachment vertices u and v must differ");
    }
    bool cond_a = balance(x) == balance(y);
    bool cond_b = d_plus(t, u) == d_plus(t, v);
    if (!cond_a && !cond_b) {
      throw PreconditionError(
          "both hypotheses fail: p_x - p_s = " + std::to_string(balance(x)) +
          " vs p_y - p_r = " + std::to_string(balance(y)) + ", and d+(" +
          std::to_string(u) + ") = " + std::to_string(d_plus(t, u)) +
          " vs d+(" + std::to_string(v) + ") = " +
          std::to_string(d_plus(t, v)));
    }
    // Under the distance branch alone, TW equality needs u and v to agree
    // in pendant status: a mixed pair shrinks the host pendant set on one
    // side only and the expansions no longer cancel.
    if (!cond_a && t.is_pendant(u) != t.is_pendant(v)) {
      throw PreconditionError(
          "distance hypothesis holds but u and v differ in pendant status, "
          "which the d+ branch requires");
    }
  }
  return build_swap_pair(t, u, v, x, y);
}

std::pair<std::int64_t, std::int64_t> predict_tw_thm2_pair(
    const Thm2Inputs& in) {
  in.t.require_vertex(in.u);
  in.t.require_vertex(in.v);
  in.x.require_vertex(in.s);
  in.y.require_vertex(in.r);
  if (in.t.order() < 3 || in.x.order() < 3 || in.y.order() < 3) {
    throw PreconditionError("all three trees must have at least 3 vertices");
  }
  if (in.u == in.v) {
    throw PreconditionError("attachment vertices u and v must differ");
  }
  // The expansion assumes the host pendant set is unchanged by the gluings,
  // so u and v have to be nonpendent in the host. Pendant s and r are fine:
  // that is what the correction terms handle.
  if (in.t.is_pendant(in.u) || in.t.is_pendant(in.v)) {
    throw PreconditionError(
        "u and v must be nonpendent in the host for the expansion");
  }
  std::int64_t p_t = pendant_count(in.t);
  std::int64_t p_x = pendant_count(in.x);
  std::int64_t p_y = pendant_count(in.y);
  std::int64_t p_s = in.x.is_pendant(in.s) ? 1 : 0;
  std::int64_t p_r = in.y.is_pendant(in.r) ? 1 : 0;
  std::int64_t duv = distances_from(in.t, in.u)[in.v];
  std::int64_t du = d_plus(in.t, in.u), dv = d_plus(in.t, in.v);
  std::int64_t ds = d_plus(in.x, in.s), dr = d_plus(in.y, in.r);
  std::int64_t cx = p_x - p_s, cy = p_y - p_r;

  std::int64_t common = checked_add(terminal_wiener_pairwise(in.t),
                                    terminal_wiener_pairwise(in.x));
  common = checked_add(common, terminal_wiener_pairwise(in.y));
  common = checked_add(common, checked_mul(ds, p_t + cy));
  common = checked_add(common, checked_mul(dr, p_t + cx));
  common = checked_add(common, checked_mul(checked_mul(cx, cy), duv));
  common = checked_add(common, -checked_mul(p_s, ds));
  common = checked_add(common, -checked_mul(p_r, dr));

  std::int64_t tw1 = checked_add(
      common, checked_add(checked_mul(du, cx), checked_mul(dv, cy)));
  std::int64_t tw2 = checked_add(
      common, checked_add(checked_mul(du, cy), checked_mul(dv, cx)));
  return {tw1, tw2};
}

TreePair construct_partition_pair(int n1, int n2, int n3, int n4, int a1,
                                  int a2, int a3, int a4, Hypotheses hyp) {
  if (hyp == Hypotheses::enforce) {
    if (n1 + n2 != n3 + n4) {
      throw PreconditionError("partition mismatch: " + std::to_string(n1) +
                              "+" + std::to_string(n2) +
                              " != " + std::to_string(n3) + "+" +
                              std::to_string(n4));
    }
    for (int ni : {n1, n2, n3, n4}) {
      if (ni < 3) {
        throw PreconditionError(
            "each path must have at least 3 vertices, got " +
            std::to_string(ni));
      }
    }
    auto check_internal = [](int a, int n, const char* which) {
      if (a < 1 || a > n - 2) {
        throw PreconditionError(std::string("attachment vertex ") +
                                std::to_string(a) + " of " + which +
                                " is pendant in a path of " +
                                std::to_string(n) + " vertices");
      }
    };
    check_internal(a1, n1, "P_n1");
    check_internal(a2, n2, "P_n2");
    check_internal(a3, n3, "P_n3");
    check_internal(a4, n4, "P_n4");
  }
  Tree first = join_edge(make_path(n1), a1, make_path(n2), a2);
  Tree second = join_edge(make_path(n3), a3, make_path(n4), a4);
  return {std::move(first), std::move(second)};
}

TreePair construct_thm3(const Tree& t, int i, int j, const AttachmentSpec& z,
                        Hypotheses hyp) {
  t.require_vertex(i);
  t.require_vertex(j);
  z.fragment.require_vertex(z.attach_at);
  if (hyp == Hypotheses::enforce) {
    if (d_plus(t, i) != d_plus(t, j)) {
      throw PreconditionError(
          "d+ mismatch: d+(" + std::to_string(i) + ") = " +
          std::to_string(d_plus(t, i)) + " but d+(" + std::to_string(j) +
          ") = " + std::to_string(d_plus(t, j)));
    }
    // gluing at a pendant vertex removes it from the pendant set, so a
    // mixed pendant/nonpendent pair breaks TW equality even with equal d+
    if (t.is_pendant(i) != t.is_pendant(j)) {
      throw PreconditionError("vertices " + std::to_string(i) + " and " +
                              std::to_string(j) +
                              " differ in pendant status");
    }
  }
  return {identify_two(t, i, z.fragment, z.attach_at),
          identify_two(t, j, z.fragment, z.attach_at)};
}

TreePair construct_thm4(const Tree& t, const std::vector<Thm4Anchor>& anchors,
                        int j, Hypotheses hyp) {
  if (anchors.empty()) {
    throw ValidationError("thm4 needs at least one anchor");
  }
  std::set<int> firsts, seconds;
  for (const Thm4Anchor& a : anchors) {
    t.require_vertex(a.at);
    t.require_vertex(a.at + j);
    a.z.fragment.require_vertex(a.z.attach_at);
    if (!firsts.insert(a.at).second || !seconds.insert(a.at + j).second) {
      throw PreconditionError("vertex collision: attachment targets must be "
                              "pairwise distinct in each output");
    }
    if (hyp == Hypotheses::enforce) {
      if (d_plus(t, a.at) != d_plus(t, a.at + j)) {
        throw PreconditionError(
            "d+ mismatch at anchor: d+(" + std::to_string(a.at) + ") = " +
            std::to_string(d_plus(t, a.at)) + " but d+(" +
            std::to_string(a.at + j) + ") = " +
            std::to_string(d_plus(t, a.at + j)));
      }
      if (t.is_pendant(a.at) != t.is_pendant(a.at + j)) {
        throw PreconditionError("anchor vertices " + std::to_string(a.at) +
                                " and " + std::to_string(a.at + j) +
                                " differ in pendant status");
      }
    }
  }
  // the host keeps its ids through every gluing, so anchor ids stay valid
  Tree t1 = t, t2 = t;
  for (const Thm4Anchor& a : anchors) {
    t1 = identify_two(t1, a.at, a.z.fragment, a.z.attach_at);
    t2 = identify_two(t2, a.at + j, a.z.fragment, a.z.attach_at);
  }
  return {std::move(t1), std::move(t2)};
}

Tree stw_member(const StwFamilySpec& spec, Hypotheses hyp) {
  if (spec.k < 1) {
    throw ValidationError("stw: k must be positive");
  }
  spec.x.fragment.require_vertex(spec.x.attach_at);
  spec.y.fragment.require_vertex(spec.y.attach_at);
  std::set<int> assign(spec.assignment.begin(), spec.assignment.end());
  if (assign.size() != spec.assignment.size()) {
    throw ValidationError("stw: assignment has repeated positions");
  }
  for (int pos : assign) {
    if (pos < 1 || pos > 2 * spec.k) {
      throw ValidationError("stw: position " + std::to_string(pos) +
                            " outside 1.." + std::to_string(2 * spec.k));
    }
  }
  if (hyp == Hypotheses::enforce) {
    require_order_at_least(spec.x.fragment, 3, "fragment X");
    require_order_at_least(spec.y.fragment, 3, "fragment Y");
    if (static_cast<int>(assign.size()) != spec.k) {
      throw PreconditionError(
          "stw: assignment must pick exactly k = " + std::to_string(spec.k) +
          " positions, got " + std::to_string(assign.size()));
    }
    if (balance(spec.x) != balance(spec.y)) {
      throw PreconditionError(
          "stw admissibility violated: p_x - p_s = " +
          std::to_string(balance(spec.x)) + " but p_y - p_t = " +
          std::to_string(balance(spec.y)));
    }
  }
  // attaching to a pendant path endpoint is deliberate: the pendant
  // indicators already account for the cancelled leaves
  Tree out = make_path(2 * spec.k);
  for (int pos = 1; pos <= 2 * spec.k; ++pos) {
    const AttachmentSpec& frag = assign.count(pos) ? spec.x : spec.y;
    out = identify_two(out, pos - 1, frag.fragment, frag.attach_at);
  }
  return out;
}

std::vector<Tree> stw_family_all(int k, const AttachmentSpec& x,
                                 const AttachmentSpec& y, Hypotheses hyp) {
  if (k < 1) {
    throw ValidationError("stw: k must be positive");
  }
  std::vector<Tree> members;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  while (true) {
    members.push_back(stw_member({k, x, y, pick}, hyp));
    // next k-subset of 1..2k in lexicographic order
    int i = k - 1;
    while (i >= 0 && pick[i] == 2 * k - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j2 = i + 1; j2 < k; ++j2) pick[j2] = pick[j2 - 1] + 1;
  }
  return members;
}

TreePair construct_thm7(const Tree& t, int u, int v,
                        const AttachmentSpec& frag, Hypotheses hyp) {
  t.require_vertex(u);
  t.require_vertex(v);
  frag.fragment.require_vertex(frag.attach_at);
  if (hyp == Hypotheses::enforce) {
    if (d_plus(t, u) != d_plus(t, v)) {
      throw PreconditionError(
          "d+ mismatch: d+(" + std::to_string(u) + ") = " +
          std::to_string(d_plus(t, u)) + " but d+(" + std::to_string(v) +
          ") = " + std::to_string(d_plus(t, v)));
    }
    if (t.is_pendant(u) != t.is_pendant(v)) {
      throw PreconditionError("vertices " + std::to_string(u) + " and " +
                              std::to_string(v) +
                              " differ in pendant status");
    }
  }
  return {identify_two(t, u, frag.fragment, frag.attach_at),
          identify_two(t, v, frag.fragment, frag.attach_at)};
}

TreePair construct_thm8(const Tree& t1, int u, const Tree& t2, int v,
                        const AttachmentSpec& frag, Hypotheses hyp) {
  t1.require_vertex(u);
  t2.require_vertex(v);
  frag.fragment.require_vertex(frag.attach_at);
  if (hyp == Hypotheses::enforce) {
    std::int64_t tw1 = terminal_wiener_pairwise(t1);
    std::int64_t tw2 = terminal_wiener_pairwise(t2);
    if (tw1 != tw2) {
      throw PreconditionError("TW mismatch: " + std::to_string(tw1) +
                              " != " + std::to_string(tw2));
    }
    if (is_isomorphic(t1, t2)) {
      throw PreconditionError("isomorphic inputs");
    }
    if (t1.is_pendant(u) || t2.is_pendant(v)) {
      throw PreconditionError("pendant u or v: both gluing vertices must be "
                              "nonpendent");
    }
    if (d_plus(t1, u) != d_plus(t2, v)) {
      throw PreconditionError(
          "d+ mismatch: d+(" + std::to_string(u) + ") = " +
          std::to_string(d_plus(t1, u)) + " but d+(" + std::to_string(v) +
          ") = " + std::to_string(d_plus(t2, v)));
    }
  }
  return {identify_two(t1, u, frag.fragment, frag.attach_at),
          identify_two(t2, v, frag.fragment, frag.attach_at)};
}

}  // namespace equisep

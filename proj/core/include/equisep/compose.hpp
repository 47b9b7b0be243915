#pragma once

#include <cstdint>

#include "equisep/tree.hpp"

namespace equisep {

// Composition operators. Relabeling is fixed so outputs are reproducible
// byte for byte: the first operand keeps its ids and each later operand's
// vertices are appended in increasing id order (the identified vertex maps
// onto its target instead of getting a fresh id).

/// Ta.Tb(u,v): merge v of Tb onto u of Ta. Result has n1+n2-1 vertices.
Tree identify_two(const Tree& ta, int u, const Tree& tb, int v);

/// Ta.Tb.Tc(u,v,w): merge all three chosen vertices into one. Result has
/// n1+n2+n3-2 vertices.
Tree identify_three(const Tree& ta, int u, const Tree& tb, int v,
                    const Tree& tc, int w);

/// Connect Ta and Tb by a new edge from u to v. Result has n1+n2 vertices
/// and the new edge is a bridge.
Tree join_edge(const Tree& ta, int u, const Tree& tb, int v);

// Closed-form terminal Wiener predictions for the three operators. Each
// formula's hypothesis requires the attachment vertices to be nonpendent in
// their operands; violations are refused with PreconditionError rather than
// returning a silently wrong value. d+ is always taken within the operand
// trees, never in the composed tree.

/// TW(Ta.Tb(u,v)) = TW(Ta) + TW(Tb) + l2*d+(u) + l1*d+(v).
std::int64_t predict_tw_identify_two(const Tree& ta, int u, const Tree& tb,
                                     int v);

/// TW(Ta.Tb.Tc(u,v,w)) = sum of operand TWs + (l2+l3)d+(u) + (l1+l3)d+(v)
/// + (l1+l2)d+(w).
std::int64_t predict_tw_identify_three(const Tree& ta, int u, const Tree& tb,
                                       int v, const Tree& tc, int w);

/// TW of the cut-edge join = TW(Ta) + TW(Tb) + l2*d+(u) + l1*d+(v) + l1*l2.
std::int64_t predict_tw_join_edge(const Tree& ta, int u, const Tree& tb,
                                  int v);

}  // namespace equisep

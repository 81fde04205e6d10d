#pragma once

#include <string>
#include <vector>

#include "finrel/groupoid.hpp"

namespace finrel {

// Edge roles of a square.  Top and bottom edges live in V (the arrows of
// side_v); right and left edges live in H (the arrows of side_h).
enum class EdgeSide { top, right, bottom, left };

std::string to_string(EdgeSide side);

// A double groupoid: a carrier of squares with two commuting groupoid
// structures and two side groupoids over a common object carrier M.
//
//   vertical   : squares over V.  src = top edge, tgt = bottom edge;
//                vertical.mul(a, b) stacks b on top of a and is defined when
//                a's top edge equals b's bottom edge.
//   horizontal : squares over H.  src = right edge, tgt = left edge;
//                horizontal.mul(a, b) places b to the right of a and is
//                defined when a's right edge equals b's left edge.
//   side_v     : V over M (the groupoid the top/bottom edges live in).
//   side_h     : H over M (the groupoid the right/left edges live in).
struct DoubleGroupoid {
  Carrier squares;
  Groupoid side_v;
  Groupoid side_h;
  Groupoid vertical;
  Groupoid horizontal;
};

// Every double-groupoid law, one named check each: carrier consistency, the
// four groupoid suites, the four corner identities, the eight edge/unit/
// inverse homomorphism suites, unit exchange, interchange over all 2x2
// blocks, and double-source surjectivity.
CheckReport validate_double(const DoubleGroupoid& d);

// Swap the two structures (and the two side groupoids).
DoubleGroupoid transpose_double(const DoubleGroupoid& d);

// Squares whose top and right edges are both units.
std::vector<Element> core_set(const DoubleGroupoid& d);
// Squares whose bottom and left edges are both units.
std::vector<Element> target_core_set(const DoubleGroupoid& d);

// The double inverse: vertical inverse followed by horizontal inverse.  It
// carries the target core onto the core.
Element double_inverse(const DoubleGroupoid& d, const Element& a);

// The groupoid of core squares over M.  src/tgt are the base points of the
// unit edges; the product composes a 2x2 block of squares along both routes,
// which must agree; inverses are found by a two-sided search.  Disagreement,
// gaps, or a failed validation raise CoreError.
Groupoid core_groupoid_square(const DoubleGroupoid& d);

// Squares whose edge on the given side is a unit.
std::vector<Element> coisotropic_subset(const DoubleGroupoid& d,
                                        EdgeSide side);

// Partition of the coisotropic subset into leaves: the orbits of translating
// a member by unit squares on the facing side.  Raises StructureError with a
// witness when the computed classes fail to partition the subset.
std::vector<std::vector<Element>> leaf_partition(const DoubleGroupoid& d,
                                                 EdgeSide side);

// The relation squares -> core collapsing each leaf onto its distinguished
// core square; for bottom/left sides the representative is carried to the
// core by the double inverse.
Relation reduction_relation(const DoubleGroupoid& d, EdgeSide side);

// Canonical form used for round-trip comparison: V, H, and M are replaced by
// their unit-square embeddings inside the squares carrier.
DoubleGroupoid embedded_double(const DoubleGroupoid& d);

// Structural equality (carriers as sets, maps, product tables) of the two
// double groupoids after embedding both.
bool doubles_equal_upto_units(const DoubleGroupoid& a, const DoubleGroupoid& b);

}  // namespace finrel

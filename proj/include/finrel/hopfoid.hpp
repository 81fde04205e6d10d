#pragma once

#include "finrel/double_groupoid.hpp"

namespace finrel {

// A hopfoid over a total carrier D and a core carrier C (a subset of D):
// eight structure relations, all composed in diagram order.
struct Hopfoid {
  Carrier total;       // D
  Carrier core;        // C, a subcarrier of D
  Relation target;     // t : D -> C, a reduction
  Relation source;     // s : D -> C, a reduction
  Relation unit;       // e : C -> D, a coreduction
  Relation product;    // m : D (x) D -> D
  Relation coproduct;  // delta : D -> D (x) D
  Relation counit;     // epsilon : D -> pt
  Relation star;       // involution D -> D
  Relation antipode;   // i : D -> D, counit-preserving involution
};

// Strict equality: equal carriers (as sets) and all eight relations equal.
bool hopfoids_equal(const Hopfoid& a, const Hopfoid& b);

// The hopfoid of a double groupoid: C is the core; e translates a core
// square by every horizontal-unit square attachable above it; t and s are
// the right/left reduction relations; m is the horizontal composition;
// delta is the transposed vertical composition; epsilon cuts out the
// vertical-unit image; star is the vertical inverse; the antipode composes
// both inverses.  The input must pass validate_double and the result must
// pass check_hopfoid, else ValidationError.
Hopfoid build_hopfoid(const DoubleGroupoid& d);

// Every hopfoid law as a named check: the comonoid suite on the transposed
// monoid, reduction/coreduction predicates, the antipode identities, the
// unit/counit retractions, and the seven diagram families, each as an exact
// relation equality.  Never throws; failures are entries.
CheckReport check_hopfoid(const Hopfoid& h);

// The monoid structure induced on C: product (e (x) e) ; m ; e^t, unit from
// the horizontal-unit subset, star e ; star ; i ; e^t (which must extract to
// an involutive bijection on C, else StructureError).  The input must pass
// check_hopfoid, else ValidationError.
StarMonoid core_monoid(const Hopfoid& h);

// The double groupoid of a hopfoid: the vertical structure is extracted
// from the transposed comonoid, the horizontal structure from (D, m) with
// unit subset the image of counit^t ; t ; e and involution star-then-
// antipode, and the side groupoids by restriction to the two unit subsets.
// Extraction failures raise ReverseError with a stage tag; the input must
// pass check_hopfoid and the result validate_double, else ValidationError.
DoubleGroupoid build_double(const Hopfoid& h);

// Round trips: build back and forth and compare structure by structure
// (the double groupoid in its unit-embedded form) or relation by relation.
CheckReport roundtrip_double(const DoubleGroupoid& d);
CheckReport roundtrip_hopfoid(const Hopfoid& h);

// Hand-coded hopfoid of the pair double groupoid of a one-object group,
// written directly from the closed formulas: t(g,h) = g h^-1, s(g,h) =
// h^-1 g, e embeds the base, m is componentwise, delta inserts a middle
// element, epsilon cuts the diagonal, star swaps, i(g,h) = (h^-1, g^-1).
// Raises StructureError when g has more than one object.
Hopfoid inertia_hopfoid_oracle(const Groupoid& g);

}  // namespace finrel

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finrel/check.hpp"
#include "finrel/relation.hpp"

namespace finrel {

using ElementMap = std::map<Element, Element>;
using PartialMul = std::map<ElementPair, Element>;

// A finite groupoid with explicit structure maps.  `mul` is a partial map
// defined exactly on composable pairs; composition follows the function
// convention, so mul(g, h) requires src(g) == tgt(h) and behaves like
// "g after h".
struct Groupoid {
  Carrier objects;
  Carrier arrows;
  ElementMap src;   // arrows -> objects
  ElementMap tgt;   // arrows -> objects
  ElementMap unit;  // objects -> arrows
  ElementMap inv;   // arrows -> arrows
  PartialMul mul;   // composable pairs -> arrows
};

// Runs every groupoid law and reports each one by name with a witness on
// failure.  Never throws on invalid structure; missing map entries are
// reported as failures.
CheckReport validate_groupoid(const Groupoid& g);

// Lookup helpers.  map_at raises StructureError when the key is missing;
// lookup returns nullptr instead.
const Element* lookup(const ElementMap& m, const Element& x);
const Element& map_at(const ElementMap& m, const Element& x,
                      const std::string& what);
std::optional<Element> mul_at(const Groupoid& g, const Element& a,
                              const Element& b);

// The multiplication as a relation arrows (x) arrows -> arrows.
Relation mul_graph(const Groupoid& g);

// Sorted image of the unit map.
std::vector<Element> unit_image(const Groupoid& g);

// A monoid-like presentation of a groupoid inside the relation category: a
// carrier with a partial product, a unit subset and an involution.
struct StarMonoid {
  Carrier carrier;
  Relation product;  // S (x) S -> S
  Relation unit;     // pt -> S
  ElementMap star;   // S -> S, involutive
};

// The five laws of the presentation, each as a named check: associativity,
// the two unit laws, compatibility of the involution with the product, and
// strong positivity.
CheckReport check_star_monoid(const StarMonoid& sm);

// Presentation of a valid groupoid: product = multiplication graph, unit =
// unit-arrow subset, star = inverse.  Raises ValidationError when the input
// fails validate_groupoid.
StarMonoid to_star_monoid(const Groupoid& g);

// Reconstructs the groupoid from its presentation.  Source and target of an
// arrow are recovered as the unique unit elements absorbed on each side;
// failures raise ExtractionError.  The result must validate, otherwise
// ValidationError.
Groupoid from_star_monoid(const StarMonoid& sm);

// Restricts a groupoid to a subset of its arrows.  The subset must be closed
// under inverses, units of endpoints, and all defined products; violations
// raise RestrictionError naming the offender.
Groupoid restrict_groupoid(const Groupoid& g,
                           const std::vector<Element>& arrow_subset);

// Canonical form with objects replaced by their unit arrows, so groupoids
// whose object sets differ only by that identification compare equal.
Groupoid embed_objects(const Groupoid& g);

// Strict structural equality: equal carriers (as sets) and equal maps.
bool groupoids_equal(const Groupoid& a, const Groupoid& b);

// Equality after embedding objects on both sides.
bool groupoids_equal_upto_units(const Groupoid& a, const Groupoid& b);

// Push a groupoid forward along a bijective relabeling of arrows and
// objects.  Raises StructureError when either map fails to be a bijection.
Groupoid transport_groupoid(const Groupoid& g, const ElementMap& arrow_map,
                            const ElementMap& object_map);

// True when `arrow_map` is an isomorphism from `a` onto `b`; the object map
// is derived from images of unit arrows.
bool groupoid_isomorphic_via(const Groupoid& a, const Groupoid& b,
                             const ElementMap& arrow_map);

}  // namespace finrel

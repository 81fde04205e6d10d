#pragma once

#include <map>
#include <utility>
#include <vector>

#include "finrel/carrier.hpp"

namespace finrel {

using ElementPair = std::pair<Element, Element>;

// A relation between two finite carriers: an immutable set of (from, to)
// pairs kept sorted.  Composition is written in diagram order throughout the
// library: compose(r, s) applies r first, then s.
class Relation {
 public:
  // Validates that every pair lies in dom x cod.
  static Relation make(Carrier dom, Carrier cod, std::vector<ElementPair> pairs);

  const Carrier& dom() const;
  const Carrier& cod() const;
  const std::vector<ElementPair>& pairs() const;  // sorted, distinct
  std::size_t size() const;

  bool contains(const Element& from, const Element& to) const;
  std::vector<Element> image_of(const Element& from) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
  explicit Relation(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  // Trusted constructor for results that are valid by construction.
  static Relation trusted(Carrier dom, Carrier cod,
                          std::vector<ElementPair> pairs);
  friend Relation compose(const Relation& r, const Relation& s);
  friend Relation transpose(const Relation& r);
  friend Relation tensor(const Relation& r, const Relation& s);
  friend Relation identity(const Carrier& c);
  friend Relation swap_relation(const Carrier& a, const Carrier& b);
  friend Relation diagonal_relation(const Carrier& c);
  friend Relation permute_cod_blocks(const Relation& r,
                                     const std::vector<Carrier>& blocks,
                                     const std::vector<std::size_t>& perm);
  friend Relation compose_tensor_cod(const Relation& r,
                                     const std::vector<Relation>& factors);
};

Relation identity(const Carrier& c);

// Diagram-order composition: r followed by s.  Raises CompositionError when
// r's codomain and s's domain differ.
Relation compose(const Relation& r, const Relation& s);

Relation transpose(const Relation& r);

// Pairwise tensor: (a,b) in r and (c,d) in s give (a++c, b++d).
Relation tensor(const Relation& r, const Relation& s);

// The braiding A (x) B -> B (x) A.
Relation swap_relation(const Carrier& a, const Carrier& b);

// pt -> C (x) C, sending the empty tuple to every doubled element.
Relation diagonal_relation(const Carrier& c);

// A subset S of C presented as a relation pt -> C.
Relation subset_as_relation(const Carrier& c,
                            const std::vector<Element>& subset);

// The graph of a total map dom -> cod.
Relation graph_relation(const Carrier& dom, const Carrier& cod,
                        const std::map<Element, Element>& f);

struct RelationClass {
  bool surjective = false;    // every codomain element is hit
  bool injective = false;     // distinct domain elements never share a target
  bool cosurjective = false;  // every domain element is related to something
  bool coinjective = false;   // each domain element has at most one target
};

RelationClass classify(const Relation& r);

// Exact equality: same domain set, same codomain set, same pair set.
bool relations_equal(const Relation& a, const Relation& b);

// r is a reduction when transpose(r) ; r is the identity on cod(r), and a
// coreduction when its transpose is a reduction.
bool is_reduction(const Relation& r);
bool is_coreduction(const Relation& r);

// Reorder the codomain's blocks: block i of the result is block perm[i] of
// the input.  Codomain elements are split along `blocks`, whose tensor must
// equal the codomain; splits must be unambiguous.  The two-argument form
// splits along the codomain's own factor list.
Relation permute_cod_blocks(const Relation& r,
                            const std::vector<Carrier>& blocks,
                            const std::vector<std::size_t>& perm);
Relation permute_cod_blocks(const Relation& r,
                            const std::vector<std::size_t>& perm);

// compose(r, tensor(f1, ..., fk)) evaluated blockwise, so the tensor of the
// factors is never materialized.
Relation compose_tensor_cod(const Relation& r,
                            const std::vector<Relation>& factors);

}  // namespace finrel

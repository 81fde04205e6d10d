#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "finrel/errors.hpp"

namespace finrel {

// An element of a finite carrier: an ordered tuple of atoms.  Ordinary
// elements are single-atom tuples; the tensor unit's only element is the
// empty tuple.  Tensoring concatenates tuples, so iterated products are flat
// by construction and need no separate normalization pass.
using Element = std::vector<std::string>;

Element concat(const Element& a, const Element& b);

// Display forms: atoms for singletons, "(a,b)" for tuples, "()" for the
// empty tuple.
std::string show(const Element& e);
std::string show_pair(const Element& a, const Element& b);

// A named finite set of elements.  Explicit carriers store their elements;
// product carriers store a factor list and enumerate elements only on
// demand, so membership tests and structural comparisons on large products
// never materialize them.  Names are display-only: equality is set equality.
class Carrier {
 public:
  Carrier();  // the point: one empty-tuple element

  // Explicit carrier; elements are sorted and must be pairwise distinct.
  static Carrier make(std::string name, std::vector<Element> elements);
  static Carrier point();

  const std::string& name() const;
  bool is_product() const;
  bool is_point() const;

  // Factors as tensor operands: empty for the point, the factor list for
  // products, {*this} otherwise.
  std::vector<Carrier> factor_list() const;

  std::size_t size() const;                      // enumerates products
  const std::vector<Element>& elements() const;  // sorted, distinct
  bool contains(const Element& e) const;         // products: no enumeration

  friend bool operator==(const Carrier& a, const Carrier& b);
  friend bool operator!=(const Carrier& a, const Carrier& b) {
    return !(a == b);
  }

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
  explicit Carrier(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  friend Carrier tensor_carrier(const Carrier& a, const Carrier& b);
};

// Product carrier A (x) B.  Point factors are dropped and nested factor
// lists are flattened, so the tensor is strictly associative and strictly
// unital on carriers.
Carrier tensor_carrier(const Carrier& a, const Carrier& b);

// Explicit carrier holding the given subset of `parent`.  Foreign elements
// raise MembershipError, duplicates raise StructureError.
Carrier subcarrier(const Carrier& parent, std::vector<Element> subset,
                   std::string name);

// Split a tuple into consecutive blocks, one per factor.  The split must
// exist and be unique; anything else raises StructureError.
std::vector<Element> split_blocks(const Element& e,
                                  const std::vector<Carrier>& factors);

}  // namespace finrel

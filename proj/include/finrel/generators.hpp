#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "finrel/double_groupoid.hpp"

namespace finrel {

// Builds a one-object groupoid from a multiplication table.  `table[i][j]`
// is the index of members[i] * members[j].  Every group axiom is verified
// first; a non-group table raises TableError naming the failing axiom.
Groupoid group_from_table(const std::string& name,
                          const std::vector<std::string>& members,
                          const std::vector<std::vector<int>>& table);

// The cyclic group of order n, elements "0" .. "n-1", carrier "Z<n>".
Groupoid cyclic_group(int n);

// The symmetric group on three letters, elements written in one-line
// notation ("012" is the identity), composed as functions.
Groupoid symmetric_group_s3();

// The groupoid with the given objects and unit arrows only.  Arrows reuse
// the object carrier.
Groupoid trivial_groupoid_on(const Carrier& objects);
Groupoid trivial_groupoid(int n);  // objects "1" .. "n"

// The pair groupoid: one arrow (x, y) from y to x for every ordered pair
// of objects.
Groupoid pair_groupoid_on(const Carrier& objects);
Groupoid pair_groupoid(int n);  // objects "1" .. "n"

// Componentwise product of two groupoids on the tensor carriers.
Groupoid product_groupoid(const Groupoid& a, const Groupoid& b);

// Disjoint union; atoms are prefixed with "a:" and "b:" so the pieces stay
// distinguishable.  `name` labels the arrow carrier.
Groupoid disjoint_union(const Groupoid& a, const Groupoid& b,
                        const std::string& name);

// Named small groupoids spanning one and several objects, abelian and
// noncommutative groups, pair groupoids, and disjoint unions.
std::vector<Groupoid> groupoid_corpus();

// The double groupoid whose squares are the arrows of g, with g on the
// left, right, and horizontal structures and trivial groupoids across the
// top and bottom.
DoubleGroupoid trivial_double(const Groupoid& g);

// The double groupoid with squares G x G: pair groupoids across the top
// and bottom, g on the right, and the product groupoid g x g on the left.
DoubleGroupoid pair_double(const Groupoid& g);

// Tags selecting corpus members: the double construction applied (trivial
// or pair) and the class of base groupoid (trivial, pair, group, or
// disjoint union).  A member is kept when either of its tags is selected.
enum class Family { trivial, pair, group, disjoint_union };

struct CorpusSpec {
  std::size_t max_squares = 36;  // largest admitted square count
  unsigned seed = 0;             // reserved for randomized members
  std::set<Family> families = {Family::trivial, Family::pair, Family::group,
                               Family::disjoint_union};
};

struct CorpusItem {
  std::string name;
  DoubleGroupoid d;
};

// Every double groupoid obtained by applying the selected constructions to
// the groupoid corpus, capped at `max_squares` squares per instance.
// Deterministic for a fixed CorpusSpec.
std::vector<CorpusItem> small_corpus(const CorpusSpec& spec = {});

// The base groupoids behind the corpus, addressable by name ("Z2", "S3",
// "pair3", ...).  Unknown names raise StructureError listing the known ones.
std::vector<std::string> base_groupoid_names();
Groupoid base_groupoid(const std::string& name);

// A relation sampled by keeping each pair independently with the given
// density.
Relation random_relation(std::mt19937_64& rng, const Carrier& dom,
                         const Carrier& cod, double density);

}  // namespace finrel

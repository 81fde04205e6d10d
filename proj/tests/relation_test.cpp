#include <random>
#include <vector>

#include "doctest.h"
#include "finrel/generators.hpp"
#include "finrel/relation.hpp"

using namespace finrel;

namespace {

Element el(const std::string& a) { return Element{a}; }

Carrier carrier(const std::string& name, const std::vector<std::string>& atoms) {
  std::vector<Element> elems;
  for (const auto& a : atoms) elems.push_back(el(a));
  return Carrier::make(name, std::move(elems));
}

}  // namespace

TEST_CASE("identity is neutral for composition") {
  Carrier a = carrier("A", {"1", "2", "3"});
  Carrier b = carrier("B", {"x", "y"});
  Relation r = Relation::make(a, b, {{el("1"), el("x")},
                                     {el("2"), el("x")},
                                     {el("3"), el("y")}});
  CHECK(relations_equal(compose(r, identity(b)), r));
  CHECK(relations_equal(compose(identity(a), r), r));
}

TEST_CASE("worked composite collapses through a shared middle element") {
  Carrier n = carrier("N", {"1", "2"});
  Carrier m = carrier("M", {"a"});
  Carrier x = carrier("X", {"x"});
  Relation r = Relation::make(n, m, {{el("1"), el("a")}, {el("2"), el("a")}});
  Relation s = Relation::make(m, x, {{el("a"), el("x")}});
  Relation expected =
      Relation::make(n, x, {{el("1"), el("x")}, {el("2"), el("x")}});
  CHECK(relations_equal(compose(r, s), expected));
}

TEST_CASE("composing across mismatched carriers is rejected") {
  Carrier a = carrier("A", {"1"});
  Carrier b = carrier("B", {"x"});
  Carrier c = carrier("C", {"q"});
  Relation r = Relation::make(a, b, {{el("1"), el("x")}});
  Relation s = Relation::make(c, a, {{el("q"), el("1")}});
  CHECK_THROWS_AS((void)compose(r, s), CompositionError);
}

TEST_CASE("transpose flips pairs and carriers") {
  Carrier a = carrier("A", {"1"});
  Carrier b = carrier("B", {"a"});
  Relation r = Relation::make(a, b, {{el("1"), el("a")}});
  Relation t = transpose(r);
  CHECK(t.dom() == b);
  CHECK(t.cod() == a);
  CHECK(t.contains(el("a"), el("1")));
  CHECK(t.size() == 1);
}

TEST_CASE("transpose is an involution on random relations") {
  std::mt19937_64 rng(20260825);
  Carrier a = carrier("A", {"1", "2", "3", "4"});
  Carrier b = carrier("B", {"p", "q", "r"});
  for (int i = 0; i < 100; ++i) {
    Relation r = random_relation(rng, a, b, 0.4);
    CHECK(relations_equal(transpose(transpose(r)), r));
  }
}

TEST_CASE("transpose reverses composition") {
  std::mt19937_64 rng(7);
  Carrier a = carrier("A", {"1", "2", "3"});
  Carrier b = carrier("B", {"p", "q", "r"});
  Carrier c = carrier("C", {"u", "v"});
  for (int i = 0; i < 50; ++i) {
    Relation r = random_relation(rng, a, b, 0.45);
    Relation s = random_relation(rng, b, c, 0.45);
    CHECK(relations_equal(transpose(compose(r, s)),
                          compose(transpose(s), transpose(r))));
  }
}

TEST_CASE("composition is associative on random relations") {
  std::mt19937_64 rng(11);
  Carrier a = carrier("A", {"1", "2", "3"});
  Carrier b = carrier("B", {"p", "q"});
  Carrier c = carrier("C", {"u", "v", "w"});
  Carrier d = carrier("D", {"k"});
  for (int i = 0; i < 50; ++i) {
    Relation r = random_relation(rng, a, b, 0.5);
    Relation s = random_relation(rng, b, c, 0.5);
    Relation t = random_relation(rng, c, d, 0.5);
    CHECK(relations_equal(compose(compose(r, s), t), compose(r, compose(s, t))));
  }
}

TEST_CASE("tensor pairs up elements componentwise") {
  Carrier a = carrier("A", {"1"});
  Carrier b = carrier("B", {"a"});
  Carrier c = carrier("C", {"2"});
  Carrier d = carrier("D", {"b"});
  Relation r = Relation::make(a, b, {{el("1"), el("a")}});
  Relation s = Relation::make(c, d, {{el("2"), el("b")}});
  Relation rs = tensor(r, s);
  CHECK(rs.size() == 1);
  CHECK(rs.contains(Element{"1", "2"}, Element{"a", "b"}));
  CHECK(rs.dom() == tensor_carrier(a, c));
  CHECK(rs.cod() == tensor_carrier(b, d));
}

TEST_CASE("tensor of identities is the identity of the product") {
  Carrier a = carrier("A", {"1", "2"});
  Carrier b = carrier("B", {"x", "y", "z"});
  CHECK(relations_equal(tensor(identity(a), identity(b)),
                        identity(tensor_carrier(a, b))));
}

TEST_CASE("tensoring with the point identity changes nothing") {
  Carrier a = carrier("A", {"1", "2"});
  Carrier b = carrier("B", {"x"});
  Relation r = Relation::make(a, b, {{el("1"), el("x")}});
  CHECK(relations_equal(tensor(r, identity(Carrier::point())), r));
  CHECK(relations_equal(tensor(identity(Carrier::point()), r), r));
}

TEST_CASE("tensor is functorial on random relations") {
  std::mt19937_64 rng(13);
  Carrier a = carrier("A", {"1", "2"});
  Carrier b = carrier("B", {"p", "q"});
  Carrier c = carrier("C", {"u", "v"});
  Carrier a2 = carrier("A2", {"5", "6"});
  Carrier b2 = carrier("B2", {"s", "t"});
  Carrier c2 = carrier("C2", {"m", "n"});
  for (int i = 0; i < 30; ++i) {
    Relation r = random_relation(rng, a, b, 0.5);
    Relation s = random_relation(rng, b, c, 0.5);
    Relation r2 = random_relation(rng, a2, b2, 0.5);
    Relation s2 = random_relation(rng, b2, c2, 0.5);
    CHECK(relations_equal(tensor(compose(r, s), compose(r2, s2)),
                          compose(tensor(r, r2), tensor(s, s2))));
  }
}

TEST_CASE("classification of a two-to-one relation") {
  Carrier n = carrier("N", {"1", "2"});
  Carrier m = carrier("M", {"a"});
  Relation r = Relation::make(n, m, {{el("1"), el("a")}, {el("2"), el("a")}});
  RelationClass c = classify(r);
  CHECK(c.surjective);
  CHECK(c.coinjective);
  CHECK(c.cosurjective);
  CHECK_FALSE(c.injective);
}

TEST_CASE("classification of identities and empty relations") {
  Carrier a = carrier("A", {"1", "2"});
  RelationClass idc = classify(identity(a));
  CHECK(idc.surjective);
  CHECK(idc.injective);
  CHECK(idc.cosurjective);
  CHECK(idc.coinjective);

  Relation empty = Relation::make(a, a, {});
  RelationClass ec = classify(empty);
  CHECK_FALSE(ec.surjective);
  CHECK_FALSE(ec.cosurjective);
  CHECK(ec.injective);
  CHECK(ec.coinjective);
}

TEST_CASE("projections off a product are reductions") {
  Carrier a = carrier("A", {"a1", "a2"});
  Carrier b = carrier("B", {"b1", "b2", "b3"});
  std::vector<ElementPair> pairs;
  for (const Element& x : a.elements()) {
    for (const Element& y : b.elements()) {
      pairs.emplace_back(concat(x, y), x);
    }
  }
  Relation proj = Relation::make(tensor_carrier(a, b), a, pairs);
  CHECK(is_reduction(proj));
  CHECK(is_coreduction(transpose(proj)));
  RelationClass c = classify(proj);
  CHECK(c.surjective);
  CHECK(c.coinjective);
}

TEST_CASE("a reduction is surjective and coinjective") {
  Carrier a = carrier("A", {"1", "2", "3"});
  CHECK(is_reduction(identity(a)));
  // A non-reduction for contrast: a relation collapsing two codomain points.
  Carrier b = carrier("B", {"x", "y"});
  Relation r = Relation::make(a, b, {{el("1"), el("x")},
                                     {el("1"), el("y")},
                                     {el("2"), el("x")}});
  CHECK_FALSE(is_reduction(r));
}

TEST_CASE("subsets as relations from the point") {
  Carrier c = carrier("C", {"u", "v", "w"});
  Relation none = subset_as_relation(c, {});
  CHECK(none.size() == 0);

  Relation full = subset_as_relation(c, c.elements());
  RelationClass fc = classify(full);
  CHECK(fc.cosurjective);
  CHECK(fc.surjective);

  CHECK_THROWS_AS((void)subset_as_relation(c, {el("zz")}), MembershipError);
}

TEST_CASE("diagonal relation doubles every element") {
  Carrier c = carrier("C", {"u", "v"});
  Relation d = diagonal_relation(c);
  CHECK(d.size() == 2);
  CHECK(d.contains(Element{}, Element{"u", "u"}));
  CHECK(d.contains(Element{}, Element{"v", "v"}));
  CHECK(d.dom() == Carrier::point());
}

TEST_CASE("relations with equal pairs but different carriers differ") {
  Carrier a = carrier("A", {"1"});
  Carrier b1 = carrier("B1", {"a"});
  Carrier b2 = carrier("B2", {"a", "b"});
  Relation r1 = Relation::make(a, b1, {{el("1"), el("a")}});
  Relation r2 = Relation::make(a, b2, {{el("1"), el("a")}});
  CHECK_FALSE(relations_equal(r1, r2));
  CHECK(relations_equal(r1, r1));
}

TEST_CASE("block permutation matches composing with the braiding") {
  std::mt19937_64 rng(17);
  Carrier a = carrier("A", {"1", "2"});
  Carrier b = carrier("B", {"p", "q"});
  Carrier c = carrier("C", {"u", "v"});
  Carrier d = carrier("D", {"s", "t"});
  for (int i = 0; i < 30; ++i) {
    Relation f = random_relation(rng, a, b, 0.6);
    Relation g = random_relation(rng, c, d, 0.6);
    Relation both = tensor(f, g);
    CHECK(relations_equal(permute_cod_blocks(both, {1, 0}),
                          compose(both, swap_relation(b, d))));
  }
}

TEST_CASE("blockwise composition agrees with composing a tensor") {
  std::mt19937_64 rng(19);
  Carrier a = carrier("A", {"1", "2"});
  Carrier b = carrier("B", {"p", "q"});
  Carrier c = carrier("C", {"u", "v"});
  Carrier b2 = carrier("B2", {"s", "t"});
  Carrier c2 = carrier("C2", {"m", "n"});
  for (int i = 0; i < 30; ++i) {
    Relation r = random_relation(rng, a, tensor_carrier(b, b2), 0.4);
    Relation f = random_relation(rng, b, c, 0.5);
    Relation g = random_relation(rng, b2, c2, 0.5);
    CHECK(relations_equal(compose_tensor_cod(r, {f, g}),
                          compose(r, tensor(f, g))));
  }
}

TEST_CASE("ambiguous tuple splits are refused") {
  Carrier mixed =
      Carrier::make("Mixed", {Element{"x"}, Element{"x", "x"}});
  CHECK_THROWS_AS(
      (void)split_blocks(Element{"x", "x", "x"}, {mixed, mixed}),
      StructureError);
}

TEST_CASE("empty carriers behave") {
  Carrier e = Carrier::make("E", {});
  CHECK(identity(e).size() == 0);
  CHECK_FALSE(e.contains(el("1")));
  Carrier a = carrier("A", {"1"});
  Relation r = Relation::make(e, a, {});
  CHECK(relations_equal(compose(r, identity(a)), r));
  CHECK(tensor_carrier(e, a).size() == 0);
}

TEST_CASE("carrier equality is set equality with display-only names") {
  Carrier a1 = carrier("A", {"1", "2"});
  Carrier a2 = carrier("Other", {"2", "1"});
  CHECK(a1 == a2);
  Carrier b = carrier("B", {"1", "2", "3"});
  CHECK(a1 != b);
  // A product compares equal to its explicit enumeration.
  Carrier prod = tensor_carrier(a1, b);
  std::vector<Element> all;
  for (const Element& x : a1.elements()) {
    for (const Element& y : b.elements()) all.push_back(concat(x, y));
  }
  CHECK(prod == Carrier::make("flat", all));
}

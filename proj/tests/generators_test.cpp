#include <algorithm>
#include <random>

#include "doctest.h"
#include "finrel/generators.hpp"

using namespace finrel;

TEST_CASE("table validation names the failing axiom") {
  CHECK_THROWS_WITH_AS(
      (void)group_from_table("bad", {"e", "x"}, {{0, 1}, {1, 1}}),
      "the table has no inverse for x", TableError);
  CHECK_THROWS_WITH_AS(
      (void)group_from_table("bad", {"x", "y"}, {{1, 0}, {0, 0}}),
      "the table has no identity element", TableError);
  // The left-rotation table on three members has an identity column but
  // breaks associativity.
  CHECK_THROWS_AS((void)group_from_table(
                      "bad", {"e", "x", "y"},
                      {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}),
                  TableError);
  CHECK_THROWS_AS(
      (void)group_from_table("bad", {"e", "x"}, {{0, 1}, {1, 7}}),
      TableError);
  CHECK_THROWS_AS((void)group_from_table("bad", {"e", "e"}, {{0, 1}, {1, 0}}),
                  TableError);
}

TEST_CASE("the S3 generator is a noncommutative group of order six") {
  Groupoid s3 = symmetric_group_s3();
  CHECK(s3.arrows.size() == 6);
  CHECK(s3.objects.size() == 1);
  Element a{"120"}, b{"021"};
  auto ab = mul_at(s3, a, b);
  auto ba = mul_at(s3, b, a);
  REQUIRE(ab.has_value());
  REQUIRE(ba.has_value());
  CHECK(*ab != *ba);
}

TEST_CASE("products of groupoids are componentwise") {
  Groupoid p = product_groupoid(cyclic_group(2), pair_groupoid(2));
  CHECK(validate_groupoid(p).all_passed());
  CHECK(p.arrows.size() == 8);
  CHECK(p.objects.size() == 2);
  CHECK(map_at(p.src, Element{"1", "1", "2"}, "src") == Element{"*", "2"});
  auto m = mul_at(p, Element{"1", "1", "2"}, Element{"1", "2", "1"});
  REQUIRE(m.has_value());
  CHECK(*m == Element{"0", "1", "1"});
}

TEST_CASE("disjoint unions keep their pieces apart by atom prefixes") {
  Groupoid u = disjoint_union(cyclic_group(2), pair_groupoid(2), "Z2+pair2");
  CHECK(validate_groupoid(u).all_passed());
  CHECK(u.arrows.contains(Element{"a:0"}));
  CHECK(u.arrows.contains(Element{"b:1", "b:2"}));
  CHECK(u.objects.size() == 3);
  CHECK_FALSE(
      mul_at(u, Element{"a:0"}, Element{"b:1", "b:1"}).has_value());
}

TEST_CASE("the groupoid corpus spans the required shapes") {
  std::vector<Groupoid> corpus = groupoid_corpus();
  CHECK(corpus.size() == 14);
  bool one_object = false, several_objects = false, noncommutative = false;
  for (const Groupoid& g : corpus) {
    CHECK(validate_groupoid(g).all_passed());
    one_object = one_object || g.objects.size() == 1;
    several_objects = several_objects || g.objects.size() > 1;
    for (const auto& [k, v] : g.mul) {
      auto other = mul_at(g, k.second, k.first);
      if (other && *other != v) noncommutative = true;
    }
  }
  CHECK(one_object);
  CHECK(several_objects);
  CHECK(noncommutative);
}

TEST_CASE("double constructions land on the advertised carriers") {
  Groupoid g = cyclic_group(3);
  DoubleGroupoid t = trivial_double(g);
  CHECK(t.squares == g.arrows);
  CHECK(groupoids_equal(t.horizontal, g));
  CHECK(groupoids_equal(t.side_v, g));

  DoubleGroupoid p = pair_double(g);
  CHECK(p.squares.size() == 9);
  CHECK(groupoids_equal(p.side_v, g));
  CHECK(p.side_h.arrows.size() == 1);  // M x M over a point
}

TEST_CASE("the default corpus applies both constructions under the cap") {
  std::vector<CorpusItem> corpus = small_corpus();
  CHECK(corpus.size() == 26);
  bool trivial_s3 = false, pair_s3 = false, pair_pair4 = false;
  for (const CorpusItem& item : corpus) {
    CHECK(item.d.squares.size() <= 36);
    trivial_s3 = trivial_s3 || item.name == "trivial(S3)";
    pair_s3 = pair_s3 || item.name == "pair(S3)";
    pair_pair4 = pair_pair4 || item.name == "pair(pair4)";
  }
  CHECK(trivial_s3);
  CHECK(pair_s3);
  CHECK_FALSE(pair_pair4);  // 256 squares, over the cap
}

TEST_CASE("selecting only the two double families keeps every base") {
  CorpusSpec spec;
  spec.families = {Family::trivial, Family::pair};
  std::vector<CorpusItem> corpus = small_corpus(spec);
  bool pair_s3 = false;
  for (const CorpusItem& item : corpus) {
    if (item.name == "pair(S3)") {
      pair_s3 = true;
      CHECK(item.d.squares.size() == 36);
    }
  }
  CHECK(pair_s3);
}

TEST_CASE("family selection narrows the corpus") {
  CorpusSpec spec;
  spec.families = {Family::group};
  std::vector<CorpusItem> groups = small_corpus(spec);
  CHECK(groups.size() == 12);
  for (const CorpusItem& item : groups) {
    bool group_base = item.name.find("(Z") != std::string::npos ||
                      item.name.find("(S3") != std::string::npos;
    bool union_base = item.name.find("+") != std::string::npos;
    CHECK(group_base);
    CHECK_FALSE(union_base);
  }
  spec.families = {Family::trivial};
  bool any_pair_of_group = false;
  for (const CorpusItem& item : small_corpus(spec)) {
    if (item.name.rfind("pair(Z", 0) == 0) any_pair_of_group = true;
  }
  CHECK_FALSE(any_pair_of_group);
}

TEST_CASE("the cap prunes large instances") {
  CorpusSpec spec;
  spec.max_squares = 9;
  for (const CorpusItem& item : small_corpus(spec)) {
    CHECK(item.d.squares.size() <= 9);
  }
}

TEST_CASE("corpus generation is deterministic") {
  std::vector<CorpusItem> a = small_corpus();
  std::vector<CorpusItem> b = small_corpus();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(doubles_equal_upto_units(a[i].d, b[i].d));
  }
}

TEST_CASE("random relations respect the density extremes") {
  std::mt19937_64 rng(42);
  Carrier a = Carrier::make("A", {Element{"1"}, Element{"2"}});
  Carrier b = Carrier::make("B", {Element{"p"}, Element{"q"}});
  CHECK(random_relation(rng, a, b, 0.0).size() == 0);
  CHECK(random_relation(rng, a, b, 1.0).size() == 4);
}

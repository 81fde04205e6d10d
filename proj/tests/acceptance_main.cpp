// Acceptance gate: eight criteria, one [PASS]/[FAIL] line each, with
// per-criterion wall-clock budgets enforced where stated.  The exit code is
// the number of failed criteria.  All comparisons are exact equalities of
// finite structures; there are no tolerances anywhere.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "finrel/generators.hpp"
#include "finrel/hopfoid.hpp"

using namespace finrel;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> details;

  void fail(std::string detail) {
    passed = false;
    details.push_back(std::move(detail));
  }
  void require(bool ok, const std::string& detail) {
    if (!ok) fail(detail);
  }
};

std::string side_tag(const std::string& item, EdgeSide side) {
  return item + " [" + to_string(side) + "]";
}

// 1. Every corpus groupoid survives the star-monoid presentation: the five
// presentation laws hold and the reconstruction returns the groupoid.
Outcome star_monoid_round_trip() {
  Outcome out;
  std::vector<Groupoid> corpus = groupoid_corpus();
  out.require(corpus.size() >= 12, "fewer than 12 corpus groupoids");
  for (const Groupoid& g : corpus) {
    try {
      StarMonoid sm = to_star_monoid(g);
      CheckReport laws = check_star_monoid(sm);
      if (!laws.all_passed()) {
        out.fail(g.arrows.name() + ": " + laws.failed_names());
      }
      Groupoid back = from_star_monoid(sm);
      out.require(groupoids_equal_upto_units(back, g),
                  g.arrows.name() + ": reconstruction differs");
    } catch (const Error& e) {
      out.fail(g.arrows.name() + ": " + e.what());
    }
  }
  return out;
}

// 2. Both double-groupoid constructions validate on the named bases,
// including the 256-square pair double of the pair groupoid on 4 points.
Outcome double_groupoid_validity() {
  Outcome out;
  std::vector<std::pair<std::string, Groupoid>> bases;
  bases.emplace_back("Z2", cyclic_group(2));
  bases.emplace_back("Z3", cyclic_group(3));
  bases.emplace_back("Z4", cyclic_group(4));
  bases.emplace_back("S3", symmetric_group_s3());
  bases.emplace_back("pair2", pair_groupoid(2));
  bases.emplace_back("pair3", pair_groupoid(3));
  bases.emplace_back("pair4", pair_groupoid(4));
  for (const auto& [name, g] : bases) {
    for (bool pair_family : {false, true}) {
      std::string label = (pair_family ? "pair(" : "trivial(") + name + ")";
      try {
        DoubleGroupoid d = pair_family ? pair_double(g) : trivial_double(g);
        CheckReport rep = validate_double(d);
        if (!rep.all_passed()) {
          out.fail(label + ": " + rep.failed_names());
        }
      } catch (const Error& e) {
        out.fail(label + ": " + e.what());
      }
    }
  }
  return out;
}

// 3. The two core routes agree corpus-wide, and the cores of the two
// families are what they should be: trivial on the base objects, and the
// base groupoid itself.
Outcome core_agreement(const std::vector<CorpusItem>& corpus) {
  Outcome out;
  for (const CorpusItem& item : corpus) {
    try {
      Groupoid square_route = core_groupoid_square(item.d);
      Groupoid monoid_route =
          from_star_monoid(core_monoid(build_hopfoid(item.d)));
      out.require(groupoids_equal_upto_units(square_route, monoid_route),
                  item.name + ": the two core routes disagree");
    } catch (const Error& e) {
      out.fail(item.name + ": " + e.what());
    }
  }
  for (const std::string& name : base_groupoid_names()) {
    Groupoid g = base_groupoid(name);
    try {
      Groupoid core = core_groupoid_square(trivial_double(g));
      out.require(
          groupoid_isomorphic_via(trivial_groupoid_on(g.objects), core,
                                  g.unit),
          "trivial(" + name + "): core is not trivial on the base objects");
    } catch (const Error& e) {
      out.fail("trivial(" + name + "): " + e.what());
    }
    try {
      Groupoid core = core_groupoid_square(pair_double(g));
      ElementMap embed;
      for (const Element& x : g.arrows.elements()) {
        embed[x] = concat(x, g.unit.at(g.src.at(x)));
      }
      out.require(groupoid_isomorphic_via(g, core, embed),
                  "pair(" + name + "): core is not the base groupoid");
    } catch (const Error& e) {
      out.fail("pair(" + name + "): " + e.what());
    }
  }
  return out;
}

// 4. For each of the four sides: the leaves partition the coisotropic
// subset, each leaf meets the matching core exactly once, and the quotient
// relation assembled here from the leaves equals the library's reduction
// relation and is a reduction.
Outcome leaf_cross_sections(const std::vector<CorpusItem>& corpus) {
  Outcome out;
  for (const CorpusItem& item : corpus) {
    const DoubleGroupoid& d = item.d;
    std::vector<Element> core_vec = core_set(d);
    std::vector<Element> target_vec = target_core_set(d);
    std::set<Element> core_marks(core_vec.begin(), core_vec.end());
    std::set<Element> target_marks(target_vec.begin(), target_vec.end());
    Carrier core_carrier = subcarrier(d.squares, core_vec, item.name + " core");
    for (EdgeSide side : {EdgeSide::top, EdgeSide::right, EdgeSide::bottom,
                          EdgeSide::left}) {
      const std::string tag = side_tag(item.name, side);
      try {
        std::vector<Element> subset = coisotropic_subset(d, side);
        std::vector<std::vector<Element>> leaves = leaf_partition(d, side);

        std::set<Element> seen;
        bool disjoint = true;
        for (const std::vector<Element>& leaf : leaves) {
          for (const Element& a : leaf) {
            disjoint = disjoint && seen.insert(a).second;
          }
        }
        std::set<Element> subset_set(subset.begin(), subset.end());
        out.require(disjoint && seen == subset_set,
                    tag + ": leaves do not partition the subset");

        const bool source_side =
            side == EdgeSide::top || side == EdgeSide::right;
        const std::set<Element>& marks =
            source_side ? core_marks : target_marks;
        bool once = true;
        std::vector<ElementPair> pairs;
        for (const std::vector<Element>& leaf : leaves) {
          std::vector<Element> hits;
          for (const Element& a : leaf) {
            if (marks.count(a) > 0) hits.push_back(a);
          }
          if (hits.size() != 1) {
            once = false;
            break;
          }
          Element target =
              source_side ? hits[0] : double_inverse(d, hits[0]);
          for (const Element& a : leaf) pairs.emplace_back(a, target);
        }
        out.require(once, tag + ": a leaf does not meet the core exactly once");
        if (!once) continue;

        Relation quotient =
            Relation::make(d.squares, core_carrier, std::move(pairs));
        Relation red = reduction_relation(d, side);
        out.require(relations_equal(quotient, red),
                    tag + ": leaf quotient differs from the reduction relation");
        out.require(is_reduction(red), tag + ": not a reduction");
      } catch (const Error& e) {
        out.fail(tag + ": " + e.what());
      }
    }
  }
  return out;
}

// 5. The built hopfoid of every corpus instance satisfies the full law
// suite with zero failures.
Outcome hopfoid_laws(const std::vector<CorpusItem>& corpus) {
  Outcome out;
  for (const CorpusItem& item : corpus) {
    try {
      Hopfoid h = build_hopfoid(item.d);
      CheckReport rep = check_hopfoid(h);
      if (!rep.all_passed()) {
        out.fail(item.name + ": " + rep.failed_names());
      }
    } catch (const Error& e) {
      out.fail(item.name + ": " + e.what());
    }
  }
  return out;
}

// 6. The hopfoid built from the pair double of a one-object group equals
// the hand-coded closed-formula hopfoid on every structure relation.
Outcome oracle_equality() {
  Outcome out;
  const std::vector<std::pair<std::string, Relation Hopfoid::*>> fields = {
      {"target", &Hopfoid::target},       {"source", &Hopfoid::source},
      {"unit", &Hopfoid::unit},           {"product", &Hopfoid::product},
      {"coproduct", &Hopfoid::coproduct}, {"counit", &Hopfoid::counit},
      {"star", &Hopfoid::star},           {"antipode", &Hopfoid::antipode}};
  std::vector<std::pair<std::string, Groupoid>> groups;
  groups.emplace_back("Z2", cyclic_group(2));
  groups.emplace_back("Z3", cyclic_group(3));
  groups.emplace_back("S3", symmetric_group_s3());
  for (const auto& [name, g] : groups) {
    try {
      Hopfoid built = build_hopfoid(pair_double(g));
      Hopfoid oracle = inertia_hopfoid_oracle(g);
      for (const auto& [field_name, field] : fields) {
        out.require(relations_equal(built.*field, oracle.*field),
                    name + ": " + field_name + " differs from the oracle");
      }
      out.require(hopfoids_equal(built, oracle),
                  name + ": hopfoids differ");
    } catch (const Error& e) {
      out.fail(name + ": " + e.what());
    }
  }
  return out;
}

// 7. Both round trips are the identity corpus-wide: double -> hopfoid ->
// double (up to unit embedding) and hopfoid -> double -> hopfoid (exactly).
Outcome main_correspondence(const std::vector<CorpusItem>& corpus) {
  Outcome out;
  for (const CorpusItem& item : corpus) {
    try {
      CheckReport rd = roundtrip_double(item.d);
      if (!rd.all_passed()) {
        out.fail(item.name + " (double): " + rd.failed_names());
      }
      Hopfoid h = build_hopfoid(item.d);
      CheckReport rh = roundtrip_hopfoid(h);
      if (!rh.all_passed()) {
        out.fail(item.name + " (hopfoid): " + rh.failed_names());
      }
    } catch (const Error& e) {
      out.fail(item.name + ": " + e.what());
    }
  }
  return out;
}

// 8. Six single-entry corruptions, each of which must trip at least one
// named check with a concrete witness.
Outcome mutation_sensitivity() {
  Outcome out;
  DoubleGroupoid d = pair_double(cyclic_group(3));
  Hopfoid h = build_hopfoid(d);
  const std::vector<Element>& total = h.total.elements();
  const std::vector<Element>& squares = d.squares.elements();

  auto witnessed_failure = [](const CheckReport& rep) {
    for (const CheckEntry& e : rep.entries()) {
      if (!e.passed && !e.witness.empty()) return true;
    }
    return false;
  };
  auto expect_detect = [&](const std::string& label, const CheckReport& rep) {
    out.require(!rep.all_passed(), label + ": corruption passed silently");
    out.require(witnessed_failure(rep),
                label + ": no failed check carries a witness");
  };
  auto redirect = [&](const Relation& r) {
    std::vector<ElementPair> pairs = r.pairs();
    pairs[0].second = (pairs[0].second == total[0]) ? total[1] : total[0];
    return Relation::make(r.dom(), r.cod(), std::move(pairs));
  };

  {
    Hopfoid bad = h;
    bad.product = redirect(h.product);
    expect_detect("product cell", check_hopfoid(bad));
  }
  {
    DoubleGroupoid bad = d;
    auto it = bad.horizontal.inv.begin();
    it->second = (it->second == squares[0]) ? squares[1] : squares[0];
    expect_detect("inverse entry", validate_double(bad));
  }
  {
    DoubleGroupoid bad = d;
    auto it = bad.vertical.unit.begin();
    it->second = (it->second == squares[0]) ? squares[1] : squares[0];
    expect_detect("unit entry", validate_double(bad));
  }
  {
    Hopfoid bad = h;
    bad.antipode = redirect(h.antipode);
    expect_detect("antipode entry", check_hopfoid(bad));
  }
  {
    Hopfoid bad = h;
    bad.star = redirect(h.star);
    expect_detect("star entry", check_hopfoid(bad));
  }
  {
    Hopfoid bad = h;
    std::vector<ElementPair> pairs = h.unit.pairs();
    pairs.erase(pairs.begin());
    bad.unit = Relation::make(h.unit.dom(), h.unit.cod(), std::move(pairs));
    expect_detect("unit relation entry", check_hopfoid(bad));
  }
  return out;
}

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;  // 0 when the criterion has no budget
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  auto corpus_start = std::chrono::steady_clock::now();
  const std::vector<CorpusItem> corpus = small_corpus();
  std::chrono::duration<double> corpus_elapsed =
      std::chrono::steady_clock::now() - corpus_start;
  std::printf("corpus: %zu instances generated and validated in %.2fs\n",
              corpus.size(), corpus_elapsed.count());

  const std::vector<Criterion> criteria = {
      {1, "star-monoid round trip", 5.0, star_monoid_round_trip},
      {2, "double groupoid validity", 30.0, double_groupoid_validity},
      {3, "core agreement", 0.0, [&] { return core_agreement(corpus); }},
      {4, "leaf cross-sections", 0.0, [&] { return leaf_cross_sections(corpus); }},
      {5, "hopfoid laws", 60.0, [&] { return hopfoid_laws(corpus); }},
      {6, "oracle equality", 0.0, oracle_equality},
      {7, "main correspondence", 60.0,
       [&] { return main_correspondence(corpus); }},
      {8, "mutation sensitivity", 0.0, mutation_sensitivity},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("unexpected error: ") + e.what());
    }
    std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    if (c.budget_seconds > 0 && elapsed.count() >= c.budget_seconds) {
      outcome.fail("budget exceeded: " + std::to_string(elapsed.count()) +
                   "s >= " + std::to_string(c.budget_seconds) + "s");
    }
    std::printf("[%s] criterion %d: %s (%.2fs)\n",
                outcome.passed ? "PASS" : "FAIL", c.number, c.name.c_str(),
                elapsed.count());
    for (const std::string& detail : outcome.details) {
      std::printf("       - %s\n", detail.c_str());
    }
    if (!outcome.passed) ++failures;
  }
  std::printf("%d/8 criteria passed\n", 8 - failures);
  return failures;
}

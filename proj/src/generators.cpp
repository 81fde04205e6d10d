#include "finrel/generators.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>

namespace finrel {

namespace {

Element atom(const std::string& s) { return Element{s}; }

std::vector<std::string> numerals(int n, int from) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(from + i));
  return out;
}

}  // namespace

Groupoid group_from_table(const std::string& name,
                          const std::vector<std::string>& members,
                          const std::vector<std::vector<int>>& table) {
  const std::size_t n = members.size();
  if (n == 0) throw TableError("the group needs at least one member");
  {
    std::vector<std::string> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw TableError("the members are not distinct");
    }
  }
  if (table.size() != n) {
    throw TableError("the table does not have one row per member");
  }
  for (const auto& row : table) {
    if (row.size() != n) {
      throw TableError("the table does not have one column per member");
    }
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw TableError("a table entry is out of range");
      }
    }
  }

  std::size_t id = n;
  for (std::size_t e = 0; e < n && id == n; ++e) {
    bool works = true;
    for (std::size_t j = 0; j < n; ++j) {
      works = works && static_cast<std::size_t>(table[e][j]) == j &&
              static_cast<std::size_t>(table[j][e]) == j;
    }
    if (works) id = e;
  }
  if (id == n) throw TableError("the table has no identity element");

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw TableError("the table is not associative at (" + members[a] +
                           ", " + members[b] + ", " + members[c] + ")");
        }
      }
    }
  }

  std::vector<std::size_t> inverse(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (static_cast<std::size_t>(table[a][b]) == id &&
          static_cast<std::size_t>(table[b][a]) == id) {
        inverse[a] = b;
      }
    }
    if (inverse[a] == n) {
      throw TableError("the table has no inverse for " + members[a]);
    }
  }

  Groupoid g;
  g.objects = Carrier::make(name + " base", {atom("*")});
  std::vector<Element> arrows;
  arrows.reserve(n);
  for (const std::string& m : members) arrows.push_back(atom(m));
  g.arrows = Carrier::make(name, arrows);
  g.unit[atom("*")] = atom(members[id]);
  for (std::size_t a = 0; a < n; ++a) {
    g.src[atom(members[a])] = atom("*");
    g.tgt[atom(members[a])] = atom("*");
    g.inv[atom(members[a])] = atom(members[inverse[a]]);
    for (std::size_t b = 0; b < n; ++b) {
      g.mul[{atom(members[a]), atom(members[b])}] = atom(members[table[a][b]]);
    }
  }
  return g;
}

Groupoid cyclic_group(int n) {
  if (n < 1) throw StructureError("a cyclic group needs a positive order");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return group_from_table("Z" + std::to_string(n), numerals(n, 0), table);
}

Groupoid symmetric_group_s3() {
  const std::vector<std::string> members = {"012", "120", "201",
                                            "021", "102", "210"};
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < members.size(); ++i) {
    index[members[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> table(members.size(),
                                      std::vector<int>(members.size(), 0));
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b < members.size(); ++b) {
      std::string c(3, ' ');
      for (int i = 0; i < 3; ++i) {
        c[i] = members[a][members[b][i] - '0'];
      }
      table[a][b] = index.at(c);
    }
  }
  return group_from_table("S3", members, table);
}

Groupoid trivial_groupoid_on(const Carrier& objects) {
  Groupoid g;
  g.objects = objects;
  g.arrows = objects;
  for (const Element& x : objects.elements()) {
    g.src[x] = x;
    g.tgt[x] = x;
    g.unit[x] = x;
    g.inv[x] = x;
    g.mul[{x, x}] = x;
  }
  return g;
}

Groupoid trivial_groupoid(int n) {
  if (n < 1) throw StructureError("a trivial groupoid needs an object");
  std::vector<Element> objs;
  for (const std::string& s : numerals(n, 1)) objs.push_back(atom(s));
  return trivial_groupoid_on(
      Carrier::make("triv" + std::to_string(n), objs));
}

Groupoid pair_groupoid_on(const Carrier& objects) {
  Groupoid g;
  g.objects = objects;
  g.arrows = tensor_carrier(objects, objects);
  for (const Element& x : objects.elements()) {
    g.unit[x] = concat(x, x);
    for (const Element& y : objects.elements()) {
      Element a = concat(x, y);
      g.tgt[a] = x;
      g.src[a] = y;
      g.inv[a] = concat(y, x);
      for (const Element& z : objects.elements()) {
        g.mul[{a, concat(y, z)}] = concat(x, z);
      }
    }
  }
  return g;
}

Groupoid pair_groupoid(int n) {
  if (n < 1) throw StructureError("a pair groupoid needs an object");
  std::vector<Element> objs;
  for (const std::string& s : numerals(n, 1)) objs.push_back(atom(s));
  return pair_groupoid_on(Carrier::make("P" + std::to_string(n), objs));
}

Groupoid product_groupoid(const Groupoid& a, const Groupoid& b) {
  Groupoid p;
  p.objects = tensor_carrier(a.objects, b.objects);
  p.arrows = tensor_carrier(a.arrows, b.arrows);
  for (const Element& x : a.arrows.elements()) {
    for (const Element& y : b.arrows.elements()) {
      Element arrow = concat(x, y);
      p.src[arrow] = concat(map_at(a.src, x, "src"), map_at(b.src, y, "src"));
      p.tgt[arrow] = concat(map_at(a.tgt, x, "tgt"), map_at(b.tgt, y, "tgt"));
      p.inv[arrow] = concat(map_at(a.inv, x, "inv"), map_at(b.inv, y, "inv"));
    }
  }
  for (const Element& x : a.objects.elements()) {
    for (const Element& y : b.objects.elements()) {
      p.unit[concat(x, y)] =
          concat(map_at(a.unit, x, "unit"), map_at(b.unit, y, "unit"));
    }
  }
  for (const auto& [xk, xv] : a.mul) {
    for (const auto& [yk, yv] : b.mul) {
      p.mul[{concat(xk.first, yk.first), concat(xk.second, yk.second)}] =
          concat(xv, yv);
    }
  }
  return p;
}

Groupoid disjoint_union(const Groupoid& a, const Groupoid& b,
                        const std::string& name) {
  auto tag = [](const std::string& prefix, const Element& e) {
    Element out;
    out.reserve(e.size());
    for (const std::string& s : e) out.push_back(prefix + s);
    return out;
  };
  Groupoid u;
  std::vector<Element> objs, arrows;
  auto merge = [&](const Groupoid& g, const std::string& prefix) {
    for (const Element& x : g.objects.elements()) {
      objs.push_back(tag(prefix, x));
    }
    for (const Element& x : g.arrows.elements()) {
      arrows.push_back(tag(prefix, x));
    }
    for (const auto& [k, v] : g.src) u.src[tag(prefix, k)] = tag(prefix, v);
    for (const auto& [k, v] : g.tgt) u.tgt[tag(prefix, k)] = tag(prefix, v);
    for (const auto& [k, v] : g.unit) u.unit[tag(prefix, k)] = tag(prefix, v);
    for (const auto& [k, v] : g.inv) u.inv[tag(prefix, k)] = tag(prefix, v);
    for (const auto& [k, v] : g.mul) {
      u.mul[{tag(prefix, k.first), tag(prefix, k.second)}] = tag(prefix, v);
    }
  };
  merge(a, "a:");
  merge(b, "b:");
  u.objects = Carrier::make(name + " base", objs);
  u.arrows = Carrier::make(name, arrows);
  return u;
}

std::vector<Groupoid> groupoid_corpus() {
  std::vector<Groupoid> out;
  out.push_back(trivial_groupoid(1));
  out.push_back(trivial_groupoid(2));
  out.push_back(trivial_groupoid(3));
  out.push_back(pair_groupoid(2));
  out.push_back(pair_groupoid(3));
  out.push_back(pair_groupoid(4));
  out.push_back(cyclic_group(2));
  out.push_back(cyclic_group(3));
  out.push_back(cyclic_group(4));
  out.push_back(cyclic_group(5));
  out.push_back(cyclic_group(6));
  out.push_back(symmetric_group_s3());
  out.push_back(disjoint_union(cyclic_group(2), cyclic_group(3), "Z2+Z3"));
  out.push_back(
      disjoint_union(cyclic_group(2), pair_groupoid(2), "Z2+pair2"));
  return out;
}

DoubleGroupoid trivial_double(const Groupoid& g) {
  DoubleGroupoid d{g.arrows, g, trivial_groupoid_on(g.objects),
                   trivial_groupoid_on(g.arrows), g};
  CheckReport rep = validate_double(d);
  if (!rep.all_passed()) {
    throw ValidationError("the trivial double groupoid fails validation",
                          rep);
  }
  return d;
}

DoubleGroupoid pair_double(const Groupoid& g) {
  DoubleGroupoid d{tensor_carrier(g.arrows, g.arrows), g,
                   pair_groupoid_on(g.objects), pair_groupoid_on(g.arrows),
                   product_groupoid(g, g)};
  CheckReport rep = validate_double(d);
  if (!rep.all_passed()) {
    throw ValidationError("the pair double groupoid fails validation", rep);
  }
  return d;
}

namespace {

struct BaseEntry {
  std::string name;
  Family family;
  Groupoid g;
};

std::vector<BaseEntry> base_corpus() {
  std::vector<BaseEntry> out;
  out.push_back({"triv1", Family::trivial, trivial_groupoid(1)});
  out.push_back({"triv2", Family::trivial, trivial_groupoid(2)});
  out.push_back({"triv3", Family::trivial, trivial_groupoid(3)});
  out.push_back({"pair2", Family::pair, pair_groupoid(2)});
  out.push_back({"pair3", Family::pair, pair_groupoid(3)});
  out.push_back({"pair4", Family::pair, pair_groupoid(4)});
  out.push_back({"Z2", Family::group, cyclic_group(2)});
  out.push_back({"Z3", Family::group, cyclic_group(3)});
  out.push_back({"Z4", Family::group, cyclic_group(4)});
  out.push_back({"Z5", Family::group, cyclic_group(5)});
  out.push_back({"Z6", Family::group, cyclic_group(6)});
  out.push_back({"S3", Family::group, symmetric_group_s3()});
  out.push_back({"Z2+Z3", Family::disjoint_union,
                 disjoint_union(cyclic_group(2), cyclic_group(3), "Z2+Z3")});
  out.push_back(
      {"Z2+pair2", Family::disjoint_union,
       disjoint_union(cyclic_group(2), pair_groupoid(2), "Z2+pair2")});
  return out;
}

}  // namespace

std::vector<std::string> base_groupoid_names() {
  std::vector<std::string> names;
  for (const BaseEntry& base : base_corpus()) names.push_back(base.name);
  return names;
}

Groupoid base_groupoid(const std::string& name) {
  for (BaseEntry& base : base_corpus()) {
    if (base.name == name) return std::move(base.g);
  }
  std::string known;
  for (const std::string& n : base_groupoid_names()) {
    known += (known.empty() ? "" : ", ") + n;
  }
  throw StructureError("unknown base groupoid '" + name + "' (known: " +
                       known + ")");
}

std::vector<CorpusItem> small_corpus(const CorpusSpec& spec) {
  if (spec.max_squares < 1) {
    throw StructureError("the corpus cap must be at least 1");
  }
  std::vector<CorpusItem> out;
  for (const BaseEntry& base : base_corpus()) {
    const std::size_t arrows = base.g.arrows.size();
    auto keep = [&](Family construction, std::size_t squares) {
      return squares <= spec.max_squares &&
             (spec.families.count(construction) > 0 ||
              spec.families.count(base.family) > 0);
    };
    if (keep(Family::trivial, arrows)) {
      out.push_back({"trivial(" + base.name + ")", trivial_double(base.g)});
    }
    if (keep(Family::pair, arrows * arrows)) {
      out.push_back({"pair(" + base.name + ")", pair_double(base.g)});
    }
  }
  return out;
}

Relation random_relation(std::mt19937_64& rng, const Carrier& dom,
                         const Carrier& cod, double density) {
  std::bernoulli_distribution keep(std::clamp(density, 0.0, 1.0));
  std::vector<ElementPair> pairs;
  for (const Element& x : dom.elements()) {
    for (const Element& y : cod.elements()) {
      if (keep(rng)) pairs.emplace_back(x, y);
    }
  }
  return Relation::make(dom, cod, std::move(pairs));
}

}  // namespace finrel

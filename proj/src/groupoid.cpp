#include "finrel/groupoid.hpp"

#include <algorithm>
#include <set>

namespace finrel {

const Element* lookup(const ElementMap& m, const Element& x) {
  auto it = m.find(x);
  return it == m.end() ? nullptr : &it->second;
}

const Element& map_at(const ElementMap& m, const Element& x,
                      const std::string& what) {
  auto it = m.find(x);
  if (it == m.end()) {
    throw StructureError(what + " is undefined at " + show(x));
  }
  return it->second;
}

std::optional<Element> mul_at(const Groupoid& g, const Element& a,
                              const Element& b) {
  auto it = g.mul.find({a, b});
  if (it == g.mul.end()) return std::nullopt;
  return it->second;
}

Relation mul_graph(const Groupoid& g) {
  std::vector<ElementPair> pairs;
  pairs.reserve(g.mul.size());
  for (const auto& [key, val] : g.mul) {
    pairs.emplace_back(concat(key.first, key.second), val);
  }
  return Relation::make(tensor_carrier(g.arrows, g.arrows), g.arrows,
                        std::move(pairs));
}

std::vector<Element> unit_image(const Groupoid& g) {
  std::vector<Element> out;
  out.reserve(g.unit.size());
  for (const auto& [x, u] : g.unit) out.push_back(u);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CheckReport validate_groupoid(const Groupoid& g) {
  CheckReport rep;
  const auto& objs = g.objects.elements();
  const auto& arrs = g.arrows.elements();

  {
    bool ok = true;
    std::string w;
    auto need_map = [&](const ElementMap& m, const std::vector<Element>& keys,
                        const Carrier& into, const std::string& label) {
      for (const Element& k : keys) {
        const Element* v = lookup(m, k);
        if (!v) {
          if (ok) w = label + " is undefined at " + show(k);
          ok = false;
          return;
        }
        if (!into.contains(*v)) {
          if (ok) {
            w = label + "(" + show(k) + ") = " + show(*v) +
                " lies outside '" + into.name() + "'";
          }
          ok = false;
          return;
        }
      }
      if (m.size() != keys.size()) {
        if (ok) w = label + " has entries outside its domain carrier";
        ok = false;
      }
    };
    need_map(g.src, arrs, g.objects, "src");
    need_map(g.tgt, arrs, g.objects, "tgt");
    need_map(g.unit, objs, g.arrows, "unit");
    need_map(g.inv, arrs, g.arrows, "inv");
    rep.add("structure maps are total", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (const Element& x : objs) {
      const Element* u = lookup(g.unit, x);
      const Element* s = u ? lookup(g.src, *u) : nullptr;
      const Element* t = u ? lookup(g.tgt, *u) : nullptr;
      if (!u || !s || !t || *s != x || *t != x) {
        ok = false;
        w = "unit arrow of " + show(x) + " does not start and end at " +
            show(x);
        break;
      }
    }
    rep.add("unit endpoints", ok, w, "src(unit(x)) = x = tgt(unit(x))");
  }

  std::set<ElementPair> composable;
  for (const Element& a : arrs) {
    const Element* sa = lookup(g.src, a);
    if (!sa) continue;
    for (const Element& b : arrs) {
      const Element* tb = lookup(g.tgt, b);
      if (tb && *sa == *tb) composable.insert({a, b});
    }
  }

  {
    bool ok = true;
    std::string w;
    for (const ElementPair& p : composable) {
      if (!g.mul.count(p)) {
        ok = false;
        w = "product is undefined at composable pair " +
            show_pair(p.first, p.second);
        break;
      }
    }
    if (ok) {
      for (const auto& [key, val] : g.mul) {
        if (!composable.count(key)) {
          ok = false;
          w = "product is defined at non-composable pair " +
              show_pair(key.first, key.second);
          break;
        }
        if (!g.arrows.contains(val)) {
          ok = false;
          w = "product value " + show(val) + " lies outside the arrows";
          break;
        }
      }
    }
    rep.add("product domain", ok, w,
            "mul is defined exactly when src(g) = tgt(h)");
  }

  {
    bool ok = true;
    std::string w;
    for (const auto& [key, val] : g.mul) {
      const Element* tv = lookup(g.tgt, val);
      const Element* sv = lookup(g.src, val);
      const Element* ta = lookup(g.tgt, key.first);
      const Element* sb = lookup(g.src, key.second);
      if (!tv || !sv || !ta || !sb || *tv != *ta || *sv != *sb) {
        ok = false;
        w = "endpoints of " + show(val) + " = mul" +
            show_pair(key.first, key.second) + " are wrong";
        break;
      }
    }
    rep.add("product endpoints", ok, w,
            "tgt(gh) = tgt(g), src(gh) = src(h)");
  }

  auto unit_of = [&](const Element* x) -> const Element* {
    return x ? lookup(g.unit, *x) : nullptr;
  };

  {
    bool ok = true;
    std::string w;
    for (const Element& a : arrs) {
      const Element* u = unit_of(lookup(g.tgt, a));
      std::optional<Element> v = u ? mul_at(g, *u, a) : std::nullopt;
      if (!v || *v != a) {
        ok = false;
        w = "unit(tgt(" + show(a) + ")) does not act as a left identity";
        break;
      }
    }
    rep.add("left unit law", ok, w, "mul(unit(tgt(g)), g) = g");
  }

  {
    bool ok = true;
    std::string w;
    for (const Element& a : arrs) {
      const Element* u = unit_of(lookup(g.src, a));
      std::optional<Element> v = u ? mul_at(g, a, *u) : std::nullopt;
      if (!v || *v != a) {
        ok = false;
        w = "unit(src(" + show(a) + ")) does not act as a right identity";
        break;
      }
    }
    rep.add("right unit law", ok, w, "mul(g, unit(src(g))) = g");
  }

  {
    bool ok = true;
    std::string w;
    for (const Element& a : arrs) {
      const Element* ia = lookup(g.inv, a);
      const Element* u = unit_of(lookup(g.src, a));
      std::optional<Element> v = ia ? mul_at(g, *ia, a) : std::nullopt;
      if (!v || !u || *v != *u) {
        ok = false;
        w = "inv(" + show(a) + ") composed on the left misses unit(src(" +
            show(a) + "))";
        break;
      }
    }
    rep.add("left inverse law", ok, w, "mul(inv(g), g) = unit(src(g))");
  }

  {
    bool ok = true;
    std::string w;
    for (const Element& a : arrs) {
      const Element* ia = lookup(g.inv, a);
      const Element* u = unit_of(lookup(g.tgt, a));
      std::optional<Element> v = ia ? mul_at(g, a, *ia) : std::nullopt;
      if (!v || !u || *v != *u) {
        ok = false;
        w = "inv(" + show(a) + ") composed on the right misses unit(tgt(" +
            show(a) + "))";
        break;
      }
    }
    rep.add("right inverse law", ok, w, "mul(g, inv(g)) = unit(tgt(g))");
  }

  {
    bool ok = true;
    std::string w;
    std::map<Element, std::vector<Element>> by_tgt;
    for (const Element& c : arrs) {
      const Element* tc = lookup(g.tgt, c);
      if (tc) by_tgt[*tc].push_back(c);
    }
    for (const auto& [key, ab] : g.mul) {
      const Element* sb = lookup(g.src, key.second);
      if (!sb) continue;
      auto it = by_tgt.find(*sb);
      if (it == by_tgt.end()) continue;
      for (const Element& c : it->second) {
        std::optional<Element> left = mul_at(g, ab, c);
        std::optional<Element> bc = mul_at(g, key.second, c);
        std::optional<Element> right =
            bc ? mul_at(g, key.first, *bc) : std::nullopt;
        if (!left || !right || *left != *right) {
          ok = false;
          w = "triple (" + show(key.first) + ", " + show(key.second) + ", " +
              show(c) + ") associates badly";
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("associativity", ok, w, "mul(mul(g,h),k) = mul(g,mul(h,k))");
  }

  return rep;
}

namespace {

// Render the first discrepancy between two relations that were expected to
// be equal.
std::string first_difference(const Relation& lhs, const Relation& rhs) {
  if (!(lhs.dom() == rhs.dom())) return "domains differ";
  if (!(lhs.cod() == rhs.cod())) return "codomains differ";
  for (const ElementPair& p : lhs.pairs()) {
    if (!rhs.contains(p.first, p.second)) {
      return "only the left side relates " + show_pair(p.first, p.second);
    }
  }
  for (const ElementPair& p : rhs.pairs()) {
    if (!lhs.contains(p.first, p.second)) {
      return "only the right side relates " + show_pair(p.first, p.second);
    }
  }
  return "";
}

}  // namespace

CheckReport check_star_monoid(const StarMonoid& sm) {
  CheckReport rep;
  const Carrier& S = sm.carrier;
  Relation id_s = identity(S);

  auto diagram = [&](const std::string& name, auto&& lhs_fn, auto&& rhs_fn,
                     const std::string& formula) {
    const std::string tag = formula + "; composition total: yes";
    try {
      Relation lhs = lhs_fn();
      Relation rhs = rhs_fn();
      if (relations_equal(lhs, rhs)) {
        rep.add(name, true, "", tag);
      } else {
        rep.add(name, false, first_difference(lhs, rhs), tag);
      }
    } catch (const Error& e) {
      rep.add(name, false, e.what(), tag);
    }
  };

  diagram(
      "associativity",
      [&] { return compose(tensor(sm.product, id_s), sm.product); },
      [&] { return compose(tensor(id_s, sm.product), sm.product); },
      "(m (x) id);m = (id (x) m);m");
  diagram(
      "left unit", [&] { return compose(tensor(sm.unit, id_s), sm.product); },
      [&] { return id_s; }, "(e (x) id);m = id");
  diagram(
      "right unit", [&] { return compose(tensor(id_s, sm.unit), sm.product); },
      [&] { return id_s; }, "(id (x) e);m = id");

  bool star_ok = true;
  std::string star_w;
  for (const Element& x : S.elements()) {
    const Element* y = lookup(sm.star, x);
    if (!y || !S.contains(*y)) {
      star_ok = false;
      star_w = "star is undefined or leaves the carrier at " + show(x);
      break;
    }
    const Element* z = lookup(sm.star, *y);
    if (!z || *z != x) {
      star_ok = false;
      star_w = "star(star(" + show(x) + ")) != " + show(x);
      break;
    }
  }
  if (star_ok && sm.star.size() != S.size()) {
    star_ok = false;
    star_w = "star has entries outside the carrier";
  }
  if (!star_ok) {
    rep.add("star compatibility", false, star_w,
            "swap;(star (x) star);m = m;star; composition total: yes");
    rep.add("strong positivity", false, star_w,
            "diag;(id (x) star);m = e; composition total: yes");
    return rep;
  }

  Relation star_g = graph_relation(S, S, sm.star);
  diagram(
      "star compatibility",
      [&] {
        return compose(compose(swap_relation(S, S), tensor(star_g, star_g)),
                       sm.product);
      },
      [&] { return compose(sm.product, star_g); },
      "swap;(star (x) star);m = m;star");
  diagram(
      "strong positivity",
      [&] {
        return compose(compose(diagonal_relation(S), tensor(id_s, star_g)),
                       sm.product);
      },
      [&] { return sm.unit; }, "diag;(id (x) star);m = e");

  return rep;
}

StarMonoid to_star_monoid(const Groupoid& g) {
  CheckReport rep = validate_groupoid(g);
  if (!rep.all_passed()) {
    throw ValidationError("groupoid does not satisfy the groupoid laws", rep);
  }
  return StarMonoid{g.arrows, mul_graph(g),
                    subset_as_relation(g.arrows, unit_image(g)), g.inv};
}

Groupoid from_star_monoid(const StarMonoid& sm) {
  const Carrier& S = sm.carrier;

  std::vector<Element> units;
  for (const ElementPair& p : sm.unit.pairs()) units.push_back(p.second);

  Groupoid out;
  out.arrows = S;
  out.objects = subcarrier(S, units, S.name() + " units");
  for (const Element& u : units) out.unit[u] = u;

  for (const Element& a : S.elements()) {
    const Element* t = nullptr;
    const Element* s = nullptr;
    for (const Element& u : units) {
      if (sm.product.contains(concat(u, a), a)) {
        if (t) {
          throw ExtractionError("target unit of " + show(a) +
                                " is not unique: " + show(*t) + " and " +
                                show(u) + " both absorb on the left");
        }
        t = &u;
      }
      if (sm.product.contains(concat(a, u), a)) {
        if (s) {
          throw ExtractionError("source unit of " + show(a) +
                                " is not unique: " + show(*s) + " and " +
                                show(u) + " both absorb on the right");
        }
        s = &u;
      }
    }
    if (!t) {
      throw ExtractionError("no unit absorbs " + show(a) +
                            " on the left; its target is undefined");
    }
    if (!s) {
      throw ExtractionError("no unit absorbs " + show(a) +
                            " on the right; its source is undefined");
    }
    out.tgt[a] = *t;
    out.src[a] = *s;
  }

  for (const Element& a : S.elements()) {
    const Element* v = lookup(sm.star, a);
    if (!v || !S.contains(*v)) {
      throw ExtractionError("star is not total on the carrier at " + show(a));
    }
    out.inv[a] = *v;
  }

  const std::vector<Carrier> two = {S, S};
  for (const ElementPair& p : sm.product.pairs()) {
    std::vector<Element> ab = split_blocks(p.first, two);
    const Element& a = ab[0];
    const Element& b = ab[1];
    if (out.src[a] != out.tgt[b]) continue;  // keep composable pairs only
    auto [it, inserted] = out.mul.insert({{a, b}, p.second});
    if (!inserted && it->second != p.second) {
      throw ExtractionError("product is not single-valued at " +
                            show_pair(a, b) + ": " + show(it->second) +
                            " vs " + show(p.second));
    }
  }

  CheckReport rep = validate_groupoid(out);
  if (!rep.all_passed()) {
    throw ValidationError("extracted structure fails the groupoid laws", rep);
  }
  return out;
}

Groupoid restrict_groupoid(const Groupoid& g,
                           const std::vector<Element>& arrow_subset) {
  std::vector<Element> sub = arrow_subset;
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  for (const Element& a : sub) {
    if (!g.arrows.contains(a)) {
      throw MembershipError("restriction element " + show(a) +
                            " is not an arrow of '" + g.arrows.name() + "'");
    }
  }
  std::set<Element> in_sub(sub.begin(), sub.end());

  std::set<Element> objs;
  for (const Element& a : sub) {
    const Element& sa = map_at(g.src, a, "src");
    const Element& ta = map_at(g.tgt, a, "tgt");
    const Element& us = map_at(g.unit, sa, "unit");
    const Element& ut = map_at(g.unit, ta, "unit");
    if (!in_sub.count(us)) {
      throw RestrictionError("subset misses unit of src(" + show(a) + ") = " +
                             show(us));
    }
    if (!in_sub.count(ut)) {
      throw RestrictionError("subset misses unit of tgt(" + show(a) + ") = " +
                             show(ut));
    }
    const Element& ia = map_at(g.inv, a, "inv");
    if (!in_sub.count(ia)) {
      throw RestrictionError("subset misses inverse of " + show(a));
    }
    objs.insert(sa);
    objs.insert(ta);
  }

  Groupoid out;
  out.arrows = subcarrier(g.arrows, sub, g.arrows.name() + "|sub");
  out.objects = subcarrier(g.objects, {objs.begin(), objs.end()},
                           g.objects.name() + "|sub");
  for (const Element& x : objs) out.unit[x] = map_at(g.unit, x, "unit");
  for (const Element& a : sub) {
    out.src[a] = map_at(g.src, a, "src");
    out.tgt[a] = map_at(g.tgt, a, "tgt");
    out.inv[a] = map_at(g.inv, a, "inv");
  }
  for (const Element& a : sub) {
    for (const Element& b : sub) {
      if (out.src[a] != out.tgt[b]) continue;
      std::optional<Element> v = mul_at(g, a, b);
      if (!v) {
        throw RestrictionError("product is undefined at restricted pair " +
                               show_pair(a, b));
      }
      if (!in_sub.count(*v)) {
        throw RestrictionError("subset is not closed under the product at " +
                               show_pair(a, b) + " -> " + show(*v));
      }
      out.mul[{a, b}] = *v;
    }
  }
  return out;
}

Groupoid embed_objects(const Groupoid& g) {
  ElementMap obj_to_unit;
  std::vector<Element> units;
  for (const Element& x : g.objects.elements()) {
    const Element& u = map_at(g.unit, x, "unit");
    obj_to_unit[x] = u;
    units.push_back(u);
  }
  std::sort(units.begin(), units.end());

  Groupoid out;
  out.arrows = g.arrows;
  out.objects = subcarrier(g.arrows, units, g.objects.name() + " as units");
  for (const Element& u : units) out.unit[u] = u;
  for (const Element& a : g.arrows.elements()) {
    out.src[a] = obj_to_unit.at(map_at(g.src, a, "src"));
    out.tgt[a] = obj_to_unit.at(map_at(g.tgt, a, "tgt"));
    out.inv[a] = map_at(g.inv, a, "inv");
  }
  out.mul = g.mul;
  return out;
}

bool groupoids_equal(const Groupoid& a, const Groupoid& b) {
  return a.objects == b.objects && a.arrows == b.arrows && a.src == b.src &&
         a.tgt == b.tgt && a.unit == b.unit && a.inv == b.inv && a.mul == b.mul;
}

bool groupoids_equal_upto_units(const Groupoid& a, const Groupoid& b) {
  return groupoids_equal(embed_objects(a), embed_objects(b));
}

namespace {

void require_bijection(const ElementMap& m, const Carrier& dom,
                       const std::string& label) {
  std::set<Element> values;
  for (const Element& x : dom.elements()) {
    const Element* v = lookup(m, x);
    if (!v) {
      throw StructureError(label + " is undefined at " + show(x));
    }
    if (!values.insert(*v).second) {
      throw StructureError(label + " is not injective at " + show(x));
    }
  }
}

}  // namespace

Groupoid transport_groupoid(const Groupoid& g, const ElementMap& arrow_map,
                            const ElementMap& object_map) {
  require_bijection(arrow_map, g.arrows, "arrow relabeling");
  require_bijection(object_map, g.objects, "object relabeling");

  std::vector<Element> new_arrows, new_objects;
  for (const Element& a : g.arrows.elements()) {
    new_arrows.push_back(arrow_map.at(a));
  }
  for (const Element& x : g.objects.elements()) {
    new_objects.push_back(object_map.at(x));
  }

  Groupoid out;
  out.arrows = Carrier::make(g.arrows.name() + "~", std::move(new_arrows));
  out.objects = Carrier::make(g.objects.name() + "~", std::move(new_objects));
  for (const Element& a : g.arrows.elements()) {
    const Element& fa = arrow_map.at(a);
    out.src[fa] = object_map.at(map_at(g.src, a, "src"));
    out.tgt[fa] = object_map.at(map_at(g.tgt, a, "tgt"));
    out.inv[fa] = arrow_map.at(map_at(g.inv, a, "inv"));
  }
  for (const Element& x : g.objects.elements()) {
    out.unit[object_map.at(x)] = arrow_map.at(map_at(g.unit, x, "unit"));
  }
  for (const auto& [key, val] : g.mul) {
    out.mul[{arrow_map.at(key.first), arrow_map.at(key.second)}] =
        arrow_map.at(val);
  }
  return out;
}

bool groupoid_isomorphic_via(const Groupoid& a, const Groupoid& b,
                             const ElementMap& arrow_map) {
  try {
    ElementMap object_map;
    for (const Element& x : a.objects.elements()) {
      const Element& u = map_at(a.unit, x, "unit");
      const Element* fu = lookup(arrow_map, u);
      if (!fu) return false;
      const Element* sx = lookup(b.src, *fu);
      if (!sx) return false;
      object_map[x] = *sx;
    }
    return groupoids_equal(transport_groupoid(a, arrow_map, object_map), b);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace finrel

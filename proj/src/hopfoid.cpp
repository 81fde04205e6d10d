#include "finrel/hopfoid.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace finrel {

namespace {

// The pair set of a relation as a map, when no element relates to two
// targets.
std::optional<ElementMap> relation_as_map(const Relation& r) {
  ElementMap out;
  for (const ElementPair& p : r.pairs()) {
    if (!out.emplace(p.first, p.second).second) return std::nullopt;
  }
  return out;
}

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

bool hopfoids_equal(const Hopfoid& a, const Hopfoid& b) {
  return a.total == b.total && a.core == b.core &&
         relations_equal(a.target, b.target) &&
         relations_equal(a.source, b.source) &&
         relations_equal(a.unit, b.unit) &&
         relations_equal(a.product, b.product) &&
         relations_equal(a.coproduct, b.coproduct) &&
         relations_equal(a.counit, b.counit) &&
         relations_equal(a.star, b.star) &&
         relations_equal(a.antipode, b.antipode);
}

Hopfoid build_hopfoid(const DoubleGroupoid& d) {
  CheckReport pre = validate_double(d);
  if (!pre.all_passed()) {
    throw ValidationError("double groupoid fails validation", pre);
  }

  const Carrier& total = d.squares;
  std::vector<Element> core = core_set(d);
  Carrier core_carrier = subcarrier(total, core, total.name() + " core");

  // e : C -> D translates a core square by every horizontal-unit square
  // whose base matches the square's base point.
  std::vector<ElementPair> unit_pairs;
  for (const Element& c : core) {
    const Element& base = map_at(
        d.side_v.src, map_at(d.vertical.src, c, "top edge"), "srcV");
    for (const Element& lam : d.side_h.arrows.elements()) {
      if (map_at(d.side_h.tgt, lam, "tgtH") != base) continue;
      const Element& usq = map_at(d.horizontal.unit, lam, "hunit");
      auto translated = mul_at(d.vertical, c, usq);
      if (!translated) {
        throw StructureError("unit translation undefined at " +
                             show_pair(c, usq));
      }
      unit_pairs.emplace_back(c, std::move(*translated));
    }
  }

  ElementMap antipode_map;
  for (const Element& a : total.elements()) {
    antipode_map[a] = double_inverse(d, a);
  }

  Hopfoid h{
      total,
      core_carrier,
      reduction_relation(d, EdgeSide::right),                        // t
      reduction_relation(d, EdgeSide::left),                         // s
      Relation::make(core_carrier, total, std::move(unit_pairs)),    // e
      mul_graph(d.horizontal),                                       // m
      transpose(mul_graph(d.vertical)),                              // delta
      transpose(subset_as_relation(total, unit_image(d.vertical))),  // eps
      graph_relation(total, total, d.vertical.inv),                  // star
      graph_relation(total, total, antipode_map),                    // i
  };

  CheckReport post = check_hopfoid(h);
  if (!post.all_passed()) {
    throw ValidationError("constructed hopfoid fails its checks", post);
  }
  return h;
}

CheckReport check_hopfoid(const Hopfoid& h) {
  CheckReport rep;
  const Carrier& D = h.total;
  const Carrier& C = h.core;

  // The comonoid laws, evaluated on the transposed structure.
  {
    StarMonoid sm{D, transpose(h.coproduct), transpose(h.counit), {}};
    if (auto star_map = relation_as_map(h.star)) {
      sm.star = std::move(*star_map);
    }
    rep.absorb(check_star_monoid(sm), "comonoid");
  }

  {
    bool shape = h.target.dom() == D && h.target.cod() == C;
    rep.add("target is a reduction", shape && is_reduction(h.target),
            shape ? "compose(transpose(t), t) differs from the core identity"
                  : "t does not go from the total carrier to the core",
            "compose(transpose(t), t) = id_C; composition total: yes");
  }
  {
    bool shape = h.source.dom() == D && h.source.cod() == C;
    rep.add("source is a reduction", shape && is_reduction(h.source),
            shape ? "compose(transpose(s), s) differs from the core identity"
                  : "s does not go from the total carrier to the core",
            "compose(transpose(s), s) = id_C; composition total: yes");
  }
  {
    bool shape = h.unit.dom() == C && h.unit.cod() == D;
    rep.add("unit is a coreduction", shape && is_coreduction(h.unit),
            shape ? "compose(e, transpose(e)) differs from the core identity"
                  : "e does not go from the core to the total carrier",
            "compose(e, transpose(e)) = id_C; composition total: yes");
  }

  auto diagram = [&](const std::string& name, auto&& lhs_fn, auto&& rhs_fn,
                     const std::string& formula) {
    const std::string tag = formula + "; composition total: yes";
    try {
      Relation lhs = lhs_fn();
      Relation rhs = rhs_fn();
      bool ok = relations_equal(lhs, rhs);
      rep.add(name, ok, ok ? "" : first_difference(lhs, rhs), tag);
    } catch (const Error& e) {
      rep.add(name, false, e.what(), tag);
    }
  };

  Relation id_d = identity(D);
  Relation id_c = identity(C);

  diagram(
      "antipode involution", [&] { return compose(h.antipode, h.antipode); },
      [&] { return id_d; }, "i;i = id_D");
  diagram(
      "antipode commutes with star",
      [&] { return compose(h.antipode, h.star); },
      [&] { return compose(h.star, h.antipode); }, "i;star = star;i");
  diagram(
      "antipode preserves counit",
      [&] { return compose(h.antipode, h.counit); }, [&] { return h.counit; },
      "i;eps = eps");
  diagram(
      "target retracts unit", [&] { return compose(h.unit, h.target); },
      [&] { return id_c; }, "e;t = id_C");
  diagram(
      "source retracts unit", [&] { return compose(h.unit, h.source); },
      [&] { return id_c; }, "e;s = id_C");
  diagram(
      "antipode swaps target", [&] { return compose(h.antipode, h.target); },
      [&] { return h.source; }, "i;t = s");
  diagram(
      "antipode swaps source", [&] { return compose(h.antipode, h.source); },
      [&] { return h.target; }, "i;s = t");
  diagram(
      "product associativity",
      [&] { return compose(tensor(h.product, id_d), h.product); },
      [&] { return compose(tensor(id_d, h.product), h.product); },
      "(m (x) id);m = (id (x) m);m");
  diagram(
      "antipode antihomomorphism",
      [&] {
        return compose(
            compose(swap_relation(D, D), tensor(h.antipode, h.antipode)),
            h.product);
      },
      [&] { return compose(h.product, h.antipode); }, "swap;(i (x) i);m = m;i");
  diagram(
      "product comultiplication exchange",
      [&] { return compose(h.product, h.coproduct); },
      [&] {
        Relation spread = tensor(h.coproduct, h.coproduct);
        Relation mixed = permute_cod_blocks(spread, {D, D, D, D}, {0, 2, 1, 3});
        return compose_tensor_cod(mixed, {h.product, h.product});
      },
      "m;delta = (delta (x) delta);(id (x) swap (x) id);(m (x) m)");
  diagram(
      "left unit diagram",
      [&] {
        Relation r = compose_tensor_cod(h.coproduct, {h.target, id_d});
        r = compose_tensor_cod(r, {h.unit, id_d});
        return compose(r, h.product);
      },
      [&] { return id_d; }, "delta;(t (x) id);(e (x) id);m = id_D");
  diagram(
      "right unit diagram",
      [&] {
        Relation r = compose_tensor_cod(h.coproduct, {id_d, h.source});
        r = compose_tensor_cod(r, {id_d, compose(h.unit, h.antipode)});
        return compose(r, h.product);
      },
      [&] { return id_d; }, "delta;(id (x) s);(id (x) (e;i));m = id_D");
  diagram(
      "left inverse diagram",
      [&] {
        Relation r = compose_tensor_cod(h.coproduct, {id_d, h.antipode});
        return compose(r, h.product);
      },
      [&] { return compose(h.target, h.unit); }, "delta;(id (x) i);m = t;e");
  diagram(
      "right inverse diagram",
      [&] {
        Relation r = compose_tensor_cod(h.coproduct, {h.antipode, id_d});
        return compose(r, h.product);
      },
      [&] { return compose(h.source, compose(h.unit, h.antipode)); },
      "delta;(i (x) id);m = s;(e;i)");

  return rep;
}

StarMonoid core_monoid(const Hopfoid& h) {
  CheckReport pre = check_hopfoid(h);
  if (!pre.all_passed()) {
    throw ValidationError("hopfoid fails its checks", pre);
  }

  Relation unit_t = transpose(h.unit);
  Relation product =
      compose(compose(tensor(h.unit, h.unit), h.product), unit_t);
  Relation base_embed =
      compose(compose(transpose(h.counit), h.target), h.unit);  // pt -> D
  Relation unit = compose(base_embed, unit_t);                  // pt -> C
  Relation star_rel =
      compose(compose(compose(h.unit, h.star), h.antipode), unit_t);

  auto star_map = relation_as_map(star_rel);
  if (!star_map) {
    throw StructureError("core star is not single-valued");
  }
  for (const Element& c : h.core.elements()) {
    auto it = star_map->find(c);
    if (it == star_map->end()) {
      throw StructureError("core star is undefined at " + show(c));
    }
    auto back = star_map->find(it->second);
    if (back == star_map->end() || back->second != c) {
      throw StructureError("core star is not an involution at " + show(c));
    }
  }
  return StarMonoid{h.core, product, unit, std::move(*star_map)};
}

DoubleGroupoid build_double(const Hopfoid& h) {
  CheckReport pre = check_hopfoid(h);
  if (!pre.all_passed()) {
    throw ValidationError("hopfoid fails its checks", pre);
  }
  const Carrier& D = h.total;

  auto star_map = relation_as_map(h.star);
  if (!star_map) {
    throw ReverseError("vertical structure: star is not a map");
  }
  Groupoid vertical;
  try {
    vertical = from_star_monoid(
        StarMonoid{D, transpose(h.coproduct), transpose(h.counit), *star_map});
  } catch (const Error& e) {
    throw ReverseError(std::string("vertical structure: ") + e.what());
  }

  auto antipode_map = relation_as_map(h.antipode);
  if (!antipode_map) {
    throw ReverseError("horizontal structure: antipode is not a map");
  }
  ElementMap mixed_star;
  for (const auto& [a, sa] : *star_map) {
    auto it = antipode_map->find(sa);
    if (it == antipode_map->end()) {
      throw ReverseError("horizontal structure: star image " + show(sa) +
                         " has no antipode");
    }
    mixed_star[a] = it->second;
  }

  Relation base_embed =
      compose(compose(transpose(h.counit), h.target), h.unit);
  std::vector<Element> h_subset;
  for (const ElementPair& p : base_embed.pairs()) h_subset.push_back(p.second);

  Groupoid horizontal;
  try {
    horizontal = from_star_monoid(StarMonoid{
        D, h.product, subset_as_relation(D, h_subset), std::move(mixed_star)});
  } catch (const Error& e) {
    throw ReverseError(std::string("horizontal structure: ") + e.what());
  }

  Groupoid side_v, side_h;
  try {
    side_v = restrict_groupoid(horizontal, vertical.objects.elements());
  } catch (const Error& e) {
    throw ReverseError(std::string("side V: ") + e.what());
  }
  try {
    side_h = restrict_groupoid(vertical, horizontal.objects.elements());
  } catch (const Error& e) {
    throw ReverseError(std::string("side H: ") + e.what());
  }

  DoubleGroupoid out{D, std::move(side_v), std::move(side_h),
                     std::move(vertical), std::move(horizontal)};
  CheckReport post = validate_double(out);
  if (!post.all_passed()) {
    throw ValidationError("rebuilt double groupoid fails validation", post);
  }
  return out;
}

CheckReport roundtrip_double(const DoubleGroupoid& d) {
  CheckReport rep;
  try {
    DoubleGroupoid expected = embedded_double(d);
    DoubleGroupoid rebuilt = build_double(build_hopfoid(d));
    rep.add("round trip completes", true);
    rep.add("squares carrier", expected.squares == rebuilt.squares,
            expected.squares == rebuilt.squares ? "" : "differ as sets");
    auto cmp = [&](const std::string& name, const Groupoid& x,
                   const Groupoid& y) {
      bool ok = groupoids_equal(x, y);
      rep.add(name, ok, ok ? "" : "differs from the unit-embedded original");
    };
    cmp("side V groupoid", expected.side_v, rebuilt.side_v);
    cmp("side H groupoid", expected.side_h, rebuilt.side_h);
    cmp("vertical structure", expected.vertical, rebuilt.vertical);
    cmp("horizontal structure", expected.horizontal, rebuilt.horizontal);
  } catch (const Error& e) {
    rep.add("round trip completes", false, e.what());
  }
  return rep;
}

CheckReport roundtrip_hopfoid(const Hopfoid& h) {
  CheckReport rep;
  try {
    Hopfoid back = build_hopfoid(build_double(h));
    rep.add("round trip completes", true);
    rep.add("total carrier", h.total == back.total,
            h.total == back.total ? "" : "differ as sets");
    rep.add("core carrier", h.core == back.core,
            h.core == back.core ? "" : "differ as sets");
    auto cmp = [&](const std::string& name, const Relation& x,
                   const Relation& y) {
      bool ok = relations_equal(x, y);
      rep.add(name, ok, ok ? "" : first_difference(x, y));
    };
    cmp("target relation", h.target, back.target);
    cmp("source relation", h.source, back.source);
    cmp("unit relation", h.unit, back.unit);
    cmp("product relation", h.product, back.product);
    cmp("coproduct relation", h.coproduct, back.coproduct);
    cmp("counit relation", h.counit, back.counit);
    cmp("star relation", h.star, back.star);
    cmp("antipode relation", h.antipode, back.antipode);
  } catch (const Error& e) {
    rep.add("round trip completes", false, e.what());
  }
  return rep;
}

Hopfoid inertia_hopfoid_oracle(const Groupoid& g) {
  if (g.objects.size() != 1) {
    throw StructureError("the inertia oracle needs a one-object group");
  }
  const std::vector<Element>& members = g.arrows.elements();
  const Element unit_arrow =
      map_at(g.unit, g.objects.elements().front(), "unit");

  auto inverse = [&](const Element& x) -> const Element& {
    return map_at(g.inv, x, "inverse");
  };
  auto times = [&](const Element& x, const Element& y) {
    auto p = mul_at(g, x, y);
    if (!p) {
      throw StructureError("group product undefined at " + show_pair(x, y));
    }
    return *p;
  };

  Carrier total = tensor_carrier(g.arrows, g.arrows);
  std::vector<Element> core_elems;
  core_elems.reserve(members.size());
  for (const Element& x : members) core_elems.push_back(concat(x, unit_arrow));
  Carrier core = subcarrier(total, core_elems, g.arrows.name() + " core");

  std::vector<ElementPair> t_pairs, s_pairs, e_pairs, star_pairs, i_pairs;
  std::vector<ElementPair> m_pairs, delta_pairs;
  std::vector<Element> diag;
  for (const Element& x : members) {
    e_pairs.emplace_back(concat(x, unit_arrow), concat(x, unit_arrow));
    diag.push_back(concat(x, x));
    for (const Element& y : members) {
      Element sq = concat(x, y);
      t_pairs.emplace_back(sq, concat(times(x, inverse(y)), unit_arrow));
      s_pairs.emplace_back(sq, concat(times(inverse(y), x), unit_arrow));
      star_pairs.emplace_back(sq, concat(y, x));
      i_pairs.emplace_back(sq, concat(inverse(y), inverse(x)));
      for (const Element& k : members) {
        delta_pairs.emplace_back(sq, concat(concat(x, k), concat(k, y)));
      }
      for (const Element& a : members) {
        for (const Element& b : members) {
          m_pairs.emplace_back(concat(sq, concat(a, b)),
                               concat(times(x, a), times(y, b)));
        }
      }
    }
  }

  Carrier total_sq = tensor_carrier(total, total);
  return Hopfoid{
      total,
      core,
      Relation::make(total, core, std::move(t_pairs)),
      Relation::make(total, core, std::move(s_pairs)),
      Relation::make(core, total, std::move(e_pairs)),
      Relation::make(total_sq, total, std::move(m_pairs)),
      Relation::make(total, total_sq, std::move(delta_pairs)),
      transpose(subset_as_relation(total, diag)),
      Relation::make(total, total, std::move(star_pairs)),
      Relation::make(total, total, std::move(i_pairs)),
  };
}

}  // namespace finrel

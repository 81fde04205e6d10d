#include "finrel/double_groupoid.hpp"

#include <algorithm>
#include <set>

namespace finrel {

std::string to_string(EdgeSide side) {
  switch (side) {
    case EdgeSide::top:
      return "top";
    case EdgeSide::right:
      return "right";
    case EdgeSide::bottom:
      return "bottom";
    case EdgeSide::left:
      return "left";
  }
  return "?";
}

namespace {

// Product lookup that insists on the entry being present.
const Element& req_mul(const Groupoid& g, const Element& a, const Element& b,
                       const std::string& what) {
  auto it = g.mul.find({a, b});
  if (it == g.mul.end()) {
    throw StructureError(what + ": product undefined at " + show_pair(a, b));
  }
  return it->second;
}

std::set<Element> unit_set(const Groupoid& g) {
  std::set<Element> out;
  for (const auto& [x, u] : g.unit) out.insert(u);
  return out;
}

}  // namespace

CheckReport validate_double(const DoubleGroupoid& d) {
  CheckReport rep;

  {
    bool ok = true;
    std::string w;
    auto require = [&](bool cond, const std::string& msg) {
      if (ok && !cond) {
        ok = false;
        w = msg;
      }
    };
    require(d.vertical.arrows == d.squares,
            "vertical arrows differ from the squares carrier");
    require(d.horizontal.arrows == d.squares,
            "horizontal arrows differ from the squares carrier");
    require(d.vertical.objects == d.side_v.arrows,
            "vertical objects differ from the side V arrows");
    require(d.horizontal.objects == d.side_h.arrows,
            "horizontal objects differ from the side H arrows");
    require(d.side_v.objects == d.side_h.objects,
            "the side groupoids disagree on the base objects");
    rep.add("carriers consistent", ok, w);
  }

  rep.absorb(validate_groupoid(d.side_v), "side V");
  rep.absorb(validate_groupoid(d.side_h), "side H");
  rep.absorb(validate_groupoid(d.vertical), "vertical structure");
  rep.absorb(validate_groupoid(d.horizontal), "horizontal structure");

  const auto& squares = d.squares.elements();

  auto corner = [&](const std::string& name, const ElementMap& edge1,
                    const ElementMap& end1, const ElementMap& edge2,
                    const ElementMap& end2, const std::string& formula) {
    bool ok = true;
    std::string w;
    for (const Element& a : squares) {
      const Element* e1 = lookup(edge1, a);
      const Element* e2 = lookup(edge2, a);
      const Element* m1 = e1 ? lookup(end1, *e1) : nullptr;
      const Element* m2 = e2 ? lookup(end2, *e2) : nullptr;
      if (!m1 || !m2 || *m1 != *m2) {
        ok = false;
        w = "square " + show(a);
        break;
      }
    }
    rep.add(name, ok, w, formula);
  };
  corner("corner top-right", d.vertical.src, d.side_v.src, d.horizontal.src,
         d.side_h.src, "srcV(top(a)) = srcH(right(a))");
  corner("corner top-left", d.vertical.src, d.side_v.tgt, d.horizontal.tgt,
         d.side_h.src, "tgtV(top(a)) = srcH(left(a))");
  corner("corner bottom-left", d.vertical.tgt, d.side_v.tgt, d.horizontal.tgt,
         d.side_h.tgt, "tgtV(bottom(a)) = tgtH(left(a))");
  corner("corner bottom-right", d.vertical.tgt, d.side_v.src, d.horizontal.src,
         d.side_h.tgt, "srcV(bottom(a)) = tgtH(right(a))");

  // Edge suites: each edge map must carry one square composition to the side
  // composition, square units to side units, and square inverses to side
  // inverses.
  auto edge_suite = [&](const std::string& name, const ElementMap& edge,
                        const Groupoid& over,    // structure composed by edge
                        const Groupoid& side,    // side groupoid of the edge
                        const Groupoid& other,   // the other side groupoid
                        const ElementMap& sq_unit,  // other's arrows -> squares
                        const ElementMap& unit_end,  // side end of unit square
                        const ElementMap& sq_inv,    // inverse in `over`
                        const std::string& formula) {
    bool ok = true;
    std::string w;
    for (const auto& [key, ab] : over.mul) {
      const Element* ea = lookup(edge, key.first);
      const Element* eb = lookup(edge, key.second);
      const Element* eab = lookup(edge, ab);
      std::optional<Element> side_prod =
          (ea && eb) ? mul_at(side, *ea, *eb) : std::nullopt;
      if (!eab || !side_prod || *eab != *side_prod) {
        ok = false;
        w = "composition at " + show_pair(key.first, key.second);
        break;
      }
    }
    if (ok) {
      for (const Element& lam : other.arrows.elements()) {
        const Element* usq = lookup(sq_unit, lam);
        const Element* e = usq ? lookup(edge, *usq) : nullptr;
        const Element* base = lookup(unit_end, lam);
        const Element* uside = base ? lookup(side.unit, *base) : nullptr;
        if (!e || !uside || *e != *uside) {
          ok = false;
          w = "unit square of " + show(lam);
          break;
        }
      }
    }
    if (ok) {
      for (const Element& a : squares) {
        const Element* ia = lookup(sq_inv, a);
        const Element* eia = ia ? lookup(edge, *ia) : nullptr;
        const Element* ea = lookup(edge, a);
        const Element* iea = ea ? lookup(side.inv, *ea) : nullptr;
        if (!eia || !iea || *eia != *iea) {
          ok = false;
          w = "inverse of " + show(a);
          break;
        }
      }
    }
    rep.add(name, ok, w, formula);
  };

  edge_suite("top edge homomorphism", d.vertical.src, d.horizontal, d.side_v,
             d.side_h, d.horizontal.unit, d.side_h.src, d.horizontal.inv,
             "top : (squares over H) -> (V over M)");
  edge_suite("bottom edge homomorphism", d.vertical.tgt, d.horizontal,
             d.side_v, d.side_h, d.horizontal.unit, d.side_h.tgt,
             d.horizontal.inv, "bottom : (squares over H) -> (V over M)");
  edge_suite("right edge homomorphism", d.horizontal.src, d.vertical, d.side_h,
             d.side_v, d.vertical.unit, d.side_v.src, d.vertical.inv,
             "right : (squares over V) -> (H over M)");
  edge_suite("left edge homomorphism", d.horizontal.tgt, d.vertical, d.side_h,
             d.side_v, d.vertical.unit, d.side_v.tgt, d.vertical.inv,
             "left : (squares over V) -> (H over M)");

  // Unit suites: the two unit maps are homomorphisms into the square
  // structures.
  {
    bool ok = true;
    std::string w;
    for (const auto& [key, uv] : d.side_v.mul) {
      const Element* ua = lookup(d.vertical.unit, key.first);
      const Element* ub = lookup(d.vertical.unit, key.second);
      const Element* uuv = lookup(d.vertical.unit, uv);
      std::optional<Element> prod =
          (ua && ub) ? mul_at(d.horizontal, *ua, *ub) : std::nullopt;
      if (!uuv || !prod || *uuv != *prod) {
        ok = false;
        w = "V-arrows " + show_pair(key.first, key.second);
        break;
      }
    }
    if (ok) {
      for (const Element& v : d.side_v.arrows.elements()) {
        const Element* uv = lookup(d.vertical.unit, v);
        const Element* iv = lookup(d.side_v.inv, v);
        const Element* uiv = iv ? lookup(d.vertical.unit, *iv) : nullptr;
        const Element* huv = uv ? lookup(d.horizontal.inv, *uv) : nullptr;
        if (!uiv || !huv || *uiv != *huv) {
          ok = false;
          w = "V-arrow " + show(v);
          break;
        }
      }
    }
    rep.add("vertical unit homomorphism", ok, w,
            "vunit : (V over M) -> (squares over H)");
  }
  {
    bool ok = true;
    std::string w;
    for (const auto& [key, lm] : d.side_h.mul) {
      const Element* ua = lookup(d.horizontal.unit, key.first);
      const Element* ub = lookup(d.horizontal.unit, key.second);
      const Element* ulm = lookup(d.horizontal.unit, lm);
      std::optional<Element> prod =
          (ua && ub) ? mul_at(d.vertical, *ua, *ub) : std::nullopt;
      if (!ulm || !prod || *ulm != *prod) {
        ok = false;
        w = "H-arrows " + show_pair(key.first, key.second);
        break;
      }
    }
    if (ok) {
      for (const Element& lam : d.side_h.arrows.elements()) {
        const Element* ul = lookup(d.horizontal.unit, lam);
        const Element* il = lookup(d.side_h.inv, lam);
        const Element* uil = il ? lookup(d.horizontal.unit, *il) : nullptr;
        const Element* vul = ul ? lookup(d.vertical.inv, *ul) : nullptr;
        if (!uil || !vul || *uil != *vul) {
          ok = false;
          w = "H-arrow " + show(lam);
          break;
        }
      }
    }
    rep.add("horizontal unit homomorphism", ok, w,
            "hunit : (H over M) -> (squares over V)");
  }

  // Inverse suites: each square inverse is a homomorphism for the other
  // composition.
  {
    bool ok = true;
    std::string w;
    for (const auto& [key, ab] : d.horizontal.mul) {
      const Element* ia = lookup(d.vertical.inv, key.first);
      const Element* ib = lookup(d.vertical.inv, key.second);
      const Element* iab = lookup(d.vertical.inv, ab);
      std::optional<Element> prod =
          (ia && ib) ? mul_at(d.horizontal, *ia, *ib) : std::nullopt;
      if (!iab || !prod || *iab != *prod) {
        ok = false;
        w = "squares " + show_pair(key.first, key.second);
        break;
      }
    }
    rep.add("vertical inverse homomorphism", ok, w,
            "vinv(hmul(a,b)) = hmul(vinv(a), vinv(b))");
  }
  {
    bool ok = true;
    std::string w;
    for (const auto& [key, ab] : d.vertical.mul) {
      const Element* ia = lookup(d.horizontal.inv, key.first);
      const Element* ib = lookup(d.horizontal.inv, key.second);
      const Element* iab = lookup(d.horizontal.inv, ab);
      std::optional<Element> prod =
          (ia && ib) ? mul_at(d.vertical, *ia, *ib) : std::nullopt;
      if (!iab || !prod || *iab != *prod) {
        ok = false;
        w = "squares " + show_pair(key.first, key.second);
        break;
      }
    }
    rep.add("horizontal inverse homomorphism", ok, w,
            "hinv(vmul(a,b)) = vmul(hinv(a), hinv(b))");
  }

  {
    bool ok = true;
    std::string w;
    for (const Element& m : d.side_v.objects.elements()) {
      const Element* uv = lookup(d.side_v.unit, m);
      const Element* uh = lookup(d.side_h.unit, m);
      const Element* sq_v = uv ? lookup(d.vertical.unit, *uv) : nullptr;
      const Element* sq_h = uh ? lookup(d.horizontal.unit, *uh) : nullptr;
      if (!sq_v || !sq_h || *sq_v != *sq_h) {
        ok = false;
        w = "base point " + show(m);
        break;
      }
    }
    rep.add("unit exchange", ok, w, "vunit(unitV(m)) = hunit(unitH(m))");
  }

  {
    bool ok = true;
    std::string w;
    std::map<Element, std::vector<Element>> by_left, by_bottom;
    for (const Element& a : squares) {
      if (const Element* l = lookup(d.horizontal.tgt, a)) {
        by_left[*l].push_back(a);
      }
      if (const Element* b = lookup(d.vertical.tgt, a)) {
        by_bottom[*b].push_back(a);
      }
    }
    static const std::vector<Element> kNone;
    auto bucket = [](const std::map<Element, std::vector<Element>>& idx,
                     const Element& key) -> const std::vector<Element>& {
      auto it = idx.find(key);
      return it == idx.end() ? kNone : it->second;
    };
    for (const Element& a : squares) {
      const Element* ra = lookup(d.horizontal.src, a);
      const Element* ta = lookup(d.vertical.src, a);
      if (!ra || !ta) continue;
      for (const Element& b : bucket(by_left, *ra)) {
        const Element* tb = lookup(d.vertical.src, b);
        if (!tb) continue;
        for (const Element& c : bucket(by_bottom, *ta)) {
          const Element* rc = lookup(d.horizontal.src, c);
          if (!rc) continue;
          for (const Element& e : bucket(by_bottom, *tb)) {
            const Element* le = lookup(d.horizontal.tgt, e);
            if (!le || *le != *rc) continue;
            // The block shape holds: a | b on the bottom row, c | e above.
            std::optional<Element> row_bottom = mul_at(d.horizontal, a, b);
            std::optional<Element> row_top = mul_at(d.horizontal, c, e);
            std::optional<Element> col_left = mul_at(d.vertical, a, c);
            std::optional<Element> col_right = mul_at(d.vertical, b, e);
            std::optional<Element> rows_then_stack =
                (row_bottom && row_top)
                    ? mul_at(d.vertical, *row_bottom, *row_top)
                    : std::nullopt;
            std::optional<Element> cols_then_row =
                (col_left && col_right)
                    ? mul_at(d.horizontal, *col_left, *col_right)
                    : std::nullopt;
            if (!rows_then_stack || !cols_then_row ||
                *rows_then_stack != *cols_then_row) {
              ok = false;
              w = "block a=" + show(a) + " b=" + show(b) + " c=" + show(c) +
                  " d=" + show(e);
              break;
            }
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    rep.add("interchange", ok, w,
            "vmul(hmul(a,b), hmul(c,d)) = hmul(vmul(a,c), vmul(b,d))");
  }

  {
    bool ok = true;
    std::string w;
    std::set<ElementPair> hit;
    for (const Element& a : squares) {
      const Element* r = lookup(d.horizontal.src, a);
      const Element* t = lookup(d.vertical.src, a);
      if (r && t) hit.insert({*r, *t});
    }
    for (const Element& h : d.side_h.arrows.elements()) {
      const Element* mh = lookup(d.side_h.src, h);
      if (!mh) continue;
      for (const Element& v : d.side_v.arrows.elements()) {
        const Element* mv = lookup(d.side_v.src, v);
        if (!mv || *mv != *mh) continue;
        if (!hit.count({h, v})) {
          ok = false;
          w = "no square has right edge " + show(h) + " and top edge " +
              show(v);
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("double source surjectivity", ok, w,
            "(right, top) : squares -> H x_M V is onto");
  }

  return rep;
}

DoubleGroupoid transpose_double(const DoubleGroupoid& d) {
  return DoubleGroupoid{d.squares, d.side_h, d.side_v, d.horizontal,
                        d.vertical};
}

std::vector<Element> core_set(const DoubleGroupoid& d) {
  std::set<Element> vu = unit_set(d.side_v);
  std::set<Element> hu = unit_set(d.side_h);
  std::vector<Element> out;
  for (const Element& a : d.squares.elements()) {
    if (vu.count(map_at(d.vertical.src, a, "top edge")) &&
        hu.count(map_at(d.horizontal.src, a, "right edge"))) {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<Element> target_core_set(const DoubleGroupoid& d) {
  std::set<Element> vu = unit_set(d.side_v);
  std::set<Element> hu = unit_set(d.side_h);
  std::vector<Element> out;
  for (const Element& a : d.squares.elements()) {
    if (vu.count(map_at(d.vertical.tgt, a, "bottom edge")) &&
        hu.count(map_at(d.horizontal.tgt, a, "left edge"))) {
      out.push_back(a);
    }
  }
  return out;
}

Element double_inverse(const DoubleGroupoid& d, const Element& a) {
  return map_at(d.horizontal.inv, map_at(d.vertical.inv, a, "vertical inverse"),
                "horizontal inverse");
}

Groupoid core_groupoid_square(const DoubleGroupoid& d) {
  std::vector<Element> core = core_set(d);

  Groupoid out;
  out.arrows = subcarrier(d.squares, core, d.squares.name() + " core");
  out.objects = d.side_v.objects;
  for (const Element& c : core) {
    out.src[c] =
        map_at(d.side_v.src, map_at(d.vertical.src, c, "top edge"), "srcV");
    out.tgt[c] =
        map_at(d.side_v.tgt, map_at(d.vertical.tgt, c, "bottom edge"), "tgtV");
  }
  for (const Element& m : d.side_v.objects.elements()) {
    const Element& u = map_at(d.vertical.unit,
                              map_at(d.side_v.unit, m, "unitV"), "vunit");
    if (!out.arrows.contains(u)) {
      throw CoreError("double unit at " + show(m) +
                      " is not a core square: " + show(u));
    }
    out.unit[m] = u;
  }

  // Core product: fill in the 2x2 block
  //
  //     hunit(left(c'))  |  c'
  //     -----------------+---------------------
  //     c                |  vunit(bottom(c'))
  //
  // and evaluate it along both routes, which must agree.
  for (const Element& c : core) {
    for (const Element& c2 : core) {
      if (out.src[c] != out.tgt[c2]) continue;
      const Element& tl = map_at(
          d.horizontal.unit, map_at(d.horizontal.tgt, c2, "left edge"),
          "hunit");
      const Element& br = map_at(
          d.vertical.unit, map_at(d.vertical.tgt, c2, "bottom edge"), "vunit");
      std::string at = "core pair " + show_pair(c, c2);
      // rows first: bottom row (c | br), top row (tl | c'), then stack
      const Element& row_bottom = req_mul(d.horizontal, c, br, at);
      const Element& row_top = req_mul(d.horizontal, tl, c2, at);
      const Element& rows = req_mul(d.vertical, row_bottom, row_top, at);
      // columns first: left column (c under tl), right column (br under c')
      const Element& col_left = req_mul(d.vertical, c, tl, at);
      const Element& col_right = req_mul(d.vertical, br, c2, at);
      const Element& cols = req_mul(d.horizontal, col_left, col_right, at);
      if (rows != cols) {
        throw CoreError("the two routes for the core product disagree at " +
                        at + ": " + show(rows) + " vs " + show(cols));
      }
      if (!out.arrows.contains(rows)) {
        throw CoreError("core product at " + at +
                        " leaves the core: " + show(rows));
      }
      out.mul[{c, c2}] = rows;
    }
  }

  // Inverses by two-sided search, independent of any other construction.
  for (const Element& c : core) {
    const Element& unit_tgt = out.unit.at(out.tgt.at(c));
    const Element& unit_src = out.unit.at(out.src.at(c));
    const Element* found = nullptr;
    for (const Element& c2 : core) {
      auto right = out.mul.find({c, c2});
      auto left = out.mul.find({c2, c});
      if (right == out.mul.end() || left == out.mul.end()) continue;
      if (right->second != unit_tgt || left->second != unit_src) continue;
      if (found) {
        throw CoreError("core square " + show(c) +
                        " has more than one inverse");
      }
      found = &c2;
    }
    if (!found) {
      throw CoreError("core square " + show(c) + " has no inverse");
    }
    out.inv[c] = *found;
  }

  CheckReport rep = validate_groupoid(out);
  if (!rep.all_passed()) {
    throw CoreError("core groupoid fails the groupoid laws: " +
                    rep.failed_names());
  }
  return out;
}

std::vector<Element> coisotropic_subset(const DoubleGroupoid& d,
                                        EdgeSide side) {
  const ElementMap* edge = nullptr;
  const Groupoid* sg = nullptr;
  switch (side) {
    case EdgeSide::top:
      edge = &d.vertical.src;
      sg = &d.side_v;
      break;
    case EdgeSide::right:
      edge = &d.horizontal.src;
      sg = &d.side_h;
      break;
    case EdgeSide::bottom:
      edge = &d.vertical.tgt;
      sg = &d.side_v;
      break;
    case EdgeSide::left:
      edge = &d.horizontal.tgt;
      sg = &d.side_h;
      break;
  }
  std::set<Element> units = unit_set(*sg);
  std::vector<Element> out;
  for (const Element& a : d.squares.elements()) {
    if (units.count(map_at(*edge, a, to_string(side) + " edge"))) {
      out.push_back(a);
    }
  }
  return out;
}

namespace {

// The leaf through `a`: translate by all unit squares attachable on the
// facing side.
std::vector<Element> leaf_of(const DoubleGroupoid& d, EdgeSide side,
                             const Element& a) {
  std::vector<Element> out;
  const std::string what = "leaf translation (" + to_string(side) + ")";
  switch (side) {
    case EdgeSide::top: {
      const Element& m = map_at(
          d.side_v.src, map_at(d.vertical.src, a, "top edge"), "srcV");
      for (const Element& lam : d.side_h.arrows.elements()) {
        if (map_at(d.side_h.tgt, lam, "tgtH") != m) continue;
        const Element& u = map_at(d.horizontal.unit, lam, "hunit");
        out.push_back(req_mul(d.vertical, a, u, what));
      }
      break;
    }
    case EdgeSide::right: {
      const Element& m = map_at(
          d.side_h.src, map_at(d.horizontal.src, a, "right edge"), "srcH");
      for (const Element& v : d.side_v.arrows.elements()) {
        if (map_at(d.side_v.tgt, v, "tgtV") != m) continue;
        const Element& u = map_at(d.vertical.unit, v, "vunit");
        out.push_back(req_mul(d.horizontal, a, u, what));
      }
      break;
    }
    case EdgeSide::bottom: {
      const Element& m = map_at(
          d.side_v.src, map_at(d.vertical.tgt, a, "bottom edge"), "srcV");
      for (const Element& lam : d.side_h.arrows.elements()) {
        if (map_at(d.side_h.src, lam, "srcH") != m) continue;
        const Element& u = map_at(d.horizontal.unit, lam, "hunit");
        out.push_back(req_mul(d.vertical, u, a, what));
      }
      break;
    }
    case EdgeSide::left: {
      const Element& m = map_at(
          d.side_h.src, map_at(d.horizontal.tgt, a, "left edge"), "srcH");
      for (const Element& v : d.side_v.arrows.elements()) {
        if (map_at(d.side_v.src, v, "srcV") != m) continue;
        const Element& u = map_at(d.vertical.unit, v, "vunit");
        out.push_back(req_mul(d.horizontal, u, a, what));
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<Element>> leaf_partition(const DoubleGroupoid& d,
                                                 EdgeSide side) {
  std::vector<Element> subset = coisotropic_subset(d, side);
  std::set<Element> in_subset(subset.begin(), subset.end());
  std::set<Element> assigned;
  std::vector<std::vector<Element>> leaves;
  for (const Element& a : subset) {
    if (assigned.count(a)) continue;
    std::vector<Element> leaf = leaf_of(d, side, a);
    if (!std::binary_search(leaf.begin(), leaf.end(), a)) {
      throw StructureError("leaf of " + show(a) + " does not contain it");
    }
    for (const Element& b : leaf) {
      if (!in_subset.count(b)) {
        throw StructureError("leaf of " + show(a) +
                             " leaves the coisotropic subset at " + show(b));
      }
      if (assigned.count(b)) {
        throw StructureError("leaves overlap at " + show(b));
      }
      if (b != a && leaf_of(d, side, b) != leaf) {
        throw StructureError("leaf of " + show(b) +
                             " differs from the leaf of " + show(a));
      }
    }
    for (const Element& b : leaf) assigned.insert(b);
    leaves.push_back(std::move(leaf));
  }
  return leaves;
}

Relation reduction_relation(const DoubleGroupoid& d, EdgeSide side) {
  std::vector<Element> core = core_set(d);
  Carrier core_carrier =
      subcarrier(d.squares, core, d.squares.name() + " core");
  const std::string what = "reduction (" + to_string(side) + ")";
  std::vector<ElementPair> pairs;
  for (const Element& a : coisotropic_subset(d, side)) {
    Element rep;
    switch (side) {
      case EdgeSide::top: {
        const Element& lam = map_at(
            d.side_h.inv, map_at(d.horizontal.src, a, "right edge"), "invH");
        rep = req_mul(d.vertical, a, map_at(d.horizontal.unit, lam, "hunit"),
                      what);
        break;
      }
      case EdgeSide::right: {
        const Element& v = map_at(
            d.side_v.inv, map_at(d.vertical.src, a, "top edge"), "invV");
        rep = req_mul(d.horizontal, a, map_at(d.vertical.unit, v, "vunit"),
                      what);
        break;
      }
      case EdgeSide::bottom: {
        const Element& lam = map_at(
            d.side_h.inv, map_at(d.horizontal.tgt, a, "left edge"), "invH");
        Element z = req_mul(d.vertical, map_at(d.horizontal.unit, lam, "hunit"),
                            a, what);
        rep = double_inverse(d, z);
        break;
      }
      case EdgeSide::left: {
        const Element& v = map_at(
            d.side_v.inv, map_at(d.vertical.tgt, a, "bottom edge"), "invV");
        Element z = req_mul(d.horizontal, map_at(d.vertical.unit, v, "vunit"),
                            a, what);
        rep = double_inverse(d, z);
        break;
      }
    }
    pairs.emplace_back(a, std::move(rep));
  }
  return Relation::make(d.squares, core_carrier, std::move(pairs));
}

DoubleGroupoid embedded_double(const DoubleGroupoid& d) {
  ElementMap emb_v, emb_h, emb_m, id_sq;
  for (const Element& v : d.side_v.arrows.elements()) {
    emb_v[v] = map_at(d.vertical.unit, v, "vunit");
  }
  for (const Element& lam : d.side_h.arrows.elements()) {
    emb_h[lam] = map_at(d.horizontal.unit, lam, "hunit");
  }
  for (const Element& m : d.side_v.objects.elements()) {
    emb_m[m] = map_at(d.vertical.unit, map_at(d.side_v.unit, m, "unitV"),
                      "vunit");
  }
  for (const Element& a : d.squares.elements()) id_sq[a] = a;

  DoubleGroupoid out;
  out.squares = d.squares;
  out.side_v = transport_groupoid(d.side_v, emb_v, emb_m);
  out.side_h = transport_groupoid(d.side_h, emb_h, emb_m);
  out.vertical = transport_groupoid(d.vertical, id_sq, emb_v);
  out.horizontal = transport_groupoid(d.horizontal, id_sq, emb_h);
  return out;
}

bool doubles_equal_upto_units(const DoubleGroupoid& a,
                              const DoubleGroupoid& b) {
  DoubleGroupoid ea = embedded_double(a);
  DoubleGroupoid eb = embedded_double(b);
  return ea.squares == eb.squares && groupoids_equal(ea.side_v, eb.side_v) &&
         groupoids_equal(ea.side_h, eb.side_h) &&
         groupoids_equal(ea.vertical, eb.vertical) &&
         groupoids_equal(ea.horizontal, eb.horizontal);
}

}  // namespace finrel

#include "finrel/relation.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace finrel {

struct Relation::Data {
  Carrier dom;
  Carrier cod;
  std::vector<ElementPair> pairs;
};

namespace {

void sort_unique(std::vector<ElementPair>& pairs) {
  if (!std::is_sorted(pairs.begin(), pairs.end())) {
    std::sort(pairs.begin(), pairs.end());
  }
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

// Comparator for binary-searching a sorted pair vector by first component.
struct CmpFirst {
  bool operator()(const ElementPair& p, const Element& e) const {
    return p.first < e;
  }
  bool operator()(const Element& e, const ElementPair& p) const {
    return e < p.first;
  }
};

// Atom count shared by every element of c, when there is one.  With fixed
// block lengths a tuple has exactly one candidate split, so callers can
// slice instead of running the split search.
std::optional<std::size_t> fixed_atom_count(const Carrier& c) {
  if (c.is_point()) return 0;
  if (c.is_product()) {
    std::size_t total = 0;
    for (const Carrier& f : c.factor_list()) {
      auto n = fixed_atom_count(f);
      if (!n) return std::nullopt;
      total += *n;
    }
    return total;
  }
  const std::vector<Element>& els = c.elements();
  if (els.empty()) return std::nullopt;
  const std::size_t n = els.front().size();
  for (const Element& e : els) {
    if (e.size() != n) return std::nullopt;
  }
  return n;
}

// Offsets at which a tuple splits along the blocks, or empty when some
// block has elements of mixed atom counts.
std::vector<std::size_t> fixed_offsets(const std::vector<Carrier>& blocks) {
  std::vector<std::size_t> offsets{0};
  for (const Carrier& b : blocks) {
    auto n = fixed_atom_count(b);
    if (!n) return {};
    offsets.push_back(offsets.back() + *n);
  }
  return offsets;
}

}  // namespace

Relation Relation::make(Carrier dom, Carrier cod,
                        std::vector<ElementPair> pairs) {
  for (const ElementPair& p : pairs) {
    if (!dom.contains(p.first)) {
      throw MembershipError("relation pair " + show_pair(p.first, p.second) +
                            ": " + show(p.first) + " is not in domain '" +
                            dom.name() + "'");
    }
    if (!cod.contains(p.second)) {
      throw MembershipError("relation pair " + show_pair(p.first, p.second) +
                            ": " + show(p.second) + " is not in codomain '" +
                            cod.name() + "'");
    }
  }
  sort_unique(pairs);
  return trusted(std::move(dom), std::move(cod), std::move(pairs));
}

Relation Relation::trusted(Carrier dom, Carrier cod,
                           std::vector<ElementPair> pairs) {
  auto d = std::make_shared<Data>();
  d->dom = std::move(dom);
  d->cod = std::move(cod);
  d->pairs = std::move(pairs);
  return Relation(std::move(d));
}

const Carrier& Relation::dom() const { return data_->dom; }
const Carrier& Relation::cod() const { return data_->cod; }
const std::vector<ElementPair>& Relation::pairs() const { return data_->pairs; }
std::size_t Relation::size() const { return data_->pairs.size(); }

bool Relation::contains(const Element& from, const Element& to) const {
  return std::binary_search(data_->pairs.begin(), data_->pairs.end(),
                            ElementPair{from, to});
}

std::vector<Element> Relation::image_of(const Element& from) const {
  auto [lo, hi] = std::equal_range(data_->pairs.begin(), data_->pairs.end(),
                                   from, CmpFirst{});
  std::vector<Element> out;
  for (auto it = lo; it != hi; ++it) out.push_back(it->second);
  return out;
}

Relation identity(const Carrier& c) {
  std::vector<ElementPair> pairs;
  pairs.reserve(c.size());
  for (const Element& e : c.elements()) pairs.emplace_back(e, e);
  return Relation::trusted(c, c, std::move(pairs));
}

Relation compose(const Relation& r, const Relation& s) {
  if (!(r.cod() == s.dom())) {
    throw CompositionError("cannot compose: middle carriers differ ('" +
                           r.cod().name() + "' vs '" + s.dom().name() + "')");
  }
  std::vector<ElementPair> out;
  const auto& sp = s.pairs();
  for (const ElementPair& p : r.pairs()) {
    auto [lo, hi] = std::equal_range(sp.begin(), sp.end(), p.second, CmpFirst{});
    for (auto it = lo; it != hi; ++it) out.emplace_back(p.first, it->second);
  }
  sort_unique(out);
  return Relation::trusted(r.dom(), s.cod(), std::move(out));
}

Relation transpose(const Relation& r) {
  std::vector<ElementPair> out;
  out.reserve(r.size());
  for (const ElementPair& p : r.pairs()) out.emplace_back(p.second, p.first);
  sort_unique(out);
  return Relation::trusted(r.cod(), r.dom(), std::move(out));
}

Relation tensor(const Relation& r, const Relation& s) {
  std::vector<ElementPair> out;
  out.reserve(r.size() * s.size());
  for (const ElementPair& p : r.pairs()) {
    for (const ElementPair& q : s.pairs()) {
      out.emplace_back(concat(p.first, q.first), concat(p.second, q.second));
    }
  }
  sort_unique(out);
  return Relation::trusted(tensor_carrier(r.dom(), s.dom()),
                           tensor_carrier(r.cod(), s.cod()), std::move(out));
}

Relation swap_relation(const Carrier& a, const Carrier& b) {
  std::vector<ElementPair> out;
  out.reserve(a.size() * b.size());
  for (const Element& x : a.elements()) {
    for (const Element& y : b.elements()) {
      out.emplace_back(concat(x, y), concat(y, x));
    }
  }
  sort_unique(out);
  return Relation::trusted(tensor_carrier(a, b), tensor_carrier(b, a),
                           std::move(out));
}

Relation diagonal_relation(const Carrier& c) {
  std::vector<ElementPair> out;
  out.reserve(c.size());
  for (const Element& x : c.elements()) {
    out.emplace_back(Element{}, concat(x, x));
  }
  sort_unique(out);
  return Relation::trusted(Carrier::point(), tensor_carrier(c, c),
                           std::move(out));
}

Relation subset_as_relation(const Carrier& c,
                            const std::vector<Element>& subset) {
  std::vector<ElementPair> pairs;
  pairs.reserve(subset.size());
  for (const Element& e : subset) pairs.emplace_back(Element{}, e);
  return Relation::make(Carrier::point(), c, std::move(pairs));
}

Relation graph_relation(const Carrier& dom, const Carrier& cod,
                        const std::map<Element, Element>& f) {
  std::vector<ElementPair> pairs;
  pairs.reserve(f.size());
  for (const auto& [x, y] : f) pairs.emplace_back(x, y);
  return Relation::make(dom, cod, std::move(pairs));
}

RelationClass classify(const Relation& r) {
  std::set<Element> froms, tos;
  bool coinjective = true;
  const auto& pairs = r.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    froms.insert(pairs[i].first);
    tos.insert(pairs[i].second);
    if (i > 0 && pairs[i].first == pairs[i - 1].first) coinjective = false;
  }
  std::set<Element> seen_targets;
  bool injective = true;
  for (const ElementPair& p : pairs) {
    if (!seen_targets.insert(p.second).second) injective = false;
  }
  RelationClass out;
  out.cosurjective = froms.size() == r.dom().size();
  out.surjective = tos.size() == r.cod().size();
  out.coinjective = coinjective;
  out.injective = injective;
  return out;
}

bool relations_equal(const Relation& a, const Relation& b) {
  return a.pairs() == b.pairs() && a.dom() == b.dom() && a.cod() == b.cod();
}

bool is_reduction(const Relation& r) {
  return relations_equal(compose(transpose(r), r), identity(r.cod()));
}

bool is_coreduction(const Relation& r) { return is_reduction(transpose(r)); }

Relation permute_cod_blocks(const Relation& r,
                            const std::vector<Carrier>& blocks,
                            const std::vector<std::size_t>& perm) {
  const std::vector<Carrier>& factors = blocks;
  {
    Carrier joined = Carrier::point();
    for (const Carrier& b : blocks) joined = tensor_carrier(joined, b);
    if (!(joined == r.cod())) {
      throw StructureError(
          "the given blocks do not tensor to the codomain '" +
          r.cod().name() + "'");
    }
  }
  if (perm.size() != factors.size()) {
    throw StructureError("block permutation has size " +
                         std::to_string(perm.size()) + " but there are " +
                         std::to_string(factors.size()) + " blocks");
  }
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i : perm) {
    if (i >= perm.size() || seen[i]) {
      throw StructureError("block permutation is not a permutation");
    }
    seen[i] = true;
  }
  Carrier cod = Carrier::point();
  for (std::size_t i : perm) cod = tensor_carrier(cod, factors[i]);
  const std::vector<std::size_t> offsets = fixed_offsets(factors);
  std::vector<ElementPair> out;
  out.reserve(r.size());
  for (const ElementPair& p : r.pairs()) {
    Element to;
    to.reserve(p.second.size());
    if (!offsets.empty()) {
      for (std::size_t i : perm) {
        to.insert(to.end(), p.second.begin() + offsets[i],
                  p.second.begin() + offsets[i + 1]);
      }
    } else {
      std::vector<Element> split = split_blocks(p.second, factors);
      for (std::size_t i : perm) {
        to.insert(to.end(), split[i].begin(), split[i].end());
      }
    }
    out.emplace_back(p.first, std::move(to));
  }
  sort_unique(out);
  return Relation::trusted(r.dom(), cod, std::move(out));
}

Relation permute_cod_blocks(const Relation& r,
                            const std::vector<std::size_t>& perm) {
  return permute_cod_blocks(r, r.cod().factor_list(), perm);
}

Relation compose_tensor_cod(const Relation& r,
                            const std::vector<Relation>& factors) {
  std::vector<Carrier> blocks_factors;
  Carrier dom_tensor = Carrier::point();
  Carrier cod = Carrier::point();
  for (const Relation& f : factors) {
    dom_tensor = tensor_carrier(dom_tensor, f.dom());
    cod = tensor_carrier(cod, f.cod());
    blocks_factors.push_back(f.dom());
  }
  if (!(r.cod() == dom_tensor)) {
    throw CompositionError(
        "cannot compose blockwise: codomain '" + r.cod().name() +
        "' does not match the tensored factor domains '" + dom_tensor.name() +
        "'");
  }
  const std::vector<std::size_t> offsets = fixed_offsets(blocks_factors);
  using PairIt = std::vector<ElementPair>::const_iterator;
  std::vector<std::pair<PairIt, PairIt>> spans(factors.size());
  std::vector<PairIt> idx(factors.size());
  Element block;
  std::vector<ElementPair> out;
  for (const ElementPair& p : r.pairs()) {
    // Locate the image range of each block.
    bool any_empty = false;
    std::vector<Element> split;
    for (std::size_t i = 0; i < factors.size() && !any_empty; ++i) {
      if (!offsets.empty()) {
        block.assign(p.second.begin() + offsets[i],
                     p.second.begin() + offsets[i + 1]);
      } else {
        if (split.empty()) split = split_blocks(p.second, blocks_factors);
        block = split[i];
      }
      const auto& fp = factors[i].pairs();
      auto range = std::equal_range(fp.begin(), fp.end(), block, CmpFirst{});
      spans[i] = {range.first, range.second};
      any_empty = range.first == range.second;
    }
    if (any_empty) continue;
    // Expand the per-block images depth-first.
    for (std::size_t i = 0; i < factors.size(); ++i) idx[i] = spans[i].first;
    while (true) {
      Element to;
      to.reserve(p.second.size());
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const Element& part = idx[i]->second;
        to.insert(to.end(), part.begin(), part.end());
      }
      out.emplace_back(p.first, std::move(to));
      std::size_t i = factors.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++idx[i] != spans[i].second) {
          done = false;
          break;
        }
        idx[i] = spans[i].first;
      }
      if (done) break;
    }
  }
  sort_unique(out);
  return Relation::trusted(r.dom(), cod, std::move(out));
}

}  // namespace finrel

#include "finrel/carrier.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace finrel {

Element concat(const Element& a, const Element& b) {
  Element out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string show(const Element& e) {
  if (e.size() == 1) return e[0];
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += e[i];
  }
  out += ")";
  return out;
}

std::string show_pair(const Element& a, const Element& b) {
  return "(" + show(a) + " -> " + show(b) + ")";
}

struct Carrier::Data {
  std::string name;
  bool product = false;
  std::vector<Carrier> factors;  // product only; factors are explicit

  // Explicit carriers fill these eagerly; products fill them on first use.
  mutable std::vector<Element> elems;
  mutable std::set<std::size_t> lengths;  // distinct atom counts in elems
  mutable std::once_flag once;

  void index_lengths() const {
    for (const Element& e : elems) lengths.insert(e.size());
  }

  void enumerate_product() const {
    std::vector<Element> out;
    std::size_t total = 1;
    for (const Carrier& f : factors) total *= f.size();
    out.reserve(total);
    if (total > 0) {
      Element current;
      std::vector<std::size_t> idx(factors.size(), 0);
      // Odometer over the factor element lists.
      while (true) {
        current.clear();
        for (std::size_t i = 0; i < factors.size(); ++i) {
          const Element& part = factors[i].elements()[idx[i]];
          current.insert(current.end(), part.begin(), part.end());
        }
        out.push_back(current);
        std::size_t i = factors.size();
        while (i > 0) {
          --i;
          if (++idx[i] < factors[i].size()) break;
          idx[i] = 0;
          if (i == 0) {
            i = SIZE_MAX;
            break;
          }
        }
        if (factors.empty() || i == SIZE_MAX) break;
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    elems = std::move(out);
    index_lengths();
  }
};

Carrier::Carrier() : Carrier(point().data_) {}

Carrier Carrier::make(std::string name, std::vector<Element> elements) {
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  std::sort(elements.begin(), elements.end());
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (elements[i] == elements[i - 1]) {
      throw StructureError("carrier '" + d->name + "' has duplicate element " +
                           show(elements[i]));
    }
  }
  d->elems = std::move(elements);
  d->index_lengths();
  return Carrier(std::move(d));
}

Carrier Carrier::point() {
  static const Carrier pt = Carrier::make("pt", {Element{}});
  return pt;
}

const std::string& Carrier::name() const { return data_->name; }
bool Carrier::is_product() const { return data_->product; }

bool Carrier::is_point() const {
  return !data_->product && data_->elems.size() == 1 &&
         data_->elems[0].empty();
}

std::vector<Carrier> Carrier::factor_list() const {
  if (is_point()) return {};
  if (data_->product) return data_->factors;
  return {*this};
}

const std::vector<Element>& Carrier::elements() const {
  if (data_->product) {
    std::call_once(data_->once, [this] { data_->enumerate_product(); });
  }
  return data_->elems;
}

std::size_t Carrier::size() const { return elements().size(); }

bool Carrier::contains(const Element& e) const {
  if (!data_->product) {
    return std::binary_search(data_->elems.begin(), data_->elems.end(), e);
  }
  // Match atoms against the factor sequence without enumerating the product.
  const auto& factors = data_->factors;
  const std::size_t n = e.size(), nf = factors.size();
  std::vector<std::vector<signed char>> memo(n + 1,
                                             std::vector<signed char>(nf + 1, -1));
  auto match = [&](auto&& self, std::size_t i, std::size_t j) -> bool {
    signed char& m = memo[i][j];
    if (m != -1) return m == 1;
    bool ok = false;
    if (j == nf) {
      ok = (i == n);
    } else {
      for (std::size_t len : factors[j].data_->lengths) {
        if (i + len > n) continue;
        Element part(e.begin() + i, e.begin() + i + len);
        if (factors[j].contains(part) && self(self, i + len, j + 1)) {
          ok = true;
          break;
        }
      }
    }
    m = ok ? 1 : 0;
    return ok;
  };
  return match(match, 0, 0);
}

bool operator==(const Carrier& a, const Carrier& b) {
  if (a.data_ == b.data_) return true;
  if (a.data_->product && b.data_->product) {
    const auto& fa = a.data_->factors;
    const auto& fb = b.data_->factors;
    if (fa.size() == fb.size()) {
      bool all = true;
      for (std::size_t i = 0; i < fa.size(); ++i) {
        if (!(fa[i] == fb[i])) {
          all = false;
          break;
        }
      }
      if (all) return true;
      // Different factor lists can still present the same set; fall through.
    }
  } else if (!a.data_->product && !b.data_->product) {
    return a.data_->elems == b.data_->elems;
  }
  return a.elements() == b.elements();
}

Carrier tensor_carrier(const Carrier& a, const Carrier& b) {
  std::vector<Carrier> factors;
  for (const Carrier* c : {&a, &b}) {
    std::vector<Carrier> fl = c->factor_list();
    for (Carrier& f : fl) factors.push_back(std::move(f));
  }
  if (factors.empty()) return Carrier::point();
  if (factors.size() == 1) return factors[0];
  auto d = std::make_shared<Carrier::Data>();
  d->product = true;
  std::string name;
  for (const Carrier& f : factors) {
    if (!name.empty()) name += " x ";
    name += f.name();
  }
  d->name = std::move(name);
  d->factors = std::move(factors);
  return Carrier(std::move(d));
}

Carrier subcarrier(const Carrier& parent, std::vector<Element> subset,
                   std::string name) {
  for (const Element& e : subset) {
    if (!parent.contains(e)) {
      throw MembershipError("element " + show(e) + " is not in carrier '" +
                            parent.name() + "'");
    }
  }
  return Carrier::make(std::move(name), std::move(subset));
}

std::vector<Element> split_blocks(const Element& e,
                                  const std::vector<Carrier>& factors) {
  const std::size_t n = e.size(), nf = factors.size();
  // Count splits (capped at 2) and remember one split point per state so a
  // unique split can be reconstructed.
  std::vector<std::vector<int>> count(n + 1, std::vector<int>(nf + 1, -1));
  std::vector<std::vector<std::size_t>> next(n + 1,
                                             std::vector<std::size_t>(nf + 1, 0));
  auto walk = [&](auto&& self, std::size_t i, std::size_t j) -> int {
    int& c = count[i][j];
    if (c != -1) return c;
    if (j == nf) return c = (i == n) ? 1 : 0;
    c = 0;
    for (std::size_t len = 0; i + len <= n; ++len) {
      Element part(e.begin() + i, e.begin() + i + len);
      if (!factors[j].contains(part)) continue;
      int sub = self(self, i + len, j + 1);
      if (sub > 0) {
        if (c == 0) next[i][j] = i + len;
        c += sub;
        if (c >= 2) return c = 2;
      }
    }
    return c;
  };
  int total = walk(walk, 0, 0);
  if (total == 0) {
    throw StructureError("tuple " + show(e) +
                         " does not split along the given factors");
  }
  if (total > 1) {
    throw StructureError("tuple " + show(e) +
                         " splits ambiguously along the given factors");
  }
  std::vector<Element> blocks;
  std::size_t i = 0;
  for (std::size_t j = 0; j < nf; ++j) {
    std::size_t k = next[i][j];
    blocks.emplace_back(e.begin() + i, e.begin() + k);
    i = k;
  }
  return blocks;
}

}  // namespace finrel

#include "finrel/json_io.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace finrel {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const json& j, const char* key,
                         const std::string& path) {
  const json& f = field(j, key, path);
  if (!f.is_string()) fail(path + "." + key, "expected a string");
  return f.get<std::string>();
}

const json& array_field(const json& j, const char* key,
                        const std::string& path) {
  const json& f = field(j, key, path);
  if (!f.is_array()) fail(path + "." + key, "expected an array");
  return f;
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

json element_to_json(const Element& e) {
  if (e.size() == 1) return json(e[0]);
  json arr = json::array();
  for (const std::string& atom : e) arr.push_back(atom);
  return arr;
}

Element element_from_json(const json& j, const std::string& path) {
  if (j.is_string()) return {j.get<std::string>()};
  if (!j.is_array()) fail(path, "expected an element (string or atom array)");
  Element e;
  e.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(at(path, i), "expected a string atom");
    e.push_back(j[i].get<std::string>());
  }
  return e;
}

json carrier_to_json(const Carrier& c) {
  json elems = json::array();
  for (const Element& e : c.elements()) elems.push_back(element_to_json(e));
  return json{{"name", c.name()}, {"elements", std::move(elems)}};
}

Carrier carrier_from_json(const json& j, const std::string& path) {
  std::string name = string_field(j, "name", path);
  const json& elems = array_field(j, "elements", path);
  std::vector<Element> out;
  out.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    out.push_back(element_from_json(elems[i], at(path + ".elements", i)));
  }
  try {
    return Carrier::make(std::move(name), std::move(out));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

json map_to_json(const ElementMap& m) {
  json arr = json::array();
  for (const auto& [from, to] : m) {
    arr.push_back(json::array({element_to_json(from), element_to_json(to)}));
  }
  return arr;
}

ElementMap map_from_json(const json& j, const std::string& path) {
  ElementMap m;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& entry = j[i];
    if (!entry.is_array() || entry.size() != 2) {
      fail(at(path, i), "expected a [from, to] pair");
    }
    Element from = element_from_json(entry[0], at(path, i) + "[0]");
    Element to = element_from_json(entry[1], at(path, i) + "[1]");
    std::string shown = show(from);
    if (!m.emplace(std::move(from), std::move(to)).second) {
      fail(at(path, i), "duplicate key " + shown);
    }
  }
  return m;
}

json mul_to_json(const PartialMul& mul) {
  json arr = json::array();
  for (const auto& [pair, value] : mul) {
    arr.push_back(json::array({element_to_json(pair.first),
                               element_to_json(pair.second),
                               element_to_json(value)}));
  }
  return arr;
}

PartialMul mul_from_json(const json& j, const std::string& path) {
  PartialMul mul;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& entry = j[i];
    if (!entry.is_array() || entry.size() != 3) {
      fail(at(path, i), "expected a [left, right, product] triple");
    }
    Element left = element_from_json(entry[0], at(path, i) + "[0]");
    Element right = element_from_json(entry[1], at(path, i) + "[1]");
    Element value = element_from_json(entry[2], at(path, i) + "[2]");
    ElementPair key{std::move(left), std::move(right)};
    if (!mul.emplace(std::move(key), std::move(value)).second) {
      fail(at(path, i), "duplicate composable pair");
    }
  }
  return mul;
}

json pairs_to_json(const Relation& r) {
  json arr = json::array();
  for (const auto& [from, to] : r.pairs()) {
    arr.push_back(json::array({element_to_json(from), element_to_json(to)}));
  }
  return arr;
}

Relation relation_from_json(const json& j, Carrier dom, Carrier cod,
                            const std::string& path) {
  std::vector<ElementPair> pairs;
  pairs.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& entry = j[i];
    if (!entry.is_array() || entry.size() != 2) {
      fail(at(path, i), "expected a [from, to] pair");
    }
    pairs.emplace_back(element_from_json(entry[0], at(path, i) + "[0]"),
                       element_from_json(entry[1], at(path, i) + "[1]"));
  }
  try {
    return Relation::make(std::move(dom), std::move(cod), std::move(pairs));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

json groupoid_to_payload(const Groupoid& g) {
  return json{{"objects", carrier_to_json(g.objects)},
              {"arrows", carrier_to_json(g.arrows)},
              {"src", map_to_json(g.src)},
              {"tgt", map_to_json(g.tgt)},
              {"unit", map_to_json(g.unit)},
              {"inv", map_to_json(g.inv)},
              {"mul", mul_to_json(g.mul)}};
}

Groupoid groupoid_from_payload(const json& j, const std::string& path) {
  Groupoid g;
  g.objects = carrier_from_json(field(j, "objects", path), path + ".objects");
  g.arrows = carrier_from_json(field(j, "arrows", path), path + ".arrows");
  g.src = map_from_json(array_field(j, "src", path), path + ".src");
  g.tgt = map_from_json(array_field(j, "tgt", path), path + ".tgt");
  g.unit = map_from_json(array_field(j, "unit", path), path + ".unit");
  g.inv = map_from_json(array_field(j, "inv", path), path + ".inv");
  g.mul = mul_from_json(array_field(j, "mul", path), path + ".mul");
  return g;
}

json make_document(const char* kind, json payload) {
  return json{{"kind", kind},
              {"version", kSchemaVersion},
              {"payload", std::move(payload)}};
}

const json& checked_payload(const json& doc, const char* kind) {
  std::string found = document_kind(doc);
  if (found != kind) {
    throw ParseError(std::string("document.kind: expected '") + kind +
                     "', found '" + found + "'");
  }
  return doc.at("payload");
}

}  // namespace

json encode_groupoid(const Groupoid& g) {
  return make_document(kKindGroupoid, groupoid_to_payload(g));
}

json encode_double(const DoubleGroupoid& d) {
  json payload{{"squares", carrier_to_json(d.squares)},
               {"side_v", groupoid_to_payload(d.side_v)},
               {"side_h", groupoid_to_payload(d.side_h)},
               {"vertical", groupoid_to_payload(d.vertical)},
               {"horizontal", groupoid_to_payload(d.horizontal)}};
  return make_document(kKindDouble, std::move(payload));
}

json encode_hopfoid(const Hopfoid& h) {
  json payload{{"total", carrier_to_json(h.total)},
               {"core", carrier_to_json(h.core)},
               {"target", pairs_to_json(h.target)},
               {"source", pairs_to_json(h.source)},
               {"unit", pairs_to_json(h.unit)},
               {"product", pairs_to_json(h.product)},
               {"coproduct", pairs_to_json(h.coproduct)},
               {"counit", pairs_to_json(h.counit)},
               {"star", pairs_to_json(h.star)},
               {"antipode", pairs_to_json(h.antipode)}};
  return make_document(kKindHopfoid, std::move(payload));
}

std::string document_kind(const json& doc) {
  if (!doc.is_object()) throw ParseError("document: expected an object");
  std::string kind = string_field(doc, "kind", "document");
  std::string version = string_field(doc, "version", "document");
  if (version != kSchemaVersion) {
    throw ParseError("document.version: unsupported version '" + version +
                     "'");
  }
  const json& payload = field(doc, "payload", "document");
  if (!payload.is_object()) {
    throw ParseError("document.payload: expected an object");
  }
  if (kind != kKindGroupoid && kind != kKindDouble && kind != kKindHopfoid) {
    throw ParseError("document.kind: unknown kind '" + kind + "'");
  }
  return kind;
}

Groupoid decode_groupoid(const json& doc) {
  const json& p = checked_payload(doc, kKindGroupoid);
  return groupoid_from_payload(p, "payload");
}

DoubleGroupoid decode_double(const json& doc) {
  const json& p = checked_payload(doc, kKindDouble);
  DoubleGroupoid d;
  d.squares =
      carrier_from_json(field(p, "squares", "payload"), "payload.squares");
  d.side_v =
      groupoid_from_payload(field(p, "side_v", "payload"), "payload.side_v");
  d.side_h =
      groupoid_from_payload(field(p, "side_h", "payload"), "payload.side_h");
  d.vertical = groupoid_from_payload(field(p, "vertical", "payload"),
                                     "payload.vertical");
  d.horizontal = groupoid_from_payload(field(p, "horizontal", "payload"),
                                       "payload.horizontal");
  return d;
}

Hopfoid decode_hopfoid(const json& doc) {
  const json& p = checked_payload(doc, kKindHopfoid);
  Carrier total =
      carrier_from_json(field(p, "total", "payload"), "payload.total");
  Carrier core = carrier_from_json(field(p, "core", "payload"), "payload.core");
  Carrier doubled = tensor_carrier(total, total);
  Carrier pt = Carrier::point();
  auto rel = [&](const char* key, const Carrier& dom, const Carrier& cod) {
    return relation_from_json(array_field(p, key, "payload"), dom, cod,
                              std::string("payload.") + key);
  };
  return Hopfoid{total,
                 core,
                 rel("target", total, core),
                 rel("source", total, core),
                 rel("unit", core, total),
                 rel("product", doubled, total),
                 rel("coproduct", total, doubled),
                 rel("counit", total, pt),
                 rel("star", total, total),
                 rel("antipode", total, total)};
}

json report_to_json(const CheckReport& rep) {
  json checks = json::array();
  for (const CheckEntry& entry : rep.entries()) {
    checks.push_back(json{{"name", entry.name},
                          {"passed", entry.passed},
                          {"witness", entry.witness},
                          {"diagram", entry.diagram}});
  }
  return json{{"all_passed", rep.all_passed()}, {"checks", std::move(checks)}};
}

}  // namespace finrel

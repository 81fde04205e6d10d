#pragma once

#include <string>

#include "finrel/hopfoid.hpp"
#include "json.hpp"

namespace finrel {

// Documents are {"kind": ..., "version": "1", "payload": ...}.  Elements
// serialize as plain strings when they are single atoms and as arrays of
// atoms otherwise; relations as arrays of [from, to] pairs; multiplication
// tables as arrays of [left, right, product] triples.  Encoders emit keys
// in sorted order and arrays in element order, so equal inputs produce
// byte-identical text.
inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kKindGroupoid = "groupoid";
inline constexpr const char* kKindDouble = "double-groupoid";
inline constexpr const char* kKindHopfoid = "hopfoid";

nlohmann::json encode_groupoid(const Groupoid& g);
nlohmann::json encode_double(const DoubleGroupoid& d);
nlohmann::json encode_hopfoid(const Hopfoid& h);

// The kind field of a document whose envelope is well formed; anything
// else raises ParseError naming the offending field.
std::string document_kind(const nlohmann::json& doc);

// Decoders check the envelope, the kind, and element membership, raising
// ParseError with the JSON path of the failure.  They do not check the
// algebraic laws; that is what the validation commands are for.
Groupoid decode_groupoid(const nlohmann::json& doc);
DoubleGroupoid decode_double(const nlohmann::json& doc);
Hopfoid decode_hopfoid(const nlohmann::json& doc);

nlohmann::json report_to_json(const CheckReport& rep);

}  // namespace finrel

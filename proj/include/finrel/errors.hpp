#pragma once

#include <stdexcept>
#include <string>

namespace finrel {

// Base class for every error thrown by this library.  Each subclass marks a
// distinct failure site so callers can react per layer instead of string
// matching.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Composing or comparing relations whose carriers do not line up.
struct CompositionError : Error {
  using Error::Error;
};

// An element was used with a carrier it does not belong to.
struct MembershipError : Error {
  using Error::Error;
};

// Malformed data: duplicate identifiers, non-total structure maps, ambiguous
// tuple splits, subsets that fail to partition, and similar.
struct StructureError : Error {
  using Error::Error;
};

// A multiplication table failed the group/groupoid table laws.
struct TableError : Error {
  using Error::Error;
};

// Restricting a groupoid to an arrow subset that is not closed.
struct RestrictionError : Error {
  using Error::Error;
};

// Extracting functional structure (source/target/product) from relational
// data failed: a required element was missing or not unique.
struct ExtractionError : Error {
  using Error::Error;
};

// The two evaluation routes for a core product disagreed, or a core inverse
// was missing/not unique.
struct CoreError : Error {
  using Error::Error;
};

// Rebuilding a double groupoid from its algebraic presentation failed; the
// message carries the stage that broke.
struct ReverseError : Error {
  using Error::Error;
};

// Input documents that cannot be decoded (bad JSON, wrong kind or version).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace finrel

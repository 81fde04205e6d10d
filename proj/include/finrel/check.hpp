#pragma once

#include <string>
#include <vector>

#include "finrel/errors.hpp"

namespace finrel {

// Outcome of a single named law.  `witness` holds a concrete counterexample
// when the law fails (empty otherwise); `diagram` renders the equation that
// was evaluated, when there is one.
struct CheckEntry {
  std::string name;
  bool passed = false;
  std::string witness;
  std::string diagram;
};

// Ordered list of check outcomes produced by the validators.  Validators
// always run every check; they never stop at the first failure.
class CheckReport {
 public:
  void add(std::string name, bool passed, std::string witness = "",
           std::string diagram = "");

  // Merge another report, prefixing each entry name with `prefix + ": "`.
  void absorb(const CheckReport& other, const std::string& prefix);

  bool all_passed() const;
  const std::vector<CheckEntry>& entries() const { return entries_; }

  // First entry with the given name, or nullptr.
  const CheckEntry* find(const std::string& name) const;

  // Names of all failed entries, comma separated (empty if none).
  std::string failed_names() const;

  // Multi-line human readable rendering, one check per line.
  std::string to_text() const;

 private:
  std::vector<CheckEntry> entries_;
};

// A structure that was required to be valid failed its checks; carries the
// full report for diagnosis.
struct ValidationError : Error {
  ValidationError(const std::string& msg, CheckReport rep)
      : Error(msg + " [failed: " + rep.failed_names() + "]"),
        report(std::move(rep)) {}
  CheckReport report;
};

}  // namespace finrel

#include "finrel/check.hpp"

#include <sstream>

namespace finrel {

void CheckReport::add(std::string name, bool passed, std::string witness,
                      std::string diagram) {
  entries_.push_back(CheckEntry{std::move(name), passed, std::move(witness),
                                std::move(diagram)});
}

void CheckReport::absorb(const CheckReport& other, const std::string& prefix) {
  for (const CheckEntry& e : other.entries_) {
    entries_.push_back(
        CheckEntry{prefix + ": " + e.name, e.passed, e.witness, e.diagram});
  }
}

bool CheckReport::all_passed() const {
  for (const CheckEntry& e : entries_) {
    if (!e.passed) return false;
  }
  return true;
}

const CheckEntry* CheckReport::find(const std::string& name) const {
  for (const CheckEntry& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::string CheckReport::failed_names() const {
  std::string out;
  for (const CheckEntry& e : entries_) {
    if (e.passed) continue;
    if (!out.empty()) out += ", ";
    out += e.name;
  }
  return out;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  for (const CheckEntry& e : entries_) {
    os << (e.passed ? "pass" : "FAIL") << "  " << e.name;
    if (!e.diagram.empty()) os << "  [" << e.diagram << "]";
    if (!e.passed && !e.witness.empty()) os << "  witness: " << e.witness;
    os << '\n';
  }
  return os.str();
}

}  // namespace finrel

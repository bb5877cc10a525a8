#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace archcat {

// One broken rule in an input document. `rule` is a stable machine-readable
// tag (e.g. "missing-composite"); `message` names the offending entities.
struct Violation {
  std::string rule;
  std::string message;

  bool operator==(const Violation&) const = default;
};

// Result of checking a document against its structural laws. Validators
// report *every* violation of the phase that failed first (name resolution,
// then table structure, then algebraic laws), in declaration order, so a
// fixed input always yields the same list.
struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Thrown by constructors that require an already-valid document.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, std::vector<Violation> violations)
      : std::runtime_error(what + describe(violations)),
        violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string describe(const std::vector<Violation>& vs) {
    std::string out;
    for (const auto& v : vs) {
      out += "\n  [" + v.rule + "] " + v.message;
    }
    return out;
  }

  std::vector<Violation> violations_;
};

}  // namespace archcat

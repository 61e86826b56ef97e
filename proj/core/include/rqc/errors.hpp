#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rqc {

struct Violation {
  std::string constraint;
  double magnitude = 0.0;
};

// A report is valid exactly when it carries no violations.
struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  std::string describe() const;
};

// Bad user input: malformed parameters, unphysical states, out-of-range values.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidState : public InvalidInput {
 public:
  explicit InvalidState(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// A numerical procedure failed to converge or produced inconsistent results.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rqc

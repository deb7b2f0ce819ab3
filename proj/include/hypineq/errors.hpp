#pragma once

#include <stdexcept>
#include <string>

namespace hypineq {

// A theorem's hypothesis on (N, p) or on the test function does not hold.
// `predicate` names the failed condition, e.g. "N >= 1 + p(p-1)".
class HypothesisError : public std::domain_error {
 public:
  HypothesisError(const std::string& predicate, const std::string& detail)
      : std::domain_error(predicate + ": " + detail), predicate_(predicate) {}

  const std::string& predicate() const noexcept { return predicate_; }

 private:
  std::string predicate_;
};

// Evaluation outside the domain where a closed-form quantity is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Report/golden files that do not match the expected schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypineq

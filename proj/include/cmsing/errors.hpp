#pragma once

#include <stdexcept>
#include <string>

namespace cmsing {

// Input outside an operation's domain (zero divisor, empty polynomial, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A graded product whose cyclotomic reduction leaves a negative multiplicity.
struct NotAPolynomial : std::runtime_error {
  NotAPolynomial(int k, int multiplicity)
      : std::runtime_error("not a polynomial: Phi_" + std::to_string(k) +
                           " has residual multiplicity " +
                           std::to_string(multiplicity)),
        cyclotomic_index(k),
        residual(multiplicity) {}
  int cyclotomic_index;
  int residual;
};

// An identity that must hold by construction failed.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// The computation was declined, e.g. over the size bound or for a reducible
// representation.
struct Refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text input.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A dataset that fails its consistency checks.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cmsing

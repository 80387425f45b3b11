#pragma once

#include <stdexcept>
#include <string>

namespace zetacoef {

/// Argument outside the mathematical domain of the requested quantity
/// (a <= 0, lambda = 1 for the Lerch family, s = 1 for the oracle, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A well-formed request this library deliberately does not handle.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A series term evaluated to NaN or infinity.
class NonFiniteTermError : public std::runtime_error {
 public:
  explicit NonFiniteTermError(long index)
      : std::runtime_error("non-finite series term at k=" + std::to_string(index)),
        index_(index) {}

  long index() const noexcept { return index_; }

 private:
  long index_;
};

}  // namespace zetacoef

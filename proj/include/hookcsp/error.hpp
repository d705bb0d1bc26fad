#pragma once

#include <stdexcept>
#include <string>

namespace hookcsp {

/// Input whose rows do not form a left-justified Young diagram.
class MalformedShape : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on an operation's arguments does not hold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The family SSYT(lambda, mu) is empty (beta < 0).
class InfeasibleFamily : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two computations that must agree did not. Always an implementation bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hookcsp

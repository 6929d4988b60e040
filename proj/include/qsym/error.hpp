#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

/// Input rejected by a constructor or operation precondition.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Two independent computations of the same quantity disagreed.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation needed an irreducible outside the finite label set it was given.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Floating point could not resolve a decision (rank, eigenvalue clusters).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qsym

#pragma once

#include <stdexcept>
#include <string>

namespace toricideal {

/// A mathematical precondition of an operation does not hold for the input
/// (not a bug, not a parse failure).
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

/// K_X + Delta has no rational Cartier witness w.
class NotQCartier : public PreconditionError {
 public:
  explicit NotQCartier(const std::string& what) : PreconditionError(what) {}
};

/// Smooth refinement did not finish within its iteration cap.
class ResolutionError : public PreconditionError {
 public:
  explicit ResolutionError(const std::string& what) : PreconditionError(what) {}
};

/// Malformed problem file or command line.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace toricideal

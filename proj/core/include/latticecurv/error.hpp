#pragma once

#include <stdexcept>
#include <string>

namespace latticecurv {

/// Base class for every error the library raises. `kind()` is a stable,
/// machine-readable tag used by the CLI when emitting error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("parse", message) {}
};

class DuplicatePointError : public Error {
 public:
  DuplicatePointError(std::size_t first, std::size_t second, const std::string& message)
      : Error("duplicate-point", message), first_(first), second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message) : Error("precondition", message) {}

 protected:
  PreconditionError(std::string kind, const std::string& message)
      : Error(std::move(kind), message) {}
};

class UndefinedDistanceError : public PreconditionError {
 public:
  explicit UndefinedDistanceError(const std::string& message)
      : PreconditionError("undefined-distance", message) {}
};

class DomainError : public PreconditionError {
 public:
  explicit DomainError(const std::string& message) : PreconditionError("domain", message) {}
};

/// beta >= sqrt(2) * d_min: bond segments may cross.
class PlanarityError : public PreconditionError {
 public:
  PlanarityError(double beta, double dmin, const std::string& message)
      : PreconditionError("planarity", message), beta_(beta), dmin_(dmin) {}

  double beta() const noexcept { return beta_; }
  double dmin() const noexcept { return dmin_; }

 private:
  double beta_;
  double dmin_;
};

class BoundaryNotSimpleError : public PreconditionError {
 public:
  explicit BoundaryNotSimpleError(const std::string& message)
      : PreconditionError("boundary-not-simple", message) {}
};

class NotOnLatticeError : public PreconditionError {
 public:
  explicit NotOnLatticeError(const std::string& message)
      : PreconditionError("not-on-lattice", message) {}
};

class SamplingError : public Error {
 public:
  SamplingError(long long attempts, const std::string& message)
      : Error("sampling-budget", message), attempts_(attempts) {}

  long long attempts() const noexcept { return attempts_; }

 private:
  long long attempts_;
};

class BudgetExceededError : public Error {
 public:
  explicit BudgetExceededError(const std::string& message) : Error("budget-exceeded", message) {}
};

/// No valid chord was found while triangulating a face. Indicates a bug in
/// face tracing, never expected for valid input.
class TriangulationError : public Error {
 public:
  explicit TriangulationError(const std::string& message) : Error("triangulation", message) {}
};

/// An identity that must hold exactly (Gauss-Bonnet, handshake, energy
/// decomposition) was violated. Carries both sides for diagnostics.
class IdentityViolation : public Error {
 public:
  IdentityViolation(std::string identity, double lhs, double rhs, const std::string& message)
      : Error("identity-violation", message), identity_(std::move(identity)), lhs_(lhs), rhs_(rhs) {}

  const std::string& identity() const noexcept { return identity_; }
  double lhs() const noexcept { return lhs_; }
  double rhs() const noexcept { return rhs_; }

 private:
  std::string identity_;
  double lhs_;
  double rhs_;
};

}  // namespace latticecurv

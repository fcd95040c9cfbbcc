#pragma once

#include <stdexcept>
#include <string>

namespace stabletail {

/// A parameter or argument lies outside the validated domain. The library
/// rejects rather than clamps: the remainder bounds are only proved on the
/// stated domain.
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// An inter-module contract was violated (e.g. a cdf value fed to the
/// inversion helper is not in [0,1] beyond tolerance).
class ContractError : public std::logic_error {
public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// The threshold bisection bracket does not contain the solution.
class BracketError : public std::runtime_error {
public:
  explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive quadrature hit its subdivision limit without meeting tolerance,
/// or produced a value outside [0,1] by more than the absolute tolerance.
class QuadratureFailure : public std::runtime_error {
public:
  explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

/// The brute-force oracle cannot certify its own truncation error.
class OracleAccuracyError : public std::runtime_error {
public:
  explicit OracleAccuracyError(const std::string& what) : std::runtime_error(what) {}
};

/// A pdf query lies below the certified tail region; this artifact has no
/// mid-range pdf path and refuses rather than extrapolates.
class OutOfValidatedRange : public std::runtime_error {
public:
  explicit OutOfValidatedRange(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stabletail

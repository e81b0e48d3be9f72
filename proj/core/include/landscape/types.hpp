#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace landscape {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Semantic aliases.  Validity (unitarity, skewness) is checked by the
// predicates in linalg.hpp, not by the type system.
using UnitaryMatrix = ComplexMatrix;
using SkewHermitianMatrix = ComplexMatrix;

// Violated precondition or malformed user input.  The CLI maps this to
// exit code 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A dense solver failed to converge.  CLI exit code 3.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration exceeded its --max-tables guard.  CLI exit code 1.
class GuardExceeded : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

namespace tol {

inline constexpr double kUnitary = 1e-10;    // scaled by N
inline constexpr double kHermitian = 1e-10;  // scaled by ||H||
inline constexpr double kSkew = 1e-12;       // scaled by ||X||
inline constexpr double kCritical = 1e-8;    // ||grad|| bound for Hessian ops
inline constexpr double kNormality = 1e-8;   // residual off the normal span
inline constexpr double kSlackFloor = -1e-9; // conjecture pass threshold

}  // namespace tol

}  // namespace landscape

#ifndef QCT_TYPES_HPP
#define QCT_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace qct {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Complex = std::complex<double>;

// Residual thresholds used throughout. eq_tol gates operator equalities,
// algebra_tol gates span/membership decisions, convergence_tol stops
// fixed-point iterations.
struct Tolerances {
  double eq_tol = 1e-10;
  double algebra_tol = 1e-8;
  double convergence_tol = 1e-12;

  void validate() const {
    if (!(eq_tol > 0) || !(algebra_tol > 0) || !(convergence_tol > 0))
      throw std::invalid_argument("Tolerances must be strictly positive");
  }
};

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotHermitian : Error {
  using Error::Error;
};
struct NotAntiHermitian : Error {
  using Error::Error;
};
struct NotUnitary : Error {
  using Error::Error;
};
struct EmptyGenerators : Error {
  using Error::Error;
};
struct OrderTooLarge : Error {
  using Error::Error;
};
struct InsufficientOrder : Error {
  using Error::Error;
};
struct ConvergenceGateFailed : Error {
  using Error::Error;
};
struct NormGateFailed : Error {
  using Error::Error;
};
struct MaxSweepsExceeded : Error {
  using Error::Error;
};
struct GateRestartLimit : Error {
  using Error::Error;
};
struct GeneratorOutsideAlgebra : Error {
  using Error::Error;
};
struct SmallTimeGateFailed : Error {
  using Error::Error;
};
struct NoAdmissibleCandidate : Error {
  using Error::Error;
};
struct ZeroDeviation : Error {
  using Error::Error;
};
struct DegenerateDenominator : Error {
  using Error::Error;
};
struct ParamConstraintViolated : Error {
  using Error::Error;
};
struct DiagonalizationMismatch : Error {
  using Error::Error;
};

}  // namespace qct

#endif

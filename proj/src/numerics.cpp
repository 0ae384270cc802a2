#include "qct/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace qct {

namespace {

void require_square(const ComplexMatrix& A, const char* who) {
  if (A.rows() != A.cols())
    throw DimensionMismatch(std::string(who) + ": matrix is not square");
  if (!A.allFinite()) throw Error(std::string(who) + ": non-finite entries");
}

double max_abs(const ComplexMatrix& A) { return A.cwiseAbs().maxCoeff(); }

}  // namespace

bool is_hermitian(const ComplexMatrix& A, double tol) {
  if (A.rows() != A.cols()) return false;
  return max_abs(A - A.adjoint()) <= tol;
}

bool is_anti_hermitian(const ComplexMatrix& A, double tol) {
  if (A.rows() != A.cols()) return false;
  return max_abs(A + A.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix& U, double tol) {
  if (U.rows() != U.cols()) return false;
  ComplexMatrix r = U.adjoint() * U;
  r.diagonal().array() -= 1.0;
  return max_abs(r) <= tol;
}

double hs_inner(const ComplexMatrix& X, const ComplexMatrix& Y) {
  return X.conjugate().cwiseProduct(Y).sum().real();
}

double frobenius_norm(const ComplexMatrix& A) { return A.norm(); }

double operator_norm(const ComplexMatrix& A) {
  require_square(A, "operator_norm");
  if (A.rows() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(A);
  return svd.singularValues()(0);
}

double ad_operator_norm(const ComplexMatrix& A) {
  require_square(A, "ad_operator_norm");
  const Eigen::Index d = A.rows();
  // vec([A, X]) = (I (x) A - A^T (x) I) vec(X), column-major vec
  ComplexMatrix super = ComplexMatrix::Zero(d * d, d * d);
  ComplexMatrix id = ComplexMatrix::Identity(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      super.block(i * d, j * d, d, d) = id(j, i) * A;
      super.block(i * d, j * d, d, d) -= A.transpose()(i, j) * id;
    }
  Eigen::JacobiSVD<ComplexMatrix> svd(super);
  return svd.singularValues()(0);
}

ComplexMatrix commutator(const ComplexMatrix& A, const ComplexMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw DimensionMismatch("commutator: operand dimensions differ");
  return A * B - B * A;
}

ComplexMatrix mat_exp(const ComplexMatrix& A) {
  require_square(A, "mat_exp");
  const double scale = std::max(1.0, max_abs(A));
  if (is_anti_hermitian(A, 1e-13 * scale)) {
    // A = -iH with H Hermitian; exp(A) = V exp(-i diag(w)) V^dagger
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(Complex(0, 1) * A);
    const RealVector w = es.eigenvalues();
    ComplexVector ph(w.size());
    for (Eigen::Index k = 0; k < w.size(); ++k)
      ph(k) = std::exp(Complex(0, -w(k)));
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
  }
  return A.exp();
}

UnitaryEigensystem unitary_eigensystem(const ComplexMatrix& U, double diag_tol) {
  const Eigen::Index d = U.rows();
  UnitaryEigensystem out;
  out.phases.resize(d);

  double offdiag = 0.0;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      if (i != j) offdiag = std::max(offdiag, std::abs(U(i, j)));
  if (offdiag <= diag_tol) {
    out.vectors = ComplexMatrix::Identity(d, d);
    for (Eigen::Index i = 0; i < d; ++i) out.phases(i) = std::arg(U(i, i));
    return out;
  }

  // U is normal, so its Schur form is diagonal and the Schur basis is an
  // orthonormal eigenbasis.
  Eigen::ComplexSchur<ComplexMatrix> schur(U, /*computeU=*/true);
  out.vectors = schur.matrixU();
  for (Eigen::Index i = 0; i < d; ++i) out.phases(i) = std::arg(schur.matrixT()(i, i));
  return out;
}

ComplexMatrix principal_log_unitary(const ComplexMatrix& U, const Tolerances& tol) {
  require_square(U, "principal_log_unitary");
  if (!is_unitary(U, tol.eq_tol))
    throw NotUnitary("principal_log_unitary: input is not unitary");
  const UnitaryEigensystem es = unitary_eigensystem(U);
  ComplexVector d(es.phases.size());
  for (Eigen::Index k = 0; k < es.phases.size(); ++k) d(k) = Complex(0, es.phases(k));
  return es.vectors * d.asDiagonal() * es.vectors.adjoint();
}

double dev(const ComplexMatrix& A, const Tolerances& tol) {
  require_square(A, "dev");
  if (!is_hermitian(A, tol.eq_tol)) throw NotHermitian("dev: input is not Hermitian");
  const double D = static_cast<double>(A.rows());
  const double tr = A.trace().real();
  const double tr2 = (A * A).trace().real();
  const double v = tr2 / D - (tr / D) * (tr / D);
  return std::sqrt(std::max(0.0, v));
}

}  // namespace qct

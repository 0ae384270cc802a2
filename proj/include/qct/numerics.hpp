#ifndef QCT_NUMERICS_HPP
#define QCT_NUMERICS_HPP

#include "qct/types.hpp"

namespace qct {

// Largest absolute entry of A - A^dagger (etc.); the predicates below
// compare these residuals against a tolerance.
bool is_hermitian(const ComplexMatrix& A, double tol);
bool is_anti_hermitian(const ComplexMatrix& A, double tol);
bool is_unitary(const ComplexMatrix& U, double tol);

// Real Hilbert-Schmidt inner product Re tr(X^dagger Y).
double hs_inner(const ComplexMatrix& X, const ComplexMatrix& Y);

double frobenius_norm(const ComplexMatrix& A);

// Largest singular value.
double operator_norm(const ComplexMatrix& A);

// Induced norm of X -> [A, X] on the Frobenius space, computed as the
// largest singular value of the D^2 x D^2 superoperator matrix.
double ad_operator_norm(const ComplexMatrix& A);

ComplexMatrix commutator(const ComplexMatrix& A, const ComplexMatrix& B);

// exp(A). Anti-Hermitian input goes through a unitary eigendecomposition
// of iA so the result is unitary to rounding; everything else falls back
// to scaling-and-squaring.
ComplexMatrix mat_exp(const ComplexMatrix& A);

// Spectral decomposition of a unitary matrix: U = V diag(exp(i phases)) V^dagger
// with orthonormal columns in V and phases in (-pi, pi]. If U is diagonal
// to within diag_tol the coordinate basis is kept as-is.
struct UnitaryEigensystem {
  RealVector phases;
  ComplexMatrix vectors;
};
UnitaryEigensystem unitary_eigensystem(const ComplexMatrix& U, double diag_tol = 1e-13);

// Anti-Hermitian C with e^C = U and all eigenphases in (-pi, pi].
ComplexMatrix principal_log_unitary(const ComplexMatrix& U, const Tolerances& tol = {});

// State-free deviation sqrt(tr(A^2)/D - (tr A / D)^2) of a Hermitian A.
double dev(const ComplexMatrix& A, const Tolerances& tol = {});

}  // namespace qct

#endif

#ifndef QCT_LIE_CLOSURE_HPP
#define QCT_LIE_CLOSURE_HPP

#include <string>
#include <utility>
#include <vector>

#include "qct/types.hpp"

namespace qct {

// Orthonormal basis (real Hilbert-Schmidt inner product) of the real Lie
// algebra generated by a set of anti-Hermitian matrices. generator_log
// records where each element came from: "generator k" or "[i,j]".
struct AlgebraBasis {
  Eigen::Index dim_space = 0;
  std::vector<ComplexMatrix> elements;
  std::vector<std::string> generator_log;

  std::size_t dimension() const { return elements.size(); }
};

// Breadth-first commutator closure: seed with Gram-Schmidt of the
// generators, then keep commuting pairs and accepting directions whose
// residual against the current span exceeds algebra_tol, until fixpoint.
AlgebraBasis closure(const std::vector<ComplexMatrix>& generators,
                     const Tolerances& tol = {});

// Orthogonal projection of X onto span(basis.elements); the residual is
// the Frobenius norm of what is left over.
std::pair<ComplexMatrix, double> project(const AlgebraBasis& basis,
                                         const ComplexMatrix& X);

bool contains(const AlgebraBasis& basis, const ComplexMatrix& X,
              const Tolerances& tol = {});

}  // namespace qct

#endif

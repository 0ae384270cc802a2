#include "qct/lie_closure.hpp"

#include <cmath>

#include "qct/numerics.hpp"

namespace qct {

namespace {

// Twice-iterated modified Gram-Schmidt. Returns the residual norm of X
// against the current span; X is replaced by its orthogonal remainder.
double orthogonalize(const std::vector<ComplexMatrix>& elements, ComplexMatrix& X) {
  for (int pass = 0; pass < 2; ++pass)
    for (const ComplexMatrix& e : elements) X -= hs_inner(e, X) * e;
  return frobenius_norm(X);
}

}  // namespace

AlgebraBasis closure(const std::vector<ComplexMatrix>& generators, const Tolerances& tol) {
  tol.validate();
  if (generators.empty()) throw EmptyGenerators("closure: no generators given");
  const Eigen::Index d = generators.front().rows();
  for (const ComplexMatrix& g : generators) {
    if (g.rows() != d || g.cols() != d)
      throw DimensionMismatch("closure: generators have differing dimensions");
    if (!is_anti_hermitian(g, tol.eq_tol))
      throw NotAntiHermitian("closure: generator is not anti-Hermitian");
  }

  AlgebraBasis basis;
  basis.dim_space = d;
  std::vector<int> generation;

  auto try_add = [&](ComplexMatrix X, const std::string& origin, int gen) {
    const double res = orthogonalize(basis.elements, X);
    if (res <= tol.algebra_tol) return false;
    basis.elements.push_back(X / res);
    basis.generator_log.push_back(origin);
    generation.push_back(gen);
    return true;
  };

  for (std::size_t k = 0; k < generators.size(); ++k)
    try_add(generators[k], "generator " + std::to_string(k), 0);
  if (basis.elements.empty())
    throw EmptyGenerators("closure: all generators numerically zero");

  const std::size_t cap = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  int gen = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = basis.elements.size();
    // Pairs where at least one side entered in the newest generation,
    // in fixed (i, j) order, so bases are reproducible run to run.
    for (std::size_t i = 0; i + 1 < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j) {
        if (generation[i] != gen && generation[j] != gen) continue;
        ComplexMatrix c = commutator(basis.elements[i], basis.elements[j]);
        if (try_add(std::move(c),
                    "[" + std::to_string(i) + "," + std::to_string(j) + "]", gen + 1))
          grew = true;
        if (basis.elements.size() > cap)
          throw Error("closure: basis exceeded D^2 elements; algebra_tol too small");
      }
    ++gen;
  }
  return basis;
}

std::pair<ComplexMatrix, double> project(const AlgebraBasis& basis, const ComplexMatrix& X) {
  if (X.rows() != basis.dim_space || X.cols() != basis.dim_space)
    throw DimensionMismatch("project: dimension differs from basis");
  ComplexMatrix inside = ComplexMatrix::Zero(X.rows(), X.cols());
  for (const ComplexMatrix& e : basis.elements) inside += hs_inner(e, X) * e;
  return {inside, frobenius_norm(X - inside)};
}

bool contains(const AlgebraBasis& basis, const ComplexMatrix& X, const Tolerances& tol) {
  return project(basis, X).second <= tol.algebra_tol;
}

}  // namespace qct

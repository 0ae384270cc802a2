#ifndef QCT_BCH_WORDS_HPP
#define QCT_BCH_WORDS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

#include "qct/types.hpp"

namespace qct {

using Rational = boost::multiprecision::cpp_rational;

// Binary words over {A, B} encoded as (1 << n) | bits, where bit i holds
// letter c_{i+1} (0 = A, 1 = B). The empty word is code 1; codes of
// length n occupy [2^n, 2^{n+1}).
using WordCode = std::uint32_t;

inline WordCode word_code(const std::vector<int>& letters) {
  WordCode bits = 0;
  for (std::size_t i = 0; i < letters.size(); ++i)
    bits |= static_cast<WordCode>(letters[i] & 1) << i;
  return (WordCode{1} << letters.size()) | bits;
}

inline int word_length(WordCode code) {
  int n = -1;
  while (code) {
    code >>= 1;
    ++n;
  }
  return n;
}

inline constexpr int kMaxWordOrder = 10;

// Coefficient of each word in the two-letter series
//   sum_{k>=1} (-1)^{k-1}/k (e^A e^B - I)^{k-1},
// exact rationals, all word lengths 0..N. Indexed by word code.
std::vector<Rational> build_f_table(int N);

struct GHTables {
  std::vector<Rational> g;  // word lengths 0..N-1
  std::vector<Rational> h;  // word lengths 0..N-2
  int g_max_len = 0;
  int h_max_len = 0;
};

// g from the alternating f recursion, h from the g reconstruction.
GHTables build_g_h_tables(const std::vector<Rational>& f_table);

// Bundle of all three coefficient maps at a fixed order: f holds word
// lengths 0..order, g up to order-1, h up to order-2.
struct WordCoefficientTable {
  int order = 0;
  std::vector<Rational> f;
  std::vector<Rational> g;
  std::vector<Rational> h;

  explicit WordCoefficientTable(int N);

  int g_max_len() const { return order - 1; }
  int h_max_len() const { return order - 2; }
};

struct ConvergenceConstants {
  double delta_hat = 0.0;
  double Delta_hat = 0.0;
  int truncation_order = 0;
  double safety_factor = 1.0;
};

// Truncated evaluation of the h-series constant. Truncation only drops
// nonnegative summands, so delta_hat overestimates the exact constant;
// the safety factor compensates and the synthesis loop re-checks descent
// at run time.
ConvergenceConstants delta_constants(const WordCoefficientTable& table, int N,
                                     double safety = 0.5);

struct BchResult {
  ComplexMatrix m;
  double truncation_residual = 0.0;
};

// Truncated series A + B + sum_c g(c) ad^c([A,B]) through nested
// commutators of at most N letters. Requires the convergence gate
// ||ad A||op + ||ad B||op < log 2.
BchResult bch_M(const ComplexMatrix& A, const ComplexMatrix& B,
                const WordCoefficientTable& table, int N);

struct NormInequalityResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// Checks ||M(A,B)||_F^2 <= 2||A||_F^2 + 2||B||_F^2 - ||A-B||_F^2 under the
// Frobenius gate ||A||_F, ||B||_F < Delta_hat.
NormInequalityResult check_norm_inequality(const ComplexMatrix& A, const ComplexMatrix& B,
                                           const WordCoefficientTable& table,
                                           const ConvergenceConstants& constants,
                                           const Tolerances& tol = {});

}  // namespace qct

#endif

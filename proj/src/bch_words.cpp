#include "qct/bch_words.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "qct/numerics.hpp"

namespace qct {

namespace {

boost::multiprecision::cpp_int factorial(int n) {
  boost::multiprecision::cpp_int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// p * q in the free algebra on two letters, truncated at total degree N.
std::vector<Rational> poly_mul(const std::vector<Rational>& p, const std::vector<Rational>& q,
                               int N) {
  std::vector<Rational> r(WordCode{1} << (N + 1), Rational(0));
  for (int n1 = 0; n1 <= N; ++n1) {
    const WordCode lo1 = WordCode{1} << n1;
    for (WordCode c1 = lo1; c1 < (lo1 << 1); ++c1) {
      if (p[c1] == 0) continue;
      const WordCode b1 = c1 - lo1;
      for (int n2 = 0; n1 + n2 <= N; ++n2) {
        const WordCode lo2 = WordCode{1} << n2;
        for (WordCode c2 = lo2; c2 < (lo2 << 1); ++c2) {
          if (q[c2] == 0) continue;
          const WordCode b2 = c2 - lo2;
          const WordCode cat = (WordCode{1} << (n1 + n2)) | b1 | (b2 << n1);
          r[cat] += p[c1] * q[c2];
        }
      }
    }
  }
  return r;
}

WordCode flip_bits(WordCode bits, int n) { return bits ^ ((WordCode{1} << n) - 1); }

WordCode reverse_bits(WordCode bits, int n) {
  WordCode r = 0;
  for (int i = 0; i < n; ++i)
    if (bits & (WordCode{1} << i)) r |= WordCode{1} << (n - 1 - i);
  return r;
}

}  // namespace

std::vector<Rational> build_f_table(int N) {
  if (N < 0) throw OrderTooLarge("build_f_table: negative order");
  if (N > kMaxWordOrder)
    throw OrderTooLarge("build_f_table: order exceeds hard cap " +
                        std::to_string(kMaxWordOrder));

  const std::size_t size = std::size_t{1} << (N + 1);
  // x = e^A e^B - I: the only contributing words are A^j B^l.
  std::vector<Rational> x(size, Rational(0));
  for (int j = 0; j <= N; ++j)
    for (int l = 0; j + l <= N; ++l) {
      if (j + l == 0) continue;
      const WordCode bits = ((WordCode{1} << l) - 1) << j;
      x[(WordCode{1} << (j + l)) | bits] = Rational(1, factorial(j) * factorial(l));
    }

  std::vector<Rational> f(size, Rational(0));
  std::vector<Rational> xp(size, Rational(0));
  xp[1] = 1;  // x^0
  for (int k = 1; k <= N + 1; ++k) {
    const Rational coeff = Rational((k % 2 == 1) ? 1 : -1, k);
    for (std::size_t c = 1; c < size; ++c)
      if (xp[c] != 0) f[c] += coeff * xp[c];
    if (k <= N) xp = poly_mul(xp, x, N);
  }
  return f;
}

GHTables build_g_h_tables(const std::vector<Rational>& f_table) {
  int N = -1;
  while ((std::size_t{1} << (N + 2)) <= f_table.size()) ++N;
  if (N < 1) throw InsufficientOrder("build_g_h_tables: f table order below 1");

  GHTables out;
  out.g_max_len = N - 1;
  out.h_max_len = N - 2;
  out.g.assign(std::size_t{1} << N, Rational(0));

  for (int n = 0; n <= N - 1; ++n) {
    const WordCode lo = WordCode{1} << n;
    for (WordCode c = lo; c < (lo << 1); ++c) {
      const WordCode bits = c - lo;
      const WordCode app1 = (lo << 1) | bits | (WordCode{1} << n);
      const WordCode flipped1 = (lo << 1) | flip_bits(bits, n) | (WordCode{1} << n);
      const int sign = (n % 2 == 0) ? 1 : -1;
      out.g[c] = (-f_table[app1] - sign * f_table[flipped1]) / (n + 2);
    }
  }

  if (N >= 2) {
    out.h.assign(std::size_t{1} << (N - 1), Rational(0));
    for (int n = 0; n <= N - 2; ++n) {
      const WordCode lo = WordCode{1} << n;
      for (WordCode c = lo; c < (lo << 1); ++c) {
        const WordCode bits = c - lo;
        const WordCode pre1 = (lo << 1) | (bits << 1) | 1;
        const WordCode pre0 = (lo << 1) | (bits << 1);
        Rational h = 2 * out.g[pre1] - 2 * out.g[pre0];
        for (int m = 0; m <= n; ++m) {
          const WordCode prefix = reverse_bits(bits & ((WordCode{1} << m) - 1), m);
          const WordCode suffix = bits >> m;
          const Rational term =
              out.g[(WordCode{1} << m) | prefix] * out.g[(WordCode{1} << (n - m)) | suffix];
          h += (m % 2 == 0) ? term : -term;
        }
        out.h[c] = h;
      }
    }
  }
  return out;
}

WordCoefficientTable::WordCoefficientTable(int N) : order(N) {
  f = build_f_table(N);
  GHTables gh = build_g_h_tables(f);
  g = std::move(gh.g);
  h = std::move(gh.h);
}

ConvergenceConstants delta_constants(const WordCoefficientTable& table, int N, double safety) {
  const int h_max = table.h_max_len();
  if (N < 2 || N > h_max)
    throw InsufficientOrder("delta_constants: need 2 <= N <= table order - 2");
  if (!(safety > 0.0) || safety > 1.0)
    throw std::invalid_argument("delta_constants: safety must be in (0, 1]");

  const double log2 = std::numbers::ln2;
  double S = 0.0;
  double ratio = log2 / 3.0;
  double weight = ratio;
  for (int n = 1; n <= N; ++n) {
    double sum_abs = 0.0;
    const WordCode lo = WordCode{1} << n;
    for (WordCode c = lo; c < (lo << 1); ++c)
      sum_abs += std::abs(static_cast<double>(table.h[c]));
    S += sum_abs * weight;
    weight *= ratio;
  }

  ConvergenceConstants out;
  out.truncation_order = N;
  out.safety_factor = safety;
  out.delta_hat = std::min(1.0 / (12.0 * S), 1.0);
  out.Delta_hat = safety * std::min(log2 / 6.0 * out.delta_hat, log2 / 4.0);
  return out;
}

BchResult bch_M(const ComplexMatrix& A, const ComplexMatrix& B,
                const WordCoefficientTable& table, int N) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw DimensionMismatch("bch_M: operand dimensions differ");
  const double x = ad_operator_norm(A);
  const double y = ad_operator_norm(B);
  const double log2 = std::numbers::ln2;
  if (!(x + y < log2))
    throw ConvergenceGateFailed("bch_M: ||ad A||op + ||ad B||op = " + std::to_string(x + y) +
                                " >= log 2; split the operators first");

  const int n_used = std::min(N - 2, table.g_max_len());
  ComplexMatrix result = A + B;
  ComplexMatrix w0 = commutator(A, B);

  // Level-by-level evaluation: a word (c1,...,cn) applied to [A,B] is one
  // commutator on top of its length n-1 suffix (c2,...,cn).
  std::vector<ComplexMatrix> prev{w0};
  result += static_cast<double>(table.g[1]) * w0;
  for (int n = 1; n <= n_used; ++n) {
    std::vector<ComplexMatrix> cur(std::size_t{1} << n);
    const WordCode lo = WordCode{1} << n;
    for (WordCode bits = 0; bits < lo; ++bits) {
      cur[bits] = commutator((bits & 1) ? B : A, prev[bits >> 1]);
      const double gc = static_cast<double>(table.g[lo | bits]);
      if (gc != 0.0) result += gc * cur[bits];
    }
    prev = std::move(cur);
  }

  // Dropped tail: per level, sum_c |g(c)| x^{n-|c|} y^{|c|}; beyond the
  // table, extend geometrically with ratio (x+y)/log2 < 1.
  const double w0n = frobenius_norm(w0);
  double tail = 0.0;
  double level_sum = 0.0;
  for (int n = n_used + 1; n <= table.g_max_len(); ++n) {
    level_sum = 0.0;
    const WordCode lo = WordCode{1} << n;
    for (WordCode bits = 0; bits < lo; ++bits) {
      const double gc = std::abs(static_cast<double>(table.g[lo | bits]));
      if (gc == 0.0) continue;
      const int wt = std::popcount(bits);
      level_sum += gc * std::pow(x, n - wt) * std::pow(y, wt);
    }
    tail += level_sum;
  }
  const double rho = (x + y) / log2;
  if (table.g_max_len() > n_used && rho < 1.0) tail += level_sum * rho / (1.0 - rho);

  return {result, tail * w0n};
}

NormInequalityResult check_norm_inequality(const ComplexMatrix& A, const ComplexMatrix& B,
                                           const WordCoefficientTable& table,
                                           const ConvergenceConstants& constants,
                                           const Tolerances& tol) {
  if (!is_anti_hermitian(A, tol.eq_tol) || !is_anti_hermitian(B, tol.eq_tol))
    throw NotAntiHermitian("check_norm_inequality: inputs must be anti-Hermitian");
  const double na = frobenius_norm(A);
  const double nb = frobenius_norm(B);
  if (!(na < constants.Delta_hat) || !(nb < constants.Delta_hat))
    throw NormGateFailed("check_norm_inequality: Frobenius norms must be below Delta_hat");

  const BchResult m = bch_M(A, B, table, table.order);
  NormInequalityResult out;
  out.lhs = frobenius_norm(m.m);
  out.lhs *= out.lhs;
  const double nd = frobenius_norm(A - B);
  out.rhs = 2 * na * na + 2 * nb * nb - nd * nd;
  out.holds = out.lhs <= out.rhs + 10 * tol.eq_tol;
  return out;
}

}  // namespace qct

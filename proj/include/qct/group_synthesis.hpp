#ifndef QCT_GROUP_SYNTHESIS_HPP
#define QCT_GROUP_SYNTHESIS_HPP

#include <vector>

#include "qct/bch_words.hpp"
#include "qct/lie_closure.hpp"
#include "qct/types.hpp"

namespace qct {

struct SynthesisConfig {
  int r = 4;                       // division fineness, >= 2
  ConvergenceConstants constants;  // gate Delta_hat and friends
  long max_sweeps = 100000;
  double d_stop = 1e-18;           // stop once the squared neighbor spread is below
  double residual_target = 1e-9;   // and the reassembled product matches this well
  int bch_order = 8;
  bool series_merge = false;       // use the truncated coefficient series per merge
                                   // instead of the spectral log (slow; for checks)
};

struct SynthesisTrace {
  std::vector<double> u_history;  // sum_j ||C_j||_F^2 per sweep
  std::vector<double> d_history;  // sum_j ||C_j - C_{j+1}||_F^2 per sweep
  long sweeps_used = 0;
  int m_a = 0;
  int m_b = 0;
  int n = 0;
  int restarts = 0;
  double final_residual = 0.0;
};

struct PairSynthesis {
  ComplexMatrix C;
  SynthesisTrace trace;
};

// Single generator for a product of two exponentials: anti-Hermitian C with
// e^C = e^A e^B, C in the algebra generated by {A, B}, and
// ||C||_F <= ||A||_F + ||B||_F. Splits each operator into slices below the
// convergence gate and repeatedly averages neighboring slices pairwise
// until the chain is uniform.
PairSynthesis synthesize_pair(const ComplexMatrix& A, const ComplexMatrix& B,
                              const SynthesisConfig& cfg, const Tolerances& tol = {});

// Piecewise-constant Hamiltonian sequence.
struct ScheduleSegment {
  ComplexMatrix h;
  double dt = 0.0;
};

struct ControlSchedule {
  std::vector<ScheduleSegment> segments;

  double total_time() const {
    double t = 0.0;
    for (const auto& s : segments) t += s.dt;
    return t;
  }
  void validate(const Tolerances& tol = {}) const;
};

struct ScheduleSynthesis {
  ComplexMatrix C_T;       // Hermitian, exp(-i C_T) = time-ordered product
  double bound_rhs = 0.0;  // sum of duration * ||H||_F
  SynthesisTrace last_trace;
};

// Folds synthesize_pair left to right over the segment generators
// -i * duration * H. Every i*H must lie in the span of `basis`.
ScheduleSynthesis synthesize_schedule(const ControlSchedule& schedule,
                                      const AlgebraBasis& basis, const SynthesisConfig& cfg,
                                      const Tolerances& tol = {});

struct SmallTimeLog {
  ComplexMatrix C_tilde;  // anti-Hermitian principal log of the propagator
  double defect = 0.0;    // || C_tilde + i * integral of H ||_F
  double defect_bound = 0.0;  // 4 sqrt(D) alpha^2 T^2
};

// Principal log of the propagated unitary in the short-time regime
// alpha*T <= 1/3, beta*T <= pi (alpha = max ||H||op, beta = max ||H||_F).
SmallTimeLog small_time_log(const ControlSchedule& schedule, const Tolerances& tol = {});

}  // namespace qct

#endif

#ifndef MATCHLAB_MARKOV_H_
#define MATCHLAB_MARKOV_H_

#include <cstddef>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "matchlab/stats.h"

namespace matchlab {

// (X, Y): unmatched online vertices and matched V2 vertices of RHSGreedy on
// H_{n,n}. Every step lowers x by one.
struct ChainState {
  int x = 0;
  int y = 0;
};

struct StepProbs {
  double p_same_y = 0.0;  // (x + y) / (2x + y)
  double p_inc_y = 0.0;   // x / (2x + y)
};

// Throws std::invalid_argument if x < 1 or y < 0.
StepProbs chain_step_probs(ChainState s);

// E[Y_n(n)] from (n, 0) by dynamic programming over y, with compensated
// summation. Throws std::invalid_argument if n < 1.
double expected_y_exact(int n);

inline constexpr int kRationalMaxN = 30;

// Same quantity as an exact fraction; n in [1, kRationalMaxN].
boost::multiprecision::cpp_rational expected_y_exact_rational(int n);

// Monte Carlo estimate of E[Y_n(n)] by sampling the chain.
TrialStats simulate_chain(int n, std::size_t trials, std::uint64_t seed,
                          std::size_t workers = 1);

// (U, V2) edges matched by RHSGreedy on H_{n,n} under uniformly random
// offline orders.
TrialStats simulate_rhs_empirical(int n, std::size_t trials,
                                  std::uint64_t seed, std::size_t workers = 1);

// f(z) = ln(1 + z) - 1 / (1 + z) + 1 - ln(n).
double ode_f(double z, double n);

// Positive root of ode_f by bisection on [0, n] down to an interval of width
// `tolerance`. Throws std::invalid_argument if n < 3 or tolerance <= 0.
double ode_root(double n, double tolerance = 1e-9);

}  // namespace matchlab

#endif  // MATCHLAB_MARKOV_H_

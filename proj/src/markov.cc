#include "matchlab/markov.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchlab/families.h"
#include "matchlab/priority.h"
#include "matchlab/random.h"

namespace matchlab {
namespace {

void RequirePositive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

void RequireTrials(std::size_t trials, const char* what) {
  if (trials == 0) {
    throw std::invalid_argument(std::string(what) + ": trials must be >= 1");
  }
}

// Adds to a slot with Kahan compensation kept alongside.
struct KahanCell {
  double sum = 0.0;
  double carry = 0.0;

  void Add(double v) {
    const double yv = v - carry;
    const double t = sum + yv;
    carry = (t - sum) - yv;
    sum = t;
  }
};

}  // namespace

StepProbs chain_step_probs(ChainState s) {
  if (s.x < 1) throw std::invalid_argument("chain_step_probs: x must be >= 1");
  if (s.y < 0) throw std::invalid_argument("chain_step_probs: y must be >= 0");
  const double denom = 2.0 * s.x + s.y;
  return {(s.x + s.y) / denom, s.x / denom};
}

double expected_y_exact(int n) {
  RequirePositive(n, "expected_y_exact");
  // dist[y] = P(Y = y) after the steps taken so far; x = n - step.
  std::vector<KahanCell> dist(static_cast<std::size_t>(n) + 1);
  std::vector<KahanCell> next(dist.size());
  dist[0].sum = 1.0;
  for (int step = 0; step < n; ++step) {
    const int x = n - step;
    for (int y = 0; y <= step + 1; ++y) next[static_cast<std::size_t>(y)] = {};
    for (int y = 0; y <= step; ++y) {
      const double p = dist[static_cast<std::size_t>(y)].sum;
      if (p == 0.0) continue;
      const StepProbs q = chain_step_probs({x, y});
      next[static_cast<std::size_t>(y)].Add(p * q.p_same_y);
      next[static_cast<std::size_t>(y) + 1].Add(p * q.p_inc_y);
    }
    dist.swap(next);
  }
  KahanCell mean;
  for (int y = 0; y <= n; ++y) mean.Add(y * dist[static_cast<std::size_t>(y)].sum);
  return mean.sum;
}

boost::multiprecision::cpp_rational expected_y_exact_rational(int n) {
  using boost::multiprecision::cpp_rational;
  RequirePositive(n, "expected_y_exact_rational");
  if (n > kRationalMaxN) {
    throw std::invalid_argument("expected_y_exact_rational: n exceeds " +
                                std::to_string(kRationalMaxN));
  }
  std::vector<cpp_rational> dist(static_cast<std::size_t>(n) + 1);
  dist[0] = 1;
  for (int step = 0; step < n; ++step) {
    const int x = n - step;
    std::vector<cpp_rational> next(dist.size());
    for (int y = 0; y <= step; ++y) {
      const cpp_rational& p = dist[static_cast<std::size_t>(y)];
      if (p == 0) continue;
      const cpp_rational denom = 2 * x + y;
      next[static_cast<std::size_t>(y)] += p * cpp_rational(x + y) / denom;
      next[static_cast<std::size_t>(y) + 1] += p * cpp_rational(x) / denom;
    }
    dist.swap(next);
  }
  cpp_rational mean = 0;
  for (int y = 0; y <= n; ++y) mean += dist[static_cast<std::size_t>(y)] * y;
  return mean;
}

TrialStats simulate_chain(int n, std::size_t trials, std::uint64_t seed,
                          std::size_t workers) {
  RequirePositive(n, "simulate_chain");
  RequireTrials(trials, "simulate_chain");
  const auto ys = run_trials(trials, workers, [&](std::size_t t) {
    Rng rng(derive_seed(seed, t));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ChainState s{n, 0};
    while (s.x > 0) {
      if (unit(rng) < chain_step_probs(s).p_inc_y) ++s.y;
      --s.x;
    }
    return static_cast<double>(s.y);
  });
  return trial_stats(ys, seed);
}

TrialStats simulate_rhs_empirical(int n, std::size_t trials,
                                  std::uint64_t seed, std::size_t workers) {
  RequirePositive(n, "simulate_rhs_empirical");
  RequireTrials(trials, "simulate_rhs_empirical");
  const Family h = gen_h_graph(n, n);
  const auto ys = run_trials(trials, workers, [&](std::size_t t) {
    Rng rng(derive_seed(seed, t));
    const Permutation order = random_permutation(h.graph.n_offline(), rng);
    return static_cast<double>(
        run_rhs_greedy(h.graph, h.descriptor, order).parallel_edges);
  });
  return trial_stats(ys, seed);
}

double ode_f(double z, double n) {
  return std::log1p(z) - 1.0 / (1.0 + z) + 1.0 - std::log(n);
}

double ode_root(double n, double tolerance) {
  if (!(n >= 3)) throw std::invalid_argument("ode_root: n must be >= 3");
  if (!(tolerance > 0)) {
    throw std::invalid_argument("ode_root: tolerance must be positive");
  }
  double lo = 0.0;
  double hi = n;
  if (!(ode_f(lo, n) < 0 && ode_f(hi, n) > 0)) {
    throw std::logic_error("ode_root: root is not bracketed by [0, n]");
  }
  while (hi - lo > tolerance) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    (ode_f(mid, n) < 0 ? lo : hi) = mid;
  }
  return lo + (hi - lo) / 2;
}

}  // namespace matchlab

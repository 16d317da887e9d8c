#include "matchlab/markov.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "matchlab/random.h"
#include "matchlab/stats.h"

namespace matchlab {
namespace {

using boost::multiprecision::cpp_rational;

const double kInvE = 1.0 / std::numbers::e;

// Sums y * P(path) over all 2^n step outcomes from (n, 0).
cpp_rational EnumeratePaths(int x, int y, const cpp_rational& p) {
  if (x == 0) return p * y;
  const cpp_rational denom = 2 * x + y;
  return EnumeratePaths(x - 1, y, p * cpp_rational(x + y) / denom) +
         EnumeratePaths(x - 1, y + 1, p * cpp_rational(x) / denom);
}

TEST(ChainStepTest, Probabilities) {
  const StepProbs a = chain_step_probs({1, 0});
  EXPECT_DOUBLE_EQ(a.p_same_y, 0.5);
  EXPECT_DOUBLE_EQ(a.p_inc_y, 0.5);
  const StepProbs b = chain_step_probs({1, 1});
  EXPECT_DOUBLE_EQ(b.p_same_y, 2.0 / 3);
  EXPECT_DOUBLE_EQ(b.p_inc_y, 1.0 / 3);
  for (int x = 1; x <= 20; ++x) {
    for (int y = 0; x + y <= 25; ++y) {
      const StepProbs p = chain_step_probs({x, y});
      EXPECT_NEAR(p.p_same_y + p.p_inc_y, 1.0, 1e-15);
    }
  }
  EXPECT_THROW(chain_step_probs({0, 3}), std::invalid_argument);
  EXPECT_THROW(chain_step_probs({2, -1}), std::invalid_argument);
}

TEST(ExpectedYTest, SmallValues) {
  EXPECT_DOUBLE_EQ(expected_y_exact(1), 0.5);
  EXPECT_NEAR(expected_y_exact(2), 11.0 / 12, 1e-15);
  EXPECT_EQ(expected_y_exact_rational(1), cpp_rational(1, 2));
  EXPECT_EQ(expected_y_exact_rational(2), cpp_rational(11, 12));
  EXPECT_THROW(expected_y_exact(0), std::invalid_argument);
  EXPECT_THROW(expected_y_exact_rational(kRationalMaxN + 1), std::invalid_argument);
}

TEST(ExpectedYTest, MatchesPathEnumeration) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(expected_y_exact_rational(n), EnumeratePaths(n, 0, 1)) << "n=" << n;
  }
}

TEST(ExpectedYTest, FloatPathMatchesRationalPath) {
  for (int n = 1; n <= kRationalMaxN; ++n) {
    const double exact = static_cast<double>(expected_y_exact_rational(n));
    EXPECT_NEAR(expected_y_exact(n), exact, 1e-12 * n) << "n=" << n;
  }
}

TEST(ExpectedYTest, ApproachesNOverE) {
  EXPECT_NEAR(expected_y_exact(2000) / 2000, kInvE, 0.01);
  double prev = std::numeric_limits<double>::infinity();
  for (int n : {10, 100, 1000, 2000}) {
    const double dist = std::fabs(expected_y_exact(n) / n - kInvE);
    EXPECT_LE(dist, prev) << "n=" << n;
    prev = dist;
  }
}

TEST(SimulateChainTest, NOneIsAFairCoin) {
  const TrialStats s = simulate_chain(1, 100000, 3);
  EXPECT_NEAR(s.mean, 0.5, 3 * s.std_error());
}

TEST(SimulateChainTest, AgreesWithExactAtTwoHundred) {
  const TrialStats s = simulate_chain(200, 10000, 4);
  EXPECT_NEAR(s.mean, expected_y_exact(200), 3 * s.std_error());
  EXPECT_GE(s.ci_low, 0.0);
  EXPECT_LE(s.ci_high, 200.0);
}

TEST(SimulateChainTest, DeterministicAndValidated) {
  EXPECT_EQ(simulate_chain(30, 500, 9).mean, simulate_chain(30, 500, 9, 3).mean);
  EXPECT_THROW(simulate_chain(5, 0, 1), std::invalid_argument);
  EXPECT_THROW(simulate_chain(0, 5, 1), std::invalid_argument);
}

TEST(SimulateRhsTest, AgreesWithChainAndExact) {
  const TrialStats rhs = simulate_rhs_empirical(200, 10000, 5);
  const TrialStats chain = simulate_chain(200, 10000, 6);
  EXPECT_LE(rhs.ci_low, chain.ci_high);
  EXPECT_LE(chain.ci_low, rhs.ci_high);
  EXPECT_NEAR(rhs.mean, expected_y_exact(200), 3 * rhs.std_error());
}

TEST(SimulateRhsTest, NOne) {
  const TrialStats s = simulate_rhs_empirical(1, 20000, 7);
  EXPECT_NEAR(s.mean, 0.5, 3 * s.std_error());
}

TEST(SimulateRhsTest, Deterministic) {
  EXPECT_EQ(simulate_rhs_empirical(20, 300, 2).mean,
            simulate_rhs_empirical(20, 300, 2, 2).mean);
}

TEST(OdeRootTest, Anchors) {
  const double r = ode_root(1000, 1e-10);
  EXPECT_GE(r / 1000, 0.33);
  EXPECT_LE(r / 1000, 0.37);
  EXPECT_NEAR(ode_root(1e6, 1e-9) / 1e6, kInvE, 0.002);
}

TEST(OdeRootTest, Residual) {
  for (double n : {3.0, 50.0, 1000.0, 1e5}) {
    const double tol = 1e-9;
    const double z = ode_root(n, tol);
    // f'(z) = 1/(1+z) + 1/(1+z)^2 bounds the residual over the final bracket.
    const double slope = 1 / (1 + z) + 1 / ((1 + z) * (1 + z));
    EXPECT_LE(std::fabs(ode_f(z, n)), tol * slope + 1e-12) << "n=" << n;
  }
}

TEST(OdeRootTest, SignArgument) {
  for (double n : {100.0, 1000.0, 1e5}) {
    EXPECT_GT(ode_f(n / std::numbers::e, n), 0.0);
    EXPECT_LT(ode_f(0.9 * n / std::numbers::e, n), 0.0);
  }
}

TEST(OdeRootTest, RejectsBadInput) {
  EXPECT_THROW(ode_root(2, 1e-6), std::invalid_argument);
  EXPECT_THROW(ode_root(10, 0), std::invalid_argument);
}

TEST(TrialStatsTest, Basics) {
  const std::vector<double> constant(10, 4.0);
  const TrialStats c = trial_stats(constant);
  EXPECT_EQ(c.mean, 4.0);
  EXPECT_EQ(c.variance, 0.0);
  EXPECT_EQ(c.ci_low, 4.0);
  EXPECT_EQ(c.count, 10);
  const std::vector<double> coin = {0, 1, 0, 1};
  EXPECT_DOUBLE_EQ(trial_stats(coin).mean, 0.5);
  EXPECT_DOUBLE_EQ(trial_stats(coin).variance, 1.0 / 3);
  EXPECT_THROW(trial_stats(std::vector<double>{}), std::invalid_argument);
}

TEST(TrialStatsTest, UniformDraws) {
  Rng rng(11);
  std::uniform_real_distribution<double> unit(0, 1);
  std::vector<double> xs(10000);
  for (double& x : xs) x = unit(rng);
  const TrialStats s = trial_stats(xs, 11);
  EXPECT_NEAR(s.mean, 0.5, 3 * s.std_error());
  EXPECT_NEAR(s.variance, 1.0 / 12, 0.005);
  EXPECT_LT(s.ci_low, s.mean);
  EXPECT_GT(s.ci_high, s.mean);
  EXPECT_NEAR(s.ci_high - s.mean, kZ95 * s.std_error(), 1e-12);
  EXPECT_EQ(s.seed, 11);
}

TEST(RunTrialsTest, OrderedAndRethrows) {
  const auto out = run_trials(50, 4, [](std::size_t t) { return t * t; });
  for (std::size_t t = 0; t < 50; ++t) EXPECT_EQ(out[t], t * t);
  EXPECT_THROW(run_trials(10, 3,
                          [](std::size_t t) -> int {
                            if (t == 7) throw std::runtime_error("boom");
                            return 0;
                          }),
               std::runtime_error);
}

TEST(SeedTest, DerivedSeedsDiffer) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_NE(derive_seed(1, 0, 0), derive_seed(1, 0, 1));
  EXPECT_EQ(derive_seed(5, 9), derive_seed(5, 9));
}

}  // namespace
}  // namespace matchlab

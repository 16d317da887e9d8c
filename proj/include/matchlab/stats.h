#ifndef MATCHLAB_STATS_H_
#define MATCHLAB_STATS_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <span>
#include <thread>
#include <vector>

namespace matchlab {

// Monte Carlo aggregate over `count` trials.
struct TrialStats {
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance, 0 for a single value
  double ci_low = 0.0;    // 95% normal-approximation interval on the mean
  double ci_high = 0.0;
  std::size_t count = 0;
  std::uint64_t seed = 0;

  double std_error() const;

  // Stats of every value multiplied by `factor`.
  TrialStats scaled(double factor) const;
};

inline constexpr double kZ95 = 1.959963984540054;

// Throws std::invalid_argument on empty input.
TrialStats trial_stats(std::span<const double> values, std::uint64_t seed = 0);

// Runs fn(0..trials-1) on up to `workers` threads and returns results in
// trial order, so output does not depend on the worker count.
template <typename Fn>
auto run_trials(std::size_t trials, std::size_t workers, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<Result> results(trials);
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(trials, 1));
  if (workers == 1) {
    for (std::size_t t = 0; t < trials; ++t) results[t] = fn(t);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = w; t < trials; t += workers) results[t] = fn(t);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace matchlab

#endif  // MATCHLAB_STATS_H_

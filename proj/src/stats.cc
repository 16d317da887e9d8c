#include "matchlab/stats.h"

#include <cmath>
#include <stdexcept>

namespace matchlab {

double TrialStats::std_error() const {
  return count == 0 ? 0.0 : std::sqrt(variance / static_cast<double>(count));
}

TrialStats TrialStats::scaled(double factor) const {
  TrialStats s = *this;
  s.mean *= factor;
  s.variance *= factor * factor;
  s.ci_low *= factor;
  s.ci_high *= factor;
  if (s.ci_low > s.ci_high) std::swap(s.ci_low, s.ci_high);
  return s;
}

TrialStats trial_stats(std::span<const double> values, std::uint64_t seed) {
  if (values.empty()) {
    throw std::invalid_argument("trial_stats: no values");
  }
  const auto n = static_cast<double>(values.size());
  // Welford.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t k = 0;
  for (double x : values) {
    ++k;
    const double delta = x - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (x - mean);
  }
  TrialStats s;
  s.mean = mean;
  s.variance = values.size() > 1 ? m2 / (n - 1.0) : 0.0;
  s.count = values.size();
  s.seed = seed;
  const double half = kZ95 * s.std_error();
  s.ci_low = mean - half;
  s.ci_high = mean + half;
  return s;
}

}  // namespace matchlab

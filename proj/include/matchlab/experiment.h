#ifndef MATCHLAB_EXPERIMENT_H_
#define MATCHLAB_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "matchlab/stats.h"

namespace matchlab {

enum class OutputFormat { kCsv, kJson };

struct ExperimentSpec {
  std::string family;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string algorithm;
  std::size_t passes = 1;             // category-advice only
  std::string tie = "lowest-index";   // greedy, mindegree, greedy-iid
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  bool per_trial = false;  // raw rows instead of the mean / CI summary
  OutputFormat format = OutputFormat::kCsv;
};

// greedy, ranking, category-advice, mingreedy, minranking, rhs-greedy,
// mindegree, greedy-iid.
const std::vector<std::string>& algorithm_names();

struct TrialRow {
  std::size_t trial = 0;
  double alg_size = 0;
  double opt_size = 0;
};

struct ExperimentResult {
  ExperimentSpec spec;
  std::string params;  // "k=3;n=5"
  bool deterministic = false;
  std::vector<TrialRow> rows;
  TrialStats alg;
  TrialStats opt;
  // E[ALG] / E[OPT]; the interval is alg's CI divided by E[OPT].
  double ratio = 0.0;
  double ratio_ci_low = 0.0;
  double ratio_ci_high = 0.0;
};

// Throws std::invalid_argument on unknown names, bad parameters, trials == 0
// or an algorithm that does not apply to the family.
ExperimentResult run_experiment(const ExperimentSpec& spec);

inline constexpr const char* kCsvHeader =
    "family,params,algorithm,seed,trial,alg_size,opt_size,ratio";

// Per-trial rows, or the summary rows "mean", "ci95_low" and "ci95_high".
// Deterministic experiments always write their single row.
void write_csv(std::ostream& out, const ExperimentResult& r);
nlohmann::json to_json(const ExperimentResult& r);

}  // namespace matchlab

#endif  // MATCHLAB_EXPERIMENT_H_

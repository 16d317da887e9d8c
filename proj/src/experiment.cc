#include "matchlab/experiment.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "matchlab/families.h"
#include "matchlab/iid.h"
#include "matchlab/max_matching.h"
#include "matchlab/online.h"
#include "matchlab/priority.h"
#include "matchlab/random.h"

namespace matchlab {
namespace {

std::string FormatNumber(double x) {
  if (std::isfinite(x) && x == std::floor(x) && std::fabs(x) < 1e15) {
    return std::to_string(static_cast<long long>(x));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

TieBreak MakeTie(const std::string& name, std::uint64_t seed) {
  switch (parse_tie_rule(name)) {
    case TieBreak::Rule::kMaxIndex:
      return TieBreak::MaxIndex();
    case TieBreak::Rule::kRandom:
      return TieBreak::Random(seed);
    default:
      return TieBreak::LowestIndex();
  }
}

// Runs fn(trial_seed) -> (alg, opt) per trial.
template <typename Fn>
std::vector<TrialRow> Trials(const ExperimentSpec& spec, std::size_t trials,
                             Fn&& fn) {
  return run_trials(trials, spec.workers, [&](std::size_t t) {
    const auto [alg, opt] = fn(derive_seed(spec.seed, t));
    return TrialRow{t, alg, opt};
  });
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names = {
      "greedy",     "ranking",    "category-advice", "mingreedy",
      "minranking", "rhs-greedy", "mindegree",       "greedy-iid"};
  return names;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  const auto& names = algorithm_names();
  if (std::find(names.begin(), names.end(), spec.algorithm) == names.end()) {
    throw std::invalid_argument("unknown algorithm '" + spec.algorithm + "'");
  }
  if (spec.trials == 0) throw std::invalid_argument("trials must be >= 1");
  if (spec.passes == 0) throw std::invalid_argument("passes must be >= 1");
  const TieBreak::Rule tie_rule = parse_tie_rule(spec.tie);

  const Family f = generate_family(spec.family, spec.params);
  const BipartiteGraph& g = f.graph;
  const Permutation& arrival = f.descriptor.canonical_arrival;
  const auto size = [](const Matching& m) { return static_cast<double>(m.size()); };

  ExperimentResult r;
  r.spec = spec;
  r.params = f.descriptor.params_string();
  const std::string& a = spec.algorithm;

  if (a == "mindegree" || a == "greedy-iid") {
    const TypeGraph tg(g);
    const IidAlgorithm alg = a == "mindegree"
                                 ? min_degree_algorithm(MakeTie(spec.tie, 0))
                                 : greedy_iid_algorithm(MakeTie(spec.tie, 0));
    const IidEstimate est =
        estimate_iid_ratio(tg, alg, spec.trials, spec.seed, spec.workers);
    for (std::size_t t = 0; t < est.trials.size(); ++t) {
      r.rows.push_back({t, est.trials[t].alg_size, est.trials[t].opt_size});
    }
  } else {
    const double opt = size(maximum_matching(g));
    if (a == "category-advice" ||
        (a == "greedy" && tie_rule != TieBreak::Rule::kRandom)) {
      r.deterministic = true;
      const double alg =
          a == "greedy"
              ? size(run_greedy(g, arrival, MakeTie(spec.tie, 0)))
              : size(run_category_advice(g, arrival, spec.passes).matching);
      r.rows.push_back({0, alg, opt});
    } else if (a == "greedy") {
      r.rows = Trials(spec, spec.trials, [&](std::uint64_t s) {
        return std::pair{size(run_greedy(g, arrival, TieBreak::Random(s))), opt};
      });
    } else if (a == "ranking") {
      r.rows = Trials(spec, spec.trials, [&](std::uint64_t s) {
        Rng rng(s);
        const Permutation sigma = random_permutation(g.n_offline(), rng);
        return std::pair{size(run_ranking(g, arrival, sigma)), opt};
      });
    } else if (a == "mingreedy") {
      r.rows = Trials(spec, spec.trials, [&](std::uint64_t s) {
        return std::pair{size(run_min_greedy(g, s)), opt};
      });
    } else if (a == "minranking") {
      r.rows = Trials(spec, spec.trials, [&](std::uint64_t s) {
        return std::pair{size(run_min_ranking(g, s)), opt};
      });
    } else {  // rhs-greedy
      if (f.descriptor.family != "hgraph") {
        throw std::invalid_argument("rhs-greedy runs on the hgraph family only");
      }
      r.rows = Trials(spec, spec.trials, [&](std::uint64_t s) {
        Rng rng(s);
        const Permutation order = random_permutation(g.n_offline(), rng);
        return std::pair{
            size(run_rhs_greedy(g, f.descriptor, order).matching), opt};
      });
    }
  }

  std::vector<double> algs;
  std::vector<double> opts;
  for (const TrialRow& row : r.rows) {
    algs.push_back(row.alg_size);
    opts.push_back(row.opt_size);
  }
  r.alg = trial_stats(algs, spec.seed);
  r.opt = trial_stats(opts, spec.seed);
  const double denom = r.opt.mean > 0 ? r.opt.mean : 1.0;
  r.ratio = r.opt.mean > 0 ? r.alg.mean / denom : 1.0;
  r.ratio_ci_low = r.opt.mean > 0 ? r.alg.ci_low / denom : 1.0;
  r.ratio_ci_high = r.opt.mean > 0 ? r.alg.ci_high / denom : 1.0;
  return r;
}

void write_csv(std::ostream& out, const ExperimentResult& r) {
  const std::string prefix = r.spec.family + "," + r.params + "," +
                             r.spec.algorithm + "," +
                             std::to_string(r.spec.seed) + ",";
  auto line = [&](const std::string& trial, double alg, double opt,
                  double ratio) {
    out << prefix << trial << ',' << FormatNumber(alg) << ','
        << FormatNumber(opt) << ',' << FormatNumber(ratio) << '\n';
  };
  out << kCsvHeader << '\n';
  if (r.deterministic || r.spec.per_trial) {
    for (const TrialRow& row : r.rows) {
      line(std::to_string(row.trial), row.alg_size, row.opt_size,
           row.opt_size > 0 ? row.alg_size / row.opt_size : 1.0);
    }
    return;
  }
  line("mean", r.alg.mean, r.opt.mean, r.ratio);
  line("ci95_low", r.alg.ci_low, r.opt.ci_low, r.ratio_ci_low);
  line("ci95_high", r.alg.ci_high, r.opt.ci_high, r.ratio_ci_high);
}

nlohmann::json to_json(const ExperimentResult& r) {
  auto stats = [](const TrialStats& s) {
    return nlohmann::json{{"mean", s.mean},       {"variance", s.variance},
                          {"ci95_low", s.ci_low}, {"ci95_high", s.ci_high},
                          {"count", s.count}};
  };
  nlohmann::json j = {
      {"schema", 1},
      {"family", r.spec.family},
      {"params", r.params},
      {"algorithm", r.spec.algorithm},
      {"seed", r.spec.seed},
      {"trials", r.spec.trials},
      {"deterministic", r.deterministic},
      {"summary",
       {{"alg_size", stats(r.alg)},
        {"opt_size", stats(r.opt)},
        {"ratio",
         {{"mean", r.ratio},
          {"ci95_low", r.ratio_ci_low},
          {"ci95_high", r.ratio_ci_high}}}}},
  };
  if (r.spec.algorithm == "category-advice") j["passes"] = r.spec.passes;
  if (r.spec.algorithm == "greedy" || r.spec.algorithm == "mindegree" ||
      r.spec.algorithm == "greedy-iid") {
    j["tie"] = r.spec.tie;
  }
  if (r.deterministic || r.spec.per_trial) {
    nlohmann::json rows = nlohmann::json::array();
    for (const TrialRow& row : r.rows) {
      rows.push_back({{"family", r.spec.family},
                      {"params", r.params},
                      {"algorithm", r.spec.algorithm},
                      {"seed", r.spec.seed},
                      {"trial", row.trial},
                      {"alg_size", row.alg_size},
                      {"opt_size", row.opt_size},
                      {"ratio", row.opt_size > 0 ? row.alg_size / row.opt_size
                                                 : 1.0}});
    }
    j["rows"] = std::move(rows);
  }
  return j;
}

}  // namespace matchlab

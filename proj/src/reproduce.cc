#include "matchlab/reproduce.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "matchlab/families.h"
#include "matchlab/iid.h"
#include "matchlab/markov.h"
#include "matchlab/max_matching.h"
#include "matchlab/online.h"
#include "matchlab/priority.h"
#include "matchlab/random.h"

namespace matchlab {
namespace {

constexpr double kOneMinusInvE = 1.0 - 1.0 / std::numbers::e;
constexpr double kMinRankingRatio = 0.5 + 0.5 / std::numbers::e;

std::string Format(const char* fmt, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// Times `body`, which fills in within_tolerance and detail.
template <typename Body>
CheckResult Timed(std::string name, double time_limit, Body&& body) {
  CheckResult r;
  r.name = std::move(name);
  r.time_limit = time_limit;
  const auto start = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

double MeanSize(std::size_t trials, std::size_t workers,
                const auto& run_one) {
  const auto sizes = run_trials(trials, workers, [&](std::size_t t) {
    return static_cast<double>(run_one(t));
  });
  double sum = 0;
  for (double s : sizes) sum += s;
  return sum / static_cast<double>(trials);
}

}  // namespace

CheckResult check_fibonacci_exactness(const CheckOptions&) {
  return Timed("fibonacci exactness", 5.0, [](CheckResult& r) {
    r.within_tolerance = true;
    std::string detail;
    for (int k = 1; k <= 8; ++k) {
      const Family f = gen_fibonacci_family(k);
      const auto& arrival = f.descriptor.canonical_arrival;
      const std::uint64_t f2k = fibonacci(2 * k);
      const std::uint64_t opt = maximum_matching(f.graph).size();
      bool ok = opt == fibonacci(2 * k + 1);
      std::string sizes;
      for (int extra = 0; extra <= 2; ++extra) {
        const std::size_t got =
            run_category_advice(f.graph, arrival, static_cast<std::size_t>(k + extra))
                .matching.size();
        ok = ok && got == f2k + (extra > 0 ? 1 : 0);
        sizes += (extra ? "/" : "") + std::to_string(got);
      }
      r.within_tolerance = r.within_tolerance && ok;
      detail += Format("k=%d: %s opt=%llu%s; ", k, sizes.c_str(),
                       static_cast<unsigned long long>(opt), ok ? "" : " MISMATCH");
    }
    r.detail = detail;
  });
}

CheckResult check_ranking_kvv(const CheckOptions& o) {
  return Timed("ranking on triangular graphs", 30.0, [&](CheckResult& r) {
    const Family f = gen_kvv_triangular(200);
    const TrialStats s = run_ranking_random(
        f.graph, f.descriptor.canonical_arrival, o.seed, 5000, o.workers);
    const double ratio = s.mean / 200.0;
    r.within_tolerance = std::fabs(ratio - kOneMinusInvE) <= 0.02;
    r.detail = Format("mean ratio %.4f, target %.4f +- 0.02", ratio, kOneMinusInvE);
  });
}

CheckResult check_mingreedy_perfect(const CheckOptions& o) {
  return Timed("mingreedy perfect on triangular", 0.0, [&](CheckResult& r) {
    const Family f = gen_kvv_triangular(100);
    std::size_t perfect = 0;
    for (std::size_t t = 0; t < 100; ++t) {
      if (run_min_greedy(f.graph, derive_seed(o.seed, t)).size() == 100) ++perfect;
    }
    r.within_tolerance = perfect == 100;
    r.detail = Format("%zu of 100 runs perfect", perfect);
  });
}

CheckResult check_mingreedy_bp(const CheckOptions& o) {
  return Timed("mingreedy on G_b", 60.0, [&](CheckResult& r) {
    const Family f = gen_besser_poloczek(25);
    const double opt = static_cast<double>(maximum_matching(f.graph).size());
    const double mean = MeanSize(500, o.workers, [&](std::size_t t) {
      return run_min_greedy(f.graph, derive_seed(o.seed, t)).size();
    });
    const double ratio = mean / opt;
    r.within_tolerance = ratio >= 0.50 && ratio <= 0.56;
    r.detail = Format("mean ratio %.4f, target [0.50, 0.56]", ratio);
  });
}

CheckResult check_minranking_bp(const CheckOptions& o) {
  return Timed("minranking on G_b", 120.0, [&](CheckResult& r) {
    const Family f = gen_besser_poloczek(25);
    const double opt = static_cast<double>(maximum_matching(f.graph).size());
    const double mean = MeanSize(500, o.workers, [&](std::size_t t) {
      return run_min_ranking(f.graph, derive_seed(o.seed, t)).size();
    });
    const double ratio = mean / opt;
    r.within_tolerance = std::fabs(ratio - kMinRankingRatio) <= 0.03;
    r.detail = Format("mean ratio %.4f, target %.4f +- 0.03", ratio,
                      kMinRankingRatio);
  });
}

CheckResult check_markov_anchor(const CheckOptions& o) {
  return Timed("markov and ode anchor", 60.0, [&](CheckResult& r) {
    const double inv_e = 1.0 / std::numbers::e;
    const double big = expected_y_exact(2000) / 2000.0;
    const double exact200 = expected_y_exact(200);
    const TrialStats chain = simulate_chain(200, 10000, o.seed, o.workers);
    const TrialStats rhs =
        simulate_rhs_empirical(200, 10000, derive_seed(o.seed, 0, 1), o.workers);
    const double root = ode_root(1000.0, 1e-9) / 1000.0;
    const bool dp_ok = std::fabs(big - inv_e) <= 0.01;
    const bool chain_ok =
        std::fabs(chain.mean - exact200) <= 3 * chain.std_error();
    const bool rhs_ok = std::fabs(rhs.mean - exact200) <= 3 * rhs.std_error();
    const bool root_ok = root >= 0.33 && root <= 0.37;
    r.within_tolerance = dp_ok && chain_ok && rhs_ok && root_ok;
    r.detail = Format(
        "E[Y]/n at 2000 = %.5f (1/e = %.5f); n=200 exact %.3f, chain %.3f +- "
        "%.3f, rhs %.3f +- %.3f; ode root/n = %.5f",
        big, inv_e, exact200, chain.mean, chain.std_error(), rhs.mean,
        rhs.std_error(), root);
  });
}

CheckResult check_goel_mehta(const CheckOptions& o) {
  return Timed("goel-mehta greedy", 60.0, [&](CheckResult& r) {
    const Family f = gen_goel_mehta(20, 20);
    const TypeGraph tg(f.graph);
    const IidEstimate est = estimate_iid_ratio(
        tg, greedy_iid_algorithm(TieBreak::MaxIndex()), 300, o.seed, o.workers);
    const double frac = est.alg.mean / 400.0;
    r.within_tolerance = std::fabs(frac - kOneMinusInvE) <= 0.03;
    r.detail = Format("mean size/LN %.4f, target %.4f +- 0.03", frac,
                      kOneMinusInvE);
  });
}

CheckResult check_mindegree_hard(const CheckOptions& o) {
  return Timed("mindegree hard family", 180.0, [&](CheckResult& r) {
    const Family f = gen_min_degree_hard(10, 10, 20);
    const TypeGraph tg(f.graph);
    const IidEstimate est = estimate_iid_ratio(
        tg, min_degree_algorithm(TieBreak::MaxIndex()), 200, o.seed, o.workers,
        [&](const InstanceSample& inst) {
          return count_gadget_overflows(f.descriptor, inst.draws);
        });
    std::size_t overflowed = 0;
    for (const IidTrial& t : est.trials) overflowed += t.gadget_overflows > 0;
    const double overflow_rate =
        static_cast<double>(overflowed) / static_cast<double>(est.trials.size());
    r.within_tolerance =
        est.ratio >= 0.60 && est.ratio <= 0.70 && overflow_rate < 0.01;
    r.detail = Format(
        "ratio %.4f (E[ALG] %.1f, E[OPT] %.1f), target [0.60, 0.70]; "
        "overflow in %zu of %zu trials",
        est.ratio, est.alg.mean, est.opt.mean, overflowed, est.trials.size());
  });
}

const std::vector<std::string>& reproduce_names() {
  static const std::vector<std::string> names = {
      "fibonacci-ratios", "ranking-kvv",      "mingreedy-bp", "minranking-bp",
      "mindegree-iid",    "greedy-goelmehta", "markov-ne"};
  return names;
}

std::vector<CheckResult> reproduce(const std::string& name,
                                   const CheckOptions& o) {
  if (name == "fibonacci-ratios") return {check_fibonacci_exactness(o)};
  if (name == "ranking-kvv") return {check_ranking_kvv(o)};
  if (name == "mingreedy-bp") {
    return {check_mingreedy_perfect(o), check_mingreedy_bp(o)};
  }
  if (name == "minranking-bp") return {check_minranking_bp(o)};
  if (name == "mindegree-iid") return {check_mindegree_hard(o)};
  if (name == "greedy-goelmehta") return {check_goel_mehta(o)};
  if (name == "markov-ne") return {check_markov_anchor(o)};
  throw std::invalid_argument("unknown reproduce target '" + name + "'");
}

}  // namespace matchlab

#ifndef MATCHLAB_REPRODUCE_H_
#define MATCHLAB_REPRODUCE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace matchlab {

// Outcome of one pinned experiment checked against its tolerance.
struct CheckResult {
  std::string name;
  bool within_tolerance = false;
  double seconds = 0.0;
  double time_limit = 0.0;  // 0 means unbounded
  std::string detail;

  bool pass() const {
    return within_tolerance && (time_limit <= 0 || seconds <= time_limit);
  }
};

struct CheckOptions {
  std::uint64_t seed = 20240901;
  std::size_t workers = 1;
};

// k-pass Category-Advice on G_k for k in 1..8: F_{2k} with k passes,
// F_{2k} + 1 with k + 1 and k + 2 passes, OPT = F_{2k+1}.
CheckResult check_fibonacci_exactness(const CheckOptions& o);
// Ranking on the triangular graph, n = 200, 5000 trials: ratio 1 - 1/e +- 0.02.
CheckResult check_ranking_kvv(const CheckOptions& o);
// 100 MinGreedy runs on the triangular graph with n = 100 are all perfect.
CheckResult check_mingreedy_perfect(const CheckOptions& o);
// MinGreedy on G_25, 500 trials: ratio in [0.50, 0.56].
CheckResult check_mingreedy_bp(const CheckOptions& o);
// MinRanking on G_25, 500 trials: ratio 1/2 + 1/(2e) +- 0.03.
CheckResult check_minranking_bp(const CheckOptions& o);
// Exact chain at n = 2000 within 0.01 of n/e; both samplers at n = 200
// within 3 standard errors of the exact value; ode_root(1000)/1000 in
// [0.33, 0.37].
CheckResult check_markov_anchor(const CheckOptions& o);
// Max-index greedy on G_{20,20}, 300 trials: size / LN within 0.03 of 1 - 1/e.
CheckResult check_goel_mehta(const CheckOptions& o);
// MinDegree with max-index ties on G_{10,10,20}, 200 trials: ratio in
// [0.60, 0.70] and gadget overflow in under 1% of trials.
CheckResult check_mindegree_hard(const CheckOptions& o);

// fibonacci-ratios, ranking-kvv, mingreedy-bp, minranking-bp, mindegree-iid,
// greedy-goelmehta, markov-ne.
const std::vector<std::string>& reproduce_names();

// Throws std::invalid_argument for unknown names.
std::vector<CheckResult> reproduce(const std::string& name,
                                   const CheckOptions& o);

}  // namespace matchlab

#endif  // MATCHLAB_REPRODUCE_H_

#ifndef MATCHLAB_ONLINE_H_
#define MATCHLAB_ONLINE_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "matchlab/graph.h"
#include "matchlab/random.h"
#include "matchlab/stats.h"

namespace matchlab {

// How a greedy algorithm picks among several available offline neighbors.
struct TieBreak {
  enum class Rule { kLowestIndex, kOfflineRank, kMaxIndex, kRandom };

  Rule rule = Rule::kLowestIndex;
  std::optional<Permutation> rank;  // required for kOfflineRank
  std::uint64_t seed = 0;           // consumed by kRandom

  static TieBreak LowestIndex() { return {}; }
  static TieBreak MaxIndex() { return {Rule::kMaxIndex, std::nullopt, 0}; }
  static TieBreak ByRank(Permutation sigma) {
    return {Rule::kOfflineRank, std::move(sigma), 0};
  }
  static TieBreak Random(std::uint64_t seed) {
    return {Rule::kRandom, std::nullopt, seed};
  }

  bool deterministic() const { return rule != Rule::kRandom; }
  std::string name() const;
};

// Parses "lowest-index", "max-index" (alias "max-block-index"), "random".
// Throws std::invalid_argument otherwise; "rank" needs a permutation and is
// only built programmatically.
TieBreak::Rule parse_tie_rule(const std::string& name);

// Stateful picker for one run: construct once, call Pick per decision.
class TiePicker {
 public:
  TiePicker(const TieBreak& tie, std::size_t n_offline);

  // `candidates` must be non-empty and sorted ascending.
  Vertex Pick(std::span<const Vertex> candidates);

 private:
  const TieBreak& tie_;
  Rng rng_;
};

// Processes U in `arrival` order; each arrival takes an unmatched neighbor
// chosen by `tie` if one exists.
Matching run_greedy(const BipartiteGraph& g, const Permutation& arrival,
                    const TieBreak& tie);

// Deterministic Ranking pass: each arrival takes its unmatched neighbor of
// smallest sigma rank.
Matching run_ranking(const BipartiteGraph& g, const Permutation& arrival,
                     const Permutation& sigma);

// Matching sizes of Ranking over `trials` uniformly random sigmas. Trial t
// draws sigma from derive_seed(seed, t).
TrialStats run_ranking_random(const BipartiteGraph& g,
                              const Permutation& arrival, std::uint64_t seed,
                              std::size_t trials, std::size_t workers = 1);

// Category labels on V. kMinusInfinity sorts below every finite label.
class CategoryFunction {
 public:
  using Label = std::int64_t;
  static constexpr Label kMinusInfinity = std::numeric_limits<Label>::min();

  CategoryFunction() = default;
  explicit CategoryFunction(std::size_t n_offline,
                            Label fill = kMinusInfinity)
      : labels_(n_offline, fill) {}
  explicit CategoryFunction(std::vector<Label> labels)
      : labels_(std::move(labels)) {}

  std::size_t size() const { return labels_.size(); }
  Label operator[](Vertex v) const {
    return labels_[static_cast<std::size_t>(v)];
  }
  void set(Vertex v, Label label) {
    labels_[static_cast<std::size_t>(v)] = label;
  }
  const std::vector<Label>& labels() const { return labels_; }

 private:
  std::vector<Label> labels_;
};

// sigma_c: orders V by category, then by sigma rank within a category.
Permutation refine_sigma(const Permutation& sigma, const CategoryFunction& c);

struct CategoryAdviceResult {
  Matching matching;                    // M_k
  std::vector<std::size_t> pass_sizes;  // |M_1|, ..., |M_k|
  CategoryFunction categories;          // c after the last pass
};

// k Ranking passes over the same arrival order. sigma starts as the identity
// and c as -inf everywhere; after pass i every vertex first matched in M_i
// gets category -i. Throws std::invalid_argument if passes == 0.
CategoryAdviceResult run_category_advice(const BipartiteGraph& g,
                                         const Permutation& arrival,
                                         std::size_t passes);

}  // namespace matchlab

#endif  // MATCHLAB_ONLINE_H_

#include "matchlab/online.h"

#include <algorithm>
#include <stdexcept>

namespace matchlab {

std::string TieBreak::name() const {
  switch (rule) {
    case Rule::kLowestIndex:
      return "lowest-index";
    case Rule::kOfflineRank:
      return "rank";
    case Rule::kMaxIndex:
      return "max-index";
    case Rule::kRandom:
      return "random";
  }
  return "unknown";
}

TieBreak::Rule parse_tie_rule(const std::string& name) {
  if (name == "lowest-index") return TieBreak::Rule::kLowestIndex;
  if (name == "max-index" || name == "max-block-index") {
    return TieBreak::Rule::kMaxIndex;
  }
  if (name == "random") return TieBreak::Rule::kRandom;
  throw std::invalid_argument("unknown tie rule '" + name + "'");
}

TiePicker::TiePicker(const TieBreak& tie, std::size_t n_offline)
    : tie_(tie), rng_(tie.seed) {
  if (tie.rule == TieBreak::Rule::kOfflineRank &&
      (!tie.rank || tie.rank->size() != n_offline)) {
    throw std::invalid_argument("rank tie-break needs a permutation of V");
  }
}

Vertex TiePicker::Pick(std::span<const Vertex> candidates) {
  switch (tie_.rule) {
    case TieBreak::Rule::kLowestIndex:
      return candidates.front();
    case TieBreak::Rule::kMaxIndex:
      return candidates.back();
    case TieBreak::Rule::kOfflineRank:
      return *std::min_element(
          candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
            return tie_.rank->rank_of(a) < tie_.rank->rank_of(b);
          });
    case TieBreak::Rule::kRandom:
      return candidates[uniform_index(rng_, candidates.size())];
  }
  return candidates.front();
}

Matching run_greedy(const BipartiteGraph& g, const Permutation& arrival,
                    const TieBreak& tie) {
  if (arrival.size() != g.n_online()) {
    throw std::invalid_argument("run_greedy: arrival order does not cover U");
  }
  Matching m(g.n_online(), g.n_offline());
  TiePicker picker(tie, g.n_offline());
  std::vector<Vertex> free_nbrs;
  for (Vertex u : arrival.order()) {
    free_nbrs.clear();
    for (Vertex v : g.neighbors(u)) {
      if (!m.offline_matched(v)) free_nbrs.push_back(v);
    }
    if (!free_nbrs.empty()) m.add(u, picker.Pick(free_nbrs));
  }
  return m;
}

Matching run_ranking(const BipartiteGraph& g, const Permutation& arrival,
                     const Permutation& sigma) {
  if (arrival.size() != g.n_online() || sigma.size() != g.n_offline()) {
    throw std::invalid_argument("run_ranking: permutation sizes do not match");
  }
  Matching m(g.n_online(), g.n_offline());
  for (Vertex u : arrival.order()) {
    Vertex best = kNoVertex;
    for (Vertex v : g.neighbors(u)) {
      if (m.offline_matched(v)) continue;
      if (best == kNoVertex || sigma.rank_of(v) < sigma.rank_of(best)) {
        best = v;
      }
    }
    if (best != kNoVertex) m.add(u, best);
  }
  return m;
}

TrialStats run_ranking_random(const BipartiteGraph& g,
                              const Permutation& arrival, std::uint64_t seed,
                              std::size_t trials, std::size_t workers) {
  if (trials == 0) {
    throw std::invalid_argument("run_ranking_random: trials must be >= 1");
  }
  const auto sizes = run_trials(trials, workers, [&](std::size_t t) {
    Rng rng(derive_seed(seed, t));
    const Permutation sigma = random_permutation(g.n_offline(), rng);
    return static_cast<double>(run_ranking(g, arrival, sigma).size());
  });
  return trial_stats(sizes, seed);
}

Permutation refine_sigma(const Permutation& sigma, const CategoryFunction& c) {
  if (sigma.size() != c.size()) {
    throw std::invalid_argument("refine_sigma: size mismatch");
  }
  std::vector<Vertex> order = sigma.order();
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return c[a] < c[b]; });
  return Permutation(std::move(order));
}

CategoryAdviceResult run_category_advice(const BipartiteGraph& g,
                                         const Permutation& arrival,
                                         std::size_t passes) {
  if (passes == 0) {
    throw std::invalid_argument("run_category_advice: passes must be >= 1");
  }
  const Permutation sigma = Permutation::Identity(g.n_offline());
  CategoryAdviceResult result;
  result.categories = CategoryFunction(g.n_offline());
  for (std::size_t pass = 1; pass <= passes; ++pass) {
    Matching m = run_ranking(g, arrival, refine_sigma(sigma, result.categories));
    for (std::size_t v = 0; v < g.n_offline(); ++v) {
      const auto vv = static_cast<Vertex>(v);
      if (result.categories[vv] == CategoryFunction::kMinusInfinity &&
          m.offline_matched(vv)) {
        result.categories.set(vv, -static_cast<CategoryFunction::Label>(pass));
      }
    }
    result.pass_sizes.push_back(m.size());
    result.matching = std::move(m);
  }
  return result;
}

}  // namespace matchlab

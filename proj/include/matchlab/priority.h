#ifndef MATCHLAB_PRIORITY_H_
#define MATCHLAB_PRIORITY_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "matchlab/families.h"
#include "matchlab/graph.h"
#include "matchlab/random.h"

namespace matchlab {

// Residual graph bookkeeping shared by MinGreedy and MinRanking. Vertices
// are only ever deleted.
struct LiveState {
  std::vector<bool> alive_online;
  std::vector<bool> alive_offline;
  // Alive offline neighbors of each online vertex; meaningful while alive.
  std::vector<std::size_t> curdeg;

  explicit LiveState(const BipartiteGraph& g);

  // Recomputes degrees from the masks and compares with `curdeg` for every
  // alive online vertex.
  bool consistent_with(const BipartiteGraph& g) const;
};

// Called after every iteration of the main loop with the state it left.
using PriorityObserver = std::function<void(const LiveState&)>;

// Repeatedly takes a uniformly random alive online vertex of minimum current
// degree and matches it to a uniformly random alive neighbor, or deletes it
// if it has none.
Matching run_min_greedy(const BipartiteGraph& g, std::uint64_t seed,
                        const PriorityObserver& observer = {});

// Draws a uniform permutation pi of V up front, then runs the MinGreedy loop
// but matches each selected vertex to its alive neighbor of smallest pi rank.
Matching run_min_ranking(const BipartiteGraph& g, std::uint64_t seed,
                         const PriorityObserver& observer = {});

// MinRanking with a given pi and minimum-degree ties broken by lowest online
// index. No randomness.
Matching run_min_ranking_deterministic(const BipartiteGraph& g,
                                       const Permutation& pi,
                                       const PriorityObserver& observer = {});

struct RhsGreedyResult {
  Matching matching;
  std::size_t parallel_edges = 0;  // matched (U, V2) pairs
};

// Processes offline vertices of H_{n,k} in `offline_order`; each takes its
// lowest-index alive online neighbor. Throws std::invalid_argument unless
// `desc` describes an hgraph whose shape matches `h`.
RhsGreedyResult run_rhs_greedy(const BipartiteGraph& h,
                               const FamilyDescriptor& desc,
                               const Permutation& offline_order);

}  // namespace matchlab

#endif  // MATCHLAB_PRIORITY_H_

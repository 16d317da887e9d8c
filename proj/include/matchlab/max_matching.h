#ifndef MATCHLAB_MAX_MATCHING_H_
#define MATCHLAB_MAX_MATCHING_H_

#include <cstddef>

#include "matchlab/graph.h"

namespace matchlab {

// Maximum-cardinality matching by Hopcroft-Karp. Deterministic for a fixed
// graph: free online vertices and neighbor lists are scanned in index order.
Matching maximum_matching(const BipartiteGraph& g);

inline constexpr std::size_t kBruteForceMaxOnline = 12;

// Exhaustive search over every assignment of online vertices. Independent of
// maximum_matching and only meant as a cross-check oracle. Throws
// std::invalid_argument if g.n_online() > kBruteForceMaxOnline.
Matching brute_force_maximum_matching(const BipartiteGraph& g);

}  // namespace matchlab

#endif  // MATCHLAB_MAX_MATCHING_H_

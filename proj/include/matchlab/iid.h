#ifndef MATCHLAB_IID_H_
#define MATCHLAB_IID_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "matchlab/graph.h"
#include "matchlab/online.h"
#include "matchlab/stats.h"

namespace matchlab {

// Known-IID type graph: U are types, V the offline vertices.
struct TypeGraph {
  BipartiteGraph base;
  std::vector<std::size_t> static_degree;  // degree of each v in `base`

  explicit TypeGraph(BipartiteGraph g);
};

// |U| types drawn uniformly with replacement.
struct InstanceSample {
  std::vector<Vertex> draws;
};

// Throws std::invalid_argument if the type graph has no types.
InstanceSample sample_instance(const TypeGraph& tg, std::uint64_t seed);

// Arrival t of the instance is a copy of type draws[t].
BipartiteGraph materialize_instance(const TypeGraph& tg,
                                    const InstanceSample& inst);

// One greedy decision: the arriving type, the active neighbors it saw (sorted)
// and the offline vertex it took.
struct Decision {
  Vertex type = kNoVertex;
  std::vector<Vertex> available;
  Vertex chosen = kNoVertex;
};

// Picks from a non-empty sorted list of active neighbors. `step` is the
// arrival position.
using OfflineChooser = std::function<Vertex(
    Vertex type, std::span<const Vertex> available, std::size_t step)>;

// Generic greedy over instance arrivals with an active-offline mask. The
// result is a matching of the materialized instance. Decisions are appended
// to `trace` when it is non-null.
Matching run_iid_greedy(const TypeGraph& tg, const InstanceSample& inst,
                        const OfflineChooser& choose,
                        std::vector<Decision>* trace = nullptr);

// Each arrival takes an active neighbor of minimum static type-graph degree;
// remaining ties per `tie`.
Matching run_min_degree(const TypeGraph& tg, const InstanceSample& inst,
                        const TieBreak& tie,
                        std::vector<Decision>* trace = nullptr);

// Each arrival takes any active neighbor per `tie`. kMaxIndex is the
// Goel-Mehta criterion on G_{L,N} (largest block first).
Matching run_greedy_iid(const TypeGraph& tg, const InstanceSample& inst,
                        const TieBreak& tie,
                        std::vector<Decision>* trace = nullptr);

// An IID algorithm as a value. `trial_seed` reseeds randomized tie rules.
using IidAlgorithm =
    std::function<Matching(const TypeGraph&, const InstanceSample&,
                           std::uint64_t trial_seed, std::vector<Decision>*)>;

IidAlgorithm min_degree_algorithm(TieBreak tie);
IidAlgorithm greedy_iid_algorithm(TieBreak tie);

struct ConsistencyReport {
  std::size_t sequences = 0;  // arrival sequences enumerated
  std::size_t decisions = 0;  // distinct (type, available set) situations
  std::size_t violations = 0;
  std::string first_violation;

  bool consistent() const { return violations == 0; }
};

inline constexpr std::size_t kConsistencyMaxTypes = 6;

// Runs `algorithm` on all |U|^|U| arrival sequences and checks: whenever type
// u sees available set N and takes u*, and in any run sees N' within N with
// u* in N', it takes u* again. Throws std::invalid_argument if |U| exceeds
// `max_types` (capped at kConsistencyMaxTypes) or |V| > 64.
ConsistencyReport check_consistency(const IidAlgorithm& algorithm,
                                    const TypeGraph& tg,
                                    std::size_t max_types = kConsistencyMaxTypes);

struct IidTrial {
  double alg_size = 0;
  double opt_size = 0;
  std::size_t gadget_overflows = 0;
};

struct IidEstimate {
  TrialStats alg;
  TrialStats opt;
  double ratio = 0.0;  // alg.mean / opt.mean
  std::vector<IidTrial> trials;
};

// Called per trial with the sampled instance; returns the number of gadget
// overflows to record (0 if not applicable).
using OverflowCounter = std::function<std::size_t(const InstanceSample&)>;

// E[ALG] / E[OPT] over `trials` instances; OPT is maximum_matching on the
// same materialized instance. Trial t samples from derive_seed(seed, t).
IidEstimate estimate_iid_ratio(const TypeGraph& tg,
                               const IidAlgorithm& algorithm,
                               std::size_t trials, std::uint64_t seed,
                               std::size_t workers = 1,
                               const OverflowCounter& overflow = {});

}  // namespace matchlab

#endif  // MATCHLAB_IID_H_

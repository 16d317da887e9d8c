#include "matchlab/iid.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "matchlab/max_matching.h"
#include "matchlab/random.h"

namespace matchlab {
namespace {

std::uint64_t Mask(std::span<const Vertex> vs) {
  std::uint64_t mask = 0;
  for (Vertex v : vs) mask |= std::uint64_t{1} << v;
  return mask;
}

std::string Describe(Vertex type, std::uint64_t wide, Vertex wide_choice,
                     std::uint64_t narrow, Vertex narrow_choice) {
  auto set = [](std::uint64_t m) {
    std::string s = "{";
    for (int v = 0; v < 64; ++v) {
      if ((m >> v) & 1) {
        if (s.size() > 1) s += ',';
        s += std::to_string(v);
      }
    }
    return s + "}";
  };
  return "type " + std::to_string(type) + " takes " +
         std::to_string(wide_choice) + " from " + set(wide) + " but " +
         std::to_string(narrow_choice) + " from " + set(narrow);
}

TieBreak Reseeded(const TieBreak& tie, std::uint64_t trial_seed) {
  TieBreak t = tie;
  if (t.rule == TieBreak::Rule::kRandom) t.seed = trial_seed;
  return t;
}

}  // namespace

TypeGraph::TypeGraph(BipartiteGraph g)
    : base(std::move(g)), static_degree(base.n_offline()) {
  for (std::size_t v = 0; v < base.n_offline(); ++v) {
    static_degree[v] = base.offline_degree(static_cast<Vertex>(v));
  }
}

InstanceSample sample_instance(const TypeGraph& tg, std::uint64_t seed) {
  const std::size_t types = tg.base.n_online();
  if (types == 0) {
    throw std::invalid_argument("sample_instance: type graph has no types");
  }
  Rng rng(seed);
  InstanceSample inst;
  inst.draws.resize(types);
  for (auto& d : inst.draws) d = static_cast<Vertex>(uniform_index(rng, types));
  return inst;
}

BipartiteGraph materialize_instance(const TypeGraph& tg,
                                    const InstanceSample& inst) {
  std::vector<std::vector<Vertex>> adj;
  adj.reserve(inst.draws.size());
  for (Vertex t : inst.draws) {
    const auto nbrs = tg.base.neighbors(t);
    adj.emplace_back(nbrs.begin(), nbrs.end());
  }
  return BipartiteGraph(tg.base.n_offline(), std::move(adj));
}

Matching run_iid_greedy(const TypeGraph& tg, const InstanceSample& inst,
                        const OfflineChooser& choose,
                        std::vector<Decision>* trace) {
  Matching m(inst.draws.size(), tg.base.n_offline());
  std::vector<Vertex> active_nbrs;
  for (std::size_t t = 0; t < inst.draws.size(); ++t) {
    const Vertex type = inst.draws[t];
    active_nbrs.clear();
    for (Vertex v : tg.base.neighbors(type)) {
      if (!m.offline_matched(v)) active_nbrs.push_back(v);
    }
    if (active_nbrs.empty()) continue;
    const Vertex v = choose(type, active_nbrs, t);
    if (!std::binary_search(active_nbrs.begin(), active_nbrs.end(), v)) {
      throw std::logic_error("run_iid_greedy: chooser returned an inactive vertex");
    }
    m.add(static_cast<Vertex>(t), v);
    if (trace != nullptr) trace->push_back({type, active_nbrs, v});
  }
  return m;
}

Matching run_min_degree(const TypeGraph& tg, const InstanceSample& inst,
                        const TieBreak& tie, std::vector<Decision>* trace) {
  TiePicker picker(tie, tg.base.n_offline());
  std::vector<Vertex> lightest;
  return run_iid_greedy(
      tg, inst,
      [&](Vertex, std::span<const Vertex> available, std::size_t) {
        std::size_t best = tg.static_degree[static_cast<std::size_t>(available[0])];
        for (Vertex v : available) {
          best = std::min(best, tg.static_degree[static_cast<std::size_t>(v)]);
        }
        lightest.clear();
        for (Vertex v : available) {
          if (tg.static_degree[static_cast<std::size_t>(v)] == best) {
            lightest.push_back(v);
          }
        }
        return picker.Pick(lightest);
      },
      trace);
}

Matching run_greedy_iid(const TypeGraph& tg, const InstanceSample& inst,
                        const TieBreak& tie, std::vector<Decision>* trace) {
  TiePicker picker(tie, tg.base.n_offline());
  return run_iid_greedy(
      tg, inst,
      [&](Vertex, std::span<const Vertex> available, std::size_t) {
        return picker.Pick(available);
      },
      trace);
}

IidAlgorithm min_degree_algorithm(TieBreak tie) {
  return [tie = std::move(tie)](const TypeGraph& tg, const InstanceSample& inst,
                                std::uint64_t trial_seed,
                                std::vector<Decision>* trace) {
    return run_min_degree(tg, inst, Reseeded(tie, trial_seed), trace);
  };
}

IidAlgorithm greedy_iid_algorithm(TieBreak tie) {
  return [tie = std::move(tie)](const TypeGraph& tg, const InstanceSample& inst,
                                std::uint64_t trial_seed,
                                std::vector<Decision>* trace) {
    return run_greedy_iid(tg, inst, Reseeded(tie, trial_seed), trace);
  };
}

ConsistencyReport check_consistency(const IidAlgorithm& algorithm,
                                    const TypeGraph& tg,
                                    std::size_t max_types) {
  const std::size_t types = tg.base.n_online();
  if (types > std::min(max_types, kConsistencyMaxTypes)) {
    throw std::invalid_argument("check_consistency: " + std::to_string(types) +
                                " types exceed the enumeration guard");
  }
  if (tg.base.n_offline() > 64) {
    throw std::invalid_argument("check_consistency: more than 64 offline vertices");
  }
  ConsistencyReport report;
  if (types == 0) return report;

  // Observed choice per (type, available-set mask).
  std::vector<std::map<std::uint64_t, Vertex>> seen(types);
  auto note_violation = [&](std::string what) {
    if (report.violations++ == 0) report.first_violation = std::move(what);
  };

  InstanceSample inst;
  inst.draws.assign(types, 0);
  std::vector<Decision> trace;
  while (true) {
    trace.clear();
    algorithm(tg, inst, 0, &trace);
    ++report.sequences;
    for (const Decision& d : trace) {
      const std::uint64_t mask = Mask(d.available);
      auto [it, inserted] =
          seen[static_cast<std::size_t>(d.type)].emplace(mask, d.chosen);
      if (!inserted && it->second != d.chosen) {
        note_violation(Describe(d.type, mask, it->second, mask, d.chosen));
      }
    }
    // Next sequence in base-|U| counting order.
    std::size_t pos = 0;
    while (pos < types && ++inst.draws[pos] == static_cast<Vertex>(types)) {
      inst.draws[pos++] = 0;
    }
    if (pos == types) break;
  }

  for (std::size_t type = 0; type < types; ++type) {
    report.decisions += seen[type].size();
    for (const auto& [wide, wide_choice] : seen[type]) {
      for (const auto& [narrow, narrow_choice] : seen[type]) {
        if (narrow == wide || (narrow & ~wide) != 0) continue;
        if (((narrow >> wide_choice) & 1) == 0) continue;
        if (narrow_choice != wide_choice) {
          note_violation(Describe(static_cast<Vertex>(type), wide, wide_choice,
                                  narrow, narrow_choice));
        }
      }
    }
  }
  return report;
}

IidEstimate estimate_iid_ratio(const TypeGraph& tg,
                               const IidAlgorithm& algorithm,
                               std::size_t trials, std::uint64_t seed,
                               std::size_t workers,
                               const OverflowCounter& overflow) {
  if (trials == 0) {
    throw std::invalid_argument("estimate_iid_ratio: trials must be >= 1");
  }
  IidEstimate est;
  est.trials = run_trials(trials, workers, [&](std::size_t t) {
    const InstanceSample inst = sample_instance(tg, derive_seed(seed, t));
    IidTrial r;
    r.alg_size = static_cast<double>(
        algorithm(tg, inst, derive_seed(seed, t, 1), nullptr).size());
    r.opt_size = static_cast<double>(
        maximum_matching(materialize_instance(tg, inst)).size());
    if (overflow) r.gadget_overflows = overflow(inst);
    return r;
  });
  std::vector<double> alg(trials);
  std::vector<double> opt(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    alg[t] = est.trials[t].alg_size;
    opt[t] = est.trials[t].opt_size;
  }
  est.alg = trial_stats(alg, seed);
  est.opt = trial_stats(opt, seed);
  est.ratio = est.opt.mean > 0 ? est.alg.mean / est.opt.mean : 1.0;
  return est;
}

}  // namespace matchlab

#include "matchlab/priority.h"

#include <algorithm>
#include <stdexcept>

namespace matchlab {
namespace {

// Alive online vertices bucketed by current degree, O(1) moves.
class DegreeBuckets {
 public:
  explicit DegreeBuckets(const LiveState& s)
      : position_(s.curdeg.size()), remaining_(0) {
    std::size_t max_degree = 0;
    for (std::size_t d : s.curdeg) max_degree = std::max(max_degree, d);
    buckets_.resize(max_degree + 1);
    for (std::size_t u = 0; u < s.curdeg.size(); ++u) {
      Insert(static_cast<Vertex>(u), s.curdeg[u]);
    }
    min_degree_ = 0;
  }

  bool empty() const { return remaining_ == 0; }

  // Smallest non-empty degree bucket.
  const std::vector<Vertex>& MinBucket(std::size_t* degree) {
    while (buckets_[min_degree_].empty()) ++min_degree_;
    *degree = min_degree_;
    return buckets_[min_degree_];
  }

  void Remove(Vertex u, std::size_t degree) {
    auto& bucket = buckets_[degree];
    const std::size_t at = position_[static_cast<std::size_t>(u)];
    const Vertex last = bucket.back();
    bucket[at] = last;
    position_[static_cast<std::size_t>(last)] = at;
    bucket.pop_back();
    --remaining_;
  }

  void Decrement(Vertex u, std::size_t degree) {
    Remove(u, degree);
    Insert(u, degree - 1);
    min_degree_ = std::min(min_degree_, degree - 1);
  }

 private:
  void Insert(Vertex u, std::size_t degree) {
    position_[static_cast<std::size_t>(u)] = buckets_[degree].size();
    buckets_[degree].push_back(u);
    ++remaining_;
  }

  std::vector<std::vector<Vertex>> buckets_;
  std::vector<std::size_t> position_;
  std::size_t remaining_;
  std::size_t min_degree_ = 0;
};

// The shared MinGreedy / MinRanking loop. `pick_online` chooses from the
// minimum-degree bucket; `pick_offline` chooses among u's alive neighbors.
template <typename PickOnline, typename PickOffline>
Matching RunMinDegreeLoop(const BipartiteGraph& g, PickOnline&& pick_online,
                          PickOffline&& pick_offline,
                          const PriorityObserver& observer) {
  LiveState s(g);
  DegreeBuckets buckets(s);
  Matching m(g.n_online(), g.n_offline());
  std::vector<Vertex> alive_nbrs;
  while (!buckets.empty()) {
    std::size_t degree = 0;
    const Vertex u = pick_online(buckets.MinBucket(&degree));
    buckets.Remove(u, degree);
    s.alive_online[static_cast<std::size_t>(u)] = false;
    if (degree > 0) {
      alive_nbrs.clear();
      for (Vertex v : g.neighbors(u)) {
        if (s.alive_offline[static_cast<std::size_t>(v)]) alive_nbrs.push_back(v);
      }
      const Vertex v = pick_offline(std::span<const Vertex>(alive_nbrs));
      m.add(u, v);
      s.alive_offline[static_cast<std::size_t>(v)] = false;
      for (Vertex w : g.offline_neighbors(v)) {
        const auto wi = static_cast<std::size_t>(w);
        if (!s.alive_online[wi]) continue;
        buckets.Decrement(w, s.curdeg[wi]);
        --s.curdeg[wi];
      }
    }
    if (observer) observer(s);
  }
  return m;
}

}  // namespace

LiveState::LiveState(const BipartiteGraph& g)
    : alive_online(g.n_online(), true),
      alive_offline(g.n_offline(), true),
      curdeg(g.n_online()) {
  for (std::size_t u = 0; u < g.n_online(); ++u) {
    curdeg[u] = g.degree(static_cast<Vertex>(u));
  }
}

bool LiveState::consistent_with(const BipartiteGraph& g) const {
  for (std::size_t u = 0; u < g.n_online(); ++u) {
    if (!alive_online[u]) continue;
    std::size_t d = 0;
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) {
      if (alive_offline[static_cast<std::size_t>(v)]) ++d;
    }
    if (d != curdeg[u]) return false;
  }
  return true;
}

Matching run_min_greedy(const BipartiteGraph& g, std::uint64_t seed,
                        const PriorityObserver& observer) {
  Rng rng(seed);
  auto random_pick = [&](std::span<const Vertex> xs) {
    return xs[uniform_index(rng, xs.size())];
  };
  return RunMinDegreeLoop(
      g, [&](const std::vector<Vertex>& b) { return random_pick(b); },
      random_pick, observer);
}

Matching run_min_ranking(const BipartiteGraph& g, std::uint64_t seed,
                         const PriorityObserver& observer) {
  Rng rng(seed);
  const Permutation pi = random_permutation(g.n_offline(), rng);
  return RunMinDegreeLoop(
      g,
      [&](const std::vector<Vertex>& b) {
        return b[uniform_index(rng, b.size())];
      },
      [&](std::span<const Vertex> xs) {
        return *std::min_element(xs.begin(), xs.end(), [&](Vertex a, Vertex c) {
          return pi.rank_of(a) < pi.rank_of(c);
        });
      },
      observer);
}

Matching run_min_ranking_deterministic(const BipartiteGraph& g,
                                       const Permutation& pi,
                                       const PriorityObserver& observer) {
  if (pi.size() != g.n_offline()) {
    throw std::invalid_argument("run_min_ranking_deterministic: pi must cover V");
  }
  return RunMinDegreeLoop(
      g,
      [](const std::vector<Vertex>& b) {
        return *std::min_element(b.begin(), b.end());
      },
      [&](std::span<const Vertex> xs) {
        return *std::min_element(xs.begin(), xs.end(), [&](Vertex a, Vertex c) {
          return pi.rank_of(a) < pi.rank_of(c);
        });
      },
      observer);
}

RhsGreedyResult run_rhs_greedy(const BipartiteGraph& h,
                               const FamilyDescriptor& desc,
                               const Permutation& offline_order) {
  const Block* v1 = desc.block("V1");
  const Block* v2 = desc.block("V2");
  if (desc.family != "hgraph" || v1 == nullptr || v2 == nullptr ||
      v2->size() != h.n_online() || v1->size() + v2->size() != h.n_offline()) {
    throw std::invalid_argument(
        "run_rhs_greedy: graph does not carry H_{n,k} shape metadata");
  }
  if (offline_order.size() != h.n_offline()) {
    throw std::invalid_argument("run_rhs_greedy: order must cover V");
  }
  RhsGreedyResult result{Matching(h.n_online(), h.n_offline()), 0};
  for (Vertex v : offline_order.order()) {
    for (Vertex u : h.offline_neighbors(v)) {
      if (result.matching.online_matched(u)) continue;
      result.matching.add(u, v);
      if (v2->contains(v)) ++result.parallel_edges;
      break;
    }
  }
  return result;
}

}  // namespace matchlab

#include "matchlab/max_matching.h"

#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace matchlab {
namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g),
        match_u_(g.n_online(), kNoVertex),
        match_v_(g.n_offline(), kNoVertex),
        level_(g.n_online(), kUnreached),
        next_edge_(g.n_online(), 0) {}

  Matching Solve() {
    while (Bfs()) {
      std::fill(next_edge_.begin(), next_edge_.end(), 0);
      for (std::size_t u = 0; u < g_.n_online(); ++u) {
        if (match_u_[u] == kNoVertex) Augment(static_cast<Vertex>(u));
      }
    }
    Matching m(g_.n_online(), g_.n_offline());
    for (std::size_t u = 0; u < match_u_.size(); ++u) {
      if (match_u_[u] != kNoVertex) m.add(static_cast<Vertex>(u), match_u_[u]);
    }
    return m;
  }

 private:
  // Layers free online vertices at 0; returns whether a free offline vertex
  // is reachable by an alternating path.
  bool Bfs() {
    std::queue<Vertex> queue;
    for (std::size_t u = 0; u < g_.n_online(); ++u) {
      if (match_u_[u] == kNoVertex) {
        level_[u] = 0;
        queue.push(static_cast<Vertex>(u));
      } else {
        level_[u] = kUnreached;
      }
    }
    int free_level = kUnreached;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      const int lu = level_[static_cast<std::size_t>(u)];
      if (lu >= free_level) continue;
      for (Vertex v : g_.neighbors(u)) {
        const Vertex w = match_v_[static_cast<std::size_t>(v)];
        if (w == kNoVertex) {
          if (free_level == kUnreached) free_level = lu + 1;
        } else if (level_[static_cast<std::size_t>(w)] == kUnreached) {
          level_[static_cast<std::size_t>(w)] = lu + 1;
          queue.push(w);
        }
      }
    }
    free_level_ = free_level;
    return free_level != kUnreached;
  }

  // Iterative layered DFS from a free online vertex.
  bool Augment(Vertex root) {
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      const auto ui = static_cast<std::size_t>(u);
      const auto nbrs = g_.neighbors(u);
      bool advanced = false;
      while (next_edge_[ui] < nbrs.size()) {
        const Vertex v = nbrs[next_edge_[ui]];
        const Vertex w = match_v_[static_cast<std::size_t>(v)];
        if (w == kNoVertex) {
          if (level_[ui] + 1 != free_level_) {
            ++next_edge_[ui];
            continue;
          }
          // Flip the path recorded on the stack, ending with u - v.
          Vertex carry = v;
          for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            const auto si = static_cast<std::size_t>(*it);
            const Vertex previous = match_u_[si];
            match_u_[si] = carry;
            match_v_[static_cast<std::size_t>(carry)] = *it;
            carry = previous;
          }
          return true;
        }
        if (level_[static_cast<std::size_t>(w)] == level_[ui] + 1) {
          ++next_edge_[ui];
          stack.push_back(w);
          advanced = true;
          break;
        }
        ++next_edge_[ui];
      }
      if (!advanced) {
        level_[ui] = kUnreached;
        stack.pop_back();
      }
    }
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<Vertex> match_u_;
  std::vector<Vertex> match_v_;
  std::vector<int> level_;
  std::vector<std::size_t> next_edge_;
  int free_level_ = kUnreached;
};

void BruteForce(const BipartiteGraph& g, std::size_t u,
                std::vector<Vertex>& current, std::vector<bool>& used,
                std::size_t current_size, std::vector<Vertex>& best,
                std::size_t& best_size) {
  if (u == g.n_online()) {
    if (current_size > best_size) {
      best_size = current_size;
      best = current;
    }
    return;
  }
  // Remaining online vertices cannot lift the size above this bound.
  if (current_size + (g.n_online() - u) <= best_size) return;
  for (Vertex v : g.neighbors(static_cast<Vertex>(u))) {
    const auto vi = static_cast<std::size_t>(v);
    if (used[vi]) continue;
    used[vi] = true;
    current[u] = v;
    BruteForce(g, u + 1, current, used, current_size + 1, best, best_size);
    current[u] = kNoVertex;
    used[vi] = false;
  }
  BruteForce(g, u + 1, current, used, current_size, best, best_size);
}

}  // namespace

Matching maximum_matching(const BipartiteGraph& g) {
  return HopcroftKarp(g).Solve();
}

Matching brute_force_maximum_matching(const BipartiteGraph& g) {
  if (g.n_online() > kBruteForceMaxOnline) {
    throw std::invalid_argument(
        "brute_force_maximum_matching: n_online " +
        std::to_string(g.n_online()) + " exceeds " +
        std::to_string(kBruteForceMaxOnline));
  }
  std::vector<Vertex> current(g.n_online(), kNoVertex);
  std::vector<Vertex> best(g.n_online(), kNoVertex);
  std::vector<bool> used(g.n_offline(), false);
  std::size_t best_size = 0;
  BruteForce(g, 0, current, used, 0, best, best_size);
  Matching m(g.n_online(), g.n_offline());
  for (std::size_t u = 0; u < best.size(); ++u) {
    if (best[u] != kNoVertex) m.add(static_cast<Vertex>(u), best[u]);
  }
  return m;
}

}  // namespace matchlab

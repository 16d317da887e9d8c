#ifndef MATCHLAB_GRAPH_H_
#define MATCHLAB_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace matchlab {

// Vertices are 0-based indices within their own side. U is the online side,
// V the offline side.
using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

// Immutable bipartite graph. Neighbor lists of both sides are sorted
// ascending and duplicate free.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  // Validates, sorts and deduplicates `adjacency`. Throws
  // std::invalid_argument on out-of-range neighbor indices.
  BipartiteGraph(std::size_t n_offline,
                 std::vector<std::vector<Vertex>> adjacency);

  static BipartiteGraph FromEdges(
      std::size_t n_online, std::size_t n_offline,
      std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t n_online() const { return online_adj_.size(); }
  std::size_t n_offline() const { return offline_adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex u) const {
    return online_adj_[static_cast<std::size_t>(u)];
  }
  std::span<const Vertex> offline_neighbors(Vertex v) const {
    return offline_adj_[static_cast<std::size_t>(v)];
  }
  std::size_t degree(Vertex u) const { return neighbors(u).size(); }
  std::size_t offline_degree(Vertex v) const {
    return offline_neighbors(v).size();
  }

  bool has_edge(Vertex u, Vertex v) const;

  const std::vector<std::vector<Vertex>>& adjacency() const {
    return online_adj_;
  }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.online_adj_ == b.online_adj_ && a.n_offline() == b.n_offline();
  }

 private:
  std::vector<std::vector<Vertex>> online_adj_;
  std::vector<std::vector<Vertex>> offline_adj_;
  std::size_t num_edges_ = 0;
};

// A set of vertex-disjoint U-V pairs.
class Matching {
 public:
  Matching() = default;
  Matching(std::size_t n_online, std::size_t n_offline)
      : online_partner_(n_online, kNoVertex),
        offline_partner_(n_offline, kNoVertex) {}

  std::size_t size() const { return size_; }
  std::size_t n_online() const { return online_partner_.size(); }
  std::size_t n_offline() const { return offline_partner_.size(); }

  std::optional<Vertex> partner_of_online(Vertex u) const;
  std::optional<Vertex> partner_of_offline(Vertex v) const;
  bool online_matched(Vertex u) const {
    return online_partner_[static_cast<std::size_t>(u)] != kNoVertex;
  }
  bool offline_matched(Vertex v) const {
    return offline_partner_[static_cast<std::size_t>(v)] != kNoVertex;
  }

  // Both endpoints must currently be free; throws std::logic_error otherwise.
  void add(Vertex u, Vertex v);

  // Matched pairs sorted by online vertex.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Raw partner arrays, kNoVertex where unmatched.
  const std::vector<Vertex>& online_partners() const { return online_partner_; }
  const std::vector<Vertex>& offline_partners() const {
    return offline_partner_;
  }

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.online_partner_ == b.online_partner_ &&
           a.offline_partner_ == b.offline_partner_;
  }

 private:
  friend bool verify_matching(const BipartiteGraph& g, const Matching& m);

  std::vector<Vertex> online_partner_;
  std::vector<Vertex> offline_partner_;
  std::size_t size_ = 0;
};

// Bijection on one side of the graph. `order()[i]` is the vertex in position
// i; `rank()[v]` is the position of v. Used both as an arrival order on U and
// as a priority order on V (lower rank is preferred).
class Permutation {
 public:
  Permutation() = default;

  // Throws std::invalid_argument unless `order` is a permutation of [0, n).
  explicit Permutation(std::vector<Vertex> order);

  static Permutation Identity(std::size_t n);
  static Permutation Reversed(std::size_t n);

  std::size_t size() const { return order_.size(); }
  const std::vector<Vertex>& order() const { return order_; }
  const std::vector<Vertex>& rank() const { return rank_; }
  Vertex at(std::size_t position) const { return order_[position]; }
  Vertex rank_of(Vertex v) const {
    return rank_[static_cast<std::size_t>(v)];
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<Vertex> order_;
  std::vector<Vertex> rank_;
};

// True iff partner maps are mutually inverse, every pair is an edge of `g`,
// sizes agree with `g`, and the cached size is the number of pairs.
bool verify_matching(const BipartiteGraph& g, const Matching& m);

// True iff no edge of `g` has both endpoints unmatched in `m`.
bool is_maximal(const BipartiteGraph& g, const Matching& m);

// JSON: {"n_online": int, "n_offline": int, "adj": [[int, ...], ...]}.
nlohmann::json to_json(const BipartiteGraph& g);
// Throws std::invalid_argument on malformed input.
BipartiteGraph graph_from_json(const nlohmann::json& j);

}  // namespace matchlab

#endif  // MATCHLAB_GRAPH_H_

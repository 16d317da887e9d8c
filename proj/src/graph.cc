#include "matchlab/graph.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace matchlab {

BipartiteGraph::BipartiteGraph(std::size_t n_offline,
                               std::vector<std::vector<Vertex>> adjacency)
    : online_adj_(std::move(adjacency)), offline_adj_(n_offline) {
  for (std::size_t u = 0; u < online_adj_.size(); ++u) {
    auto& nbrs = online_adj_[u];
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    if (!nbrs.empty() &&
        (nbrs.front() < 0 ||
         static_cast<std::size_t>(nbrs.back()) >= n_offline)) {
      throw std::invalid_argument("online vertex " + std::to_string(u) +
                                  " has a neighbor outside [0, " +
                                  std::to_string(n_offline) + ")");
    }
    for (Vertex v : nbrs) {
      offline_adj_[static_cast<std::size_t>(v)].push_back(
          static_cast<Vertex>(u));
    }
    num_edges_ += nbrs.size();
  }
}

BipartiteGraph BipartiteGraph::FromEdges(
    std::size_t n_online, std::size_t n_offline,
    std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::vector<Vertex>> adj(n_online);
  for (const auto& [u, v] : edges) {
    if (u < 0 || static_cast<std::size_t>(u) >= n_online) {
      throw std::invalid_argument("edge endpoint " + std::to_string(u) +
                                  " outside the online side");
    }
    adj[static_cast<std::size_t>(u)].push_back(v);
  }
  return BipartiteGraph(n_offline, std::move(adj));
}

bool BipartiteGraph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || static_cast<std::size_t>(u) >= n_online()) return false;
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<Vertex> Matching::partner_of_online(Vertex u) const {
  const Vertex v = online_partner_[static_cast<std::size_t>(u)];
  if (v == kNoVertex) return std::nullopt;
  return v;
}

std::optional<Vertex> Matching::partner_of_offline(Vertex v) const {
  const Vertex u = offline_partner_[static_cast<std::size_t>(v)];
  if (u == kNoVertex) return std::nullopt;
  return u;
}

void Matching::add(Vertex u, Vertex v) {
  if (online_matched(u) || offline_matched(v)) {
    throw std::logic_error("Matching::add on an already matched endpoint");
  }
  online_partner_[static_cast<std::size_t>(u)] = v;
  offline_partner_[static_cast<std::size_t>(v)] = u;
  ++size_;
}

std::vector<std::pair<Vertex, Vertex>> Matching::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(size_);
  for (std::size_t u = 0; u < online_partner_.size(); ++u) {
    if (online_partner_[u] != kNoVertex) {
      out.emplace_back(static_cast<Vertex>(u), online_partner_[u]);
    }
  }
  return out;
}

Permutation::Permutation(std::vector<Vertex> order)
    : order_(std::move(order)), rank_(order_.size(), kNoVertex) {
  const auto n = order_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order_[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n ||
        rank_[static_cast<std::size_t>(v)] != kNoVertex) {
      throw std::invalid_argument("not a permutation of [0, " +
                                  std::to_string(n) + ")");
    }
    rank_[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
  }
}

Permutation Permutation::Identity(std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  return Permutation(std::move(order));
}

Permutation Permutation::Reversed(std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.rbegin(), order.rend(), 0);
  return Permutation(std::move(order));
}

bool verify_matching(const BipartiteGraph& g, const Matching& m) {
  if (m.n_online() != g.n_online() || m.n_offline() != g.n_offline()) {
    return false;
  }
  std::size_t pairs = 0;
  for (std::size_t u = 0; u < m.online_partner_.size(); ++u) {
    const Vertex v = m.online_partner_[u];
    if (v == kNoVertex) continue;
    if (v < 0 || static_cast<std::size_t>(v) >= m.n_offline()) return false;
    if (m.offline_partner_[static_cast<std::size_t>(v)] !=
        static_cast<Vertex>(u)) {
      return false;
    }
    if (!g.has_edge(static_cast<Vertex>(u), v)) return false;
    ++pairs;
  }
  std::size_t offline_pairs = 0;
  for (std::size_t v = 0; v < m.offline_partner_.size(); ++v) {
    const Vertex u = m.offline_partner_[v];
    if (u == kNoVertex) continue;
    if (u < 0 || static_cast<std::size_t>(u) >= m.n_online()) return false;
    if (m.online_partner_[static_cast<std::size_t>(u)] !=
        static_cast<Vertex>(v)) {
      return false;
    }
    ++offline_pairs;
  }
  return pairs == offline_pairs && pairs == m.size_;
}

bool is_maximal(const BipartiteGraph& g, const Matching& m) {
  for (std::size_t u = 0; u < g.n_online(); ++u) {
    if (m.online_matched(static_cast<Vertex>(u))) continue;
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) {
      if (!m.offline_matched(v)) return false;
    }
  }
  return true;
}

nlohmann::json to_json(const BipartiteGraph& g) {
  return nlohmann::json{{"n_online", g.n_online()},
                        {"n_offline", g.n_offline()},
                        {"adj", g.adjacency()}};
}

BipartiteGraph graph_from_json(const nlohmann::json& j) {
  try {
    const auto n_online = j.at("n_online").get<std::int64_t>();
    const auto n_offline = j.at("n_offline").get<std::int64_t>();
    auto adj = j.at("adj").get<std::vector<std::vector<Vertex>>>();
    if (n_online < 0 || n_offline < 0 ||
        adj.size() != static_cast<std::size_t>(n_online)) {
      throw std::invalid_argument("graph JSON: adj length must equal n_online");
    }
    return BipartiteGraph(static_cast<std::size_t>(n_offline), std::move(adj));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
}

}  // namespace matchlab

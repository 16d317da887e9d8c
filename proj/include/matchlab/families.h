#ifndef MATCHLAB_FAMILIES_H_
#define MATCHLAB_FAMILIES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "matchlab/graph.h"

namespace matchlab {

enum class Side { kOnline, kOffline };

// A named contiguous index range [begin, end) on one side.
struct Block {
  std::string name;
  Side side = Side::kOnline;
  Vertex begin = 0;
  Vertex end = 0;

  std::size_t size() const { return static_cast<std::size_t>(end - begin); }
  bool contains(Vertex x) const { return begin <= x && x < end; }
};

struct FamilyDescriptor {
  std::string family;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::vector<Block> blocks;
  Permutation canonical_arrival;
  std::size_t expected_opt = 0;

  std::optional<std::int64_t> param(const std::string& key) const;
  const Block* block(const std::string& name) const;
  // "k=3;n=5" style rendering in parameter order.
  std::string params_string() const;
};

struct Family {
  BipartiteGraph graph;
  FamilyDescriptor descriptor;
};

nlohmann::json to_json(const FamilyDescriptor& d);
FamilyDescriptor descriptor_from_json(const nlohmann::json& j);

// F_1 = F_2 = 1. Throws std::out_of_range unless 1 <= i <= 93 (F_94 does not
// fit in 64 bits).
std::uint64_t fibonacci(int i);

// Worst-case family for k-pass Category-Advice: F_{2k+1} vertices per side.
// G_{k+1} stacks U1 | U2 | U3 against V1 | V2 | V3 top to bottom with
// |U1| = |U3| = |V1| = |V3| = F_{2k+1} and |U2| = |V2| = F_{2k}: a copy of G_k
// on U1 x V3, bicliques U1 x V1 and U2 x V1, and parallel edges U2 - V2 and
// U3 - V1. G_1 is u0 - {v0, v1}, u1 - {v0}. Arrival order and the identity
// sigma are top to bottom. Requires 1 <= k <= 11.
Family gen_fibonacci_family(int k);

// u_i ~ {v_i, ..., v_{n-1}}; arrival u_0 first.
Family gen_kvv_triangular(int n);

// Besser-Poloczek G_b with L as the online side. Vertex named j_W (1-based)
// has index j - 1 on side W: S_{1,W} = [0, b^2), S^{(i)}_{2,W} =
// [b^2 + (i-1) b, b^2 + i b), S_{3,W} = [2b^2, 2b^2 + 2b). Requires b >= 2.
Family gen_besser_poloczek(int b);

// H_{n,k}: U = [0, n) online; offline V1 = [0, k) (biclique to U) followed by
// V2 = [k, k + n) with parallel edges i_U - (k + i). Requires 0 <= k <= n.
Family gen_h_graph(int n, int k);

// Goel-Mehta type graph G_{L,N}: blocks U_j, V_i of size L (block j occupies
// [(j-1) L, j L)), biclique U_j x V_i iff i >= j.
Family gen_goel_mehta(int block_size, int blocks);

// Offline side of each gadget H_{j,L}: L plus a Chernoff slack term.
std::size_t gadget_offline_size(int block_size);

// G_{L,N,K}: K disjoint copies of G_{L,N} followed by N gadgets H_{j,L}.
// Online layout: copies [c LN, (c+1) LN), then gadget online blocks of size L.
// Offline layout: copies, then gadget offline blocks of gadget_offline_size(L).
// Offline block k of every copy is joined to the online side of H_{j,L} for
// all j >= k, which gives every copy offline vertex degree (N + 1) L.
Family gen_min_degree_hard(int block_size, int blocks, int copies);

// Number of gadgets in `desc` (a mindegree-hard descriptor) that receive more
// arrivals than their offline side holds, given per-arrival type indices.
std::size_t count_gadget_overflows(const FamilyDescriptor& desc,
                                   std::span<const Vertex> draws);

// Dispatch by family name ("fibonacci", "kvv", "bp", "hgraph", "goel-mehta",
// "mindegree-hard") with parameters looked up by key. Throws
// std::invalid_argument on unknown names or missing keys.
Family generate_family(
    const std::string& name,
    const std::vector<std::pair<std::string, std::int64_t>>& params);

std::vector<std::string> family_names();

}  // namespace matchlab

#endif  // MATCHLAB_FAMILIES_H_

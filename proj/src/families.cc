#include "matchlab/families.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace matchlab {
namespace {

using Adjacency = std::vector<std::vector<Vertex>>;

void CheckParam(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

Block OnlineBlock(std::string name, std::size_t begin, std::size_t end) {
  return {std::move(name), Side::kOnline, static_cast<Vertex>(begin),
          static_cast<Vertex>(end)};
}

Block OfflineBlock(std::string name, std::size_t begin, std::size_t end) {
  return {std::move(name), Side::kOffline, static_cast<Vertex>(begin),
          static_cast<Vertex>(end)};
}

void AddBiclique(Adjacency& adj, std::size_t u_begin, std::size_t u_end,
                 std::size_t v_begin, std::size_t v_end) {
  for (std::size_t u = u_begin; u < u_end; ++u) {
    for (std::size_t v = v_begin; v < v_end; ++v) {
      adj[u].push_back(static_cast<Vertex>(v));
    }
  }
}

void AddParallel(Adjacency& adj, std::size_t u_begin, std::size_t v_begin,
                 std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    adj[u_begin + i].push_back(static_cast<Vertex>(v_begin + i));
  }
}

// Adjacency of G_k; both sides have F_{2k+1} vertices.
Adjacency FibonacciAdjacency(int k) {
  if (k == 1) return {{0, 1}, {0}};
  const Adjacency inner = FibonacciAdjacency(k - 1);
  const std::size_t outer = fibonacci(2 * k - 1);   // |U1| = |U3|
  const std::size_t middle = fibonacci(2 * k - 2);  // |U2|
  const std::size_t n = 2 * outer + middle;
  const std::size_t u2 = outer;
  const std::size_t u3 = outer + middle;
  const std::size_t v2 = outer;
  const std::size_t v3 = outer + middle;
  Adjacency adj(n);
  AddBiclique(adj, 0, outer, 0, outer);
  for (std::size_t u = 0; u < outer; ++u) {
    for (Vertex v : inner[u]) adj[u].push_back(static_cast<Vertex>(v3 + v));
  }
  AddBiclique(adj, u2, u2 + middle, 0, outer);
  AddParallel(adj, u2, v2, middle);
  AddParallel(adj, u3, 0, outer);
  return adj;
}

}  // namespace

std::optional<std::int64_t> FamilyDescriptor::param(
    const std::string& key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  return std::nullopt;
}

const Block* FamilyDescriptor::block(const std::string& name) const {
  for (const auto& b : blocks) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

std::string FamilyDescriptor::params_string() const {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + '=' + std::to_string(v);
  }
  return out;
}

nlohmann::json to_json(const FamilyDescriptor& d) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : d.params) params[k] = v;
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : d.blocks) {
    blocks.push_back({{"name", b.name},
                      {"side", b.side == Side::kOnline ? "online" : "offline"},
                      {"begin", b.begin},
                      {"end", b.end}});
  }
  return {{"name", d.family},
          {"params", params},
          {"blocks", blocks},
          {"canonical_arrival", d.canonical_arrival.order()},
          {"expected_opt", d.expected_opt}};
}

FamilyDescriptor descriptor_from_json(const nlohmann::json& j) {
  try {
    FamilyDescriptor d;
    d.family = j.at("name").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) {
      d.params.emplace_back(k, v.get<std::int64_t>());
    }
    for (const auto& b : j.at("blocks")) {
      const auto side = b.at("side").get<std::string>();
      if (side != "online" && side != "offline") {
        throw std::invalid_argument("block side must be online or offline");
      }
      d.blocks.push_back({b.at("name").get<std::string>(),
                          side == "online" ? Side::kOnline : Side::kOffline,
                          b.at("begin").get<Vertex>(), b.at("end").get<Vertex>()});
    }
    d.canonical_arrival =
        Permutation(j.at("canonical_arrival").get<std::vector<Vertex>>());
    d.expected_opt = j.at("expected_opt").get<std::size_t>();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("family descriptor JSON: ") +
                                e.what());
  }
}

std::uint64_t fibonacci(int i) {
  if (i < 1 || i > 93) {
    throw std::out_of_range("fibonacci: index " + std::to_string(i) +
                            " outside [1, 93]");
  }
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  for (int j = 3; j <= i; ++j) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

Family gen_fibonacci_family(int k) {
  CheckParam(k >= 1 && k <= 11, "fibonacci family: k must be in [1, 11]");
  Adjacency adj = FibonacciAdjacency(k);
  const std::size_t n = adj.size();
  Family f{BipartiteGraph(n, std::move(adj)), {}};
  auto& d = f.descriptor;
  d.family = "fibonacci";
  d.params = {{"k", k}};
  if (k == 1) {
    d.blocks = {OnlineBlock("U", 0, n), OfflineBlock("V", 0, n)};
  } else {
    const std::size_t outer = fibonacci(2 * k - 1);
    const std::size_t middle = fibonacci(2 * k - 2);
    for (Side side : {Side::kOnline, Side::kOffline}) {
      const std::string p = side == Side::kOnline ? "U" : "V";
      auto make = side == Side::kOnline ? OnlineBlock : OfflineBlock;
      d.blocks.push_back(make(p + "1", 0, outer));
      d.blocks.push_back(make(p + "2", outer, outer + middle));
      d.blocks.push_back(make(p + "3", outer + middle, n));
    }
  }
  d.canonical_arrival = Permutation::Identity(n);
  d.expected_opt = n;
  return f;
}

Family gen_kvv_triangular(int n) {
  CheckParam(n >= 1, "kvv: n must be >= 1");
  const auto size = static_cast<std::size_t>(n);
  Adjacency adj(size);
  for (std::size_t u = 0; u < size; ++u) {
    for (std::size_t v = u; v < size; ++v) {
      adj[u].push_back(static_cast<Vertex>(v));
    }
  }
  Family f{BipartiteGraph(size, std::move(adj)), {}};
  auto& d = f.descriptor;
  d.family = "kvv";
  d.params = {{"n", n}};
  d.blocks = {OnlineBlock("U", 0, size), OfflineBlock("V", 0, size)};
  d.canonical_arrival = Permutation::Identity(size);
  d.expected_opt = size;
  return f;
}

Family gen_besser_poloczek(int b) {
  CheckParam(b >= 2, "bp: b must be >= 2");
  const auto bb = static_cast<std::size_t>(b);
  const std::size_t sq = bb * bb;
  const std::size_t s2 = sq;          // start of S_2
  const std::size_t s3 = 2 * sq;      // start of S_3
  const std::size_t n = 2 * sq + 2 * bb;
  Adjacency adj(n);  // online side is L
  // S_{3,L} x S_{1,R} biclique and S_{3,L} - S_{3,R} parallel.
  AddBiclique(adj, s3, n, 0, sq);
  AddParallel(adj, s3, s3, 2 * bb);
  // S_{1,L} x S_{3,R} biclique and i_L - (b^2 + i)_R parallel.
  AddBiclique(adj, 0, sq, s3, n);
  AddParallel(adj, 0, s2, sq);
  // (b^2 + i)_L - i_R parallel and S^{(i)}_{2,L} x S^{(i)}_{2,R} bicliques.
  AddParallel(adj, s2, 0, sq);
  for (std::size_t i = 0; i < bb; ++i) {
    const std::size_t lo = s2 + i * bb;
    AddBiclique(adj, lo, lo + bb, lo, lo + bb);
  }
  Family f{BipartiteGraph(n, std::move(adj)), {}};
  auto& d = f.descriptor;
  d.family = "bp";
  d.params = {{"b", b}};
  for (Side side : {Side::kOnline, Side::kOffline}) {
    const std::string w = side == Side::kOnline ? "L" : "R";
    auto make = side == Side::kOnline ? OnlineBlock : OfflineBlock;
    d.blocks.push_back(make("S1" + w, 0, sq));
    for (std::size_t i = 0; i < bb; ++i) {
      d.blocks.push_back(make("S2" + w + "(" + std::to_string(i + 1) + ")",
                              s2 + i * bb, s2 + (i + 1) * bb));
    }
    d.blocks.push_back(make("S3" + w, s3, n));
  }
  d.canonical_arrival = Permutation::Identity(n);
  d.expected_opt = n;
  return f;
}

Family gen_h_graph(int n, int k) {
  CheckParam(n >= 0 && k >= 0 && k <= n, "hgraph: need 0 <= k <= n");
  const auto nn = static_cast<std::size_t>(n);
  const auto kk = static_cast<std::size_t>(k);
  Adjacency adj(nn);
  AddBiclique(adj, 0, nn, 0, kk);
  AddParallel(adj, 0, kk, nn);
  Family f{BipartiteGraph(nn + kk, std::move(adj)), {}};
  auto& d = f.descriptor;
  d.family = "hgraph";
  d.params = {{"n", n}, {"k", k}};
  d.blocks = {OnlineBlock("U", 0, nn), OfflineBlock("V1", 0, kk),
              OfflineBlock("V2", kk, kk + nn)};
  d.canonical_arrival = Permutation::Identity(nn);
  d.expected_opt = nn;
  return f;
}

Family gen_goel_mehta(int block_size, int blocks) {
  CheckParam(block_size >= 1 && blocks >= 1,
             "goel-mehta: L and N must be >= 1");
  const auto l = static_cast<std::size_t>(block_size);
  const auto nb = static_cast<std::size_t>(blocks);
  const std::size_t n = l * nb;
  Adjacency adj(n);
  for (std::size_t j = 0; j < nb; ++j) {
    AddBiclique(adj, j * l, (j + 1) * l, j * l, n);
  }
  Family f{BipartiteGraph(n, std::move(adj)), {}};
  auto& d = f.descriptor;
  d.family = "goel-mehta";
  d.params = {{"L", block_size}, {"N", blocks}};
  for (std::size_t j = 0; j < nb; ++j) {
    d.blocks.push_back(
        OnlineBlock("U" + std::to_string(j + 1), j * l, (j + 1) * l));
  }
  for (std::size_t i = 0; i < nb; ++i) {
    d.blocks.push_back(
        OfflineBlock("V" + std::to_string(i + 1), i * l, (i + 1) * l));
  }
  d.canonical_arrival = Permutation::Identity(n);
  d.expected_opt = n;
  return f;
}

std::size_t gadget_offline_size(int block_size) {
  const double l = block_size;
  const double slack = std::ceil(3.0 * std::sqrt(l * std::log(std::max(l, 2.0))));
  return static_cast<std::size_t>(block_size) + static_cast<std::size_t>(slack);
}

Family gen_min_degree_hard(int block_size, int blocks, int copies) {
  CheckParam(block_size >= 1 && blocks >= 1 && copies >= 1,
             "mindegree-hard: L, N and K must be >= 1");
  const auto l = static_cast<std::size_t>(block_size);
  const auto nb = static_cast<std::size_t>(blocks);
  const auto kc = static_cast<std::size_t>(copies);
  const std::size_t copy_size = l * nb;
  const std::size_t gadget_off = gadget_offline_size(block_size);
  const std::size_t gadget_on_base = kc * copy_size;
  const std::size_t gadget_off_base = kc * copy_size;
  const std::size_t n_online = gadget_on_base + nb * l;
  const std::size_t n_offline = gadget_off_base + nb * gadget_off;
  Adjacency adj(n_online);
  for (std::size_t c = 0; c < kc; ++c) {
    const std::size_t base = c * copy_size;
    for (std::size_t j = 0; j < nb; ++j) {
      AddBiclique(adj, base + j * l, base + (j + 1) * l, base + j * l,
                  base + copy_size);
    }
  }
  for (std::size_t j = 0; j < nb; ++j) {
    const std::size_t on = gadget_on_base + j * l;
    const std::size_t off = gadget_off_base + j * gadget_off;
    AddBiclique(adj, on, on + l, off, off + gadget_off);
    // Offline block k <= j of every copy.
    for (std::size_t c = 0; c < kc; ++c) {
      AddBiclique(adj, on, on + l, c * copy_size, c * copy_size + (j + 1) * l);
    }
  }
  Family f{BipartiteGraph(n_offline, std::move(adj)), {}};
  auto& d = f.descriptor;
  d.family = "mindegree-hard";
  d.params = {{"L", block_size}, {"N", blocks}, {"K", copies}};
  for (std::size_t c = 0; c < kc; ++c) {
    const std::string prefix = "C" + std::to_string(c + 1) + ".";
    for (std::size_t j = 0; j < nb; ++j) {
      const std::size_t lo = c * copy_size + j * l;
      d.blocks.push_back(
          OnlineBlock(prefix + "U" + std::to_string(j + 1), lo, lo + l));
      d.blocks.push_back(
          OfflineBlock(prefix + "V" + std::to_string(j + 1), lo, lo + l));
    }
  }
  for (std::size_t j = 0; j < nb; ++j) {
    const std::string prefix = "H" + std::to_string(j + 1) + ".";
    const std::size_t on = gadget_on_base + j * l;
    const std::size_t off = gadget_off_base + j * gadget_off;
    d.blocks.push_back(OnlineBlock(prefix + "U", on, on + l));
    d.blocks.push_back(OfflineBlock(prefix + "V", off, off + gadget_off));
  }
  d.canonical_arrival = Permutation::Identity(n_online);
  // Type-graph optimum: copies match internally, gadget online sides into
  // their own (larger) offline sides.
  d.expected_opt = n_online;
  return f;
}

std::size_t count_gadget_overflows(const FamilyDescriptor& desc,
                                   std::span<const Vertex> draws) {
  if (desc.family != "mindegree-hard") {
    throw std::invalid_argument(
        "count_gadget_overflows: not a mindegree-hard descriptor");
  }
  const auto nb = static_cast<std::size_t>(*desc.param("N"));
  std::size_t overflows = 0;
  for (std::size_t j = 1; j <= nb; ++j) {
    const Block* on = desc.block("H" + std::to_string(j) + ".U");
    const Block* off = desc.block("H" + std::to_string(j) + ".V");
    const auto arrivals = static_cast<std::size_t>(std::count_if(
        draws.begin(), draws.end(), [&](Vertex t) { return on->contains(t); }));
    if (arrivals > off->size()) ++overflows;
  }
  return overflows;
}

Family generate_family(
    const std::string& name,
    const std::vector<std::pair<std::string, std::int64_t>>& params) {
  const std::map<std::string, std::int64_t> p(params.begin(), params.end());
  auto get = [&](const std::string& key) -> int {
    auto it = p.find(key);
    if (it == p.end()) {
      throw std::invalid_argument("family '" + name + "' needs parameter '" +
                                  key + "'");
    }
    if (it->second < 0 || it->second > 1'000'000) {
      throw std::invalid_argument("parameter '" + key + "' out of range");
    }
    return static_cast<int>(it->second);
  };
  if (name == "fibonacci") return gen_fibonacci_family(get("k"));
  if (name == "kvv") return gen_kvv_triangular(get("n"));
  if (name == "bp") return gen_besser_poloczek(get("b"));
  if (name == "hgraph") return gen_h_graph(get("n"), get("k"));
  if (name == "goel-mehta") return gen_goel_mehta(get("L"), get("N"));
  if (name == "mindegree-hard") {
    return gen_min_degree_hard(get("L"), get("N"), get("K"));
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::vector<std::string> family_names() {
  return {"fibonacci", "kvv", "bp", "hgraph", "goel-mehta", "mindegree-hard"};
}

}  // namespace matchlab

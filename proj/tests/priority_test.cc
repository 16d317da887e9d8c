#include "matchlab/priority.h"

#include <stdexcept>

#include "gtest/gtest.h"
#include "matchlab/families.h"
#include "matchlab/max_matching.h"
#include "test_util.h"

namespace matchlab {
namespace {

using testing::AllPermutations;
using testing::Biclique;
using testing::RandomFuzzGraph;

TEST(MinGreedyTest, PerfectOnTriangular) {
  const Family f = gen_kvv_triangular(60);
  for (std::uint64_t s = 0; s < 20; ++s) {
    EXPECT_EQ(run_min_greedy(f.graph, s).size(), 60) << "seed " << s;
  }
}

TEST(MinGreedyTest, Biclique) {
  EXPECT_EQ(run_min_greedy(Biclique(7, 7), 3).size(), 7);
}

TEST(MinGreedyTest, DeterministicPerSeed) {
  const BipartiteGraph g = gen_besser_poloczek(6).graph;
  EXPECT_EQ(run_min_greedy(g, 42), run_min_greedy(g, 42));
  EXPECT_EQ(run_min_ranking(g, 42), run_min_ranking(g, 42));
}

TEST(MinRankingTest, SingleEdgeAndTriangular) {
  EXPECT_EQ(run_min_ranking(BipartiteGraph(1, {{0}}), 1).size(), 1);
  const Family f = gen_kvv_triangular(60);
  for (std::uint64_t s = 0; s < 20; ++s) {
    EXPECT_EQ(run_min_ranking(f.graph, s).size(), 60) << "seed " << s;
  }
}

TEST(PriorityTest, OutputsAreMaximalMatchings) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const BipartiteGraph g = RandomFuzzGraph(30, 30, 0.1, seed);
    for (const Matching& m : {run_min_greedy(g, seed), run_min_ranking(g, seed)}) {
      EXPECT_TRUE(verify_matching(g, m)) << "seed " << seed;
      EXPECT_TRUE(is_maximal(g, m)) << "seed " << seed;
    }
  }
}

TEST(PriorityTest, CurdegStaysConsistent) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const BipartiteGraph g = RandomFuzzGraph(25, 25, 0.2, seed);
    std::size_t steps = 0;
    bool consistent = true;
    const PriorityObserver check = [&](const LiveState& s) {
      ++steps;
      consistent = consistent && s.consistent_with(g);
    };
    run_min_greedy(g, seed, check);
    run_min_ranking(g, seed, check);
    EXPECT_TRUE(consistent) << "seed " << seed;
    // Each online vertex is selected exactly once per run.
    EXPECT_EQ(steps, 2 * g.n_online());
  }
}

TEST(PriorityTest, DeadVerticesNeverReturn) {
  const BipartiteGraph g = gen_besser_poloczek(4).graph;
  LiveState prev(g);
  bool monotone = true;
  run_min_greedy(g, 5, [&](const LiveState& s) {
    for (std::size_t u = 0; u < g.n_online(); ++u) {
      monotone = monotone && (prev.alive_online[u] || !s.alive_online[u]);
    }
    for (std::size_t v = 0; v < g.n_offline(); ++v) {
      monotone = monotone && (prev.alive_offline[v] || !s.alive_offline[v]);
    }
    prev = s;
  });
  EXPECT_TRUE(monotone);
}

TEST(MinRankingTest, HGraphAliveOnlineShareOneDegree) {
  for (auto [n, k] : {std::pair{6, 3}, {8, 8}, {5, 0}}) {
    const Family h = gen_h_graph(n, k);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      bool equal = true;
      run_min_ranking(h.graph, seed, [&](const LiveState& s) {
        std::optional<std::size_t> d;
        for (std::size_t u = 0; u < s.curdeg.size(); ++u) {
          if (!s.alive_online[u]) continue;
          if (d && *d != s.curdeg[u]) equal = false;
          d = s.curdeg[u];
        }
      });
      EXPECT_TRUE(equal) << "n=" << n << " k=" << k << " seed " << seed;
    }
  }
}

TEST(RhsGreedyTest, H11TwoOrders) {
  const Family h = gen_h_graph(1, 1);
  // Offline 0 is V1, offline 1 is the parallel V2 vertex.
  EXPECT_EQ(run_rhs_greedy(h.graph, h.descriptor, Permutation({1, 0})).parallel_edges, 1);
  EXPECT_EQ(run_rhs_greedy(h.graph, h.descriptor, Permutation({0, 1})).parallel_edges, 0);
}

TEST(RhsGreedyTest, NoBicliqueUsesAllParallelEdges) {
  const Family h = gen_h_graph(3, 0);
  const auto r = run_rhs_greedy(h.graph, h.descriptor, Permutation({2, 0, 1}));
  EXPECT_EQ(r.parallel_edges, 3);
  EXPECT_EQ(r.matching.size(), 3);
}

TEST(RhsGreedyTest, RejectsGraphsWithoutShapeMetadata) {
  const Family bp = gen_besser_poloczek(2);
  EXPECT_THROW(run_rhs_greedy(bp.graph, bp.descriptor, Permutation::Identity(12)),
               std::invalid_argument);
  const Family h = gen_h_graph(3, 1);
  EXPECT_THROW(run_rhs_greedy(gen_h_graph(3, 2).graph, h.descriptor,
                              Permutation::Identity(5)),
               std::invalid_argument);
  EXPECT_THROW(run_rhs_greedy(h.graph, h.descriptor, Permutation::Identity(3)),
               std::invalid_argument);
}

TEST(EquivalenceTest, RhsGreedyMatchesDeterministicMinRankingSmall) {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= n && n + k <= 6; ++k) {
      const Family h = gen_h_graph(n, k);
      for (const Permutation& order : AllPermutations(h.graph.n_offline())) {
        const Matching a = run_rhs_greedy(h.graph, h.descriptor, order).matching;
        const Matching b = run_min_ranking_deterministic(h.graph, order);
        ASSERT_EQ(a, b) << "n=" << n << " k=" << k;
      }
    }
  }
}

TEST(MinRankingTest, DeterministicVariantValidatesPi) {
  EXPECT_THROW(run_min_ranking_deterministic(Biclique(2, 3), Permutation::Identity(2)),
               std::invalid_argument);
}

}  // namespace
}  // namespace matchlab

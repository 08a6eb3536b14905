#include <gtest/gtest.h>

#include <cmath>

#include "ipgap/graph.hpp"
#include "ipgap/spectral.hpp"
#include "oracles.hpp"

namespace ipgap {
namespace {

using testing::dense_eigs;
using testing::dense_laplacian;
using testing::kron_reduce;

TEST(WeightedGraph, RejectsInvalidEdges) {
  const std::vector<Edge> self_loop{{1, 1, 1.0}};
  EXPECT_THROW(WeightedGraph(2, self_loop), std::invalid_argument);
  const std::vector<Edge> negative{{1, 2, -0.5}};
  EXPECT_THROW(WeightedGraph(2, negative), std::invalid_argument);
  const std::vector<Edge> duplicate{{1, 2, 1.0}, {2, 1, 2.0}};
  EXPECT_THROW(WeightedGraph(2, duplicate), std::invalid_argument);
  const std::vector<Edge> out_of_range{{1, 3, 1.0}};
  EXPECT_THROW(WeightedGraph(2, out_of_range), std::out_of_range);
}

TEST(WeightedGraph, WeightsAreSymmetric) {
  WeightedGraph g(3);
  g.set_weight(3, 1, 2.5);
  EXPECT_EQ(g.weight(1, 3), 2.5);
  EXPECT_EQ(g.weight(3, 1), 2.5);
  EXPECT_EQ(g.weight(1, 2), 0.0);
}

TEST(RwLaplacian, TwoVertices) {
  WeightedGraph g(2);
  g.set_weight(1, 2, 0.75);
  const SymmetricMatrix l = rw_laplacian(g);
  EXPECT_EQ(l(0, 0), 0.75);
  EXPECT_EQ(l(1, 1), 0.75);
  EXPECT_EQ(l(0, 1), -0.75);
}

TEST(RwLaplacian, TriangleSpectrum) {
  const auto values = eigenvalues(rw_laplacian(complete_graph(3))).values;
  ASSERT_EQ(values.size(), 3u);
  EXPECT_NEAR(values[0], 0.0, 1e-12);
  EXPECT_NEAR(values[1], 3.0, 1e-12);
  EXPECT_NEAR(values[2], 3.0, 1e-12);
}

TEST(RwLaplacian, ZeroWeightsGiveZeroMatrix) {
  WeightedGraph g(4);
  g.set_weight(1, 2, 0.0);
  EXPECT_EQ(rw_laplacian(g).max_abs(), 0.0);
}

TEST(RwLaplacian, RowSumsVanishAndZeroCountsComponents) {
  WeightSampler rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const WeightedGraph g = random_connected_graph(2 + trial % 6, 0.5, rng);
    const Eigen::MatrixXd l = rw_laplacian(g).dense();
    EXPECT_LT(l.rowwise().sum().cwiseAbs().maxCoeff(), 1e-12);
    const auto values = eigenvalues(rw_laplacian(g)).values;
    EXPECT_GT(values[1], 1e-9);  // connected: single zero
  }
  // Two components.
  WeightedGraph split(4);
  split.set_weight(1, 2, 1.0);
  split.set_weight(3, 4, 2.0);
  const auto values = eigenvalues(rw_laplacian(split)).values;
  EXPECT_NEAR(values[0], 0.0, 1e-12);
  EXPECT_NEAR(values[1], 0.0, 1e-12);
  EXPECT_GT(values[2], 1.0);
}

TEST(Collapse, HandEvaluatedTriangle) {
  WeightedGraph g(3);
  g.set_weight(1, 3, 1.0);
  g.set_weight(2, 3, 1.0);
  const WeightedGraph c = collapse_last_vertex(g);
  EXPECT_EQ(c.n(), 2);
  EXPECT_DOUBLE_EQ(c.weight(1, 2), 0.5);
}

TEST(Collapse, SingleSpokeRestricts) {
  WeightedGraph g = star_graph(5);  // centre 1
  for (int leaf = 3; leaf <= 5; ++leaf) g.set_weight(1, leaf, 0.0);
  g.set_weight(2, 3, 0.3);
  const WeightedGraph c = collapse_vertex(g, 1).graph;
  // Remaining vertices 5,2,3,4 after swapping 1 with 5.
  EXPECT_EQ(c.n(), 4);
  for (const Edge& e : c.positive_edges()) EXPECT_DOUBLE_EQ(e.weight, 0.3);
  EXPECT_EQ(c.positive_edges().size(), 1u);
}

TEST(Collapse, IsolatedVertexGivesRestriction) {
  WeightedGraph g(4);
  g.set_weight(1, 2, 1.0);
  g.set_weight(2, 3, 2.0);
  const WeightedGraph c = collapse_last_vertex(g);
  EXPECT_EQ(c.n(), 3);
  EXPECT_EQ(c.weight(1, 2), 1.0);
  EXPECT_EQ(c.weight(2, 3), 2.0);
  EXPECT_EQ(c.weight(1, 3), 0.0);
}

TEST(Collapse, MatchesKronReductionOfArbitraryVertex) {
  WeightSampler rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 7;
    const WeightedGraph g = random_connected_graph(n, 0.6, rng);
    const int v = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
    const CollapseResult result = collapse_vertex(g, v);
    const Eigen::MatrixXd reduced = kron_reduce(dense_laplacian(g), v);
    // Map result labels back to the oracle's ordering (input order minus v).
    std::vector<int> order;
    for (int k = 1; k <= n; ++k)
      if (k != v) order.push_back(k);
    const Eigen::MatrixXd got = rw_laplacian(result.graph).dense();
    for (int a = 0; a < n - 1; ++a)
      for (int b = 0; b < n - 1; ++b) {
        const int ra = static_cast<int>(std::find(order.begin(), order.end(),
                                                  result.original_label[a]) - order.begin());
        const int rb = static_cast<int>(std::find(order.begin(), order.end(),
                                                  result.original_label[b]) - order.begin());
        EXPECT_NEAR(got(a, b), reduced(ra, rb), 1e-12);
      }
  }
}

TEST(Collapse, RejectsBadVertex) {
  EXPECT_THROW(collapse_vertex(path_graph(3), 0), std::out_of_range);
  EXPECT_THROW(collapse_vertex(path_graph(3), 4), std::out_of_range);
}

TEST(RankOneIdentity, HoldsOnStarAndRandomGraphs) {
  WeightedGraph star(5);
  for (int i = 1; i < 5; ++i) star.set_weight(i, 5, 0.5 * i);
  EXPECT_TRUE(rank1_identity_check(star, 1e-12));
  WeightSampler rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const WeightedGraph g = random_connected_graph(5, 0.7, rng);
    if (g.incident_weight(5) == 0.0) continue;
    EXPECT_TRUE(rank1_identity_check(g, 1e-12));
    EXPECT_LT(rank1_identity_residual(g), 1e-12);
  }
}

TEST(RankOneIdentity, RequiresPositiveIncidentWeight) {
  WeightedGraph g(3);
  g.set_weight(1, 2, 1.0);
  EXPECT_THROW(rank1_identity_check(g, 1e-12), std::invalid_argument);
}

TEST(Generators, Shapes) {
  EXPECT_EQ(path_graph(5).positive_edges().size(), 4u);
  EXPECT_EQ(cycle_graph(5).positive_edges().size(), 5u);
  EXPECT_EQ(star_graph(5).positive_degree(1), 4);
  EXPECT_EQ(complete_graph(5).positive_edges().size(), 10u);
  const WeightedGraph w7 = wheel_graph(7);
  EXPECT_EQ(w7.n(), 7);
  EXPECT_EQ(w7.positive_edges().size(), 12u);
  EXPECT_EQ(w7.positive_degree(1), 6);
  EXPECT_THROW(wheel_graph(3), std::invalid_argument);
}

TEST(Generators, NestedTriangulation) {
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(nested_triangulation(0, n), complete_graph(3));
  EXPECT_EQ(nested_triangulation(1, 1), complete_graph(4));
  const WeightedGraph t21 = nested_triangulation(2, 1);
  EXPECT_EQ(t21.n(), 7);
  EXPECT_EQ(t21.positive_edges().size(), 3u + 3u * 4u);
  const WeightedGraph t12 = nested_triangulation(1, 2);
  EXPECT_EQ(t12.n(), 5);
  EXPECT_EQ(t12.positive_edges().size(), 9u);
  // Every level-i vertex has exactly three lower-level neighbours.
  const auto levels = nested_triangulation_levels(2, 2);
  const WeightedGraph t22 = nested_triangulation(2, 2);
  for (int v = 4; v <= t22.n(); ++v) {
    int lower = 0;
    for (int w : t22.positive_neighbors(v)) lower += levels[w - 1] < levels[v - 1];
    EXPECT_EQ(lower, 3);
  }
  EXPECT_THROW(nested_triangulation(-1, 1), std::invalid_argument);
  EXPECT_THROW(nested_triangulation(1, 0), std::invalid_argument);
}

TEST(Generators, GenerateDispatch) {
  const std::vector<int> seven{7};
  EXPECT_EQ(generate("wheel", seven), wheel_graph(7));
  const std::vector<int> dn{1, 1};
  EXPECT_EQ(generate("nested_triangulation", dn), complete_graph(4));
  EXPECT_THROW(generate("hypercube", seven), std::invalid_argument);
  EXPECT_THROW(generate("wheel", dn), std::invalid_argument);
}

TEST(WeightSampler, DeterministicAndInRange) {
  WeightSampler a(42), b(42);
  for (int k = 0; k < 100; ++k) {
    const double x = a.uniform(0.1, 2.0);
    EXPECT_EQ(x, b.uniform(0.1, 2.0));
    EXPECT_GE(x, 0.1);
    EXPECT_LT(x, 2.0);
  }
}

TEST(IsConnected, Examples) {
  EXPECT_TRUE(is_connected(complete_graph(3)));
  WeightedGraph two(2);
  two.set_weight(1, 2, 0.0);
  EXPECT_FALSE(is_connected(two));
  WeightedGraph w = wheel_graph(7);
  for (int v = 2; v <= 7; ++v) w.set_weight(v, v == 7 ? 2 : v + 1, 0.0);
  EXPECT_TRUE(is_connected(w));
}

TEST(GtPattern, LevelsInterlaceDownToZero) {
  WeightedGraph two(2);
  two.set_weight(1, 2, 1.5);
  const auto p2 = gt_pattern(two);
  ASSERT_EQ(p2.size(), 2u);
  EXPECT_NEAR(p2[0][0], 0.0, 1e-12);
  EXPECT_NEAR(p2[0][1], 3.0, 1e-12);
  EXPECT_NEAR(p2[1][0], 0.0, 1e-12);

  WeightedGraph zero(2);
  const auto pz = gt_pattern(zero);
  EXPECT_EQ(pz[0], (std::vector<double>{0.0, 0.0}));

  WeightSampler rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pattern = gt_pattern(random_connected_graph(3 + trial % 5, 0.5, rng));
    for (std::size_t level = 1; level < pattern.size(); ++level) {
      ASSERT_EQ(pattern[level].size() + 1, pattern[level - 1].size());
      std::vector<double> padded = pattern[level];
      padded.insert(padded.begin(), 0.0);
      EXPECT_TRUE(interlace_check(padded, pattern[level - 1], 1e-9));
    }
    EXPECT_NEAR(pattern.back().front(), 0.0, 1e-12);
  }
}

TEST(SymmetricMatrix, FromDenseRejectsAsymmetry) {
  Eigen::MatrixXd m(2, 2);
  m << 1, 2, 3, 4;
  EXPECT_THROW(SymmetricMatrix::from_dense(m), std::invalid_argument);
  m(1, 0) = 2;
  EXPECT_EQ(SymmetricMatrix::from_dense(m)(1, 0), 2.0);
}

TEST(RelabelInvariance, SpectrumUnchanged) {
  WeightSampler rng(8);
  const WeightedGraph g = random_connected_graph(6, 0.5, rng);
  const std::vector<int> perm{3, 1, 6, 2, 5, 4};
  const auto a = dense_eigs(dense_laplacian(g));
  const auto b = dense_eigs(dense_laplacian(g.relabeled(perm)));
  EXPECT_TRUE(multiset_equal(a, b, 1e-12));
}

}  // namespace
}  // namespace ipgap

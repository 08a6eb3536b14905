#include <gtest/gtest.h>

#include "ipgap/graph.hpp"
#include "ipgap/spectral.hpp"
#include "oracles.hpp"

namespace ipgap {
namespace {

TEST(Eigenvalues, Examples) {
  const auto zero = eigenvalues(SymmetricMatrix(3)).values;
  EXPECT_EQ(zero, (std::vector<double>{0.0, 0.0, 0.0}));

  SymmetricMatrix d(3);
  d.at(0, 0) = 3;
  d.at(1, 1) = 1;
  d.at(2, 2) = 2;
  const SpectrumReport r = eigenvalues(d);
  EXPECT_NEAR(r.values[0], 1, 1e-14);
  EXPECT_NEAR(r.values[1], 2, 1e-14);
  EXPECT_NEAR(r.values[2], 3, 1e-14);
  EXPECT_LE(r.residual, 1e-8 * 4);

  Eigen::MatrixXd asym(2, 2);
  asym << 1, 2, 0, 1;
  EXPECT_THROW(eigenvalues(asym), std::invalid_argument);
}

TEST(IsPsd, Examples) {
  EXPECT_TRUE(is_psd(SymmetricMatrix::identity(3)));
  SymmetricMatrix m(2);
  m.at(0, 0) = 1;
  m.at(1, 1) = -1;
  EXPECT_FALSE(is_psd(m));
}

TEST(Interlace, Examples) {
  const std::vector<double> a{0, 0}, b{0, 2}, c{0, 5};
  EXPECT_TRUE(interlace_check(a, b));
  EXPECT_FALSE(interlace_check(c, b));
  const std::vector<double> shorter{0};
  EXPECT_THROW(interlace_check(shorter, b), std::invalid_argument);
}

TEST(ShiftBound, SingleSpokeAndRandom) {
  WeightedGraph g(4);
  g.set_weight(1, 2, 1.0);
  g.set_weight(2, 3, 1.0);
  g.set_weight(1, 4, 0.7);
  EXPECT_NEAR(shift_bound(g), 1.4, 1e-15);
  EXPECT_TRUE(shift_bound_check(g));

  // A star: the collapse leaves the rank-one term; equality at the top.
  WeightedGraph star(4);
  for (int i = 1; i < 4; ++i) star.set_weight(i, 4, i);
  EXPECT_TRUE(shift_bound_check(star));

  WeightSampler rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const WeightedGraph r = random_connected_graph(5, 0.6, rng);
    EXPECT_TRUE(shift_bound_check(r));
  }
  EXPECT_THROW(shift_bound_check(path_graph(3).scaled(0.0)), std::invalid_argument);
}

TEST(MultisetEqual, Examples) {
  EXPECT_TRUE(multiset_equal(std::vector<double>{0, 3, 3}, std::vector<double>{3, 0, 3}));
  EXPECT_TRUE(multiset_equal(std::vector<double>{0}, std::vector<double>{1e-12}, 1e-9));
  EXPECT_FALSE(multiset_equal(std::vector<double>{0, 1}, std::vector<double>{0, 2}));
  EXPECT_FALSE(multiset_equal(std::vector<double>{0, 1}, std::vector<double>{0}));
}

TEST(Lanczos, AgreesWithDenseSolver) {
  WeightSampler rng(99);
  const WeightedGraph g = random_connected_graph(40, 0.2, rng);
  const Eigen::MatrixXd l = testing::dense_laplacian(g);
  const auto dense = testing::dense_eigs(l);
  const MatVec op = [&](const Eigen::VectorXd& in, Eigen::VectorXd& out) { out = l * in; };
  const std::vector<Eigen::VectorXd> kernel{Eigen::VectorXd::Ones(40)};
  const SpectrumReport iter = smallest_eigenvalues_iterative(op, 40, 3, kernel);
  ASSERT_GE(iter.values.size(), 1u);
  EXPECT_NEAR(iter.values[0], dense[1], 1e-8);
  EXPECT_LE(iter.residual, 1e-8);
}

}  // namespace
}  // namespace ipgap

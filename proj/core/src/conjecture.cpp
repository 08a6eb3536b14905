#include "ipgap/conjecture.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "ipgap/interchange.hpp"
#include "ipgap/young.hpp"

namespace ipgap {

namespace {

constexpr int kBruteForceMaxK = 6;

void require_positive_sum(const GammaVector& gamma) {
  if (gamma.k() >= 3 && !(gamma.sum() > 0.0))
    throw std::invalid_argument("gamma must not be identically zero for k >= 3");
}

Eigen::VectorXd table_vector(const Partition& shape, int i, int j) {
  for (const HouseholderEntry& e : s4_householder_table())
    if (e.shape == shape && e.i == i && e.j == j) return e.v;
  throw std::logic_error("no tabulated vector");
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

GammaVector::GammaVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("gamma needs at least one entry (k >= 2)");
  for (double g : values_)
    if (!(g >= 0.0) || !std::isfinite(g)) throw std::invalid_argument("gamma entries must be >= 0");
}

double GammaVector::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

SignedWeightedGraph star_minus_complete(const GammaVector& gamma) {
  require_positive_sum(gamma);
  const int k = gamma.k();
  SignedWeightedGraph g(k);
  for (int i = 1; i < k; ++i) g.set_weight(i, k, gamma[i]);
  const double s = gamma.sum();
  for (int i = 1; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.set_weight(i, j, -gamma[i] * gamma[j] / s);
  return g;
}

SymmetricMatrix dirichlet_gap_matrix(const GammaVector& gamma) {
  require_positive_sum(gamma);
  const int k = gamma.k();
  if (k > kBruteForceMaxK)
    throw std::length_error("brute-force Dirichlet matrix limited to k <= 6");

  // Direct construction on functions g: S_k -> R. (P_t g)(s) = g(t s), so
  // row s of I - P_t has +1 at s and -1 at column rank(t s).
  const std::vector<Permutation> states = all_permutations(k);
  const int dim = static_cast<int>(states.size());
  SymmetricMatrix q(dim);
  auto add_form = [&](int i, int j, double weight) {
    if (weight == 0.0) return;
    for (int s = 0; s < dim; ++s) {
      const auto t = static_cast<int>(states[s].left_transpose(i, j).rank());
      q.add(s, s, 2.0 * weight);
      if (t > s) q.add(s, t, -2.0 * weight);
    }
  };
  const double sum = gamma.sum();
  for (int i = 1; i < k; ++i) add_form(i, k, gamma[i]);
  for (int i = 1; i < k; ++i)
    for (int j = i + 1; j < k; ++j) add_form(i, j, -gamma[i] * gamma[j] / sum);
  return q;
}

SymmetricMatrix conjecture_matrix(const Partition& shape, const GammaVector& gamma) {
  if (shape.size() != gamma.k())
    throw std::invalid_argument("partition size must equal k");
  return irrep_laplacian(shape, star_minus_complete(gamma));
}

ConjectureReport check_conjecture(const GammaVector& gamma, double tol) {
  ConjectureReport report;
  report.k = gamma.k();
  report.pass = true;
  for (const Partition& shape : enumerate_partitions(gamma.k())) {
    const SymmetricMatrix d = conjecture_matrix(shape, gamma);
    LambdaVerdict verdict;
    verdict.shape = shape;
    verdict.scale = d.max_abs();
    verdict.min_eig = eigenvalues(d).min();
    const double slack = tol * (1.0 + verdict.scale);
    verdict.psd = verdict.min_eig >= -slack;
    verdict.boundary = std::abs(verdict.min_eig) <= slack;
    report.pass = report.pass && verdict.psd;
    report.per_lambda.push_back(std::move(verdict));
  }
  return report;
}

std::int64_t equal_gamma_entry(const StandardTableau& t) {
  const std::int64_t k = t.size();
  std::int64_t contents = 0;
  for (int i = 1; i <= k; ++i) contents += content(t, i);
  return k * (k - 1) / 2 + contents - k * content(t, static_cast<int>(k));
}

std::int64_t equal_gamma_min_eig(const Partition& shape) {
  const std::int64_t k = shape.size();
  if (k < 2) throw std::invalid_argument("equal-gamma form needs k >= 2");
  return k * (k - 1) / 2 + content_sum(shape) - k * max_corner_content(shape);
}

std::int64_t equal_gamma_lower_bound(const Partition& shape) {
  std::int64_t total = 0;
  for (int r = 1; r < shape.rows(); ++r) {
    const std::int64_t len = shape.row(r);
    total += static_cast<std::int64_t>(r) * len * (len - 1);  // (j-1) with j = r+1
  }
  return total;
}

K4ClosedFormReport k4_closed_forms(const std::array<double, 3>& gamma_values, double tol) {
  const GammaVector gamma({gamma_values[0], gamma_values[1], gamma_values[2]});
  const double s = gamma.sum();
  if (!(s > 0.0)) throw std::invalid_argument("closed forms need a nonzero gamma");
  const double g1 = gamma[1], g2 = gamma[2], g3 = gamma[3];
  K4ClosedFormReport report;

  const Partition p4({4}), p31({3, 1}), p22({2, 2}), p211({2, 1, 1}), p1111({1, 1, 1, 1});

  auto weighted_sum = [&](const Partition& shape) {
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(table_vector(shape, 1, 4).size());
    for (int i = 1; i <= 3; ++i) beta += gamma[i] * table_vector(shape, i, 4);
    return beta;
  };

  // (3,1): S D = beta beta^T.
  {
    const Eigen::MatrixXd m = s * conjecture_matrix(p31, gamma).dense();
    const Eigen::VectorXd beta = weighted_sum(p31);
    report.rank1_residual = max_abs(m - beta * beta.transpose());
  }

  // (2,2): S D = sum_{i<j} (g_i v_i4 - (-1)^{i-j} g_j v_j4)(...)^T - sum g_i^2 V_i4.
  {
    const Eigen::MatrixXd m = s * conjecture_matrix(p22, gamma).dense();
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(2, 2);
    for (int i = 1; i <= 3; ++i) {
      for (int j = i + 1; j <= 3; ++j) {
        const double sign = (j - i) % 2 == 0 ? 1.0 : -1.0;  // (-1)^{i-j}
        const Eigen::VectorXd a =
            gamma[i] * table_vector(p22, i, 4) - sign * gamma[j] * table_vector(p22, j, 4);
        rhs += a * a.transpose();
      }
      const Eigen::VectorXd v = table_vector(p22, i, 4);
      rhs -= gamma[i] * gamma[i] * (v * v.transpose());
    }
    report.decomposition_residual = max_abs(m - rhs);
    report.min_eig_22 = eigenvalues(m).min();

    // z = (g_i x^T v_i4) ranges over the plane orthogonal to
    // (g2 g3, -g1 g3, g1 g2), since v14 - v24 + v34 = 0. The closed form
    // only depends on (w^T u)^2 and |u|^2, which agree for either ordering
    // of u's outer entries.
    const Eigen::Vector3d w(1.0, -1.0, 1.0);
    const Eigen::Vector3d u(g1 * g2, -g1 * g3, g2 * g3);
    const Eigen::Vector3d normal(g2 * g3, -g1 * g3, g1 * g2);
    if (u.squaredNorm() > 0.0) {
      report.compressed_bound = -1.0 + std::pow(w.dot(u), 2) / u.squaredNorm();
      const Eigen::Matrix3d projector =
          Eigen::Matrix3d::Identity() - normal * normal.transpose() / normal.squaredNorm();
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> plane(projector);
      const Eigen::Matrix<double, 3, 2> basis = plane.eigenvectors().rightCols<2>();
      const Eigen::Matrix3d form = 2.0 * Eigen::Matrix3d::Identity() - w * w.transpose();
      const Eigen::Matrix2d compressed = basis.transpose() * form * basis;
      report.compressed_min = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(compressed)
                                  .eigenvalues()
                                  .minCoeff();
    } else {
      report.compressed_bound = std::numeric_limits<double>::quiet_NaN();
      report.compressed_min = std::numeric_limits<double>::quiet_NaN();
    }
  }

  // (2,1,1): S D = 2 (sum_{i<=j} g_i g_j) I - beta beta^T, smallest eigenvalue 0.
  {
    const Eigen::MatrixXd m = s * conjecture_matrix(p211, gamma).dense();
    const Eigen::VectorXd beta = weighted_sum(p211);
    const double pairs = g1 * g1 + g2 * g2 + g3 * g3 + g1 * g2 + g1 * g3 + g2 * g3;
    const Eigen::MatrixXd rhs =
        2.0 * pairs * Eigen::MatrixXd::Identity(3, 3) - beta * beta.transpose();
    report.identity_residual_211 = max_abs(m - rhs);
    report.min_eig_211 = eigenvalues(m).min();
  }

  // Scalar blocks.
  report.scalar_residual_4 = conjecture_matrix(p4, gamma).max_abs();
  {
    const double expected =
        2.0 * (g1 * g1 + g2 * g2 + g3 * g3 + g1 * g2 + g1 * g3 + g2 * g3) / s;
    report.scalar_residual_1111 = std::abs(conjecture_matrix(p1111, gamma)(0, 0) - expected);
  }

  const double scale = 1.0 + s * s;
  const bool compressed_ok =
      std::isnan(report.compressed_bound) ||
      (report.compressed_min >= report.compressed_bound - tol &&
       std::abs(report.compressed_min - report.compressed_bound) <= tol &&
       report.compressed_bound >= -tol);
  report.pass = report.rank1_residual <= tol * scale &&
                report.decomposition_residual <= tol * scale &&
                report.identity_residual_211 <= tol * scale &&
                report.min_eig_22 >= -tol * scale && std::abs(report.min_eig_211) <= tol * scale &&
                report.scalar_residual_4 <= tol && report.scalar_residual_1111 <= tol * scale &&
                compressed_ok;
  return report;
}

}  // namespace ipgap

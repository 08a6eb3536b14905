#include "ipgap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace ipgap {

namespace {

SpectrumReport dense_spectrum(const Eigen::MatrixXd& m) {
  SpectrumReport report;
  report.dim = static_cast<int>(m.rows());
  if (report.dim == 0) return report;
  if (report.dim > kDenseLimit)
    throw std::length_error("dense eigensolver limited to dimension " +
                            std::to_string(kDenseLimit));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");

  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  const Eigen::MatrixXd residual = m * vectors - vectors * values.asDiagonal();
  report.residual = residual.colwise().norm().maxCoeff();
  report.values.assign(values.data(), values.data() + values.size());
  return report;  // Eigen returns ascending order
}

}  // namespace

SpectrumReport eigenvalues(const SymmetricMatrix& m) { return dense_spectrum(m.dense()); }

SpectrumReport eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenvalues: matrix is not square");
  // from_dense performs the symmetry check.
  return dense_spectrum(SymmetricMatrix::from_dense(m, 1e-12).dense());
}

bool is_psd(const SpectrumReport& spectrum, double scale, double tol) {
  if (spectrum.values.empty()) return true;
  return spectrum.min() >= -tol * (1.0 + scale);
}

bool is_psd(const SymmetricMatrix& m, double tol) {
  return is_psd(eigenvalues(m), m.max_abs(), tol);
}

bool interlace_check(std::span<const double> a, std::span<const double> b, double tol) {
  if (a.size() != b.size()) throw std::invalid_argument("interlace_check: length mismatch");
  double scale = 0.0;
  for (double x : a) scale = std::max(scale, std::abs(x));
  for (double x : b) scale = std::max(scale, std::abs(x));
  const double slack = tol * (1.0 + scale);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k] + slack) return false;
    if (k + 1 < a.size() && b[k] > a[k + 1] + slack) return false;
  }
  return true;
}

bool interlace_check(const SpectrumReport& a, const SpectrumReport& b, double tol) {
  return interlace_check(std::span<const double>(a.values), std::span<const double>(b.values), tol);
}

double shift_bound(const WeightedGraph& g) {
  const int n = g.n();
  const double s = g.incident_weight(n);
  if (!(s > 0.0)) throw std::invalid_argument("shift bound: vertex n is isolated");
  double numerator = 0.0;
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) numerator += g.weight(i, n) * g.weight(j, n);
  return 2.0 * numerator / s;
}

bool shift_bound_check(const WeightedGraph& g, double tol) {
  const double bound = shift_bound(g);
  const SpectrumReport before = eigenvalues(rw_laplacian(g));
  std::vector<double> after = eigenvalues(rw_laplacian(collapse_last_vertex(g))).values;
  after.push_back(0.0);  // isolated vertex n
  std::sort(after.begin(), after.end());
  const double slack = tol * (1.0 + before.max());
  for (std::size_t k = 0; k < after.size(); ++k)
    if (before.values[k] - after[k] > bound + slack) return false;
  return true;
}

bool multiset_equal(std::span<const double> a, std::span<const double> b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  double scale = 0.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  for (double v : y) scale = std::max(scale, std::abs(v));
  for (std::size_t k = 0; k < x.size(); ++k)
    if (std::abs(x[k] - y[k]) > tol * (1.0 + scale)) return false;
  return true;
}

double second_smallest(std::span<const double> ascending) {
  if (ascending.empty()) throw std::invalid_argument("second_smallest: empty spectrum");
  return ascending.size() == 1 ? 0.0 : ascending[1];
}

SpectrumReport smallest_eigenvalues_iterative(const MatVec& op, int dim, int count,
                                              std::span<const Eigen::VectorXd> deflate,
                                              const LanczosOptions& options) {
  if (count < 1) throw std::invalid_argument("Lanczos: count must be positive");

  // Orthonormal basis of the deflated subspace.
  std::vector<Eigen::VectorXd> kernel;
  for (const Eigen::VectorXd& d : deflate) {
    Eigen::VectorXd v = d;
    for (const auto& k : kernel) v -= k.dot(v) * k;
    const double norm = v.norm();
    if (norm > 1e-12) kernel.push_back(v / norm);
  }
  auto project = [&](Eigen::VectorXd& v) {
    for (const auto& k : kernel) v -= k.dot(v) * k;
  };

  const int space = dim - static_cast<int>(kernel.size());
  SpectrumReport report;
  report.dim = dim;
  if (space <= 0) return report;

  std::mt19937 rng(options.seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXd start(dim);
  for (int i = 0; i < dim; ++i) start(i) = normal(rng);

  const int basis_cap = std::min(options.max_basis, space);
  Eigen::MatrixXd basis(dim, basis_cap);
  Eigen::VectorXd w(dim);

  for (int restart = 0; restart <= options.max_restarts; ++restart) {
    project(start);
    start.normalize();

    std::vector<double> alpha, beta;
    int m = 0;
    basis.col(0) = start;
    while (true) {
      op(basis.col(m), w);
      project(w);
      const double a = basis.col(m).dot(w);
      alpha.push_back(a);
      // Two passes of classical Gram-Schmidt against the whole basis.
      for (int pass = 0; pass < 2; ++pass) {
        const Eigen::VectorXd coeffs = basis.leftCols(m + 1).transpose() * w;
        w -= basis.leftCols(m + 1) * coeffs;
      }
      project(w);
      ++m;
      const double b = w.norm();
      if (m == basis_cap || b < 1e-12 * (1.0 + std::abs(a))) break;
      beta.push_back(b);
      basis.col(m) = w / b;
    }

    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (int k = 0; k < m; ++k) tri(k, k) = alpha[k];
    for (int k = 0; k + 1 < m; ++k) tri(k, k + 1) = tri(k + 1, k) = beta[k];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri);
    const int wanted = std::min(count, m);
    const double scale = solver.eigenvalues().cwiseAbs().maxCoeff();

    report.values.clear();
    report.residual = 0.0;
    Eigen::VectorXd next = Eigen::VectorXd::Zero(dim);
    Eigen::VectorXd image(dim);
    for (int k = 0; k < wanted; ++k) {
      const double theta = solver.eigenvalues()(k);
      Eigen::VectorXd ritz = basis.leftCols(m) * solver.eigenvectors().col(k);
      ritz.normalize();
      op(ritz, image);
      project(image);
      report.residual = std::max(report.residual, (image - theta * ritz).norm());
      report.values.push_back(theta);
      next += ritz;
    }
    if (report.residual <= options.tol * (1.0 + scale)) return report;
    start = next;
  }
  return report;  // best effort; caller inspects residual
}

}  // namespace ipgap

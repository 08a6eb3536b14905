#include "ipgap/interchange.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ipgap/permutation.hpp"
#include "ipgap/young.hpp"

namespace ipgap {

SparseSymmetricMatrix::SparseSymmetricMatrix(std::int64_t dim, std::vector<MatrixEntry> upper)
    : dim_(dim), upper_(std::move(upper)) {
  for (const auto& e : upper_)
    if (e.row > e.col || e.row < 0 || e.col >= dim_)
      throw std::invalid_argument("sparse entries must satisfy 0 <= row <= col < dim");
  std::sort(upper_.begin(), upper_.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  for (std::size_t k = 1; k < upper_.size(); ++k)
    if (upper_[k].row == upper_[k - 1].row && upper_[k].col == upper_[k - 1].col)
      throw std::invalid_argument("duplicate sparse coordinate");
}

std::int64_t SparseSymmetricMatrix::nnz() const {
  std::int64_t count = 0;
  for (const auto& e : upper_) count += e.row == e.col ? 1 : 2;
  return count;
}

double SparseSymmetricMatrix::entry(std::int64_t row, std::int64_t col) const {
  if (row > col) std::swap(row, col);
  auto it = std::lower_bound(upper_.begin(), upper_.end(), std::pair{row, col},
                             [](const MatrixEntry& e, const std::pair<std::int64_t, std::int64_t>& k) {
                               return std::tie(e.row, e.col) < std::tie(k.first, k.second);
                             });
  return it != upper_.end() && it->row == row && it->col == col ? it->value : 0.0;
}

Eigen::SparseMatrix<double> SparseSymmetricMatrix::to_eigen() const {
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(nnz()));
  for (const auto& e : upper_) {
    triplets.emplace_back(e.row, e.col, e.value);
    if (e.row != e.col) triplets.emplace_back(e.col, e.row, e.value);
  }
  Eigen::SparseMatrix<double> m(dim_, dim_);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

SymmetricMatrix SparseSymmetricMatrix::to_dense() const {
  if (dim_ > kDenseLimit) throw std::length_error("matrix too large for dense storage");
  SymmetricMatrix m(static_cast<int>(dim_));
  for (const auto& e : upper_) m.at(static_cast<int>(e.row), static_cast<int>(e.col)) = e.value;
  return m;
}

SparseSymmetricMatrix interchange_laplacian(const SignedWeightedGraph& g, int n_cap) {
  const int n = g.n();
  if (n > n_cap)
    throw std::length_error("interchange Laplacian: n=" + std::to_string(n) +
                            " exceeds cap " + std::to_string(n_cap));
  const std::int64_t states = factorial(n);
  std::vector<Edge> edges;
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    total += e.weight;
    if (e.weight != 0.0) edges.push_back(e);
  }

  std::vector<MatrixEntry> upper;
  upper.reserve(static_cast<std::size_t>(states * (1 + static_cast<std::int64_t>(edges.size()) / 2 + 1)));
  for (std::int64_t r = 0; r < states; ++r) {
    const Permutation sigma = Permutation::unrank(n, r);
    upper.push_back({r, r, total});
    for (const Edge& e : edges) {
      const std::int64_t target = sigma.left_transpose(e.i, e.j).rank();
      if (target > r) upper.push_back({r, target, -e.weight});
    }
  }
  return SparseSymmetricMatrix(states, std::move(upper));
}

SpectrumReport interchange_spectrum(const SignedWeightedGraph& g, int n_cap) {
  return eigenvalues(interchange_laplacian(g, n_cap).to_dense());
}

double gap_interchange(const WeightedGraph& g, int n_cap) {
  const SparseSymmetricMatrix l = interchange_laplacian(g, n_cap);
  if (l.dim() <= kDenseLimit) return second_smallest(eigenvalues(l.to_dense()).values);

  const Eigen::SparseMatrix<double> sparse = l.to_eigen();
  const MatVec op = [&](const Eigen::VectorXd& in, Eigen::VectorXd& out) { out = sparse * in; };
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(l.dim());
  const std::vector<Eigen::VectorXd> kernel{ones};
  const SpectrumReport partial =
      smallest_eigenvalues_iterative(op, static_cast<int>(l.dim()), 1, kernel);
  // Off the constant vector the smallest eigenvalue is the gap; a
  // disconnected graph contributes further zeros here.
  return std::max(0.0, partial.values.front());
}

std::vector<IrrepBlock> irrep_blocks(const SignedWeightedGraph& g) {
  std::vector<IrrepBlock> blocks;
  for (const Partition& shape : enumerate_partitions(g.n())) {
    blocks.push_back({shape, f_dim(shape), eigenvalues(irrep_laplacian(shape, g))});
  }
  return blocks;
}

std::vector<double> spectrum_via_irreps(const SignedWeightedGraph& g) {
  std::vector<double> all;
  for (const IrrepBlock& block : irrep_blocks(g))
    for (std::int64_t copy = 0; copy < block.multiplicity; ++copy)
      all.insert(all.end(), block.spectrum.values.begin(), block.spectrum.values.end());
  std::sort(all.begin(), all.end());
  return all;
}

double gap_rw(const WeightedGraph& g) {
  if (g.n() == 1) return 0.0;
  const Partition standard = g.n() == 2 ? Partition({1, 1}) : Partition({g.n() - 1, 1});
  return eigenvalues(irrep_laplacian(standard, g)).min();
}

AldousReport aldous_check(const WeightedGraph& g, double tol) {
  AldousReport report;
  const int n = g.n();
  if (n == 1) {
    report.argmin = Partition({1});
    report.pass = true;
    return report;
  }
  const Partition standard = n == 2 ? Partition({1, 1}) : Partition({n - 1, 1});

  double scale = 0.0;
  for (const Edge& e : g.edges()) scale += e.weight;

  report.gap_rw = eigenvalues(irrep_laplacian(standard, g)).min();
  report.gap_interchange = report.gap_rw;
  report.argmin = standard;
  const double slack = tol * (1.0 + 2.0 * scale);
  for (const Partition& shape : enumerate_partitions(n)) {
    if (shape.rows() == 1 || shape == standard) continue;
    const double low = eigenvalues(irrep_laplacian(shape, g)).min();
    if (low < report.gap_interchange) {
      report.gap_interchange = low;
      report.argmin = shape;
    }
    if (std::abs(low - report.gap_rw) <= slack) report.ties.push_back(shape);
  }
  report.pass = report.gap_interchange >= report.gap_rw - slack;
  if (report.pass) report.argmin = standard;
  return report;
}

}  // namespace ipgap

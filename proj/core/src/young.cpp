#include "ipgap/young.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace ipgap {

namespace {

int index_of(const std::vector<StandardTableau>& tableaux, const StandardTableau& t) {
  auto it = std::lower_bound(tableaux.begin(), tableaux.end(), t);
  if (it == tableaux.end() || !(*it == t)) throw std::logic_error("tableau not found");
  return static_cast<int>(it - tableaux.begin());
}

Eigen::SparseMatrix<double> build_adjacent(const std::vector<StandardTableau>& tableaux, int i) {
  const int dim = static_cast<int>(tableaux.size());
  std::vector<Eigen::Triplet<double>> triplets;
  for (int a = 0; a < dim; ++a) {
    const StandardTableau& t = tableaux[a];
    const Box lo = t.box_of(i), hi = t.box_of(i + 1);
    if (lo.row == hi.row) {
      triplets.emplace_back(a, a, 1.0);
    } else if (lo.col == hi.col) {
      triplets.emplace_back(a, a, -1.0);
    } else {
      // Axial distance; the swapped tableau sees -r and fills its own row.
      const double r = hi.content() - lo.content();
      const int b = index_of(tableaux, t.swapped(i));
      triplets.emplace_back(a, a, 1.0 / r);
      triplets.emplace_back(a, b, std::sqrt(1.0 - 1.0 / (r * r)));
    }
  }
  Eigen::SparseMatrix<double> m(dim, dim);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

void check_transposition(int n, int i, int j) {
  if (i < 1 || j > n || i >= j)
    throw std::out_of_range("transposition (" + std::to_string(i) + " " + std::to_string(j) +
                            ") invalid for n=" + std::to_string(n));
}

}  // namespace

YoungRepresentation::YoungRepresentation(Partition shape)
    : shape_(std::move(shape)),
      tableaux_(&enumerate_syt(shape_)),
      dim_(static_cast<int>(tableaux_->size())) {
  for (int i = 1; i < shape_.size(); ++i) adjacent_.push_back(build_adjacent(*tableaux_, i));
}

std::shared_ptr<const YoungRepresentation> YoungRepresentation::of(const Partition& shape) {
  static std::shared_mutex mutex;
  static std::map<Partition, std::shared_ptr<const YoungRepresentation>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(shape); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const YoungRepresentation>(shape);
  std::unique_lock lock(mutex);
  return cache.try_emplace(shape, std::move(built)).first->second;
}

const Eigen::SparseMatrix<double>& YoungRepresentation::adjacent(int i) const {
  check_transposition(n(), i, i + 1);
  return adjacent_[i - 1];
}

Eigen::MatrixXd YoungRepresentation::transposition(int i, int j) const {
  check_transposition(n(), i, j);
  Eigen::MatrixXd m = Eigen::MatrixXd(adjacent(i));
  // (i, m+1) = s_m (i, m) s_m
  for (int k = i + 1; k < j; ++k) {
    const auto& s = adjacent(k);
    m = s * m;
    m = m * s;
  }
  return m;
}

Eigen::MatrixXd YoungRepresentation::sigma(const Permutation& p) const {
  if (p.size() != n()) throw std::invalid_argument("permutation size does not match shape");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim_, dim_);
  for (int k : p.adjacent_factors()) m = m * adjacent(k);
  return m;
}

IrrepMatrix rho_adjacent(const Partition& shape, int i) {
  const auto rep = YoungRepresentation::of(shape);
  return {shape, Eigen::MatrixXd(rep->adjacent(i))};
}

IrrepMatrix rho_transposition(const Partition& shape, int i, int j) {
  return {shape, YoungRepresentation::of(shape)->transposition(i, j)};
}

IrrepMatrix rho_sigma(const Partition& shape, const Permutation& sigma) {
  return {shape, YoungRepresentation::of(shape)->sigma(sigma)};
}

SymmetricMatrix v_matrix(const Partition& shape, int i, int j) {
  const auto rep = YoungRepresentation::of(shape);
  const Eigen::MatrixXd rho = rep->transposition(i, j);
  return SymmetricMatrix::from_dense(Eigen::MatrixXd::Identity(rep->dim(), rep->dim()) - rho,
                                     1e-10);
}

SymmetricMatrix irrep_laplacian(const Partition& shape, const SignedWeightedGraph& g) {
  if (shape.size() != g.n())
    throw std::invalid_argument("irrep_laplacian: partition size " +
                                std::to_string(shape.size()) + " != vertex count " +
                                std::to_string(g.n()));
  const auto rep = YoungRepresentation::of(shape);
  const int dim = rep->dim();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(dim, dim);
  for (const Edge& e : g.edges()) {
    if (e.weight == 0.0) continue;
    sum += e.weight * (Eigen::MatrixXd::Identity(dim, dim) - rep->transposition(e.i, e.j));
  }
  return SymmetricMatrix::from_dense(sum, 1e-10);
}

SymmetricMatrix jucys_murphy(const Partition& shape, int j) {
  if (j < 2 || j > shape.size())
    throw std::out_of_range("Jucys-Murphy index " + std::to_string(j) + " out of range");
  const auto rep = YoungRepresentation::of(shape);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(rep->dim(), rep->dim());
  for (int i = 1; i < j; ++i) sum += rep->transposition(i, j);
  return SymmetricMatrix::from_dense(sum, 1e-10);
}

BranchingResult branching_check(const Partition& shape, int i, int j, double tol) {
  const int n = shape.size();
  if (i < 1 || i >= j || j >= n)
    throw std::out_of_range("branching needs 1 <= i < j < n");

  const auto rep = YoungRepresentation::of(shape);
  const auto& tableaux = rep->tableaux();
  BranchingResult result;
  result.blocks = covers_below(shape);

  // Sort key: (block index, index of the restricted tableau).
  std::vector<std::tuple<int, int, int>> keys;
  for (int a = 0; a < rep->dim(); ++a) {
    const StandardTableau restricted = tableaux[a].without_largest();
    const auto block = std::find(result.blocks.begin(), result.blocks.end(), restricted.shape());
    const int b = static_cast<int>(block - result.blocks.begin());
    keys.emplace_back(b, index_of(enumerate_syt(restricted.shape()), restricted), a);
  }
  std::sort(keys.begin(), keys.end());
  for (const auto& key : keys) result.permutation.push_back(std::get<2>(key));

  const Eigen::MatrixXd rho = rep->transposition(i, j);
  Eigen::MatrixXd permuted(rep->dim(), rep->dim());
  for (int r = 0; r < rep->dim(); ++r)
    for (int c = 0; c < rep->dim(); ++c)
      permuted(r, c) = rho(result.permutation[r], result.permutation[c]);

  Eigen::MatrixXd direct_sum = Eigen::MatrixXd::Zero(rep->dim(), rep->dim());
  int offset = 0;
  for (const Partition& block : result.blocks) {
    const Eigen::MatrixXd sub = YoungRepresentation::of(block)->transposition(i, j);
    direct_sum.block(offset, offset, sub.rows(), sub.cols()) = sub;
    offset += static_cast<int>(sub.rows());
  }
  result.max_deviation = (permuted - direct_sum).cwiseAbs().maxCoeff();
  result.holds = result.max_deviation <= tol;
  return result;
}

std::vector<HouseholderEntry> s4_householder_table() {
  const double r2 = std::sqrt(2.0), r32 = std::sqrt(1.5), r12 = std::sqrt(0.5);
  const double r43 = std::sqrt(4.0 / 3.0), r16 = std::sqrt(1.0 / 6.0), r23 = std::sqrt(2.0 / 3.0);
  const Partition p31({3, 1}), p22({2, 2}), p211({2, 1, 1});
  auto v3 = [](double a, double b, double c) { return Eigen::Vector3d(a, b, c).eval(); };
  auto v2 = [](double a, double b) { return Eigen::Vector2d(a, b).eval(); };
  return {
      {p31, 1, 2, v3(0, 0, r2)},
      {p31, 1, 3, v3(0, r32, r12)},
      {p31, 1, 4, v3(r43, r16, r12)},
      {p31, 2, 3, v3(0, r32, -r12)},
      {p31, 2, 4, v3(r43, r16, -r12)},
      {p31, 3, 4, v3(r43, -r23, 0)},
      {p22, 1, 2, v2(0, r2)},
      {p22, 1, 3, v2(r32, r12)},
      {p22, 1, 4, v2(r32, -r12)},
      {p22, 2, 3, v2(r32, -r12)},
      {p22, 2, 4, v2(r32, r12)},
      {p22, 3, 4, v2(0, r2)},
      {p211, 1, 2, v3(r2, 0, 0)},
      {p211, 1, 3, v3(r12, -r32, 0)},
      {p211, 1, 4, v3(r12, -r16, r43)},
      {p211, 2, 3, v3(-r12, -r32, 0)},
      {p211, 2, 4, v3(-r12, -r16, r43)},
      {p211, 3, 4, v3(0, r23, r43)},
  };
}

Eigen::MatrixXd s4_table_matrix(const HouseholderEntry& entry) {
  const auto dim = entry.v.size();
  const Eigen::MatrixXd outer = entry.v * entry.v.transpose();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
  return entry.shape == Partition({2, 1, 1}) ? Eigen::MatrixXd(-id + outer)
                                             : Eigen::MatrixXd(id - outer);
}

}  // namespace ipgap

#pragma once

// Young's orthogonal form of the irreducible representations of S_n.
//
// Basis vectors are the standard Young tableaux of the shape in dictionary
// order (see enumerate_syt). All transposition matrices are symmetric
// orthogonal involutions.

#include <array>
#include <map>
#include <memory>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "ipgap/graph.hpp"
#include "ipgap/partition.hpp"
#include "ipgap/permutation.hpp"

namespace ipgap {

struct IrrepMatrix {
  Partition shape;
  Eigen::MatrixXd entries;

  int dim() const { return static_cast<int>(entries.rows()); }
};

/// Generators of one irrep, built once per shape and shared read-only.
class YoungRepresentation {
 public:
  explicit YoungRepresentation(Partition shape);

  /// Cached instance; safe to call concurrently.
  static std::shared_ptr<const YoungRepresentation> of(const Partition& shape);

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.size(); }
  int dim() const { return dim_; }
  const std::vector<StandardTableau>& tableaux() const { return *tableaux_; }

  /// rho of (i, i+1), 1 <= i < n.
  const Eigen::SparseMatrix<double>& adjacent(int i) const;
  /// rho of (i j), built as s_{j-1} ... s_{i+1} s_i s_{i+1} ... s_{j-1}.
  Eigen::MatrixXd transposition(int i, int j) const;
  Eigen::MatrixXd sigma(const Permutation& p) const;

 private:
  Partition shape_;
  const std::vector<StandardTableau>* tableaux_;
  int dim_;
  std::vector<Eigen::SparseMatrix<double>> adjacent_;
};

IrrepMatrix rho_adjacent(const Partition& shape, int i);
IrrepMatrix rho_transposition(const Partition& shape, int i, int j);
IrrepMatrix rho_sigma(const Partition& shape, const Permutation& sigma);

/// V_ij = I - rho_ij.
SymmetricMatrix v_matrix(const Partition& shape, int i, int j);

/// sum_{i<j} a_ij (I - rho_ij). Weights may be signed.
SymmetricMatrix irrep_laplacian(const Partition& shape, const SignedWeightedGraph& g);

/// X_j = sum_{i<j} rho_ij, 2 <= j <= n.
SymmetricMatrix jucys_murphy(const Partition& shape, int j);

struct BranchingResult {
  bool holds = false;
  /// permutation[k] is the tableau index placed at position k of the
  /// block-diagonal ordering.
  std::vector<int> permutation;
  /// Shapes of the blocks, in order.
  std::vector<Partition> blocks;
  double max_deviation = 0.0;
};

/// Checks P rho^lambda_ij P^T = direct sum over lambda' below lambda of
/// rho^lambda'_ij, for i < j < n. Tableaux are regrouped by the shape left
/// after removing n, then by dictionary order of the restricted tableau.
BranchingResult branching_check(const Partition& shape, int i, int j, double tol = 1e-10);

/// Tabulated Householder vectors for the three nontrivial irreps of S_4
/// with dimension > 1: (3,1), (2,2) and (2,1,1). For (2,1,1) the
/// transposition matrix is -I + v v^T; for the others I - v v^T.
struct HouseholderEntry {
  Partition shape;
  int i = 0;
  int j = 0;
  Eigen::VectorXd v;
};

std::vector<HouseholderEntry> s4_householder_table();

/// Transposition matrix rebuilt from the tabulated vector.
Eigen::MatrixXd s4_table_matrix(const HouseholderEntry& entry);

}  // namespace ipgap

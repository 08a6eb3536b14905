#pragma once

// Star-versus-complete Dirichlet form comparison on S_k, checked three
// ways: brute force on R^{k!}, per-irrep PSD tests, and closed forms.

#include <array>
#include <cstdint>
#include <vector>

#include "ipgap/graph.hpp"
#include "ipgap/partition.hpp"
#include "ipgap/spectral.hpp"

namespace ipgap {

/// Rates gamma_1..gamma_{k-1} from the leaves of a star into its center k.
class GammaVector {
 public:
  /// Throws unless every entry is nonnegative; k = values.size() + 1 >= 2.
  explicit GammaVector(std::vector<double> values);

  int k() const { return static_cast<int>(values_.size()) + 1; }
  const std::vector<double>& values() const { return values_; }
  double operator[](int i) const { return values_[i - 1]; }  // 1-based
  double sum() const;

 private:
  std::vector<double> values_;
};

/// Signed weights on k vertices: a_ik = gamma_i, a_ij = -gamma_i gamma_j / sum
/// for i < j < k. The second part is empty for k = 2.
SignedWeightedGraph star_minus_complete(const GammaVector& gamma);

/// Q with g^T Q g = LHS - RHS of the Dirichlet comparison, using the left
/// action s -> (i k) s. Q = 2 [sum_i g_i (I - P_(ik)) - sum_{i<j} c_ij (I - P_(ij))].
SymmetricMatrix dirichlet_gap_matrix(const GammaVector& gamma);

/// D = sum_i g_i V_ik - sum_{i<j} (g_i g_j / sum) V_ij for one irrep.
SymmetricMatrix conjecture_matrix(const Partition& shape, const GammaVector& gamma);

struct LambdaVerdict {
  Partition shape;
  double min_eig = 0.0;
  double scale = 0.0;     // max-norm of the matrix
  bool boundary = false;  // min_eig within tolerance of zero
  bool psd = false;
};

struct ConjectureReport {
  int k = 0;
  std::vector<LambdaVerdict> per_lambda;
  bool pass = false;
};

ConjectureReport check_conjecture(const GammaVector& gamma, double tol = kDefaultTolerance);

/// Smallest diagonal entry of (k-1) D at gamma = 1:
/// k(k-1)/2 + content_sum - k * max_corner_content.
std::int64_t equal_gamma_min_eig(const Partition& shape);

/// sum_{j>=2} (j-1) l_j (l_j - 1), a lower bound for equal_gamma_min_eig.
std::int64_t equal_gamma_lower_bound(const Partition& shape);

/// Diagonal entry of (k-1) D at gamma = 1 predicted for tableau t:
/// k(k-1)/2 + sum_i c^t_i - k c^t_k.
std::int64_t equal_gamma_entry(const StandardTableau& t);

struct K4ClosedFormReport {
  // (3,1): S D - beta beta^T, S = sum gamma, beta = sum gamma_i v_i4.
  double rank1_residual = 0.0;
  // (2,2): residual of the sum-of-squares decomposition of S D.
  double decomposition_residual = 0.0;
  // (2,2): min of z^T (2I - w w^T) z over unit z orthogonal to u, computed
  // numerically, next to the closed form -1 + (w^T u)^2 / |u|^2.
  double compressed_min = 0.0;
  double compressed_bound = 0.0;
  // (2,2): smallest eigenvalue of S D itself.
  double min_eig_22 = 0.0;
  // (2,1,1): smallest eigenvalue of S D (identically zero).
  double min_eig_211 = 0.0;
  // (2,1,1): residual of S D = 2 (sum_{i<=j} g_i g_j) I - beta beta^T.
  double identity_residual_211 = 0.0;
  // (4) and (1^4): residuals against the scalar closed forms.
  double scalar_residual_4 = 0.0;
  double scalar_residual_1111 = 0.0;
  bool pass = false;
};

/// Verifies the k = 4 per-irrep identities using the tabulated S_4 vectors
/// against the generically built conjecture_matrix.
K4ClosedFormReport k4_closed_forms(const std::array<double, 3>& gamma,
                                   double tol = kDefaultTolerance);

}  // namespace ipgap

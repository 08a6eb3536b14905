#pragma once

// The interchange process on n! states: explicit Laplacian, spectral gap,
// and the irrep-block decomposition of its spectrum.

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/SparseCore>

#include "ipgap/graph.hpp"
#include "ipgap/partition.hpp"
#include "ipgap/spectral.hpp"

namespace ipgap {

inline constexpr int kDefaultInterchangeCap = 8;

struct MatrixEntry {
  std::int64_t row = 0;
  std::int64_t col = 0;
  double value = 0.0;
};

/// Upper-triangle triplets (row <= col) of a symmetric matrix.
class SparseSymmetricMatrix {
 public:
  SparseSymmetricMatrix(std::int64_t dim, std::vector<MatrixEntry> upper);

  std::int64_t dim() const { return dim_; }
  const std::vector<MatrixEntry>& upper() const { return upper_; }
  /// Nonzeros of the full matrix (both triangles).
  std::int64_t nnz() const;
  double entry(std::int64_t row, std::int64_t col) const;

  Eigen::SparseMatrix<double> to_eigen() const;
  SymmetricMatrix to_dense() const;

 private:
  std::int64_t dim_;
  std::vector<MatrixEntry> upper_;  // sorted by (row, col)
};

/// States are permutations indexed by lexicographic rank. Off-diagonal
/// entry (s, s') is -a_ij when s' = (i j) s; the diagonal is the total rate.
/// Throws std::length_error when n exceeds `n_cap`.
SparseSymmetricMatrix interchange_laplacian(const SignedWeightedGraph& g,
                                            int n_cap = kDefaultInterchangeCap);

/// Second smallest eigenvalue of the interchange Laplacian. Dense up to
/// kDenseLimit states, Lanczos with the constant vector deflated beyond.
double gap_interchange(const WeightedGraph& g, int n_cap = kDefaultInterchangeCap);

/// Full spectrum of the interchange Laplacian (dense path only).
SpectrumReport interchange_spectrum(const SignedWeightedGraph& g,
                                    int n_cap = kDefaultInterchangeCap);

struct IrrepBlock {
  Partition shape;
  std::int64_t multiplicity = 0;  // f^lambda
  SpectrumReport spectrum;
};

/// Spectrum of every irrep Laplacian, each carrying multiplicity f^lambda.
std::vector<IrrepBlock> irrep_blocks(const SignedWeightedGraph& g);

/// The n! eigenvalues assembled from irrep_blocks, ascending.
std::vector<double> spectrum_via_irreps(const SignedWeightedGraph& g);

/// Smallest eigenvalue of the (n-1,1) block; equals the random-walk gap.
double gap_rw(const WeightedGraph& g);

struct AldousReport {
  double gap_interchange = 0.0;
  double gap_rw = 0.0;
  /// Shape attaining min over lambda != (n) of the smallest block eigenvalue.
  Partition argmin;
  /// Other shapes whose minimum ties the (n-1,1) value within tolerance.
  std::vector<Partition> ties;
  bool pass = false;
};

/// Compares the smallest eigenvalue of every nontrivial irrep block with
/// the (n-1,1) block. gap_interchange is the minimum over nontrivial blocks.
AldousReport aldous_check(const WeightedGraph& g, double tol = kDefaultTolerance);

}  // namespace ipgap

#pragma once

// Symmetric eigenvalue utilities. Tolerances are relative: a quantity is
// "within tol" when it is at most tol * (1 + scale), where scale is the
// max-norm of the matrix or the largest magnitude compared.

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ipgap/graph.hpp"

namespace ipgap {

inline constexpr double kDefaultTolerance = 1e-9;

/// Largest dimension handled by the dense solver.
inline constexpr int kDenseLimit = 6000;

struct SpectrumReport {
  std::vector<double> values;  // ascending
  double residual = 0.0;       // max ||M v - mu v|| over computed pairs
  int dim = 0;

  double min() const { return values.front(); }
  double max() const { return values.back(); }
};

SpectrumReport eigenvalues(const SymmetricMatrix& m);
/// Rejects non-symmetric input with std::invalid_argument.
SpectrumReport eigenvalues(const Eigen::MatrixXd& m);

bool is_psd(const SymmetricMatrix& m, double tol = kDefaultTolerance);
bool is_psd(const SpectrumReport& spectrum, double scale, double tol = kDefaultTolerance);

/// a is the spectrum of the collapsed matrix, b of the original, equal
/// lengths: a_1 <= b_1 <= a_2 <= ... <= a_n <= b_n.
bool interlace_check(const SpectrumReport& a, const SpectrumReport& b,
                     double tol = kDefaultTolerance);
bool interlace_check(std::span<const double> a, std::span<const double> b,
                     double tol = kDefaultTolerance);

/// Right-hand side of the per-eigenvalue shift bound for collapsing vertex n:
/// 2 sum_{i<=j<n} a_in a_jn / sum_i a_in.
double shift_bound(const WeightedGraph& g);

/// mu_k(a) - mu_k(a') <= shift_bound(g) for every k. Throws if vertex n is
/// isolated.
bool shift_bound_check(const WeightedGraph& g, double tol = kDefaultTolerance);

bool multiset_equal(std::span<const double> a, std::span<const double> b,
                    double tol = kDefaultTolerance);

/// Second smallest value of an ascending list (0 for a single value).
double second_smallest(std::span<const double> ascending);

using MatVec = std::function<void(const Eigen::VectorXd& in, Eigen::VectorXd& out)>;

struct LanczosOptions {
  int max_basis = 200;
  int max_restarts = 30;
  double tol = 1e-10;
  unsigned seed = 12345;
};

/// Smallest `count` Ritz values of a symmetric operator restricted to the
/// orthogonal complement of `deflate` (orthonormalized internally). Lanczos
/// with full reorthogonalization and explicit restarts. Multiplicities are
/// not resolved: repeated eigenvalues appear once.
SpectrumReport smallest_eigenvalues_iterative(const MatVec& op, int dim, int count,
                                              std::span<const Eigen::VectorXd> deflate,
                                              const LanczosOptions& options = {});

}  // namespace ipgap

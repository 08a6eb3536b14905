#pragma once

// Weighted graphs, the random-walk Laplacian and the vertex-collapse
// transform that drives the interlacing machinery.
//
// Vertices are 1-based throughout.

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace ipgap {

struct Edge {
  int i = 0;  // i < j
  int j = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Symmetric dense matrix stored as a packed lower triangle, so symmetry
/// holds exactly.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int dim);

  /// Throws std::invalid_argument unless |m - m^T| <= tol * (1 + max|m|).
  /// The lower triangle is kept.
  static SymmetricMatrix from_dense(const Eigen::MatrixXd& m, double tol = 1e-12);
  static SymmetricMatrix identity(int dim);

  int dim() const { return dim_; }
  double operator()(int row, int col) const { return data_[index(row, col)]; }
  double& at(int row, int col) { return data_[index(row, col)]; }
  void add(int row, int col, double value) { data_[index(row, col)] += value; }

  double max_abs() const;
  double max_off_diagonal() const;
  Eigen::MatrixXd dense() const;

  SymmetricMatrix& operator+=(const SymmetricMatrix& other);
  SymmetricMatrix& operator-=(const SymmetricMatrix& other);
  SymmetricMatrix& operator*=(double scale);

  friend SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b) { return a += b; }
  friend SymmetricMatrix operator-(SymmetricMatrix a, const SymmetricMatrix& b) { return a -= b; }
  friend SymmetricMatrix operator*(double s, SymmetricMatrix a) { return a *= s; }

 private:
  // 0-based indices into the packed lower triangle.
  std::size_t index(int row, int col) const {
    if (row < col) std::swap(row, col);
    return static_cast<std::size_t>(row) * (row + 1) / 2 + col;
  }

  int dim_ = 0;
  std::vector<double> data_;
};

/// Graph on vertices 1..n with real weights keyed on unordered pairs.
/// Weights may be negative; this is the carrier for signed reformulations.
class SignedWeightedGraph {
 public:
  SignedWeightedGraph() = default;
  explicit SignedWeightedGraph(int n);

  int n() const { return n_; }
  double weight(int i, int j) const;
  /// Sets (or overwrites) the weight on {i, j}.
  void set_weight(int i, int j, double w);
  std::vector<Edge> edges() const;
  std::size_t edge_count() const { return weights_.size(); }

 protected:
  void check_pair(int i, int j) const;

  int n_ = 0;
  std::map<std::pair<int, int>, double> weights_;
};

/// Simple undirected graph with nonnegative interchange rates.
class WeightedGraph : public SignedWeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n) : SignedWeightedGraph(n) {}
  /// Rejects self-loops, duplicate pairs and negative weights.
  WeightedGraph(int n, std::span<const Edge> edges);

  void set_weight(int i, int j, double w);
  /// Edges with strictly positive weight.
  std::vector<Edge> positive_edges() const;
  std::vector<int> positive_neighbors(int v) const;
  int positive_degree(int v) const;
  /// Sum of the weights incident to v.
  double incident_weight(int v) const;
  WeightedGraph scaled(double c) const;
  /// Relabels vertex v as perm[v-1] (perm is a permutation of 1..n).
  WeightedGraph relabeled(std::span<const int> perm) const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.weights_ == b.weights_;
  }
};

SymmetricMatrix rw_laplacian(const SignedWeightedGraph& g);

struct CollapseResult {
  WeightedGraph graph;
  /// original_label[k-1] is the label in the input graph of vertex k.
  std::vector<int> original_label;
};

/// Removes vertex v after swapping it with n and redistributing its rates:
/// a'_ij = a_ij + a_iv a_jv / sum_l a_lv. An isolated v yields the plain
/// restriction.
CollapseResult collapse_vertex(const WeightedGraph& g, int v);
inline WeightedGraph collapse_last_vertex(const WeightedGraph& g) {
  return collapse_vertex(g, g.n()).graph;
}

/// Checks L(a) = L(a' + isolated n) + b b^T / s entrywise, with
/// b = sum_i a_in (e_i - e_n) and s = sum_i a_in. Throws if s == 0.
bool rank1_identity_check(const WeightedGraph& g, double tol);

/// Largest entrywise deviation in the identity above (no tolerance applied).
double rank1_identity_residual(const WeightedGraph& g);

bool is_connected(const WeightedGraph& g);

// ---------------------------------------------------------------------------
// Generators. All produce unit weights; use with_random_weights to perturb.

WeightedGraph path_graph(int n);
WeightedGraph cycle_graph(int n);
/// Star with center 1.
WeightedGraph star_graph(int n);
WeightedGraph complete_graph(int n);
/// Hub 1 plus a rim cycle 2..n. Requires n >= 4.
WeightedGraph wheel_graph(int n);
/// Nested triangulation with depth D and branching N. Levels are added in
/// order, so higher labels never precede their level.
WeightedGraph nested_triangulation(int depth, int branching);
/// Level index (0-based) of each vertex of nested_triangulation(depth, N).
std::vector<int> nested_triangulation_levels(int depth, int branching);

/// Deterministic weight source: mt19937_64 with the top 53 bits mapped to
/// [lo, hi). Stable across standard library implementations.
class WeightSampler {
 public:
  explicit WeightSampler(std::uint64_t seed);
  double uniform(double lo, double hi);
  std::uint64_t next_u64() { return engine_(); }
  int uniform_int(int lo, int hi);  // inclusive

 private:
  std::mt19937_64 engine_;
};

/// Replaces every existing edge weight by a sample in [lo, hi).
WeightedGraph with_random_weights(const WeightedGraph& g, WeightSampler& rng, double lo = 0.1,
                                  double hi = 2.0);

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability edge_probability; weights in [lo, hi).
WeightedGraph random_connected_graph(int n, double edge_probability, WeightSampler& rng,
                                     double lo = 0.1, double hi = 2.0);

/// Generic front end used by the CLI: kind is one of path, cycle, star,
/// complete, wheel, nested_triangulation.
WeightedGraph generate(const std::string& kind, std::span<const int> params);

/// Spectra of successive collapses of the highest-index vertex; lengths
/// n, n-1, ..., 1.
std::vector<std::vector<double>> gt_pattern(const WeightedGraph& g);

}  // namespace ipgap

#include "ipgap/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ipgap/spectral.hpp"

namespace ipgap {

// ---------------------------------------------------------------------------
// SymmetricMatrix

SymmetricMatrix::SymmetricMatrix(int dim)
    : dim_(dim), data_(static_cast<std::size_t>(dim) * (dim + 1) / 2, 0.0) {
  if (dim < 0) throw std::invalid_argument("SymmetricMatrix: negative dimension");
}

SymmetricMatrix SymmetricMatrix::from_dense(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SymmetricMatrix: matrix is not square");
  const double scale = m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
  const double asym = m.size() == 0 ? 0.0 : (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol * (1.0 + scale)) {
    throw std::invalid_argument("SymmetricMatrix: input is not symmetric (deviation " +
                                std::to_string(asym) + ")");
  }
  SymmetricMatrix out(static_cast<int>(m.rows()));
  for (int r = 0; r < out.dim_; ++r)
    for (int c = 0; c <= r; ++c) out.at(r, c) = m(r, c);
  return out;
}

SymmetricMatrix SymmetricMatrix::identity(int dim) {
  SymmetricMatrix out(dim);
  for (int r = 0; r < dim; ++r) out.at(r, r) = 1.0;
  return out;
}

double SymmetricMatrix::max_abs() const {
  double best = 0.0;
  for (double x : data_) best = std::max(best, std::abs(x));
  return best;
}

double SymmetricMatrix::max_off_diagonal() const {
  double best = 0.0;
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < r; ++c) best = std::max(best, std::abs((*this)(r, c)));
  return best;
}

Eigen::MatrixXd SymmetricMatrix::dense() const {
  Eigen::MatrixXd out(dim_, dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c <= r; ++c) out(r, c) = out(c, r) = (*this)(r, c);
  return out;
}

SymmetricMatrix& SymmetricMatrix::operator+=(const SymmetricMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("SymmetricMatrix: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

SymmetricMatrix& SymmetricMatrix::operator-=(const SymmetricMatrix& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("SymmetricMatrix: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

SymmetricMatrix& SymmetricMatrix::operator*=(double scale) {
  for (double& x : data_) x *= scale;
  return *this;
}

// ---------------------------------------------------------------------------
// Graphs

SignedWeightedGraph::SignedWeightedGraph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
}

void SignedWeightedGraph::check_pair(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw std::out_of_range("vertex index out of range: {" + std::to_string(i) + "," +
                            std::to_string(j) + "} with n=" + std::to_string(n_));
  if (i == j) throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
}

double SignedWeightedGraph::weight(int i, int j) const {
  check_pair(i, j);
  auto it = weights_.find(std::minmax(i, j));
  return it == weights_.end() ? 0.0 : it->second;
}

void SignedWeightedGraph::set_weight(int i, int j, double w) {
  check_pair(i, j);
  if (!std::isfinite(w)) throw std::invalid_argument("edge weight must be finite");
  weights_[std::minmax(i, j)] = w;
}

std::vector<Edge> SignedWeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(weights_.size());
  for (const auto& [key, w] : weights_) out.push_back({key.first, key.second, w});
  return out;
}

WeightedGraph::WeightedGraph(int n, std::span<const Edge> edges) : SignedWeightedGraph(n) {
  for (const Edge& e : edges) {
    check_pair(e.i, e.j);
    if (weights_.contains(std::minmax(e.i, e.j)))
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.i) + "," +
                                  std::to_string(e.j) + "}");
    set_weight(e.i, e.j, e.weight);
  }
}

void WeightedGraph::set_weight(int i, int j, double w) {
  if (w < 0.0) throw std::invalid_argument("negative edge weight");
  SignedWeightedGraph::set_weight(i, j, w);
}

std::vector<Edge> WeightedGraph::positive_edges() const {
  std::vector<Edge> out;
  for (const auto& [key, w] : weights_)
    if (w > 0.0) out.push_back({key.first, key.second, w});
  return out;
}

std::vector<int> WeightedGraph::positive_neighbors(int v) const {
  std::vector<int> out;
  for (int u = 1; u <= n_; ++u)
    if (u != v && weight(u, v) > 0.0) out.push_back(u);
  return out;
}

int WeightedGraph::positive_degree(int v) const {
  return static_cast<int>(positive_neighbors(v).size());
}

double WeightedGraph::incident_weight(int v) const {
  double s = 0.0;
  for (int u = 1; u <= n_; ++u)
    if (u != v) s += weight(u, v);
  return s;
}

WeightedGraph WeightedGraph::scaled(double c) const {
  WeightedGraph out(n_);
  for (const auto& [key, w] : weights_) out.set_weight(key.first, key.second, c * w);
  return out;
}

WeightedGraph WeightedGraph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabel: size mismatch");
  WeightedGraph out(n_);
  for (const auto& [key, w] : weights_) out.set_weight(perm[key.first - 1], perm[key.second - 1], w);
  return out;
}

SymmetricMatrix rw_laplacian(const SignedWeightedGraph& g) {
  SymmetricMatrix l(g.n());
  for (const Edge& e : g.edges()) {
    const int a = e.i - 1, b = e.j - 1;
    l.add(a, a, e.weight);
    l.add(b, b, e.weight);
    l.add(a, b, -e.weight);
  }
  return l;
}

CollapseResult collapse_vertex(const WeightedGraph& g, int v) {
  const int n = g.n();
  if (n < 2) throw std::invalid_argument("collapse needs at least two vertices");
  if (v < 1 || v > n) throw std::out_of_range("collapse: invalid vertex " + std::to_string(v));

  // Vertex n takes the label v; v is then the last vertex and is dropped.
  std::vector<int> original(n - 1);
  std::iota(original.begin(), original.end(), 1);
  if (v != n) original[v - 1] = n;

  const double total = g.incident_weight(v);
  CollapseResult result{WeightedGraph(n - 1), original};
  for (int a = 1; a <= n - 1; ++a) {
    for (int b = a + 1; b <= n - 1; ++b) {
      const int oa = original[a - 1], ob = original[b - 1];
      double w = g.weight(oa, ob);
      if (total > 0.0) w += g.weight(oa, v) * g.weight(ob, v) / total;
      if (w > 0.0) result.graph.set_weight(a, b, w);
    }
  }
  // Preserve explicit zero-weight edges of the input among surviving vertices.
  for (const Edge& e : g.edges()) {
    if (e.weight != 0.0 || e.i == v || e.j == v) continue;
    auto relabel = [&](int x) { return x == n ? v : x; };
    const int a = relabel(e.i), b = relabel(e.j);
    if (result.graph.weight(a, b) == 0.0) result.graph.set_weight(a, b, 0.0);
  }
  return result;
}

namespace {

// Returns (L(a), L(a' + isolated n) + b b^T / s).
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> rank1_sides(const WeightedGraph& g) {
  const int n = g.n();
  const double s = g.incident_weight(n);
  if (!(s > 0.0)) throw std::invalid_argument("rank-1 identity: vertex n is isolated");

  const Eigen::MatrixXd lhs = rw_laplacian(g).dense();

  const WeightedGraph collapsed = collapse_last_vertex(g);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, n);
  rhs.topLeftCorner(n - 1, n - 1) = rw_laplacian(collapsed).dense();

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(n);
  for (int i = 1; i < n; ++i) {
    const double a = g.weight(i, n);
    beta(i - 1) += a;
    beta(n - 1) -= a;
  }
  rhs += beta * beta.transpose() / s;
  return {lhs, rhs};
}

}  // namespace

double rank1_identity_residual(const WeightedGraph& g) {
  const auto [lhs, rhs] = rank1_sides(g);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

bool rank1_identity_check(const WeightedGraph& g, double tol) {
  const auto [lhs, rhs] = rank1_sides(g);
  const double scale = std::max(lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff());
  return (lhs - rhs).cwiseAbs().maxCoeff() <= tol * (1.0 + scale);
}

bool is_connected(const WeightedGraph& g) {
  const int n = g.n();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const Edge& e : g.positive_edges()) {
    const int a = find(e.i), b = find(e.j);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

// ---------------------------------------------------------------------------
// Generators

WeightedGraph path_graph(int n) {
  WeightedGraph g(n);
  for (int i = 1; i < n; ++i) g.set_weight(i, i + 1, 1.0);
  return g;
}

WeightedGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  WeightedGraph g = path_graph(n);
  g.set_weight(1, n, 1.0);
  return g;
}

WeightedGraph star_graph(int n) {
  WeightedGraph g(n);
  for (int i = 2; i <= n; ++i) g.set_weight(1, i, 1.0);
  return g;
}

WeightedGraph complete_graph(int n) {
  WeightedGraph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.set_weight(i, j, 1.0);
  return g;
}

WeightedGraph wheel_graph(int n) {
  if (n < 4) throw std::invalid_argument("wheel needs n >= 4");
  WeightedGraph g(n);
  for (int i = 2; i <= n; ++i) {
    g.set_weight(1, i, 1.0);
    g.set_weight(i, i == n ? 2 : i + 1, 1.0);
  }
  return g;
}

namespace {

struct Triangulation {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> level;  // level[v-1]
};

Triangulation build_triangulation(int depth, int branching) {
  if (depth < 0) throw std::invalid_argument("nested triangulation needs depth >= 0");
  if (branching < 1) throw std::invalid_argument("nested triangulation needs branching >= 1");
  Triangulation t;
  t.level = {0, 0, 0};
  t.edges = {{1, 2}, {1, 3}, {2, 3}};
  std::vector<std::array<int, 3>> fresh = {{1, 2, 3}};
  for (int d = 1; d <= depth; ++d) {
    std::vector<std::array<int, 3>> next;
    for (const auto& tri : fresh) {
      for (int c = 0; c < branching; ++c) {
        t.level.push_back(d);
        const int v = static_cast<int>(t.level.size());
        for (int u : tri) t.edges.emplace_back(u, v);
        // The new vertex closes one fresh triangle with each side of tri.
        next.push_back({tri[0], tri[1], v});
        next.push_back({tri[0], tri[2], v});
        next.push_back({tri[1], tri[2], v});
      }
    }
    fresh = std::move(next);
  }
  return t;
}

}  // namespace

WeightedGraph nested_triangulation(int depth, int branching) {
  const Triangulation t = build_triangulation(depth, branching);
  WeightedGraph g(static_cast<int>(t.level.size()));
  for (auto [a, b] : t.edges) g.set_weight(a, b, 1.0);
  return g;
}

std::vector<int> nested_triangulation_levels(int depth, int branching) {
  return build_triangulation(depth, branching).level;
}

WeightSampler::WeightSampler(std::uint64_t seed) : engine_(seed) {}

double WeightSampler::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

int WeightSampler::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

WeightedGraph with_random_weights(const WeightedGraph& g, WeightSampler& rng, double lo,
                                  double hi) {
  WeightedGraph out(g.n());
  for (const Edge& e : g.edges()) out.set_weight(e.i, e.j, rng.uniform(lo, hi));
  return out;
}

WeightedGraph random_connected_graph(int n, double edge_probability, WeightSampler& rng, double lo,
                                     double hi) {
  WeightedGraph g(n);
  for (int v = 2; v <= n; ++v) g.set_weight(rng.uniform_int(1, v - 1), v, rng.uniform(lo, hi));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (g.weight(i, j) == 0.0 && rng.uniform(0.0, 1.0) < edge_probability)
        g.set_weight(i, j, rng.uniform(lo, hi));
  return g;
}

WeightedGraph generate(const std::string& kind, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument(kind + " expects " + std::to_string(count) + " parameter(s)");
  };
  if (kind == "nested_triangulation") {
    need(2);
    return nested_triangulation(params[0], params[1]);
  }
  need(1);
  const int n = params[0];
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  if (kind == "path") return path_graph(n);
  if (kind == "cycle") return cycle_graph(n);
  if (kind == "star") return star_graph(n);
  if (kind == "complete") return complete_graph(n);
  if (kind == "wheel") return wheel_graph(n);
  throw std::invalid_argument("unknown graph kind: " + kind);
}

std::vector<std::vector<double>> gt_pattern(const WeightedGraph& g) {
  std::vector<std::vector<double>> levels;
  WeightedGraph current = g;
  while (true) {
    levels.push_back(eigenvalues(rw_laplacian(current)).values);
    if (current.n() == 1) break;
    current = collapse_last_vertex(current);
  }
  return levels;
}

}  // namespace ipgap

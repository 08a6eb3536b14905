#pragma once

// Reduction of unweighted skeletons to a single edge (degree-one, series,
// parallel and Y-Delta rules), and the weighted elimination search that
// removes vertices of bounded positive degree one at a time.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "ipgap/graph.hpp"

namespace ipgap {

/// Multigraph on vertices 1..n. Deleted vertices keep their labels.
class Skeleton {
 public:
  Skeleton() = default;
  explicit Skeleton(int n);
  static Skeleton from_graph(const WeightedGraph& g);  // positive edges only

  int n() const { return n_; }
  bool alive(int v) const { return alive_[v - 1]; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return edge_count_; }
  int multiplicity(int i, int j) const;
  /// Number of edge ends at v, counting multiplicity.
  int degree(int v) const;
  /// Distinct neighbours, ascending.
  std::vector<int> neighbors(int v) const;
  const std::map<std::pair<int, int>, int>& edges() const { return edges_; }

  void add_edge(int i, int j, int count = 1);
  void remove_edge(int i, int j);  // one copy
  void remove_vertex(int v);       // must be isolated

  bool is_single_edge() const;
  bool is_connected() const;

  friend bool operator==(const Skeleton& a, const Skeleton& b) {
    return a.n_ == b.n_ && a.alive_ == b.alive_ && a.edges_ == b.edges_;
  }
  friend bool operator<(const Skeleton& a, const Skeleton& b) {
    return std::tie(a.alive_, a.edges_) < std::tie(b.alive_, b.edges_);
  }

 private:
  int n_ = 0;
  int vertex_count_ = 0;
  int edge_count_ = 0;
  std::vector<bool> alive_;
  std::map<std::pair<int, int>, int> edges_;  // key i < j, value multiplicity
};

struct DegreeOne {
  int v;
  friend bool operator==(const DegreeOne&, const DegreeOne&) = default;
};
struct Series {
  int v, i, j;
  friend bool operator==(const Series&, const Series&) = default;
};
struct Parallel {
  int i, j;
  friend bool operator==(const Parallel&, const Parallel&) = default;
};
struct YDelta {
  int v, i, j, l;
  friend bool operator==(const YDelta&, const YDelta&) = default;
};
using ReductionStep = std::variant<DegreeOne, Series, Parallel, YDelta>;

std::string to_string(const ReductionStep& step);

/// Throws std::invalid_argument if the step's preconditions fail.
Skeleton apply_rule(const Skeleton& s, const ReductionStep& step);

/// Every applicable step, in priority order degree-one, parallel, series,
/// Y-Delta; ties by vertex labels. Degree-one is withheld when only one
/// edge remains.
std::vector<ReductionStep> applicable_steps(const Skeleton& s);

enum class SearchStatus {
  kCertified,
  kIrreducible,      // no rule applies to the input
  kDeadEnd,          // every reachable skeleton explored, none is an edge
  kBudgetExhausted,  // inconclusive
};

std::string to_string(SearchStatus status);

struct ReductionCertificate {
  SearchStatus status = SearchStatus::kBudgetExhausted;
  std::vector<ReductionStep> steps;
  Skeleton terminal;
  std::int64_t nodes_expanded = 0;

  bool certified() const { return status == SearchStatus::kCertified; }
};

inline constexpr std::int64_t kDefaultBudget = 100000;

/// Depth-first search in rule-priority order with a visited set; the
/// budget caps expanded nodes. Throws on disconnected input.
ReductionCertificate reduce_to_edge(const Skeleton& s, std::int64_t budget = kDefaultBudget);

/// Replays the steps from `start`; true iff every step applies and the
/// result equals the recorded terminal.
bool replay(const Skeleton& start, const ReductionCertificate& certificate);

struct EliminationStep {
  int vertex = 0;  // label in the input graph
  int degree = 0;  // positive degree when removed
};

struct EliminationCertificate {
  SearchStatus status = SearchStatus::kBudgetExhausted;
  int max_degree = 0;  // K - 1
  std::vector<EliminationStep> steps;
  /// graphs[0] is the input; graphs[s+1] follows step s. Vertices of each
  /// graph are relabeled 1..m; labels[s] maps them to input labels.
  std::vector<WeightedGraph> graphs;
  std::vector<std::vector<int>> labels;
  std::int64_t nodes_expanded = 0;

  bool certified() const { return status == SearchStatus::kCertified; }
};

/// Searches for an order removing all but two vertices, each with at most
/// K-1 positive neighbours at removal time. Removal applies the collapse
/// transform, which may add fill-in edges. Minimum positive degree first,
/// ties by smallest input label, with backtracking.
EliminationCertificate certify_elimination(const WeightedGraph& g, int K,
                                           std::int64_t budget = kDefaultBudget);

/// Recomputes every collapse from the input; weights compared to `tol`.
bool replay(const EliminationCertificate& certificate, double tol = 1e-12);

}  // namespace ipgap

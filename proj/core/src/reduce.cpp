#include "ipgap/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace ipgap {

Skeleton::Skeleton(int n) : n_(n), vertex_count_(n), alive_(static_cast<std::size_t>(n), true) {
  if (n < 1) throw std::invalid_argument("skeleton needs n >= 1");
}

Skeleton Skeleton::from_graph(const WeightedGraph& g) {
  Skeleton s(g.n());
  for (const Edge& e : g.positive_edges()) s.add_edge(e.i, e.j);
  return s;
}

namespace {

std::pair<int, int> key(int i, int j) { return i < j ? std::pair{i, j} : std::pair{j, i}; }

}  // namespace

int Skeleton::multiplicity(int i, int j) const {
  auto it = edges_.find(key(i, j));
  return it == edges_.end() ? 0 : it->second;
}

int Skeleton::degree(int v) const {
  int total = 0;
  for (const auto& [pair, count] : edges_)
    if (pair.first == v || pair.second == v) total += count;
  return total;
}

std::vector<int> Skeleton::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [pair, count] : edges_) {
    if (pair.first == v) out.push_back(pair.second);
    else if (pair.second == v) out.push_back(pair.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Skeleton::add_edge(int i, int j, int count) {
  if (i < 1 || j < 1 || i > n_ || j > n_ || i == j)
    throw std::invalid_argument("skeleton edge endpoints invalid");
  if (!alive(i) || !alive(j)) throw std::invalid_argument("skeleton edge touches a deleted vertex");
  if (count < 1) throw std::invalid_argument("edge count must be positive");
  edges_[key(i, j)] += count;
  edge_count_ += count;
}

void Skeleton::remove_edge(int i, int j) {
  auto it = edges_.find(key(i, j));
  if (it == edges_.end()) throw std::invalid_argument("no such skeleton edge");
  if (--it->second == 0) edges_.erase(it);
  --edge_count_;
}

void Skeleton::remove_vertex(int v) {
  if (v < 1 || v > n_ || !alive(v)) throw std::invalid_argument("vertex not present");
  if (degree(v) != 0) throw std::invalid_argument("vertex still has edges");
  alive_[v - 1] = false;
  --vertex_count_;
}

bool Skeleton::is_single_edge() const { return vertex_count_ == 2 && edge_count_ == 1; }

bool Skeleton::is_connected() const {
  int start = 0;
  for (int v = 1; v <= n_ && start == 0; ++v)
    if (alive(v)) start = v;
  if (start == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == vertex_count_;
}

std::string to_string(const ReductionStep& step) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DegreeOne>) {
          return "DegreeOne(" + std::to_string(s.v) + ")";
        } else if constexpr (std::is_same_v<T, Series>) {
          return "Series(" + std::to_string(s.v) + "," + std::to_string(s.i) + "," +
                 std::to_string(s.j) + ")";
        } else if constexpr (std::is_same_v<T, Parallel>) {
          return "Parallel(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
        } else {
          return "YDelta(" + std::to_string(s.v) + "," + std::to_string(s.i) + "," +
                 std::to_string(s.j) + "," + std::to_string(s.l) + ")";
        }
      },
      step);
}

Skeleton apply_rule(const Skeleton& s, const ReductionStep& step) {
  Skeleton out = s;
  auto fail = [&](const char* why) {
    throw std::invalid_argument(to_string(step) + ": " + why);
  };
  auto check_vertex = [&](int v) {
    if (v < 1 || v > s.n() || !s.alive(v)) fail("vertex not present");
  };
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, DegreeOne>) {
          check_vertex(r.v);
          if (s.degree(r.v) != 1) fail("vertex does not have degree one");
          out.remove_edge(r.v, s.neighbors(r.v).front());
          out.remove_vertex(r.v);
        } else if constexpr (std::is_same_v<T, Series>) {
          check_vertex(r.v);
          if (s.degree(r.v) != 2 || s.multiplicity(r.v, r.i) != 1 ||
              s.multiplicity(r.v, r.j) != 1 || r.i == r.j)
            fail("vertex is not a series vertex between the given neighbours");
          out.remove_edge(r.v, r.i);
          out.remove_edge(r.v, r.j);
          out.remove_vertex(r.v);
          out.add_edge(r.i, r.j);
        } else if constexpr (std::is_same_v<T, Parallel>) {
          check_vertex(r.i);
          check_vertex(r.j);
          if (r.i == r.j || s.multiplicity(r.i, r.j) < 2) fail("no parallel pair");
          out.remove_edge(r.i, r.j);
        } else {
          check_vertex(r.v);
          const bool distinct = r.i != r.j && r.j != r.l && r.i != r.l;
          if (!distinct || s.degree(r.v) != 3 || s.multiplicity(r.v, r.i) != 1 ||
              s.multiplicity(r.v, r.j) != 1 || s.multiplicity(r.v, r.l) != 1)
            fail("vertex is not a Y centre with the given neighbours");
          out.remove_edge(r.v, r.i);
          out.remove_edge(r.v, r.j);
          out.remove_edge(r.v, r.l);
          out.remove_vertex(r.v);
          out.add_edge(r.i, r.j);
          out.add_edge(r.j, r.l);
          out.add_edge(r.i, r.l);
        }
      },
      step);
  return out;
}

std::vector<ReductionStep> applicable_steps(const Skeleton& s) {
  std::vector<ReductionStep> degree_one, parallel, series, ydelta;
  for (int v = 1; v <= s.n(); ++v) {
    if (!s.alive(v)) continue;
    const int d = s.degree(v);
    const auto nb = s.neighbors(v);
    if (d == 1 && s.edge_count() > 1) degree_one.push_back(DegreeOne{v});
    if (d == 2 && nb.size() == 2) series.push_back(Series{v, nb[0], nb[1]});
    if (d == 3 && nb.size() == 3) ydelta.push_back(YDelta{v, nb[0], nb[1], nb[2]});
  }
  for (const auto& [pair, count] : s.edges())
    if (count >= 2) parallel.push_back(Parallel{pair.first, pair.second});

  std::vector<ReductionStep> out;
  for (auto* group : {&degree_one, &parallel, &series, &ydelta})
    out.insert(out.end(), group->begin(), group->end());
  return out;
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kCertified: return "certified";
    case SearchStatus::kIrreducible: return "irreducible by these rules";
    case SearchStatus::kDeadEnd: return "inconclusive: search space exhausted";
    case SearchStatus::kBudgetExhausted: return "inconclusive: budget exhausted";
  }
  return "unknown";
}

ReductionCertificate reduce_to_edge(const Skeleton& s, std::int64_t budget) {
  if (!s.is_connected()) throw std::invalid_argument("reduce_to_edge needs a connected skeleton");
  ReductionCertificate cert;
  if (s.is_single_edge()) {
    cert.status = SearchStatus::kCertified;
    cert.terminal = s;
    return cert;
  }
  if (applicable_steps(s).empty()) {
    cert.status = SearchStatus::kIrreducible;
    cert.terminal = s;
    return cert;
  }

  std::set<Skeleton> visited;
  std::vector<ReductionStep> path;
  bool out_of_budget = false;
  // Returns true once a single edge is reached.
  std::function<bool(const Skeleton&)> dfs = [&](const Skeleton& current) -> bool {
    if (current.is_single_edge()) {
      cert.terminal = current;
      return true;
    }
    if (!visited.insert(current).second) return false;
    if (cert.nodes_expanded >= budget) {
      out_of_budget = true;
      return false;
    }
    ++cert.nodes_expanded;
    for (const ReductionStep& step : applicable_steps(current)) {
      path.push_back(step);
      if (dfs(apply_rule(current, step))) return true;
      path.pop_back();
      if (out_of_budget) return false;
    }
    return false;
  };

  if (dfs(s)) {
    cert.status = SearchStatus::kCertified;
    cert.steps = path;
  } else {
    cert.status = out_of_budget ? SearchStatus::kBudgetExhausted : SearchStatus::kDeadEnd;
    cert.terminal = s;
  }
  return cert;
}

bool replay(const Skeleton& start, const ReductionCertificate& certificate) {
  Skeleton current = start;
  try {
    for (const ReductionStep& step : certificate.steps) current = apply_rule(current, step);
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (!(current == certificate.terminal)) return false;
  return current.is_single_edge() == certificate.certified();
}

// ---------------------------------------------------------------------------
// Weighted elimination

EliminationCertificate certify_elimination(const WeightedGraph& g, int K, std::int64_t budget) {
  if (K < 2) throw std::invalid_argument("certify_elimination needs K >= 2");
  EliminationCertificate cert;
  cert.max_degree = K - 1;

  std::vector<int> identity(static_cast<std::size_t>(g.n()));
  for (int v = 1; v <= g.n(); ++v) identity[v - 1] = v;
  cert.graphs.push_back(g);
  cert.labels.push_back(identity);
  if (g.n() <= 2) {
    cert.status = SearchStatus::kCertified;
    return cert;
  }

  // The collapse is a Schur complement, so the graph after removing a set
  // of vertices does not depend on the order; failures are memoized by set.
  std::set<std::vector<bool>> failed;
  std::vector<bool> removed(static_cast<std::size_t>(g.n()) + 1, false);
  bool out_of_budget = false;
  bool root_has_move = false;

  std::function<bool()> dfs = [&]() -> bool {
    const WeightedGraph current = cert.graphs.back();
    const std::vector<int> labels = cert.labels.back();
    if (current.n() <= 2) return true;
    if (failed.count(removed)) return false;
    if (cert.nodes_expanded >= budget) {
      out_of_budget = true;
      return false;
    }
    ++cert.nodes_expanded;

    std::vector<std::tuple<int, int, int>> moves;  // (degree, input label, local vertex)
    for (int v = 1; v <= current.n(); ++v) {
      const int d = current.positive_degree(v);
      if (d <= K - 1) moves.emplace_back(d, labels[v - 1], v);
    }
    std::sort(moves.begin(), moves.end());
    if (cert.steps.empty() && !moves.empty()) root_has_move = true;

    for (const auto& [degree, label, local] : moves) {
      CollapseResult next = collapse_vertex(current, local);
      std::vector<int> next_labels;
      next_labels.reserve(next.original_label.size());
      for (int old : next.original_label) next_labels.push_back(labels[old - 1]);

      cert.steps.push_back({label, degree});
      cert.graphs.push_back(std::move(next.graph));
      cert.labels.push_back(std::move(next_labels));
      removed[label] = true;
      if (dfs()) return true;
      removed[label] = false;
      cert.steps.pop_back();
      cert.graphs.pop_back();
      cert.labels.pop_back();
      if (out_of_budget) return false;
    }
    failed.insert(removed);
    return false;
  };

  if (dfs()) {
    cert.status = SearchStatus::kCertified;
  } else if (out_of_budget) {
    cert.status = SearchStatus::kBudgetExhausted;
  } else {
    cert.status = root_has_move ? SearchStatus::kDeadEnd : SearchStatus::kIrreducible;
  }
  return cert;
}

bool replay(const EliminationCertificate& certificate, double tol) {
  if (certificate.graphs.empty() || certificate.labels.size() != certificate.graphs.size() ||
      certificate.graphs.size() != certificate.steps.size() + 1)
    return false;
  WeightedGraph current = certificate.graphs.front();
  std::vector<int> labels = certificate.labels.front();
  for (std::size_t s = 0; s < certificate.steps.size(); ++s) {
    const EliminationStep& step = certificate.steps[s];
    const auto it = std::find(labels.begin(), labels.end(), step.vertex);
    if (it == labels.end()) return false;
    const int local = static_cast<int>(it - labels.begin()) + 1;
    if (current.positive_degree(local) != step.degree || step.degree > certificate.max_degree)
      return false;
    CollapseResult next = collapse_vertex(current, local);
    std::vector<int> next_labels;
    for (int old : next.original_label) next_labels.push_back(labels[old - 1]);
    current = std::move(next.graph);
    labels = std::move(next_labels);

    const WeightedGraph& recorded = certificate.graphs[s + 1];
    if (recorded.n() != current.n() || labels != certificate.labels[s + 1]) return false;
    for (int i = 1; i <= current.n(); ++i)
      for (int j = i + 1; j <= current.n(); ++j)
        if (std::abs(recorded.weight(i, j) - current.weight(i, j)) > tol) return false;
  }
  if (certificate.certified() && current.n() > 2) return false;
  return true;
}

}  // namespace ipgap

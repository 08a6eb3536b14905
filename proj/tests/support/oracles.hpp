#pragma once

// Reference computations for tests. Each one avoids the library code path
// it is used to check.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ipgap/graph.hpp"
#include "ipgap/reduce.hpp"

namespace ipgap::testing {

/// Interchange Laplacian built from one-line words and a lookup table,
/// without ranking or the sparse builder.
Eigen::MatrixXd brute_interchange(const SignedWeightedGraph& g);

/// Dense Laplacian straight from the edge list.
Eigen::MatrixXd dense_laplacian(const SignedWeightedGraph& g);

/// Ascending eigenvalues through Eigen directly.
std::vector<double> dense_eigs(const Eigen::MatrixXd& m);

/// Kron reduction of the Laplacian eliminating vertex v; the remaining
/// vertices keep their relative order.
Eigen::MatrixXd kron_reduce(const Eigen::MatrixXd& laplacian, int v);

/// One representative per isomorphism class of trees on n vertices.
std::vector<WeightedGraph> trees_up_to_isomorphism(int n);

/// Simple graphs on n <= 7 vertices as adjacency bitmasks over pairs
/// (i<j in lexicographic order), one per isomorphism class.
std::vector<std::uint32_t> graphs_up_to_isomorphism(int n);
WeightedGraph graph_from_mask(int n, std::uint32_t mask);
std::uint32_t canonical_mask(int n, std::uint32_t mask);

/// Breadth-first closure of every rule application; true iff some
/// reachable skeleton is a single edge.
bool exhaustively_reducible(const Skeleton& s);

}  // namespace ipgap::testing

#pragma once

// JSON graph format: {"n": <int>, "edges": [[i, j, weight], ...]} with
// 1-based vertices and i < j.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ipgap/graph.hpp"

namespace ipgap {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ParseError on malformed JSON, duplicates, self-loops, i >= j,
/// out-of-range vertices or negative weights.
WeightedGraph parse_graph_json(std::string_view text);
WeightedGraph read_graph_json(const std::string& path);

/// Edges in ascending (i, j) order; weights with 17 significant digits.
std::string to_json(const WeightedGraph& g);

}  // namespace ipgap

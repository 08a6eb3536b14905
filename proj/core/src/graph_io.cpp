#include "ipgap/graph_io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ipgap {

WeightedGraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("graph JSON needs an integer field \"n\"");
  const auto n = doc["n"].get<std::int64_t>();
  if (n < 1 || n > std::numeric_limits<int>::max()) throw ParseError("\"n\" must be positive");

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (const auto& item : doc["edges"]) {
      if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
          !item[1].is_number_integer() || !item[2].is_number())
        throw ParseError("each edge must be [i, j, weight]");
      const auto i = item[0].get<std::int64_t>(), j = item[1].get<std::int64_t>();
      if (i < 1 || j < 1 || i > n || j > n) throw ParseError("edge endpoint out of range");
      if (i == j) throw ParseError("self-loop");
      if (i > j) throw ParseError("edges must be listed with i < j");
      edges.push_back({static_cast<int>(i), static_cast<int>(j), item[2].get<double>()});
    }
  }
  try {
    return WeightedGraph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

WeightedGraph read_graph_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_json(buffer.str());
}

std::string to_json(const WeightedGraph& g) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "{\"n\": " << g.n() << ", \"edges\": [";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : ", ") << '[' << e.i << ", " << e.j << ", " << e.weight << ']';
    first = false;
  }
  os << "]}";
  return os.str();
}

}  // namespace ipgap

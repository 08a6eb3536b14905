#include "ipgap_cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ipgap/conjecture.hpp"
#include "ipgap/graph.hpp"
#include "ipgap/graph_io.hpp"
#include "ipgap/interchange.hpp"
#include "ipgap/permutation.hpp"
#include "ipgap/reduce.hpp"
#include "ipgap/young.hpp"

namespace ipgap::cli {

namespace {

using nlohmann::json;

/// Input problems detected after argument parsing.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string number(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

WeightedGraph load_graph(const std::string& path, const RunConfig& config) {
  WeightedGraph g = read_graph_json(path);
  if (g.n() > config.n_cap)
    throw InvalidInput("graph has n=" + std::to_string(g.n()) + " above --n-cap " +
                       std::to_string(config.n_cap));
  return g;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      throw InvalidInput("not a number: '" + token + "'");
    }
    if (used != token.size()) throw InvalidInput("not a number: '" + token + "'");
    out.push_back(value);
  }
  return out;
}

json tableau_list(const std::vector<StandardTableau>& tableaux) {
  json list = json::array();
  for (const auto& t : tableaux) list.push_back(t.to_string());
  return list;
}

// ---------------------------------------------------------------------------

int cmd_gap(const std::string& path, const RunConfig& config, std::ostream& out) {
  const WeightedGraph g = load_graph(path, config);
  const AldousReport report = aldous_check(g, config.tolerance);
  if (config.format == Format::kJson) {
    json ties = json::array();
    for (const auto& p : report.ties) ties.push_back(p.to_string());
    json doc = {{"gap_interchange", report.gap_interchange},
                {"gap_rw", report.gap_rw},
                {"argmin_partition", report.argmin.to_string()},
                {"ties", ties},
                {"pass", report.pass}};
    out << doc.dump(2) << '\n';
  } else {
    out << "gap_interchange,gap_rw,argmin_partition,pass\n"
        << number(report.gap_interchange) << ',' << number(report.gap_rw) << ','
        << quoted(report.argmin.to_string()) << ',' << (report.pass ? "true" : "false") << '\n';
  }
  return report.pass ? kPass : kFail;
}

int cmd_check_conjecture(int k, const std::string& gamma_text, const RunConfig& config,
                         std::ostream& out) {
  std::vector<double> values =
      gamma_text.empty() ? std::vector<double>(static_cast<std::size_t>(std::max(k - 1, 0)), 1.0)
                         : parse_reals(gamma_text);
  if (k < 2) throw InvalidInput("--k must be at least 2");
  if (static_cast<int>(values.size()) != k - 1)
    throw InvalidInput("--gamma needs k-1 = " + std::to_string(k - 1) + " entries");
  const GammaVector gamma(std::move(values));
  const ConjectureReport report = check_conjecture(gamma, config.tolerance);
  if (config.format == Format::kJson) {
    json rows = json::array();
    for (const auto& v : report.per_lambda)
      rows.push_back({{"lambda", v.shape.to_string()},
                      {"min_eig", v.min_eig},
                      {"psd", v.psd},
                      {"boundary", v.boundary}});
    json doc = {{"k", report.k}, {"gamma", gamma.values()}, {"per_lambda", rows},
                {"pass", report.pass}};
    out << doc.dump(2) << '\n';
  } else {
    out << "partition,min_eig,psd,boundary\n";
    for (const auto& v : report.per_lambda)
      out << quoted(v.shape.to_string()) << ',' << number(v.min_eig) << ','
          << (v.psd ? "true" : "false") << ',' << (v.boundary ? "true" : "false") << '\n';
  }
  return report.pass ? kPass : kFail;
}

json certificate_json(const EliminationCertificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) steps.push_back({{"vertex", s.vertex}, {"degree", s.degree}});
  json graphs = json::array();
  for (const auto& g : cert.graphs) graphs.push_back(json::parse(to_json(g)));
  return {{"K", cert.max_degree + 1},
          {"status", to_string(cert.status)},
          {"certified", cert.certified()},
          {"nodes_expanded", cert.nodes_expanded},
          {"steps", steps},
          {"graphs", graphs},
          {"labels", cert.labels}};
}

EliminationCertificate certificate_from_json(const json& doc) {
  EliminationCertificate cert;
  try {
    cert.max_degree = doc.at("K").get<int>() - 1;
    cert.status = doc.at("certified").get<bool>() ? SearchStatus::kCertified
                                                  : SearchStatus::kBudgetExhausted;
    for (const auto& s : doc.at("steps"))
      cert.steps.push_back({s.at("vertex").get<int>(), s.at("degree").get<int>()});
    for (const auto& g : doc.at("graphs")) cert.graphs.push_back(parse_graph_json(g.dump()));
    cert.labels = doc.at("labels").get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed certificate: ") + e.what());
  }
  return cert;
}

int cmd_certify(const std::string& path, int K, bool rules, const std::string& replay_path,
                const RunConfig& config, std::ostream& out) {
  if (!replay_path.empty()) {
    std::ifstream in(replay_path);
    if (!in) throw InvalidInput("cannot open " + replay_path);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InvalidInput(std::string("invalid JSON: ") + e.what());
    }
    const EliminationCertificate cert = certificate_from_json(doc);
    const bool ok = replay(cert) && cert.certified();
    if (config.format == Format::kJson)
      out << json{{"replay_ok", replay(cert)}, {"certified", cert.certified()}}.dump(2) << '\n';
    else
      out << "replay_ok,certified\n"
          << (replay(cert) ? "true" : "false") << ',' << (cert.certified() ? "true" : "false")
          << '\n';
    return ok ? kPass : kFail;
  }
  if (path.empty()) throw InvalidInput("certify needs a graph file or --replay");
  const WeightedGraph g = read_graph_json(path);

  if (rules) {
    const Skeleton skeleton = Skeleton::from_graph(g);
    if (!skeleton.is_connected()) throw InvalidInput("graph is not connected");
    const ReductionCertificate cert = reduce_to_edge(skeleton, config.budget);
    if (config.format == Format::kJson) {
      json steps = json::array();
      for (const auto& s : cert.steps) steps.push_back(to_string(s));
      json terminal = json::array();
      for (const auto& [pair, count] : cert.terminal.edges())
        terminal.push_back({pair.first, pair.second, count});
      out << json{{"status", to_string(cert.status)},
                  {"certified", cert.certified()},
                  {"nodes_expanded", cert.nodes_expanded},
                  {"steps", steps},
                  {"terminal_edges", terminal}}
                 .dump(2)
          << '\n';
    } else {
      out << "step,rule\n";
      for (std::size_t s = 0; s < cert.steps.size(); ++s)
        out << s + 1 << ',' << quoted(to_string(cert.steps[s])) << '\n';
    }
    return cert.certified() ? kPass : kFail;
  }

  if (K < 2) throw InvalidInput("--k must be at least 2");
  const EliminationCertificate cert = certify_elimination(g, K, config.budget);
  if (config.format == Format::kJson) {
    out << certificate_json(cert).dump(2) << '\n';
  } else {
    out << "step,vertex,degree\n";
    for (std::size_t s = 0; s < cert.steps.size(); ++s)
      out << s + 1 << ',' << cert.steps[s].vertex << ',' << cert.steps[s].degree << '\n';
  }
  return cert.certified() ? kPass : kFail;
}

int cmd_generate(const std::string& kind, const std::vector<int>& params, bool random_weights,
                 double lo, double hi, const RunConfig& config, std::ostream& out) {
  WeightedGraph g = generate(kind, params);
  if (random_weights) {
    if (!(lo >= 0.0) || !(hi > lo)) throw InvalidInput("weight range needs 0 <= lo < hi");
    WeightSampler rng(config.seed);
    g = with_random_weights(g, rng, lo, hi);
  }
  if (config.format == Format::kJson) {
    out << to_json(g) << '\n';
  } else {
    out << "i,j,weight\n";
    for (const Edge& e : g.edges()) out << e.i << ',' << e.j << ',' << number(e.weight) << '\n';
  }
  return kPass;
}

int cmd_decompose(const std::string& path, const RunConfig& config, std::ostream& out) {
  const WeightedGraph g = load_graph(path, config);
  const std::vector<IrrepBlock> blocks = irrep_blocks(g);
  const std::vector<double> assembled = spectrum_via_irreps(g);
  const SpectrumReport direct = interchange_spectrum(g, config.n_cap);
  double scale = 1.0;
  for (const Edge& e : g.edges()) scale += 2.0 * e.weight;
  const bool match = multiset_equal(direct.values, assembled, config.tolerance * scale);

  if (config.format == Format::kJson) {
    json rows = json::array();
    for (const auto& b : blocks)
      rows.push_back({{"partition", b.shape.to_string()},
                      {"multiplicity", b.multiplicity},
                      {"eigenvalues", b.spectrum.values}});
    out << json{{"n", g.n()}, {"blocks", rows}, {"states", direct.values.size()},
                {"match", match}}
               .dump(2)
        << '\n';
  } else {
    out << "partition,multiplicity,eigenvalue\n";
    for (const auto& b : blocks)
      for (double mu : b.spectrum.values)
        out << quoted(b.shape.to_string()) << ',' << b.multiplicity << ',' << number(mu) << '\n';
  }
  return match ? kPass : kFail;
}

int cmd_rep(const std::string& shape_text, const std::string& sigma_text, const RunConfig& config,
            std::ostream& out) {
  const Partition shape = Partition::parse(shape_text);
  const Permutation sigma = Permutation::parse(sigma_text, shape.size());
  const auto rep = YoungRepresentation::of(shape);
  const Eigen::MatrixXd m = rep->sigma(sigma);
  if (config.format == Format::kJson) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      rows.push_back(row);
    }
    out << json{{"partition", shape.to_string()},
                {"sigma", sigma.to_string()},
                {"tableaux", tableau_list(rep->tableaux())},
                {"matrix", rows}}
               .dump(2)
        << '\n';
  } else {
    const auto& tableaux = rep->tableaux();
    for (std::size_t c = 0; c < tableaux.size(); ++c)
      out << (c ? "," : "") << quoted(tableaux[c].to_string());
    out << '\n';
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) out << (c ? "," : "") << number(m(r, c));
      out << '\n';
    }
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral-gap verification for interchange processes on weighted graphs", "ipgap"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "json";
  app.add_option("--tol", config.tolerance, "Relative tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Seed for random weights");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--n-cap", config.n_cap, "Largest n for n!-sized computations")
      ->check(CLI::Range(2, 10));
  app.add_option("--budget", config.budget, "Search node budget")->check(CLI::PositiveNumber);

  std::string graph_path;
  auto* gap = app.add_subcommand("gap", "Compare interchange and random-walk spectral gaps");
  gap->add_option("graph", graph_path, "Graph JSON file")->required();

  int k = 0;
  std::string gamma_text;
  auto* conj = app.add_subcommand("check-conjecture",
                                  "Check the star-minus-complete operator is PSD on every irrep");
  conj->add_option("--k", k, "Star size k (center is vertex k)")->required();
  conj->add_option("--gamma", gamma_text, "Comma-separated rates gamma_1..gamma_{k-1}");

  int K = 4;
  bool rules = false;
  std::string replay_path;
  auto* certify = app.add_subcommand("certify", "Search for an elimination certificate");
  certify->add_option("graph", graph_path, "Graph JSON file");
  certify->add_option("--k", K, "Largest star size K; removed vertices have <= K-1 neighbours");
  certify->add_flag("--rules", rules,
                    "Reduce the unweighted skeleton with degree-one/series/parallel/Y-Delta");
  certify->add_option("--replay", replay_path, "Replay a certificate JSON file");

  std::string kind;
  std::vector<int> params;
  bool random_weights = false;
  double lo = 0.1, hi = 2.0;
  auto* gen = app.add_subcommand("generate", "Emit a standard graph family as JSON");
  gen->add_option("kind", kind, "path|cycle|star|complete|wheel|nested_triangulation")
      ->required();
  gen->add_option("params", params, "Integer parameters");
  gen->add_flag("--random-weights", random_weights, "Replace unit weights by seeded uniforms");
  gen->add_option("--lo", lo, "Lower end of the weight range");
  gen->add_option("--hi", hi, "Upper end of the weight range");

  auto* decompose =
      app.add_subcommand("decompose", "Split the interchange spectrum into irrep blocks");
  decompose->add_option("graph", graph_path, "Graph JSON file")->required();

  std::string shape_text, sigma_text;
  auto* rep = app.add_subcommand("rep", "Print Young's orthogonal matrix for a permutation");
  rep->add_option("partition", shape_text, "Partition, e.g. 3,1 or 4,3^2,1")->required();
  rep->add_option("sigma", sigma_text, "Permutation: cycles like (14) or one-line [2,1,3,4]")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }
  config.format = format == "csv" ? Format::kCsv : Format::kJson;

  std::ostringstream buffer;
  int code = kInvalidInput;
  try {
    if (*gap) code = cmd_gap(graph_path, config, buffer);
    else if (*conj) code = cmd_check_conjecture(k, gamma_text, config, buffer);
    else if (*certify) code = cmd_certify(graph_path, K, rules, replay_path, config, buffer);
    else if (*gen) code = cmd_generate(kind, params, random_weights, lo, hi, config, buffer);
    else if (*decompose) code = cmd_decompose(graph_path, config, buffer);
    else if (*rep) code = cmd_rep(shape_text, sigma_text, config, buffer);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::runtime_error& e) {  // ParseError, InvalidInput
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  out << buffer.str();
  return code;
}

}  // namespace ipgap::cli

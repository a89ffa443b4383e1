#include "hgspec/io.hpp"

#include "hgspec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace hgspec {

using nlohmann::ordered_json;

namespace {

std::size_t read_count(const nlohmann::json &doc, const char *key) {
  auto it = doc.find(key);
  if (it == doc.end())
    throw FormatError(std::string("missing field \"") + key + "\"");
  if (!it->is_number_integer() || it->get<std::int64_t>() < 0)
    throw FormatError(std::string("field \"") + key +
                      "\" must be a nonnegative integer");
  return it->get<std::size_t>();
}

/// JSON has no infinity; large gaps are written as null.
ordered_json finite_or_null(double v) {
  if (std::isfinite(v))
    return v;
  return nullptr;
}

} // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw FormatError(std::string("hypergraph file is not valid JSON: ") +
                      e.what());
  }
  if (!doc.is_object())
    throw FormatError("hypergraph file must be a JSON object");
  for (const auto &item : doc.items())
    if (item.key() != "k" && item.key() != "n" && item.key() != "edges")
      throw FormatError("unknown field \"" + item.key() + "\"");

  const std::size_t k = read_count(doc, "k");
  const std::size_t n = read_count(doc, "n");
  if (k > static_cast<std::size_t>(std::numeric_limits<int>::max()))
    throw FormatError("uniformity out of range");

  auto it = doc.find("edges");
  if (it == doc.end() || !it->is_array())
    throw FormatError("field \"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto &e : *it) {
    if (!e.is_array())
      throw FormatError("each edge must be an array of vertex indices");
    Edge edge;
    for (const auto &v : e) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw FormatError("vertex indices must be nonnegative integers");
      edge.push_back(v.get<Vertex>());
    }
    edges.push_back(std::move(edge));
  }

  try {
    return Hypergraph(n, static_cast<int>(k), std::move(edges));
  } catch (const DomainError &e) {
    throw FormatError(std::string("invalid hypergraph: ") + e.what());
  }
}

Hypergraph read_hypergraph(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw FormatError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

std::string format_hypergraph(const Hypergraph &g) {
  std::ostringstream os;
  os << "{\n  \"k\": " << g.uniformity() << ",\n  \"n\": "
     << g.num_vertices() << ",\n  \"edges\": [";
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    os << (i == 0 ? "\n" : ",\n") << "    [";
    const Edge &e = g.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j)
      os << (j == 0 ? "" : ", ") << e[j];
    os << "]";
  }
  os << (g.num_edges() == 0 ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

void write_hypergraph(const std::filesystem::path &path, const Hypergraph &g) {
  std::ofstream out(path);
  if (!out)
    throw FormatError("cannot write " + path.string());
  out << format_hypergraph(g);
}

ordered_json to_json(const Hypergraph &g) {
  return {{"k", g.uniformity()}, {"n", g.num_vertices()}, {"edges", g.edges()}};
}

ordered_json to_json(const EigenResult &r) {
  return {{"lambda", r.lambda},
          {"vector", r.vector.data()},
          {"residual", r.residual},
          {"converged", r.converged},
          {"restarts_used", r.restarts_used},
          {"iterations", r.iterations}};
}

ordered_json to_json(const SolverConfig &cfg) {
  return {{"restarts", cfg.restarts},
          {"max_iters", cfg.max_iters},
          {"gradient_tolerance", cfg.gradient_tolerance},
          {"step_rule", cfg.step_rule},
          {"seed", cfg.seed}};
}

ordered_json to_json(const SearchReport &report) {
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const SearchEntry &e = report.entries[i];
    entries.push_back({{"index", i},
                       {"hypergraph", to_json(e.graph)},
                       {"canonical_edges", e.form.edges},
                       {"lambda", e.lambda},
                       {"residual", e.residual},
                       {"converged", e.converged},
                       {"oracle_lambda", e.oracle_lambda
                                             ? ordered_json(*e.oracle_lambda)
                                             : ordered_json(nullptr)},
                       {"oracle_agrees", e.oracle_agrees}});
  }
  return {{"family", report.family},
          {"tolerance", report.tolerance},
          {"solver", to_json(report.config)},
          {"entries", std::move(entries)},
          {"minimizers", report.minimizers},
          {"runner_up_gap", finite_or_null(report.runner_up_gap)},
          {"nonconverged", report.nonconverged},
          {"oracle_disagreements", report.oracle_disagreements}};
}

ordered_json to_json(const MinimizerCheck &check) {
  return {{"verdict", to_string(check.verdict)},
          {"unique", check.unique},
          {"matches_expected", check.matches_expected},
          {"detail", check.detail}};
}

ordered_json to_json(const RelocationRecord &rec) {
  return {{"verdict", to_string(rec.verdict)},
          {"precondition_met", rec.precondition_met},
          {"lambda_before", rec.lambda_before},
          {"lambda_after", rec.lambda_after},
          {"x_v1", rec.x_v1},
          {"x_v2", rec.x_v2},
          {"case", to_string(rec.which)},
          {"delta", rec.delta},
          {"alpha_branch", rec.alpha_branch},
          {"gamma_host", rec.gamma_host},
          {"transported_quotient", rec.transported_quotient},
          {"converged", rec.converged},
          {"detail", rec.detail}};
}

ordered_json to_json(const CoalescenceRecord &rec) {
  return {{"verdict", to_string(rec.verdict)},
          {"lambda_host", rec.lambda_host},
          {"lambda_joined", rec.lambda_joined},
          {"host_root_entry", rec.host_root_entry},
          {"strict_checked", rec.strict_checked},
          {"alpha_branch", rec.alpha_branch},
          {"branch_odd_bipartite", rec.branch_odd_bipartite},
          {"max_branch_product", rec.max_branch_product},
          {"converged", rec.converged},
          {"detail", rec.detail}};
}

ordered_json to_json(const OddBipartiteRecord &rec) {
  return {{"verdict", to_string(rec.verdict)},
          {"lambda_min", rec.lambda_min},
          {"rho", rec.rho},
          {"odd_bipartite", rec.odd_bipartite},
          {"detail", rec.detail}};
}

void write_eigen_table(std::ostream &os, const SearchReport &report) {
  os << kTableSchema << '\n'
     << "index,n,m,lambda,residual,converged,oracle_lambda,minimizer\n";
  os.precision(17);
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const SearchEntry &e = report.entries[i];
    const bool minimizer =
        std::find(report.minimizers.begin(), report.minimizers.end(), i) !=
        report.minimizers.end();
    os << i << ',' << e.graph.num_vertices() << ',' << e.graph.num_edges()
       << ',' << e.lambda << ',' << e.residual << ','
       << (e.converged ? 1 : 0) << ',';
    if (e.oracle_lambda)
      os << *e.oracle_lambda;
    os << ',' << (minimizer ? 1 : 0) << '\n';
  }
}

} // namespace hgspec

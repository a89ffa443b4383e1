#include "cli.hpp"

#include "hgspec/canonical.hpp"
#include "hgspec/constructions.hpp"
#include "hgspec/enumeration.hpp"
#include "hgspec/errors.hpp"
#include "hgspec/io.hpp"
#include "hgspec/spectral.hpp"
#include "hgspec/verification.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace hgspec::cli {

using nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    parts.push_back(cur);
  if (!s.empty() && s.back() == sep)
    parts.emplace_back();
  return parts;
}

std::size_t parse_count(const std::string &s, const std::string &what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError("expected a nonnegative integer for " + what + ", got \"" +
                     s + "\"");
  return v;
}

int parse_k(const std::string &s) {
  std::size_t k = parse_count(s, "k");
  if (k < 2 || k > 64)
    throw UsageError("uniformity k must lie in [2, 64], got " + s);
  return static_cast<int>(k);
}

struct InputFile {
  std::string path;
  std::string digest;
  Hypergraph graph;
};

InputFile load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw FormatError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  return {path, sha256_hex(bytes), parse_hypergraph(bytes)};
}

/// Everything a report depends on. Output destinations are left out of the
/// recorded command line because they do not affect the content.
struct Manifest {
  std::vector<std::string> command;
  std::uint64_t seed = 0;
  SolverConfig solver;
  std::vector<std::pair<std::string, std::string>> inputs;
};

std::vector<std::string> recorded_command(const std::vector<std::string> &args) {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string &a = args[i];
    if (a == "--out" || a == "--csv") {
      ++i;
      continue;
    }
    if (a.rfind("--out=", 0) == 0 || a.rfind("--csv=", 0) == 0)
      continue;
    kept.push_back(a);
  }
  return kept;
}

ordered_json to_json(const Manifest &m) {
  ordered_json inputs = ordered_json::array();
  for (const auto &[path, digest] : m.inputs)
    inputs.push_back({{"path", path}, {"sha256", digest}});
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"command", m.command},
          {"seed", m.seed},
          {"solver", hgspec::to_json(m.solver)},
          {"inputs", std::move(inputs)}};
}

ordered_json to_json(const Tolerances &t) {
  return {{"eigenvalue", t.eigenvalue},
          {"strict_margin", t.strict_margin},
          {"host_entry", t.host_entry},
          {"sign_product", t.sign_product},
          {"zero_entry", t.zero_entry}};
}

void write_text(const std::string &path, const std::string &text) {
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw FormatError("cannot write " + path);
  f << text;
}

/// Copies the fields of `extra` into `into`, keeping their order.
void merge(ordered_json &into, const ordered_json &extra) {
  for (const auto &[key, value] : extra.items())
    into[key] = value;
}

int exit_for(Verdict v) {
  switch (v) {
  case Verdict::pass:
    return kOk;
  case Verdict::violation:
    return kViolation;
  case Verdict::inconclusive:
    return kInconclusive;
  }
  return kInternal;
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// Options shared by the subcommands; filled in by CLI11.

struct Options {
  std::string file;
  std::string out;
  std::string csv;
  std::string family;
  std::string suite;
  std::string edges;
  std::size_t count = 0; // m for hyperstar, n for complete
  std::string k;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  int restarts = SolverConfig{}.restarts;
  double tolerance = 1e-6;
  bool json = false;
};

SolverConfig solver_from(const Options &o) {
  SolverConfig cfg;
  cfg.restarts = o.restarts;
  cfg.seed = o.seed;
  try {
    cfg.validate();
  } catch (const DomainError &e) {
    throw UsageError(e.what());
  }
  return cfg;
}

void emit_report(const Options &o, const ordered_json &report,
                 std::ostream &out) {
  const std::string text = report.dump(2) + "\n";
  if (!o.out.empty())
    write_text(o.out, text);
  if (o.json)
    out << text;
}

// ---------------------------------------------------------------------------
// generate

int cmd_generate(const std::string &which, const Options &o,
                 std::ostream &out) {
  const int k = parse_k(o.k);
  std::optional<Hypergraph> g;
  try {
    if (which == "hyperstar")
      g = hyperstar(o.count, k).graph;
    else if (which == "complete")
      g = complete_hypergraph(o.count, k);
    else if (which == "power-tree") {
      auto edges = parse_simple_edges(o.edges);
      if (!is_hypertree(kth_power_of_graph(edges, 2)))
        throw UsageError("power-tree needs the edges of a tree");
      g = kth_power_of_graph(edges, k);
    } else if (which == "blowup")
      g = blowup_power(parse_simple_edges(o.edges), k);
  } catch (const DomainError &e) {
    throw UsageError(e.what());
  }
  const std::string text = format_hypergraph(*g);
  if (o.out.empty())
    out << text;
  else
    write_text(o.out, text);
  return kOk;
}

// ---------------------------------------------------------------------------
// lambda-min, rho

int cmd_eigen(bool least, const std::vector<std::string> &args,
              const Options &o, std::ostream &out) {
  InputFile in = load(o.file);
  SolverConfig cfg = solver_from(o);
  EigenResult r = least ? least_h_eigenvalue(in.graph, cfg)
                        : spectral_radius(in.graph, cfg);
  if (o.json) {
    Manifest m{recorded_command(args), o.seed, cfg, {{in.path, in.digest}}};
    ordered_json doc = {{"schema", kReportSchema},
                        {"quantity", least ? "lambda_min" : "rho"},
                        {"manifest", to_json(m)}};
    merge(doc, hgspec::to_json(r));
    out << doc.dump(2) << "\n";
  } else {
    out << (least ? "lambda_min  " : "rho         ") << fixed(r.lambda) << "\n"
        << "residual    " << sci(r.residual) << "\n"
        << "converged   " << (r.converged ? "yes" : "no") << "\n";
    if (least)
      out << "restarts    " << r.restarts_used << "\n";
  }
  return r.converged ? kOk : kInconclusive;
}

// ---------------------------------------------------------------------------
// verify

struct Tally {
  std::size_t pass = 0, violation = 0, inconclusive = 0;
  Verdict overall = Verdict::pass;

  void add(Verdict v) {
    overall = combine(overall, v);
    (v == Verdict::pass        ? pass
     : v == Verdict::violation ? violation
                               : inconclusive)++;
  }

  ordered_json json(std::size_t instances) const {
    return {{"instances", instances},
            {"pass", pass},
            {"violation", violation},
            {"inconclusive", inconclusive},
            {"verdict", to_string(overall)}};
  }
};

ordered_json rooted_json(const RootedHypergraph &r) {
  return {{"hypergraph", hgspec::to_json(r.graph)}, {"root", r.root}};
}

ordered_json report_head(const std::string &suite, const Manifest &m,
                         const Tolerances &tol) {
  return {{"schema", kReportSchema},
          {"suite", suite},
          {"manifest", to_json(m)},
          {"tolerances", to_json(tol)}};
}

void print_tally(std::ostream &out, const std::string &suite,
                 const Tally &t, std::size_t n) {
  out << suite << ": " << n << " instances, " << t.pass << " pass, "
      << t.violation << " violation, " << t.inconclusive << " inconclusive\n"
      << "verdict     " << to_string(t.overall) << "\n";
}

int verify_relocation(const std::vector<std::string> &args, const Options &o,
                      std::ostream &out) {
  SolverConfig cfg = solver_from(o);
  Tolerances tol;
  tol.eigenvalue = o.tolerance;
  const std::size_t trials = o.trials ? o.trials : 30;
  Manifest m{recorded_command(args), o.seed, cfg, {}};

  Tally tally;
  ordered_json items = ordered_json::array();
  std::size_t vacuous = 0;
  for (const RelocationInstance &inst :
       relocation_instances(o.seed, trials, cfg)) {
    RelocationRecord rec =
        verify_relocation(inst.host, inst.v1, inst.v2, inst.branch, cfg, tol);
    tally.add(rec.verdict);
    vacuous += rec.precondition_met ? 0 : 1;
    ordered_json item = {{"index", items.size()},
                         {"host", hgspec::to_json(inst.host)},
                         {"v1", inst.v1},
                         {"v2", inst.v2},
                         {"branch", rooted_json(inst.branch)}};
    merge(item, hgspec::to_json(rec));
    items.push_back(std::move(item));
  }

  ordered_json report = report_head("relocation", m, tol);
  report["summary"] = tally.json(items.size());
  report["summary"]["precondition_unmet"] = vacuous;
  report["entries"] = std::move(items);
  emit_report(o, report, out);
  if (!o.json)
    print_tally(out, "relocation", tally, report["entries"].size());
  return exit_for(tally.overall);
}

int verify_coalescence(const std::vector<std::string> &args, const Options &o,
                       std::ostream &out) {
  SolverConfig cfg = solver_from(o);
  Tolerances tol;
  tol.eigenvalue = o.tolerance;
  const std::size_t trials = o.trials ? o.trials : 20;
  Manifest m{recorded_command(args), o.seed, cfg, {}};

  Tally tally;
  ordered_json items = ordered_json::array();
  for (const CoalescenceInstance &inst : coalescence_instances(o.seed, trials)) {
    CoalescenceRecord rec =
        verify_coalescence_monotonicity(inst.host, inst.branch, cfg, tol);
    tally.add(rec.verdict);
    ordered_json item = {{"index", items.size()},
                         {"host", rooted_json(inst.host)},
                         {"branch", rooted_json(inst.branch)}};
    merge(item, hgspec::to_json(rec));
    items.push_back(std::move(item));
  }

  ordered_json report = report_head("coalescence", m, tol);
  report["summary"] = tally.json(items.size());
  report["entries"] = std::move(items);
  emit_report(o, report, out);
  if (!o.json)
    print_tally(out, "coalescence", tally, report["entries"].size());
  return exit_for(tally.overall);
}

Manifest family_manifest(const std::vector<std::string> &args,
                         const Options &o, const SolverConfig &cfg,
                         const FamilySpec &fam) {
  Manifest m{recorded_command(args), o.seed, cfg, {}};
  for (const std::string &path : fam.input_files)
    m.inputs.emplace_back(path, load(path).digest);
  return m;
}

int verify_minimizer(const std::vector<std::string> &args, const Options &o,
                     std::ostream &out) {
  if (o.family.empty())
    throw UsageError("verify minimizer needs --family");
  FamilySpec fam = parse_family(o.family);
  if (fam.expected.empty())
    throw UsageError("family " + fam.text + " has no predicted minimiser");
  SolverConfig cfg = solver_from(o);
  SearchOptions opts;
  opts.tolerance = o.tolerance;

  SearchReport search = find_minimizer(fam.members, cfg, fam.text, opts);
  MinimizerCheck check = check_minimizer(search, fam.expected);

  Tolerances tol;
  tol.eigenvalue = o.tolerance;
  ordered_json report =
      report_head("minimizer", family_manifest(args, o, cfg, fam), tol);
  ordered_json expected = ordered_json::array();
  for (const Hypergraph &g : fam.expected)
    expected.push_back(hgspec::to_json(g));
  report["family"] = fam.text;
  report["expected_name"] = fam.expected_name;
  report["expected"] = std::move(expected);
  report["search"] = hgspec::to_json(search);
  report["check"] = hgspec::to_json(check);
  emit_report(o, report, out);

  if (!o.csv.empty()) {
    std::ostringstream table;
    write_eigen_table(table, search);
    write_text(o.csv, table.str());
  }

  if (!o.json) {
    out << "family      " << fam.text << " (" << search.entries.size()
        << " members)\n";
    out << "   #    n    m   lambda_min   residual\n";
    for (std::size_t i = 0; i < search.entries.size(); ++i) {
      const SearchEntry &e = search.entries[i];
      const bool best = std::find(search.minimizers.begin(),
                                  search.minimizers.end(),
                                  i) != search.minimizers.end();
      out << std::setw(4) << i << std::setw(5) << e.graph.num_vertices()
          << std::setw(5) << e.graph.num_edges() << std::setw(13)
          << fixed(e.lambda) << "   " << sci(e.residual)
          << (best ? "  *" : "") << (e.converged ? "" : "  (not converged)")
          << "\n";
    }
    if (check.matches_expected && check.unique)
      out << "minimizer   #" << search.minimizers.front() << ", isomorphic to "
          << fam.expected_name << "\n";
    else
      out << "minimizer   " << check.detail << "\n";
    if (std::isfinite(search.runner_up_gap))
      out << "gap         " << sci(search.runner_up_gap) << "\n";
    out << "verdict     " << to_string(check.verdict) << "\n";
  }
  return exit_for(check.verdict);
}

int verify_odd_bipartite(const std::vector<std::string> &args,
                         const Options &o, std::ostream &out) {
  FamilySpec fam =
      parse_family(o.family.empty() ? "hypertrees:m=1..4,k=4" : o.family);
  SolverConfig cfg = solver_from(o);
  Tolerances tol;
  tol.eigenvalue = o.tolerance;

  Tally tally;
  ordered_json items = ordered_json::array();
  for (const Hypergraph &g : fam.members) {
    OddBipartiteRecord rec = verify_odd_bipartite_identity(g, cfg, o.tolerance);
    tally.add(rec.verdict);
    ordered_json item = {{"index", items.size()},
                         {"hypergraph", hgspec::to_json(g)}};
    merge(item, hgspec::to_json(rec));
    items.push_back(std::move(item));
  }

  ordered_json report = report_head("odd-bipartite-identity",
                                    family_manifest(args, o, cfg, fam), tol);
  report["family"] = fam.text;
  report["summary"] = tally.json(items.size());
  report["entries"] = std::move(items);
  emit_report(o, report, out);
  if (!o.json)
    print_tally(out, "odd-bipartite-identity", tally,
                report["entries"].size());
  return exit_for(tally.overall);
}

// ---------------------------------------------------------------------------
// Family specs

std::map<std::string, std::string> parse_params(
    const std::vector<std::string> &tokens, std::size_t from,
    const std::string &spec) {
  std::map<std::string, std::string> params;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    auto eq = tokens[i].find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("malformed parameter \"" + tokens[i] + "\" in family " +
                       spec);
    if (!params.emplace(tokens[i].substr(0, eq), tokens[i].substr(eq + 1))
             .second)
      throw UsageError("repeated parameter in family " + spec);
  }
  return params;
}

std::string take(std::map<std::string, std::string> &params,
                 const std::string &key, const std::string &spec) {
  auto it = params.find(key);
  if (it == params.end())
    throw UsageError("family " + spec + " needs " + key + "=...");
  std::string v = it->second;
  params.erase(it);
  return v;
}

void no_leftovers(const std::map<std::string, std::string> &params,
                  const std::string &spec) {
  if (!params.empty())
    throw UsageError("unknown parameter \"" + params.begin()->first +
                     "\" in family " + spec);
}

/// Host hypergraph named by a Tm base such as "complete:5:4".
Hypergraph parse_host(const std::string &base, const std::string &spec,
                      std::vector<std::string> &files) {
  auto colon = base.find(':');
  const std::string kind = base.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? "" : base.substr(colon + 1);
  const std::vector<std::string> f = split(rest, ':');

  auto arity = [&](std::size_t want) {
    if (colon == std::string::npos || f.size() != want)
      throw UsageError("host \"" + base + "\" in family " + spec +
                       " has the wrong number of fields");
  };
  try {
    if (kind == "edge") {
      arity(1);
      return hyperstar(1, parse_k(f[0])).graph;
    }
    if (kind == "complete") {
      arity(2);
      return complete_hypergraph(parse_count(f[0], "n"), parse_k(f[1]));
    }
    if (kind == "hyperstar") {
      arity(2);
      return hyperstar(parse_count(f[0], "m"), parse_k(f[1])).graph;
    }
    if (kind == "cycle-blowup") {
      arity(2);
      return blowup_power(cycle_graph(parse_count(f[0], "cycle length")),
                          parse_k(f[1]));
    }
  } catch (const DomainError &e) {
    throw UsageError(std::string("bad host in family ") + spec + ": " +
                     e.what());
  }
  if (kind == "file") {
    if (rest.empty())
      throw UsageError("family " + spec + " names an empty file");
    files.push_back(rest);
    return load(rest).graph;
  }
  throw UsageError("unknown host \"" + kind + "\" in family " + spec);
}

} // namespace

std::vector<std::pair<Vertex, Vertex>> parse_simple_edges(const std::string &s) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const std::string &tok : split(s, ',')) {
    auto dash = tok.find('-');
    if (dash == std::string::npos)
      throw UsageError("edge \"" + tok + "\" is not of the form a-b");
    Vertex a = parse_count(tok.substr(0, dash), "edge endpoint");
    Vertex b = parse_count(tok.substr(dash + 1), "edge endpoint");
    if (a == b)
      throw UsageError("edge \"" + tok + "\" is a loop");
    edges.emplace_back(a, b);
  }
  if (edges.empty())
    throw UsageError("empty edge list");
  return edges;
}

FamilySpec parse_family(const std::string &spec) {
  FamilySpec fam;
  fam.text = spec;
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw UsageError("family " + spec + " has no kind prefix");
  const std::string kind = spec.substr(0, colon);
  const std::vector<std::string> tokens = split(spec.substr(colon + 1), ',');

  if (kind == "hypertrees") {
    auto params = parse_params(tokens, 0, spec);
    const std::string m = take(params, "m", spec);
    const int k = parse_k(take(params, "k", spec));
    no_leftovers(params, spec);
    std::size_t lo, hi;
    if (auto dots = m.find(".."); dots != std::string::npos) {
      lo = parse_count(m.substr(0, dots), "m");
      hi = parse_count(m.substr(dots + 2), "m");
    } else {
      lo = hi = parse_count(m, "m");
    }
    if (lo > hi)
      throw UsageError("empty edge-count range in family " + spec);
    try {
      for (std::size_t e = lo; e <= hi; ++e)
        for (Hypergraph &t : enumerate_hypertrees(e, k))
          fam.members.push_back(std::move(t));
    } catch (const DomainError &e) {
      throw UsageError(std::string("family ") + spec + ": " + e.what());
    }
    if (lo == hi) {
      fam.expected.push_back(hyperstar(lo, k).graph);
      fam.expected_name =
          "S_" + std::to_string(lo) + "^" + std::to_string(k);
    }
    return fam;
  }

  if (kind == "Tm") {
    if (tokens.empty() || tokens[0].empty())
      throw UsageError("family " + spec + " names no host");
    Hypergraph g0 = parse_host(tokens[0], spec, fam.input_files);
    auto params = parse_params(tokens, 1, spec);
    const std::size_t m = parse_count(take(params, "m", spec), "m");
    no_leftovers(params, spec);
    try {
      fam.members = enumerate_family(g0, m);
      if (m == 0) {
        fam.expected = {g0};
        fam.expected_name = "G0";
      } else {
        fam.expected = hyperstar_attachments(g0, m);
        fam.expected_name = "G0(u)<>S_" + std::to_string(m) + "^" +
                            std::to_string(g0.uniformity()) + "(u)";
      }
    } catch (const UnsupportedUniformity &) {
      throw;
    } catch (const DomainError &e) {
      throw UsageError(std::string("family ") + spec + ": " + e.what());
    }
    return fam;
  }

  throw UsageError("unknown family kind \"" + kind + "\"");
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                               EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), md.data(), &len) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i)
    os << std::setw(2) << static_cast<int>(md[i]);
  return os.str();
}

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Least H-eigenvalues of even-uniform hypergraphs", "hgspec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  Options o;

  auto *gen = app.add_subcommand("generate", "Write a hypergraph file");
  gen->require_subcommand(1);
  struct GenSpec {
    const char *name, *help, *first, *first_help;
    bool edges;
  };
  const GenSpec gens[] = {
      {"hyperstar", "S_m^k: m edges through one vertex", "m", "edge count",
       false},
      {"complete", "every k-subset of n vertices", "n", "vertex count", false},
      {"power-tree", "k-th power of a tree", "edges", "tree edges as 0-1,1-2",
       true},
      {"blowup", "G^{k,k/2} of a simple graph (even k)", "edges",
       "graph edges as 0-1,1-2", true},
  };
  std::map<CLI::App *, std::string> gen_kind;
  for (const GenSpec &s : gens) {
    auto *c = gen->add_subcommand(s.name, s.help);
    if (s.edges)
      c->add_option(s.first, o.edges, s.first_help)->required();
    else
      c->add_option(s.first, o.count, s.first_help)->required();
    c->add_option("k", o.k, "uniformity")->required();
    c->add_option("--out", o.out, "output file (default stdout)");
    gen_kind[c] = s.name;
  }

  auto eigen_flags = [&](CLI::App *c) {
    c->add_option("file", o.file, "hypergraph file")->required();
    c->add_option("--restarts", o.restarts, "random restarts")
        ->check(CLI::PositiveNumber);
    c->add_option("--seed", o.seed, "random seed");
    c->add_flag("--json", o.json, "machine-readable output");
  };
  auto *lmin = app.add_subcommand("lambda-min", "Least H-eigenvalue");
  eigen_flags(lmin);
  auto *rho = app.add_subcommand("rho", "Spectral radius");
  eigen_flags(rho);

  auto *ver = app.add_subcommand("verify", "Run a verification campaign");
  ver->add_option("suite", o.suite, "campaign")
      ->required()
      ->check(CLI::IsMember(
          {"relocation", "coalescence", "minimizer", "odd-bipartite-identity"}));
  ver->add_option("--family", o.family, "family spec, e.g. hypertrees:m=3,k=4");
  ver->add_option("--seed", o.seed, "random seed");
  ver->add_option("--trials", o.trials, "random instances")
      ->check(CLI::PositiveNumber);
  ver->add_option("--restarts", o.restarts, "random restarts per solve")
      ->check(CLI::PositiveNumber);
  ver->add_option("--tolerance", o.tolerance, "eigenvalue tolerance")
      ->check(CLI::PositiveNumber);
  ver->add_option("--out", o.out, "JSON report file");
  ver->add_option("--csv", o.csv, "CSV eigenvalue table (minimizer suite)");
  ver->add_flag("--json", o.json, "print the JSON report to stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion &) {
    out << kToolVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "hgspec: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      for (auto &[c, name] : gen_kind)
        if (c->parsed())
          return cmd_generate(name, o, out);
    }
    if (lmin->parsed())
      return cmd_eigen(true, args, o, out);
    if (rho->parsed())
      return cmd_eigen(false, args, o, out);
    if (o.suite == "relocation")
      return verify_relocation(args, o, out);
    if (o.suite == "coalescence")
      return verify_coalescence(args, o, out);
    if (o.suite == "minimizer")
      return verify_minimizer(args, o, out);
    return verify_odd_bipartite(args, o, out);
  } catch (const UsageError &e) {
    err << "hgspec: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedUniformity &e) {
    err << "hgspec: even uniformity required: " << e.what() << "\n";
    return kOddUniformity;
  } catch (const FormatError &e) {
    err << "hgspec: " << e.what() << "\n";
    return kDataError;
  } catch (const DomainError &e) {
    err << "hgspec: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception &e) {
    err << "hgspec: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

} // namespace hgspec::cli

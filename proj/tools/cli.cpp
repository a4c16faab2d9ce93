// clique-spectra command line front end.
//
// Exit codes: 0 success, 1 certified violation or census mismatch, 2 usage or
// input error, 3 numerical non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "clique_spectra/bounds.hpp"
#include "clique_spectra/cliques.hpp"
#include "clique_spectra/error.hpp"
#include "clique_spectra/graph.hpp"
#include "clique_spectra/graph_io.hpp"
#include "clique_spectra/log.hpp"
#include "clique_spectra/serialization.hpp"
#include "clique_spectra/spectral.hpp"
#include "clique_spectra/verify.hpp"

namespace cs = clique_spectra;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kNonConvergence = 3 };

const std::map<std::string, cs::GraphFormat> kFormats{{"edgelist", cs::GraphFormat::EdgeList},
                                                     {"dimacs", cs::GraphFormat::Dimacs}};

struct InputOptions {
  std::string path;
  cs::GraphFormat format = cs::GraphFormat::EdgeList;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("graph", in.path, "Graph file, or - for standard input")->required();
  cmd->add_option("--format", in.format, "Input format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("edgelist");
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cs::Error(fmt::format("cannot read {}", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

cs::Graph load_graph(const InputOptions& in) {
  std::vector<std::string> warnings;
  cs::Graph g = cs::parse_graph(read_source(in.path), in.format, &warnings);
  for (const auto& w : warnings) fmt::print(stderr, "warning: {}\n", w);
  return g;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    fmt::print("{}", text);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw cs::Error(fmt::format("cannot open {} for writing", path));
  out << text;
}

std::string enclosure(const cs::SpectralResult& r) {
  return fmt::format("rho_{} = {:.10f} [{:.10f}, {:.10f}]", r.t, r.rho, r.lower, r.upper);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------

struct SpectralCmd {
  InputOptions in;
  int t = 2;
  double tol = 1e-10;
  int max_iter = 100000;
  bool json = false;
  std::string out;

  int run() const {
    const cs::Graph g = load_graph(in);
    const cs::SpectralResult r = cs::spectral_radius(g, t, {tol, max_iter});
    std::string text;
    if (json) {
      text = cs::spectral_json(r).dump(2) + "\n";
    } else {
      text = enclosure(r) + "\n";
      if (r.component.empty()) {
        text += fmt::format("note: no {}-cliques\n", t);
      } else {
        text += fmt::format("iterations: {}\nconverged: {}\ncomponent: {}\n", r.iterations,
                            yes_no(r.converged), fmt::join(r.component, " "));
      }
    }
    write_output(out, text);
    if (!r.converged) {
      fmt::print(stderr, "error: power iteration did not converge; {}\n", enclosure(r));
      return kNonConvergence;
    }
    return kOk;
  }
};

struct BoundsCmd {
  InputOptions in;
  int t = 2;
  double tol = 1e-10;
  int max_iter = 100000;
  double eq_tol = 1e-6;
  bool json = false;
  bool csv = false;
  std::string out;

  int run() const {
    const cs::Graph g = load_graph(in);
    cs::BoundSuiteOptions opts;
    opts.spectral = {tol, max_iter};
    opts.bounds.eq_tol = eq_tol;
    opts.graph_id = in.path == "-" ? "stdin" : in.path;
    const cs::BoundSuite suite = cs::evaluate_bound_suite(g, t, opts);

    std::string text;
    if (json) {
      text = cs::bound_suite_json(suite).dump(2) + "\n";
    } else if (csv) {
      text = cs::bound_suite_csv(suite);
    } else {
      text = fmt::format("graph: n={} m={} omega={} t={}\n", suite.n, suite.m, suite.omega, suite.t);
      if (suite.spectrum) text += enclosure(*suite.spectrum) + "\n";
      text += fmt::format("{:<26} {:>18} {:>18} {:>14} {:>5} {:>7} {:>10}\n", "bound", "lhs",
                          "rhs", "gap", "holds", "eq_num", "eq_struct");
      for (const auto& r : suite.bounds)
        text += fmt::format("{:<26} {:>18.10f} {:>18.10f} {:>14.3e} {:>5} {:>7} {:>10}\n", r.name,
                            r.lhs, r.rhs, r.gap, yes_no(r.holds), yes_no(r.equality_numeric),
                            yes_no(r.equality_structural));
      text += fmt::format("kind: {}\n", cs::to_string(suite.kind));
      for (const auto& note : suite.notes) text += fmt::format("note: {}\n", note);
    }
    write_output(out, text);

    int code = kOk;
    for (const auto& r : suite.bounds)
      if (!r.holds) {
        fmt::print(stderr, "VIOLATION: {} lhs={} rhs={}\n", r.name, r.lhs, r.rhs);
        code = kViolation;
      }
    if (code == kOk && suite.spectrum && !suite.spectrum->converged) code = kNonConvergence;
    return code;
  }
};

struct CliquesCmd {
  InputOptions in;
  int t = 2;
  std::size_t limit = 20;
  bool json = false;

  int run() const {
    const cs::Graph g = load_graph(in);
    const cs::CliqueCatalog cat = cs::build_catalog(g, t);
    if (json) {
      fmt::print("{}\n", cs::catalog_json(cat, limit).dump(2));
      return kOk;
    }
    fmt::print("|C_{}|={}, omega={}\n", t, cat.cliques.size(), cat.omega);
    fmt::print("c_{}: {}\n", t, fmt::join(cat.per_vertex_count, " "));
    fmt::print("alpha: {}\n", fmt::join(cat.per_vertex_alpha, " "));
    const std::size_t shown = std::min(limit, cat.cliques.size());
    for (std::size_t k = 0; k < shown; ++k)
      fmt::print("  {{{}}} alpha={}\n", fmt::join(cat.cliques[k], ","), cat.per_clique_alpha[k]);
    if (shown < cat.cliques.size()) fmt::print("  ... {} more\n", cat.cliques.size() - shown);
    return kOk;
  }
};

struct VerifyCmd {
  cs::SuiteConfig cfg;
  std::string out;
  bool csv = false;
  bool json = false;

  int run() {
    if (csv) cfg.record_rows = true;
    cfg.validate();
    const cs::VerificationReport report = cs::run_suite(cfg);
    const auto format = csv ? cs::ReportFormat::Csv : cs::ReportFormat::Json;
    if (!out.empty()) cs::emit_report(report, format, out);
    if (json) fmt::print("{}", cs::render_report(report, cs::ReportFormat::Json));

    const std::int64_t mismatches = report.census_mismatches();
    fmt::print(json ? stderr : stdout, "{} graphs, {} violations, {}\n",
               report.graphs_checked + report.random_graphs_checked, report.violations.size(),
               mismatches == 0 ? std::string("census consistent")
                               : fmt::format("{} census mismatches", mismatches));
    if (!json) {
      fmt::print("bounds checked: {}\n", report.bounds_checked);
      if (report.oracle_checks > 0)
        fmt::print("oracle: {} checks, {} failures, max |diff| = {:.3e}\n", report.oracle_checks,
                   report.oracle_failures.size(), report.oracle_max_diff);
      for (const auto& v : report.violations)
        fmt::print("VIOLATION {} t={} {}: lhs={} rhs={} ({})\n", v.graph_id, v.t, v.bound, v.lhs,
                   v.rhs, v.graph);
      for (const auto& [key, s] : report.census)
        for (const auto& m : s.mismatches)
          fmt::print("MISMATCH {} {}: numeric={} structural={} kind={} gap={:.3e}\n", key,
                     m.graph_id, m.numeric, m.structural, m.kind, m.gap);
      if (!report.nonconverged.empty())
        fmt::print("non-converged: {}\n", fmt::join(report.nonconverged, " "));
    }
    if (!report.complete) {
      fmt::print(stderr, "error: suite aborted: {}\n", report.error);
      return kViolation;
    }
    if (!report.passed()) return kViolation;
    if (!report.nonconverged.empty()) return kNonConvergence;
    return kOk;
  }
};

struct GenerateCmd {
  int n = 0;
  int r = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::vector<int> sizes;
  std::string out;
  cs::GraphFormat format = cs::GraphFormat::EdgeList;
  bool json = false;

  int emit(const cs::Graph& g) const {
    write_output(out, json ? cs::graph_json(g).dump(2) + "\n" : cs::serialize_graph(g, format));
    return kOk;
  }
};

void add_output_format(CLI::App* cmd, GenerateCmd& gen) {
  cmd->add_option("--out", gen.out, "Output path (default stdout)");
  cmd->add_option("--format", gen.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("edgelist");
  cmd->add_flag("--json", gen.json, "Emit the graph as JSON");
}

}  // namespace

int main(int argc, char** argv) {
  cs::init_logging();

  CLI::App app{"Clique tensor spectral radii and localized Turan-type bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "clique-spectra 1.0.0");

  SpectralCmd spectral;
  auto* sp = app.add_subcommand("spectral", "Clique tensor spectral radius with enclosure");
  add_input(sp, spectral.in);
  sp->add_option("--t", spectral.t, "Clique order")->check(CLI::Range(2, 64))->capture_default_str();
  sp->add_option("--tol", spectral.tol, "Enclosure width")->check(CLI::PositiveNumber)->capture_default_str();
  sp->add_option("--max-iter", spectral.max_iter, "Iteration cap")->check(CLI::PositiveNumber)->capture_default_str();
  sp->add_flag("--json", spectral.json, "Emit JSON");
  sp->add_option("--out", spectral.out, "Output path (default stdout)");

  BoundsCmd bounds;
  auto* bd = app.add_subcommand("bounds", "Evaluate every bound on a graph");
  add_input(bd, bounds.in);
  bd->add_option("--t", bounds.t, "Clique order")->check(CLI::Range(2, 64))->capture_default_str();
  bd->add_option("--tol", bounds.tol, "Enclosure width")->check(CLI::PositiveNumber)->capture_default_str();
  bd->add_option("--max-iter", bounds.max_iter, "Iteration cap")->check(CLI::PositiveNumber)->capture_default_str();
  bd->add_option("--eq-tol", bounds.eq_tol, "Equality tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  auto* bjson = bd->add_flag("--json", bounds.json, "Emit JSON");
  bd->add_flag("--csv", bounds.csv, "Emit CSV")->excludes(bjson);
  bd->add_option("--out", bounds.out, "Output path (default stdout)");

  CliquesCmd cliques;
  auto* cq = app.add_subcommand("cliques", "Clique catalog of a graph");
  add_input(cq, cliques.in);
  cq->add_option("--t", cliques.t, "Clique order")->check(CLI::Range(1, 64))->capture_default_str();
  cq->add_option("--limit", cliques.limit, "Cliques listed")->capture_default_str();
  cq->add_flag("--json", cliques.json, "Emit JSON");

  VerifyCmd verify;
  verify.cfg.parallelism = std::max(1U, std::thread::hardware_concurrency());
  verify.cfg.spectral = false;
  auto* vf = app.add_subcommand("verify", "Exhaustive and randomized verification campaign");
  vf->add_option("--n-max", verify.cfg.n_max, "Exhaustive sweep over n = 1..n-max (<= 8)")->capture_default_str();
  vf->add_option("--t", verify.cfg.t_values, "Clique orders, comma separated")->delimiter(',')->capture_default_str();
  vf->add_flag("--spectral", verify.cfg.spectral, "Include rho-dependent bounds");
  vf->add_option("--seed", verify.cfg.seed, "Seed for every random choice")->capture_default_str();
  vf->add_option("--jobs", verify.cfg.parallelism, "Worker threads")->check(CLI::PositiveNumber);
  vf->add_option("--tol", verify.cfg.tol, "Enclosure width")->capture_default_str();
  vf->add_option("--eq-tol", verify.cfg.eq_tol, "Equality tolerance")->capture_default_str();
  vf->add_option("--max-iter", verify.cfg.max_iter, "Iteration cap")->capture_default_str();
  vf->add_option("--random-trials", verify.cfg.random_trials, "Random G(n,p) oracle trials")->capture_default_str();
  vf->add_option("--random-n-max", verify.cfg.random_n_max, "Largest random graph")->capture_default_str();
  vf->add_option("--oracle-t", verify.cfg.oracle_t_values, "Clique orders for random trials")->delimiter(',')->capture_default_str();
  vf->add_option("--oracle-restarts", verify.cfg.oracle_restarts, "Oracle restarts")->capture_default_str();
  vf->add_option("--census-limit", verify.cfg.census_limit, "Equality graphs listed per bound")->capture_default_str();
  vf->add_option("--out", verify.out, "Report path");
  vf->add_flag("--csv", verify.csv, "Write the report as CSV rows");
  vf->add_flag("--json", verify.json, "Print the JSON report to stdout");

  GenerateCmd gen;
  auto* gn = app.add_subcommand("generate", "Write a generated graph");
  gn->require_subcommand(1);
  auto* turan = gn->add_subcommand("turan", "Turan graph T(n, r)");
  turan->add_option("--n", gen.n, "Vertices")->required()->check(CLI::NonNegativeNumber);
  turan->add_option("--r", gen.r, "Parts")->required()->check(CLI::PositiveNumber);
  add_output_format(turan, gen);
  auto* multi = gn->add_subcommand("multipartite", "Complete multipartite graph");
  multi->add_option("sizes", gen.sizes, "Part sizes, comma separated")->required()->delimiter(',');
  add_output_format(multi, gen);
  auto* gnp = gn->add_subcommand("gnp", "Erdos-Renyi G(n, p)");
  gnp->add_option("--n", gen.n, "Vertices")->required()->check(CLI::NonNegativeNumber);
  gnp->add_option("--p", gen.p, "Edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  gnp->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  add_output_format(gnp, gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sp) return spectral.run();
    if (*bd) return bounds.run();
    if (*cq) return cliques.run();
    if (*vf) return verify.run();
    if (*turan) return gen.emit(cs::turan_graph(gen.n, gen.r));
    if (*multi) return gen.emit(cs::complete_multipartite(gen.sizes));
    if (*gnp) return gen.emit(cs::gnp_random(gen.n, gen.p, gen.seed));
  } catch (const cs::Error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsage;
  }
  return kUsage;
}

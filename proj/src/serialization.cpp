#include "clique_spectra/serialization.hpp"

#include <fstream>

#include <fmt/format.h>

#include "clique_spectra/error.hpp"

namespace clique_spectra {

namespace {

Json header(std::string_view schema) {
  Json j;
  j["schema"] = fmt::format("clique-spectra/{}", schema);
  j["schema_version"] = kSchemaVersion;
  return j;
}

void check_header(const Json& j, std::string_view schema) {
  const std::string expected = fmt::format("clique-spectra/{}", schema);
  if (!j.is_object() || j.value("schema", std::string{}) != expected)
    throw ParseError(0, fmt::format("expected a {} document", expected));
  if (j.value("schema_version", -1) != kSchemaVersion)
    throw ParseError(0, fmt::format("unsupported schema_version (expected {})", kSchemaVersion));
}

Json interval_json(const Interval& i) { return Json::array({i.lo, i.hi}); }

Interval interval_from(const Json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

Json stats_json(const BoundStats& s) {
  Json j;
  j["name"] = s.name;
  j["t"] = s.t;
  j["census"] = s.census;
  j["checked"] = s.checked;
  j["numeric_equal"] = s.numeric_equal;
  j["structural_equal"] = s.structural_equal;
  j["worst_gap"] = s.worst_gap ? Json(*s.worst_gap) : Json(nullptr);
  Json eq = Json::array();
  for (const auto& e : s.equal_graphs) eq.push_back({{"graph_id", e.graph_id}, {"kind", e.kind}});
  j["equal_graphs"] = std::move(eq);
  Json mm = Json::array();
  for (const auto& m : s.mismatches)
    mm.push_back({{"graph_id", m.graph_id},
                  {"graph", m.graph},
                  {"kind", m.kind},
                  {"numeric", m.numeric},
                  {"structural", m.structural},
                  {"gap", m.gap}});
  j["mismatches"] = std::move(mm);
  return j;
}

BoundStats stats_from(const Json& j) {
  BoundStats s;
  s.name = j.at("name").get<std::string>();
  s.t = j.at("t").get<int>();
  s.census = j.at("census").get<bool>();
  s.checked = j.at("checked").get<std::int64_t>();
  s.numeric_equal = j.at("numeric_equal").get<std::int64_t>();
  s.structural_equal = j.at("structural_equal").get<std::int64_t>();
  if (!j.at("worst_gap").is_null()) s.worst_gap = j.at("worst_gap").get<double>();
  for (const auto& e : j.at("equal_graphs"))
    s.equal_graphs.push_back({e.at("graph_id").get<std::string>(), e.at("kind").get<std::string>()});
  for (const auto& m : j.at("mismatches"))
    s.mismatches.push_back({m.at("graph_id").get<std::string>(), m.at("graph").get<std::string>(),
                            m.at("kind").get<std::string>(), m.at("numeric").get<bool>(),
                            m.at("structural").get<bool>(), m.at("gap").get<double>()});
  return s;
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

// Identifiers never contain commas or quotes, but guard anyway.
std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

// ---------------------------------------------------------------------------

Json graph_json(const Graph& g) {
  Json j = header("graph");
  j["n"] = g.num_vertices();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

Json catalog_json(const CliqueCatalog& catalog, std::size_t clique_limit) {
  Json j = header("clique-catalog");
  j["t"] = catalog.t;
  j["n"] = catalog.num_vertices();
  j["omega"] = catalog.omega;
  j["count"] = catalog.cliques.size();
  j["per_vertex_count"] = catalog.per_vertex_count;
  j["per_vertex_alpha"] = catalog.per_vertex_alpha;
  Json cliques = Json::array();
  for (std::size_t k = 0; k < catalog.cliques.size() && k < clique_limit; ++k) {
    const auto c = catalog.cliques[k];
    cliques.push_back({{"vertices", std::vector<Vertex>(c.begin(), c.end())},
                       {"alpha", catalog.per_clique_alpha[k]}});
  }
  j["cliques"] = std::move(cliques);
  j["truncated"] = catalog.cliques.size() > clique_limit;
  return j;
}

Json spectral_json(const SpectralResult& r) {
  Json j = header("spectral-result");
  j["t"] = r.t;
  j["rho"] = r.rho;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  j["component"] = r.component;
  j["vector"] = std::vector<double>(r.vector.data(), r.vector.data() + r.vector.size());
  return j;
}

Json bound_report_json(const BoundReport& r) {
  Json j;
  j["name"] = r.name;
  j["anchor"] = r.anchor;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["lhs_range"] = interval_json(r.lhs_range);
  j["rhs_range"] = interval_json(r.rhs_range);
  j["holds"] = r.holds;
  j["gap"] = r.gap;
  j["equality_numeric"] = r.equality_numeric;
  j["equality_structural"] = r.equality_structural;
  return j;
}

BoundReport bound_report_from_json(const Json& j) {
  BoundReport r;
  r.name = j.at("name").get<std::string>();
  r.anchor = j.at("anchor").get<std::string>();
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.lhs_range = interval_from(j.at("lhs_range"));
  r.rhs_range = interval_from(j.at("rhs_range"));
  r.holds = j.at("holds").get<bool>();
  r.gap = j.at("gap").get<double>();
  r.equality_numeric = j.at("equality_numeric").get<bool>();
  r.equality_structural = j.at("equality_structural").get<bool>();
  return r;
}

Json bound_suite_json(const BoundSuite& s) {
  Json j = header("bound-suite");
  j["graph_id"] = s.graph_id;
  j["n"] = s.n;
  j["m"] = s.m;
  j["omega"] = s.omega;
  j["t"] = s.t;
  j["kind"] = std::string(to_string(s.kind));
  if (s.spectrum) {
    Json sp = spectral_json(*s.spectrum);
    sp.erase("schema");
    sp.erase("schema_version");
    j["spectrum"] = std::move(sp);
  } else {
    j["spectrum"] = nullptr;
  }
  Json bounds = Json::array();
  for (const auto& r : s.bounds) bounds.push_back(bound_report_json(r));
  j["bounds"] = std::move(bounds);
  j["notes"] = s.notes;
  return j;
}

Json suite_config_json(const SuiteConfig& c) {
  Json j;
  j["n_max"] = c.n_max;
  j["t_values"] = c.t_values;
  j["spectral"] = c.spectral;
  j["tol"] = c.tol;
  j["eq_tol"] = c.eq_tol;
  j["slack"] = c.slack;
  j["max_iter"] = c.max_iter;
  j["seed"] = c.seed;
  j["random_trials"] = c.random_trials;
  j["random_n_max"] = c.random_n_max;
  j["oracle_t_values"] = c.oracle_t_values;
  j["oracle_restarts"] = c.oracle_restarts;
  j["oracle_tol"] = c.oracle_tol;
  j["random_points"] = c.random_points;
  j["census_limit"] = c.census_limit;
  j["parallelism"] = c.parallelism;
  j["record_rows"] = c.record_rows;
  return j;
}

SuiteConfig suite_config_from_json(const Json& j) {
  SuiteConfig c;
  c.n_max = j.at("n_max").get<int>();
  c.t_values = j.at("t_values").get<std::vector<int>>();
  c.spectral = j.at("spectral").get<bool>();
  c.tol = j.at("tol").get<double>();
  c.eq_tol = j.at("eq_tol").get<double>();
  c.slack = j.at("slack").get<double>();
  c.max_iter = j.at("max_iter").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.random_trials = j.at("random_trials").get<int>();
  c.random_n_max = j.at("random_n_max").get<int>();
  c.oracle_t_values = j.at("oracle_t_values").get<std::vector<int>>();
  c.oracle_restarts = j.at("oracle_restarts").get<int>();
  c.oracle_tol = j.at("oracle_tol").get<double>();
  c.random_points = j.at("random_points").get<int>();
  c.census_limit = j.at("census_limit").get<int>();
  c.parallelism = j.at("parallelism").get<int>();
  c.record_rows = j.at("record_rows").get<bool>();
  return c;
}

Json report_json(const VerificationReport& r, bool include_runtime) {
  Json j = header("verification-report");
  j["config"] = suite_config_json(r.config);
  j["complete"] = r.complete;
  j["error"] = r.error;
  j["passed"] = r.passed();
  j["graphs_checked"] = r.graphs_checked;
  j["random_graphs_checked"] = r.random_graphs_checked;
  j["bounds_checked"] = r.bounds_checked;
  j["census_mismatches"] = r.census_mismatches();
  j["oracle_checks"] = r.oracle_checks;
  j["oracle_max_diff"] = r.oracle_max_diff;
  if (include_runtime) j["runtime_seconds"] = r.runtime_seconds;

  Json failures = Json::array();
  for (const auto& f : r.oracle_failures)
    failures.push_back({{"graph_id", f.graph_id},
                        {"graph", f.graph},
                        {"t", f.t},
                        {"rho", f.rho},
                        {"lower", f.lower},
                        {"upper", f.upper},
                        {"oracle", f.oracle}});
  j["oracle_failures"] = std::move(failures);

  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"graph_id", v.graph_id},
                          {"graph", v.graph},
                          {"bound", v.bound},
                          {"t", v.t},
                          {"lhs", v.lhs},
                          {"rhs", v.rhs}});
  j["violations"] = std::move(violations);
  j["nonconverged"] = r.nonconverged;

  Json census = Json::object();
  for (const auto& [key, s] : r.census) census[key] = stats_json(s);
  j["equality_census"] = std::move(census);

  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"graph_id", row.graph_id},
                    {"t", row.t},
                    {"bound", row.bound},
                    {"lhs", row.lhs},
                    {"rhs", row.rhs},
                    {"gap", row.gap},
                    {"holds", row.holds},
                    {"equality_numeric", row.equality_numeric},
                    {"equality_structural", row.equality_structural}});
  j["rows"] = std::move(rows);
  return j;
}

VerificationReport report_from_json(const Json& j) {
  check_header(j, "verification-report");
  VerificationReport r;
  r.config = suite_config_from_json(j.at("config"));
  r.complete = j.at("complete").get<bool>();
  r.error = j.at("error").get<std::string>();
  r.graphs_checked = j.at("graphs_checked").get<std::int64_t>();
  r.random_graphs_checked = j.at("random_graphs_checked").get<std::int64_t>();
  r.bounds_checked = j.at("bounds_checked").get<std::int64_t>();
  r.oracle_checks = j.at("oracle_checks").get<std::int64_t>();
  r.oracle_max_diff = j.at("oracle_max_diff").get<double>();
  r.runtime_seconds = j.value("runtime_seconds", 0.0);
  for (const auto& f : j.at("oracle_failures"))
    r.oracle_failures.push_back({f.at("graph_id").get<std::string>(),
                                 f.at("graph").get<std::string>(), f.at("t").get<int>(),
                                 f.at("rho").get<double>(), f.at("lower").get<double>(),
                                 f.at("upper").get<double>(), f.at("oracle").get<double>()});
  for (const auto& v : j.at("violations"))
    r.violations.push_back({v.at("graph_id").get<std::string>(), v.at("graph").get<std::string>(),
                            v.at("bound").get<std::string>(), v.at("t").get<int>(),
                            v.at("lhs").get<double>(), v.at("rhs").get<double>()});
  r.nonconverged = j.at("nonconverged").get<std::vector<std::string>>();
  for (const auto& [key, s] : j.at("equality_census").items()) r.census[key] = stats_from(s);
  for (const auto& row : j.at("rows"))
    r.rows.push_back({row.at("graph_id").get<std::string>(), row.at("t").get<int>(),
                      row.at("bound").get<std::string>(), row.at("lhs").get<double>(),
                      row.at("rhs").get<double>(), row.at("gap").get<double>(),
                      row.at("holds").get<bool>(), row.at("equality_numeric").get<bool>(),
                      row.at("equality_structural").get<bool>()});
  return r;
}

// ---------------------------------------------------------------------------

std::string report_csv(const VerificationReport& report) {
  std::string out = "graph_id,t,bound,lhs,rhs,gap,holds,equality_numeric,equality_structural\n";
  for (const auto& r : report.rows)
    out += fmt::format("{},{},{},{},{},{},{},{},{}\n", csv_field(r.graph_id), r.t,
                       csv_field(r.bound), r.lhs, r.rhs, r.gap, csv_bool(r.holds),
                       csv_bool(r.equality_numeric), csv_bool(r.equality_structural));
  return out;
}

std::string bound_suite_csv(const BoundSuite& suite) {
  std::string out =
      "graph_id,t,bound,lhs,rhs,gap,holds,equality_numeric,equality_structural,kind\n";
  const std::string_view kind = to_string(suite.kind);
  for (const auto& r : suite.bounds)
    out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", csv_field(suite.graph_id), suite.t,
                       csv_field(r.name), r.lhs, r.rhs, r.gap, csv_bool(r.holds),
                       csv_bool(r.equality_numeric), csv_bool(r.equality_structural), kind);
  return out;
}

std::string render_report(const VerificationReport& report, ReportFormat format) {
  if (format == ReportFormat::Csv) return report_csv(report);
  return report_json(report).dump(2) + "\n";
}

void emit_report(const VerificationReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(fmt::format("cannot open {} for writing", path.string()));
  out << render_report(report, format);
  if (!out) throw Error(fmt::format("failed writing {}", path.string()));
}

}  // namespace clique_spectra

// Acceptance suite: one PASS/FAIL line per criterion.
//
// Usage: acceptance [--known-failure N]...
// Exit status is 0 when every criterion passes, or when the failing set equals
// the declared known failures exactly. A declared criterion that starts passing
// is reported and also fails the run.

#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "clique_spectra/bounds.hpp"
#include "clique_spectra/graph_io.hpp"
#include "clique_spectra/spectral.hpp"
#include "clique_spectra/verify.hpp"
#include "oracles.hpp"

namespace cs = clique_spectra;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

void fail(Outcome& o, const std::string& msg) {
  if (o.pass) o.detail = msg;
  o.pass = false;
}

cs::Graph diamond() { return cs::complete_multipartite(std::vector<int>{1, 1, 2}); }

// Every graph on n = 1..n_max vertices.
void for_each_graph(int n_max, const std::function<void(const std::string&, const cs::Graph&)>& f) {
  for (int n = 1; n <= n_max; ++n)
    cs::enumerate_all_graphs(n, [&](std::uint64_t mask, const cs::Graph& g) {
      f(cs::exhaustive_graph_id(n, mask), g);
    });
}

// ---------------------------------------------------------------------------

Outcome multipartite_exactness() {
  Outcome o;
  int cases = 0;
  double worst = 0.0;
  for (int parts = 2; parts <= 5; ++parts) {
    std::vector<int> sizes(parts, 1);
    while (true) {
      const double expected = cs::multipartite_rho_formula(sizes);
      // Independent closed form.
      double prod = 1.0;
      for (int s : sizes) prod *= s;
      const double direct = std::pow(prod, (parts - 1.0) / parts);
      const double rho = cs::spectral_radius(cs::complete_multipartite(sizes), parts).rho;
      const double err = std::max(rel_err(rho, direct), rel_err(expected, direct));
      worst = std::max(worst, err);
      if (err > 1e-8) fail(o, fmt::format("sizes {} rho={} expected={}", fmt::join(sizes, ","), rho, direct));
      ++cases;
      int k = 0;
      while (k < parts && sizes[k] == 4) sizes[k++] = 1;
      if (k == parts) break;
      ++sizes[k];
    }
  }
  if (o.pass) o.detail = fmt::format("{} part-size lists, worst relative error {:.2e}", cases, worst);
  return o;
}

Outcome known_equality_cases() {
  Outcome o;
  using namespace cs::bound_names;
  const std::vector<std::string_view> section3{kCliqueLocalZykov, kVertexCountLocalZykov,
                                               kVertexWeightPower, kVertexLocalZykov,
                                               kCliqueCountWeighted, kCliqueCountVertex};
  const cs::Graph k222 = cs::turan_graph(6, 3);
  for (int t = 2; t <= 3; ++t) {
    const cs::BoundSuite s = cs::evaluate_bound_suite(k222, t);
    if (!s.spectrum || std::abs(s.spectrum->rho - 4.0) > 1e-8)
      fail(o, fmt::format("K222 rho_{} = {}", t, s.spectrum ? s.spectrum->rho : -1.0));
    if (s.kind != cs::EqualityKind::RegularMultipartite)
      fail(o, fmt::format("K222 t={} kind {}", t, cs::to_string(s.kind)));
    for (auto name : section3) {
      const auto it = std::find_if(s.bounds.begin(), s.bounds.end(),
                                   [&](const cs::BoundReport& r) { return r.name == name; });
      if (it == s.bounds.end()) fail(o, fmt::format("K222 t={} missing {}", t, name));
      else if (!it->equality_numeric || !it->equality_structural)
        fail(o, fmt::format("K222 t={} {} not tight (gap {})", t, name, it->gap));
    }
  }
  const cs::BoundSuite d = cs::evaluate_bound_suite(diamond(), 3);
  if (d.kind != cs::EqualityKind::MultipartiteOmegaEqT)
    fail(o, fmt::format("diamond kind {}", cs::to_string(d.kind)));
  for (const auto& r : d.bounds) {
    const bool tight_expected = r.name == kCliqueLocalZykov || r.name == kVertexCountLocalZykov;
    const bool strict_expected = r.name == kVertexWeightPower || r.name == kVertexLocalZykov ||
                                 r.name == kCliqueCountWeighted || r.name == kCliqueCountVertex;
    if (tight_expected && !r.equality_numeric) fail(o, fmt::format("diamond {} not tight", r.name));
    if (strict_expected && r.equality_numeric) fail(o, fmt::format("diamond {} unexpectedly tight", r.name));
  }
  if (o.pass) o.detail = "K222 at t = 2, 3 and the diamond at t = 3";
  return o;
}

Outcome exhaustive_soundness() {
  Outcome o;
  cs::SuiteConfig spectral;
  spectral.n_max = 6;
  spectral.t_values = {2, 3};
  spectral.spectral = true;
  const cs::VerificationReport a = cs::run_suite(spectral);

  cs::SuiteConfig combinatorial;
  combinatorial.n_max = 7;
  combinatorial.t_values = {2, 3};
  combinatorial.spectral = false;
  const cs::VerificationReport b = cs::run_suite(combinatorial);

  for (const auto* r : {&a, &b}) {
    if (!r->complete) fail(o, "incomplete: " + r->error);
    for (const auto& v : r->violations)
      fail(o, fmt::format("{} t={} {}: {} > {}", v.graph_id, v.t, v.bound, v.lhs, v.rhs));
    if (!r->nonconverged.empty()) fail(o, "non-converged: " + r->nonconverged.front());
  }
  if (a.graphs_checked != 1 + 2 + 8 + 64 + 1024 + 32768) fail(o, "wrong n <= 6 graph count");
  if (b.graphs_checked != 1 + 2 + 8 + 64 + 1024 + 32768 + 2097152) fail(o, "wrong n <= 7 graph count");
  if (o.pass)
    o.detail = fmt::format("n<=6 spectral: {} graphs, {} bounds; n<=7 rho-free: {} graphs, {} bounds; 0 violations",
                           a.graphs_checked, a.bounds_checked, b.graphs_checked, b.bounds_checked);
  return o;
}

// Compares numeric equality against equality_case_predicate exactly as stated:
// any complete multipartite core for the clique-localised and vertex-count
// bounds, a regular one for the other two.
Outcome equality_census() {
  Outcome o;
  using namespace cs::bound_names;
  struct Tally {
    std::string_view name;
    bool regular;
    int numeric = 0, predicate = 0, mismatches = 0, spanning_mismatches = 0;
    std::string first;
  };
  std::vector<Tally> tallies{{kCliqueLocalZykov, false}, {kVertexCountLocalZykov, false},
                             {kVertexLocalZykov, true}, {kCliqueCountVertex, true}};
  for_each_graph(6, [&](const std::string& id, const cs::Graph& g) {
    for (int t = 2; t <= 3; ++t) {
      const cs::CliqueCatalog cat = cs::build_catalog(g, t);
      if (t > cat.omega) continue;
      const cs::SpectralResult rho = cs::spectral_radius(cat);
      const cs::EqualityCase eq = cs::equality_case_predicate(g, t);
      for (auto& tl : tallies) {
        cs::BoundReport r;
        if (tl.name == kCliqueLocalZykov) r = cs::clique_local_zykov(g, cat, rho, eq);
        else if (tl.name == kVertexCountLocalZykov) r = cs::vertex_count_local_zykov(g, cat, rho, eq);
        else if (tl.name == kVertexLocalZykov) r = cs::vertex_local_zykov(g, cat, rho, eq);
        else r = cs::clique_count_vertex(g, cat, eq);
        const bool predicate = tl.regular ? eq.kind == cs::EqualityKind::RegularMultipartite
                                          : eq.kind != cs::EqualityKind::None;
        const bool spanning = predicate && (!tl.regular || tl.name != kCliqueCountVertex ||
                                            eq.structure->isolated.empty());
        tl.numeric += r.equality_numeric;
        tl.predicate += predicate;
        tl.spanning_mismatches += r.equality_numeric != spanning;
        if (r.equality_numeric != predicate) {
          if (tl.mismatches == 0)
            tl.first = fmt::format("{} t={} ({}): numeric={} predicate={}", id, t, cs::edge_string(g),
                                   r.equality_numeric, predicate);
          ++tl.mismatches;
        }
      }
    }
  });
  std::vector<std::string> parts;
  for (const auto& tl : tallies) {
    parts.push_back(fmt::format("{} {}/{}", tl.name, tl.numeric, tl.predicate));
    if (tl.mismatches > 0)
      fail(o, fmt::format("{}: {} mismatches, first {}; with the spanning-core reading: {} mismatches",
                          tl.name, tl.mismatches, tl.first, tl.spanning_mismatches));
  }
  if (o.pass) o.detail = fmt::format("numeric/predicate counts: {}", fmt::join(parts, ", "));
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  cs::SuiteConfig cfg;
  cfg.n_max = 0;
  cfg.random_trials = 500;
  cfg.random_n_max = 8;
  cfg.oracle_t_values = {2, 3, 4};
  cfg.oracle_tol = 1e-6;
  cfg.seed = 2024;
  const cs::VerificationReport r = cs::run_suite(cfg);
  if (r.random_graphs_checked != 500) fail(o, "wrong trial count");
  for (const auto& f : r.oracle_failures)
    fail(o, fmt::format("{} t={}: rho={} [{}, {}] oracle={}", f.graph_id, f.t, f.rho, f.lower, f.upper, f.oracle));
  for (const auto& v : r.violations) fail(o, fmt::format("violation {} {}", v.graph_id, v.bound));
  if (o.pass)
    o.detail = fmt::format("{} graphs, {} oracle checks, max |diff| {:.2e}", r.random_graphs_checked,
                           r.oracle_checks, r.oracle_max_diff);
  return o;
}

Outcome adjacency_consistency() {
  Outcome o;
  std::mt19937_64 rng(606);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const cs::Graph g = oracles::random_graph(rng, n, std::array{0.3, 0.5, 0.8}[trial % 3]);
    const double a = cs::spectral_radius(g, 2).rho;
    const double b = oracles::adjacency_power_rho(g);
    worst = std::max(worst, std::abs(a - b));
    if (std::abs(a - b) > 1e-8) fail(o, fmt::format("{}: {} vs {}", cs::edge_string(g), a, b));
  }
  const struct {
    const char* name;
    cs::Graph g;
    double value;
  } known[] = {{"Petersen", cs::petersen_graph(), 3.0},
               {"C5", cs::cycle_graph(5), 2.0},
               {"K33", cs::turan_graph(6, 2), 3.0},
               {"diamond", diamond(), (1.0 + std::sqrt(17.0)) / 2.0}};
  for (const auto& k : known) {
    const double rho = cs::spectral_radius(k.g, 2).rho;
    if (std::abs(rho - k.value) > 1e-8) fail(o, fmt::format("{}: {} vs {}", k.name, rho, k.value));
  }
  if (o.pass) o.detail = fmt::format("200 random graphs, max |diff| {:.2e}; 4 closed forms", worst);
  return o;
}

Outcome reduction_identities() {
  Outcome o;
  int t2 = 0, t3 = 0, strict = 0;
  double worst = 0.0;
  for_each_graph(6, [&](const std::string& id, const cs::Graph& g) {
    const cs::CliqueCatalog edges = cs::build_catalog(g, 2);
    if (edges.omega < 2) return;  // both sides need an edge
    const cs::SpectralResult rho2 = cs::spectral_radius(edges);
    const double diff =
        std::abs(cs::clique_local_zykov_rho_bound(edges) - cs::liu_ning_bound(g, edges, rho2).rhs);
    worst = std::max(worst, diff);
    if (diff > 1e-12) fail(o, fmt::format("{}: t=2 identity off by {}", id, diff));
    ++t2;

    if (edges.omega < 3) return;
    const cs::CliqueCatalog tri = cs::build_catalog(g, 3);
    const auto r = cs::vertex_zykov_comparison(g, tri);
    if (!r) return fail(o, id + ": comparison missing");
    ++t3;
    if (!r->holds) fail(o, fmt::format("{}: comparison violated {} > {}", id, r->lhs, r->rhs));
    // Every vertex is covered by a clique (at least the 1-clique on itself).
    const auto& alpha = tri.per_vertex_alpha;
    const bool constant = std::all_of(alpha.begin(), alpha.end(), [&](int a) { return a == alpha[0]; });
    const bool is_strict = r->rhs - r->lhs > 1e-9 * std::max(1.0, r->rhs);
    strict += is_strict;
    if (is_strict == constant)
      fail(o, fmt::format("{} ({}): strict={} but alpha constant={}", id, cs::edge_string(g), is_strict, constant));
  });
  if (o.pass)
    o.detail = fmt::format("t=2 identity on {} graphs (max diff {:.1e}); comparison on {} graphs, {} strict",
                           t2, worst, t3, strict);
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / fmt::format("clique_spectra_acceptance_{}", ::getpid());
  fs::create_directories(dir);
  const std::string base = fmt::format(
      "{} verify --n-max 5 --t 2,3 --spectral --seed 77 --random-trials 40 --jobs 2", CLI_PATH);
  for (const char* ext : {"json", "csv"}) {
    std::vector<std::string> outputs;
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / fmt::format("run{}.{}", run, ext);
      const std::string cmd = fmt::format("{} {} --out {} > /dev/null 2>&1", base,
                                          std::string(ext) == "csv" ? "--csv" : "", out.string());
      const int status = std::system(cmd.c_str());
      if (status != 0) fail(o, fmt::format("verify exited with status {}", status));
      outputs.push_back(slurp(out));
    }
    if (outputs[0].empty()) fail(o, fmt::format("empty {} report", ext));
    if (outputs[0] != outputs[1]) fail(o, fmt::format("{} reports differ", ext));
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = "JSON and CSV reports byte-identical across two runs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--known-failure" && i + 1 < argc) {
      known.insert(std::atoi(argv[++i]));
    } else {
      fmt::print(stderr, "usage: acceptance [--known-failure N]...\n");
      return 2;
    }
  }

  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"multipartite closed form", multipartite_exactness},
      {"equality cases K222 and diamond", known_equality_cases},
      {"exhaustive soundness", exhaustive_soundness},
      {"equality census exactness", equality_census},
      {"oracle agreement", oracle_agreement},
      {"t = 2 consistency", adjacency_consistency},
      {"reduction identities", reduction_identities},
      {"determinism", determinism},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, fmt::format("exception: {}", e.what())};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const int id = static_cast<int>(i) + 1;
    fmt::print("[{}] criterion {}: {} ({:.1f}s) - {}\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first,
               secs, o.detail);
    std::fflush(stdout);
    if (!o.pass) failed.insert(id);
  }

  fmt::print("{} of {} criteria passed\n", criteria.size() - failed.size(), criteria.size());
  if (known.empty()) return failed.empty() ? 0 : 1;
  if (failed == known) {
    fmt::print("failures match the declared known failures: {}\n", fmt::join(known, ", "));
    return 0;
  }
  fmt::print("failures differ from the declared known failures ({})\n", fmt::join(known, ", "));
  return 1;
}

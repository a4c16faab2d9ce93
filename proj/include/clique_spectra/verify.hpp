#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clique_spectra/bounds.hpp"
#include "clique_spectra/graph.hpp"

namespace clique_spectra {

inline constexpr int kMaxExhaustiveN = 8;

struct SuiteConfig {
  int n_max = 6;  // exhaustive sweep over n = 1..n_max; 0 disables it
  std::vector<int> t_values{2, 3};
  bool spectral = true;
  double tol = 1e-10;
  double eq_tol = 1e-6;
  double slack = 1e-9;
  int max_iter = 100000;
  std::uint64_t seed = 0;
  int random_trials = 0;
  int random_n_max = 8;
  std::vector<int> oracle_t_values{2, 3, 4};
  int oracle_restarts = 12;
  double oracle_tol = 1e-6;
  int random_points = 2;    // seeded simplex points per (graph, t)
  int census_limit = 256;   // equality graphs listed per bound; counts are always complete
  int parallelism = 1;
  bool record_rows = false;  // keep one row per evaluated bound (needed for CSV)

  /// Throws ValidationError on an out-of-budget or malformed configuration.
  void validate() const;
  friend bool operator==(const SuiteConfig&, const SuiteConfig&) = default;
};

struct Violation {
  std::string graph_id;
  std::string graph;  // edge_string serialisation
  std::string bound;
  int t = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct EqualityEntry {
  std::string graph_id;
  std::string kind;
  friend bool operator==(const EqualityEntry&, const EqualityEntry&) = default;
};

/// A graph where numeric and structural equality disagree.
struct CensusMismatch {
  std::string graph_id;
  std::string graph;
  std::string kind;
  bool numeric = false;
  bool structural = false;
  double gap = 0.0;
  friend bool operator==(const CensusMismatch&, const CensusMismatch&) = default;
};

/// Per-(bound, t) statistics. Keys in the report are "<name>/t=<t>" (t = 0 for
/// the classical bounds).
struct BoundStats {
  std::string name;
  int t = 0;
  bool census = false;  // whether the iff cross-check applies
  std::int64_t checked = 0;
  std::int64_t numeric_equal = 0;
  std::int64_t structural_equal = 0;
  std::vector<EqualityEntry> equal_graphs;  // first census_limit numeric-equality graphs
  std::vector<CensusMismatch> mismatches;
  std::optional<double> worst_gap;  // min gap over graphs without numeric equality
  friend bool operator==(const BoundStats&, const BoundStats&) = default;
};

struct BoundRow {
  std::string graph_id;
  int t = 0;
  std::string bound;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  bool holds = true;
  bool equality_numeric = false;
  bool equality_structural = false;
  friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

struct OracleFailure {
  std::string graph_id;
  std::string graph;
  int t = 0;
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double oracle = 0.0;
  friend bool operator==(const OracleFailure&, const OracleFailure&) = default;
};

struct VerificationReport {
  static constexpr int kSchemaVersion = 1;

  SuiteConfig config;
  bool complete = true;
  std::string error;
  std::int64_t graphs_checked = 0;
  std::int64_t random_graphs_checked = 0;
  std::int64_t bounds_checked = 0;
  std::int64_t oracle_checks = 0;
  double oracle_max_diff = 0.0;
  std::vector<OracleFailure> oracle_failures;
  std::vector<Violation> violations;
  std::vector<std::string> nonconverged;
  std::map<std::string, BoundStats> census;
  std::vector<BoundRow> rows;
  double runtime_seconds = 0.0;  // wall clock; not part of the serialised report

  std::int64_t census_mismatches() const;
  bool passed() const;

  /// Everything except runtime.
  friend bool operator==(const VerificationReport& a, const VerificationReport& b);
};

/// Calls `visit` for every labelled graph on n vertices in edge-mask order.
void enumerate_all_graphs(int n, const std::function<void(std::uint64_t mask, const Graph&)>& visit);

std::string exhaustive_graph_id(int n, std::uint64_t mask);

/// Evaluates every applicable bound on one graph and folds the outcome into
/// `report` (graphs_checked is not touched). `stream` seeds the random battery.
void check_graph(const Graph& g, const std::string& graph_id, const SuiteConfig& cfg,
                 std::uint64_t stream, VerificationReport& report);

/// Appends `part` to `into`; associative, order-sensitive only in list order.
void merge_into(VerificationReport& into, VerificationReport&& part, int census_limit);

VerificationReport run_suite(const SuiteConfig& cfg);

}  // namespace clique_spectra

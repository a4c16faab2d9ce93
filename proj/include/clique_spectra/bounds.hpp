#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "clique_spectra/cliques.hpp"
#include "clique_spectra/graph.hpp"
#include "clique_spectra/spectral.hpp"

namespace clique_spectra {

// ---------------------------------------------------------------------------
// Equality structure

enum class EqualityKind { None, MultipartiteOmegaEqT, RegularMultipartite };

std::string_view to_string(EqualityKind kind);

/// Structure of the t-clique core with isolated vertices removed.
struct EqualityCase {
  EqualityKind kind = EqualityKind::None;
  int omega = 0;  // clique number of the core
  /// Present whenever the core is complete multipartite, even if `kind` is None.
  std::optional<MultipartiteStructure> structure;
};

EqualityCase equality_case_predicate(const Graph& g, int t);

// ---------------------------------------------------------------------------
// Reports

struct BoundOptions {
  double eq_tol = 1e-6;
  double slack = 1e-9;  // relative slack for `holds`
};

/// Closed interval; degenerate for quantities that do not involve rho.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval point(double v) { return {v, v}; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// One evaluated inequality lhs <= rhs.
///
/// When a side depends on rho_t it is carried as the image of the certified
/// enclosure. `holds` compares the most favourable ends, so a false value is a
/// certified violation; `equality_numeric` requires every point of both ranges
/// to agree within eq_tol * max(1, |rhs|).
struct BoundReport {
  std::string name;
  std::string anchor;  // the inequality in formula form
  double lhs = 0.0;
  double rhs = 0.0;
  Interval lhs_range;
  Interval rhs_range;
  bool holds = true;
  double gap = 0.0;  // rhs - lhs
  bool equality_numeric = false;
  bool equality_structural = false;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

BoundReport make_bound_report(std::string name, std::string anchor, double lhs, Interval lhs_range,
                              double rhs, Interval rhs_range, bool structural,
                              const BoundOptions& options);

/// Nonnegative weight vector with a declared normalisation.
struct WeightedVector {
  enum class Norm { Sum, PowerT };

  Eigen::VectorXd x;
  Norm norm = Norm::Sum;

  /// Checks nonnegativity and the declared normalisation (within 1e-9) for order t.
  void validate(int t = 1) const;
};

namespace bound_names {
inline constexpr std::string_view kNikiforov = "nikiforov";
inline constexpr std::string_view kTuran = "turan";
inline constexpr std::string_view kLocalizedTuran = "localized_turan";
inline constexpr std::string_view kLiuNing = "liu_ning";
inline constexpr std::string_view kZykovSpectral = "zykov_spectral";
inline constexpr std::string_view kCliqueCountRho = "clique_count_rho";
inline constexpr std::string_view kMaclaurin = "maclaurin";
inline constexpr std::string_view kCliqueWeightedSum = "clique_weighted_sum";
inline constexpr std::string_view kVertexWeightedSum = "vertex_weighted_sum";
inline constexpr std::string_view kCliqueLocalZykov = "clique_local_zykov";
inline constexpr std::string_view kVertexCountLocalZykov = "vertex_count_local_zykov";
inline constexpr std::string_view kVertexWeightPower = "vertex_weight_power";
inline constexpr std::string_view kVertexLocalZykov = "vertex_local_zykov";
inline constexpr std::string_view kCliqueCountWeighted = "clique_count_weighted";
inline constexpr std::string_view kCliqueCountVertex = "clique_count_vertex";
inline constexpr std::string_view kVertexZykovComparison = "vertex_zykov_comparison";
inline constexpr std::string_view kChainCliqueVertex = "chain_clique_vertex";
inline constexpr std::string_view kChainCliqueOmega = "chain_clique_omega";
inline constexpr std::string_view kChainCountWeighted = "chain_count_weighted";
}  // namespace bound_names

/// How a bound's equality flags are cross-checked in a census.
enum class CensusMode {
  None,  // no characterisation claimed
  Iff,   // numeric equality <=> structural predicate
};

CensusMode census_mode(std::string_view bound_name);

// ---------------------------------------------------------------------------
// Weights shared by the localised bounds

double binomial(int n, int k);

/// (C(alpha, t) / alpha^t)^(1/(t-1)); zero when alpha < t.
double vertex_weight(int alpha, int t);

/// alpha^t / C(alpha, t) for alpha >= t.
double clique_coefficient(int alpha, int t);

// ---------------------------------------------------------------------------
// Classical bounds (t = 2 data; `edges` is the order-2 catalog)

BoundReport nikiforov_bound(const Graph& g, const CliqueCatalog& edges, const SpectralResult& rho2,
                            const BoundOptions& options = {});
BoundReport turan_edge_bound(const Graph& g, int omega, const BoundOptions& options = {});
BoundReport localized_turan_sum(const Graph& g, const CliqueCatalog& edges,
                                const BoundOptions& options = {});
BoundReport liu_ning_bound(const Graph& g, const CliqueCatalog& edges, const SpectralResult& rho2,
                           const BoundOptions& options = {});

// ---------------------------------------------------------------------------
// Clique-tensor bounds. They require 2 <= t <= omega and throw ValidationError
// otherwise; the weighted sums and vertex_weight_power only need t >= 2 and
// degenerate to empty sums when t > omega.

BoundReport zykov_spectral_bound(const Graph& g, const CliqueCatalog& catalog,
                                 const SpectralResult& rho, const EqualityCase& eq,
                                 const BoundOptions& options = {});
BoundReport clique_count_vs_rho(const Graph& g, const CliqueCatalog& catalog,
                                const SpectralResult& rho, const BoundOptions& options = {});

/// (prod sizes)^((t-1)/t) with t = number of parts; the closed form for a
/// complete t-partite graph.
double multipartite_rho_formula(std::span<const int> sizes);

BoundReport maclaurin_check(const Graph& g, const WeightedVector& x, int s, int q,
                            const BoundOptions& options = {});
BoundReport weighted_clique_sum(const Graph& g, const CliqueCatalog& catalog,
                                const WeightedVector& x, const BoundOptions& options = {});
BoundReport vertex_weighted_sum(const Graph& g, const CliqueCatalog& catalog,
                                const WeightedVector& x, const BoundOptions& options = {});

/// Structural equality for the weighted sums: G[supp(x)] is complete
/// omega-partite and every class carries mass 1/omega.
bool weighted_equality_structure(const Graph& g, const Eigen::VectorXd& x, int omega);

BoundReport clique_local_zykov(const Graph& g, const CliqueCatalog& catalog,
                               const SpectralResult& rho, const EqualityCase& eq,
                               const BoundOptions& options = {});
BoundReport vertex_count_local_zykov(const Graph& g, const CliqueCatalog& catalog,
                                     const SpectralResult& rho, const EqualityCase& eq,
                                     const BoundOptions& options = {});
BoundReport vertex_weight_power(const Graph& g, const CliqueCatalog& catalog,
                                const EqualityCase& eq, const BoundOptions& options = {});
BoundReport vertex_local_zykov(const Graph& g, const CliqueCatalog& catalog,
                               const SpectralResult& rho, const EqualityCase& eq,
                               const BoundOptions& options = {});
/// The two clique-count bounds below are tight only when the regular core
/// spans V(G): the factor n also counts vertices outside every t-clique.
BoundReport clique_count_weighted(const Graph& g, const CliqueCatalog& catalog,
                                  const EqualityCase& eq, const BoundOptions& options = {});
BoundReport clique_count_vertex(const Graph& g, const CliqueCatalog& catalog,
                                const EqualityCase& eq, const BoundOptions& options = {});

/// The vertex-count bound against n^(t-1) * sum_v C(alpha(v),t)/alpha(v)^t.
/// Empty for t = 2, where the comparison is not defined.
std::optional<BoundReport> vertex_zykov_comparison(const Graph& g, const CliqueCatalog& catalog,
                                                   const BoundOptions& options = {});

/// Intermediate steps of the proofs as standalone inequalities.
std::vector<BoundReport> chain_checks(const Graph& g, const CliqueCatalog& catalog,
                                      const BoundOptions& options = {});

/// rho_t-form of the clique-localised bound: t * (sum_I w_I)^((t-1)/t).
double clique_local_zykov_rho_bound(const CliqueCatalog& catalog);

// ---------------------------------------------------------------------------
// Whole-graph evaluation

std::vector<BoundReport> classical_bounds(const Graph& g, const CliqueCatalog& edges,
                                          const SpectralResult* rho2,
                                          const BoundOptions& options = {});

/// All clique-tensor bounds for one t (requires 2 <= t <= omega). Bounds that
/// need rho are skipped when `rho` is null.
std::vector<BoundReport> localized_bounds(const Graph& g, const CliqueCatalog& catalog,
                                          const SpectralResult* rho, const EqualityCase& eq,
                                          const BoundOptions& options = {});

struct BoundSuiteOptions {
  BoundOptions bounds;
  SpectralOptions spectral;
  bool spectral_bounds = true;
  std::string graph_id = "graph";
};

struct BoundSuite {
  std::string graph_id;
  int n = 0;
  std::size_t m = 0;
  int omega = 0;
  int t = 0;
  EqualityKind kind = EqualityKind::None;
  std::optional<SpectralResult> spectrum;
  std::vector<BoundReport> bounds;
  std::vector<std::string> notes;
};

BoundSuite evaluate_bound_suite(const Graph& g, int t, const BoundSuiteOptions& options = {});

}  // namespace clique_spectra

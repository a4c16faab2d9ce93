#include "clique_spectra/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "clique_spectra/error.hpp"

namespace clique_spectra {

namespace names = bound_names;

namespace {

constexpr double kMassTol = 1e-9;

void require_applicable(const CliqueCatalog& catalog) {
  if (catalog.t < 2 || catalog.t > catalog.omega)
    throw ValidationError(
        fmt::format("bound requires 2 <= t <= omega (t = {}, omega = {})", catalog.t, catalog.omega));
}

void require_order(const CliqueCatalog& catalog) {
  if (catalog.t < 2) throw ValidationError(fmt::format("bound requires t >= 2 (t = {})", catalog.t));
}

void require_matching(const CliqueCatalog& catalog, const SpectralResult& rho) {
  if (rho.t != catalog.t)
    throw ValidationError(fmt::format("spectral result has t = {}, catalog t = {}", rho.t, catalog.t));
}

template <class F>
Interval map_increasing(const SpectralResult& rho, F f) {
  return {f(rho.lower), f(rho.upper)};
}

double product_over(std::span<const Vertex> clique, const Eigen::VectorXd& x) {
  double p = 1.0;
  for (Vertex v : clique) p *= x(v);
  return p;
}

double sum_clique_weights(const CliqueCatalog& cat) {
  double s = 0.0;
  for (int a : cat.per_clique_alpha) s += vertex_weight(a, cat.t);
  return s;
}

double sum_vertex_weights(const CliqueCatalog& cat) {
  double s = 0.0;
  for (int a : cat.per_vertex_alpha) s += vertex_weight(a, cat.t);
  return s;
}

double sum_count_vertex_weights(const CliqueCatalog& cat) {
  double s = 0.0;
  for (std::size_t v = 0; v < cat.per_vertex_alpha.size(); ++v)
    s += static_cast<double>(cat.per_vertex_count[v]) * vertex_weight(cat.per_vertex_alpha[v], cat.t);
  return s;
}

bool classical_spectral_equality(const Graph& g, int omega) {
  if (g.num_edges() == 0) return true;
  const auto st = complete_multipartite_partition(g);
  if (!st) return false;
  if (omega == 2) return true;
  return static_cast<int>(st->partition.parts.size()) == omega && st->partition.regular();
}

bool multipartite_or_eq_t(const EqualityCase& eq) { return eq.kind != EqualityKind::None; }
bool regular(const EqualityCase& eq) { return eq.kind == EqualityKind::RegularMultipartite; }

// The clique-count bounds carry a factor n, so a vertex outside every t-clique
// (isolated in the core) makes them strict.
bool regular_spanning(const EqualityCase& eq) {
  return regular(eq) && eq.structure && eq.structure->isolated.empty();
}

double cor35_rhs(const Graph& g, const CliqueCatalog& cat) {
  const int t = cat.t;
  return g.num_vertices() * std::pow(sum_count_vertex_weights(cat) / t, (t - 1.0) / t);
}

double cor36_rhs(const Graph& g, const CliqueCatalog& cat) {
  return g.num_vertices() * std::pow(sum_vertex_weights(cat), cat.t - 1);
}

}  // namespace

// ---------------------------------------------------------------------------

BoundReport make_bound_report(std::string name, std::string anchor, double lhs, Interval lhs_range,
                              double rhs, Interval rhs_range, bool structural,
                              const BoundOptions& options) {
  BoundReport r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.lhs = lhs;
  r.rhs = rhs;
  r.lhs_range = lhs_range;
  r.rhs_range = rhs_range;
  const double scale = std::max(1.0, std::abs(rhs));
  r.holds = lhs_range.lo <= rhs_range.hi + options.slack * scale;
  r.gap = rhs - lhs;
  const double spread =
      std::max(std::abs(rhs_range.hi - lhs_range.lo), std::abs(rhs_range.lo - lhs_range.hi));
  r.equality_numeric = spread <= options.eq_tol * scale;
  r.equality_structural = structural;
  return r;
}

void WeightedVector::validate(int t) const {
  double total = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x(i)) || x(i) < 0) throw ValidationError("weights must be finite and >= 0");
    total += norm == Norm::Sum ? x(i) : std::pow(x(i), t);
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw ValidationError(fmt::format("weight vector is not normalised (total {})", total));
}

CensusMode census_mode(std::string_view name) {
  static constexpr std::string_view kIff[] = {
      names::kNikiforov,           names::kTuran,
      names::kLocalizedTuran,      names::kLiuNing,
      names::kZykovSpectral,       names::kCliqueCountRho,
      names::kCliqueWeightedSum,   names::kVertexWeightedSum,
      names::kCliqueLocalZykov,    names::kVertexCountLocalZykov,
      names::kVertexWeightPower,   names::kVertexLocalZykov,
      names::kCliqueCountWeighted, names::kCliqueCountVertex,
      names::kVertexZykovComparison};
  return std::find(std::begin(kIff), std::end(kIff), name) != std::end(kIff) ? CensusMode::Iff
                                                                              : CensusMode::None;
}

// ---------------------------------------------------------------------------

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

namespace {

double log_binomial(int n, int k) {
  double r = 0.0;
  for (int i = 1; i <= k; ++i) r += std::log(static_cast<double>(n - k + i) / i);
  return r;
}

// C(alpha, t) / alpha^t, evaluated in the log domain for t >= 4.
double density_ratio(int alpha, int t) {
  if (alpha < t) return 0.0;
  if (t < 4) return binomial(alpha, t) / std::pow(alpha, t);
  return std::exp(log_binomial(alpha, t) - t * std::log(static_cast<double>(alpha)));
}

}  // namespace

double vertex_weight(int alpha, int t) {
  if (alpha < t) return 0.0;
  if (t < 4) return std::pow(density_ratio(alpha, t), 1.0 / (t - 1));
  return std::exp((log_binomial(alpha, t) - t * std::log(static_cast<double>(alpha))) / (t - 1));
}

double clique_coefficient(int alpha, int t) {
  if (alpha < t) throw ValidationError("clique_coefficient requires alpha >= t");
  return 1.0 / density_ratio(alpha, t);
}

// ---------------------------------------------------------------------------

BoundReport nikiforov_bound(const Graph& g, const CliqueCatalog& edges, const SpectralResult& rho2,
                            const BoundOptions& options) {
  require_matching(edges, rho2);
  const int omega = edges.omega;
  const double m = static_cast<double>(g.num_edges());
  const double rhs = omega >= 1 ? std::sqrt(2.0 * m * (1.0 - 1.0 / omega)) : 0.0;
  return make_bound_report(std::string(names::kNikiforov), "rho(G) <= sqrt(2 m (1 - 1/omega))",
                           rho2.rho, {rho2.lower, rho2.upper}, rhs, Interval::point(rhs),
                           classical_spectral_equality(g, omega), options);
}

BoundReport turan_edge_bound(const Graph& g, int omega, const BoundOptions& options) {
  const double n = g.num_vertices();
  const double m = static_cast<double>(g.num_edges());
  const double rhs = omega >= 1 ? (1.0 - 1.0 / omega) * n * n / 2.0 : 0.0;
  bool structural;
  if (m == 0) {
    structural = omega <= 1;
  } else {
    const auto st = complete_multipartite_partition(g);
    structural = st && st->isolated.empty() &&
                 static_cast<int>(st->partition.parts.size()) == omega && st->partition.regular();
  }
  return make_bound_report(std::string(names::kTuran), "m <= (1 - 1/omega) n^2 / 2", m,
                           Interval::point(m), rhs, Interval::point(rhs), structural, options);
}

BoundReport localized_turan_sum(const Graph& g, const CliqueCatalog& edges,
                                const BoundOptions& options) {
  if (edges.t != 2) throw ValidationError("localized_turan_sum needs the order-2 catalog");
  double lhs = 0.0;
  for (int a : edges.per_clique_alpha) lhs += static_cast<double>(a) / (a - 1);
  const double n = g.num_vertices();
  const double rhs = n * n / 2.0;
  bool structural = g.num_vertices() == 0;
  if (g.num_edges() > 0) {
    const auto st = complete_multipartite_partition(g);
    structural = st && st->isolated.empty() && st->partition.regular();
  }
  return make_bound_report(std::string(names::kLocalizedTuran),
                           "sum_e alpha(e)/(alpha(e)-1) <= n^2/2", lhs, Interval::point(lhs), rhs,
                           Interval::point(rhs), structural, options);
}

BoundReport liu_ning_bound(const Graph& g, const CliqueCatalog& edges, const SpectralResult& rho2,
                           const BoundOptions& options) {
  require_matching(edges, rho2);
  if (edges.t != 2) throw ValidationError("liu_ning_bound needs the order-2 catalog");
  double s = 0.0;
  for (int a : edges.per_clique_alpha) s += (a - 1.0) / a;
  const double rhs = std::sqrt(2.0 * s);
  return make_bound_report(std::string(names::kLiuNing),
                           "rho(G) <= sqrt(2 sum_e (alpha(e)-1)/alpha(e))", rho2.rho,
                           {rho2.lower, rho2.upper}, rhs, Interval::point(rhs),
                           classical_spectral_equality(g, edges.omega), options);
}

// ---------------------------------------------------------------------------

BoundReport zykov_spectral_bound(const Graph&, const CliqueCatalog& cat, const SpectralResult& rho,
                                 const EqualityCase& eq, const BoundOptions& options) {
  require_applicable(cat);
  require_matching(cat, rho);
  const int t = cat.t;
  const double w = cat.omega;
  const double count = static_cast<double>(cat.cliques.size());
  const double rhs = t / w * std::pow(binomial(cat.omega, t), 1.0 / t) * std::pow(count, (t - 1.0) / t);
  return make_bound_report(std::string(names::kZykovSpectral),
                           "rho_t <= (t/omega) C(omega,t)^(1/t) |C_t|^((t-1)/t)", rho.rho,
                           {rho.lower, rho.upper}, rhs, Interval::point(rhs),
                           multipartite_or_eq_t(eq), options);
}

BoundReport clique_count_vs_rho(const Graph& g, const CliqueCatalog& cat, const SpectralResult& rho,
                                const BoundOptions& options) {
  require_applicable(cat);
  require_matching(cat, rho);
  const double scale = static_cast<double>(g.num_vertices()) / cat.t;
  const double lhs = static_cast<double>(cat.cliques.size());
  const auto& c = cat.per_vertex_count;
  const bool uniform = std::adjacent_find(c.begin(), c.end(), std::not_equal_to<>()) == c.end();
  return make_bound_report(std::string(names::kCliqueCountRho), "|C_t| <= (n/t) rho_t", lhs,
                           Interval::point(lhs), scale * rho.rho,
                           {scale * rho.lower, scale * rho.upper}, uniform, options);
}

double multipartite_rho_formula(std::span<const int> sizes) {
  if (sizes.size() < 2) throw ValidationError("multipartite_rho_formula needs at least two parts");
  const double t = static_cast<double>(sizes.size());
  double log_prod = 0.0;
  for (int s : sizes) {
    if (s <= 0) throw ValidationError("part sizes must be positive");
    log_prod += std::log(static_cast<double>(s));
  }
  return std::exp(log_prod * (t - 1.0) / t);
}

// ---------------------------------------------------------------------------

bool weighted_equality_structure(const Graph& g, const Eigen::VectorXd& x, int omega) {
  std::vector<Vertex> support;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (x(v) > 0) support.push_back(v);
  if (support.empty() || omega < 1) return false;
  const auto sub = induced_subgraph(g, support);
  const auto st = complete_multipartite_partition(sub.graph);
  if (!st || !st->isolated.empty()) return false;
  if (static_cast<int>(st->partition.parts.size()) != omega) return false;
  for (const auto& part : st->partition.parts) {
    double mass = 0.0;
    for (Vertex local : part) mass += x(sub.original[local]);
    if (std::abs(mass - 1.0 / omega) > kMassTol) return false;
  }
  return true;
}

BoundReport maclaurin_check(const Graph& g, const WeightedVector& x, int s, int q,
                            const BoundOptions& options) {
  const CliqueCatalog cat_q = build_catalog(g, q);
  if (s < 1 || s > q || q > cat_q.omega)
    throw ValidationError(
        fmt::format("maclaurin_check requires 1 <= s <= q <= omega (s={}, q={}, omega={})", s, q,
                    cat_q.omega));
  if (x.x.size() != g.num_vertices()) throw ValidationError("weight vector length mismatch");
  for (Eigen::Index i = 0; i < x.x.size(); ++i)
    if (!std::isfinite(x.x(i)) || x.x(i) < 0) throw ValidationError("weights must be >= 0");

  double lhs = 0.0;
  for (std::size_t k = 0; k < cat_q.cliques.size(); ++k) {
    const int a = cat_q.per_clique_alpha[k];
    lhs += std::pow(binomial(a, s), static_cast<double>(q) / s) / binomial(a, q) *
           product_over(cat_q.cliques[k], x.x);
  }
  const CliqueList small = enumerate_t_cliques(g, s);
  double h = 0.0;
  for (std::size_t k = 0; k < small.size(); ++k) h += product_over(small[k], x.x);
  const double rhs = std::pow(h, static_cast<double>(q) / s);

  // Equality structure is only characterised for s = 1.
  bool structural = false;
  if (s == 1) {
    std::vector<Vertex> support;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (x.x(v) > 0) support.push_back(v);
    if (!support.empty()) {
      const auto sub = induced_subgraph(g, support);
      const auto st = complete_multipartite_partition(sub.graph);
      if (st && st->isolated.empty()) {
        const int parts = static_cast<int>(st->partition.parts.size());
        std::vector<double> mass;
        for (const auto& part : st->partition.parts) {
          double m = 0.0;
          for (Vertex local : part) m += x.x(sub.original[local]);
          mass.push_back(m);
        }
        const auto [lo, hi] = std::minmax_element(mass.begin(), mass.end());
        structural = parts >= q && *hi - *lo <= kMassTol;
        std::vector<bool> in_support(static_cast<std::size_t>(g.num_vertices()), false);
        for (Vertex v : support) in_support[v] = true;
        for (std::size_t k = 0; structural && k < cat_q.cliques.size(); ++k) {
          const auto c = cat_q.cliques[k];
          if (std::all_of(c.begin(), c.end(), [&](Vertex v) { return in_support[v]; }))
            structural = cat_q.per_clique_alpha[k] == parts;
        }
      }
    }
  }
  return make_bound_report(std::string(names::kMaclaurin),
                           fmt::format("f_(s={},q={})(x) <= h_s(x)^(q/s)", s, q), lhs,
                           Interval::point(lhs), rhs, Interval::point(rhs), structural, options);
}

BoundReport weighted_clique_sum(const Graph& g, const CliqueCatalog& cat, const WeightedVector& x,
                                const BoundOptions& options) {
  require_order(cat);
  if (x.norm != WeightedVector::Norm::Sum) throw ValidationError("weights must be sum-normalised");
  x.validate();
  if (x.x.size() != g.num_vertices()) throw ValidationError("weight vector length mismatch");
  double lhs = 0.0;
  for (std::size_t k = 0; k < cat.cliques.size(); ++k)
    lhs += clique_coefficient(cat.per_clique_alpha[k], cat.t) * product_over(cat.cliques[k], x.x);
  return make_bound_report(std::string(names::kCliqueWeightedSum),
                           "sum_I alpha(I)^t / C(alpha(I),t) x_I <= 1", lhs, Interval::point(lhs),
                           1.0, Interval::point(1.0),
                           cat.t <= cat.omega && weighted_equality_structure(g, x.x, cat.omega), options);
}

BoundReport vertex_weighted_sum(const Graph& g, const CliqueCatalog& cat, const WeightedVector& x,
                                const BoundOptions& options) {
  require_order(cat);
  if (x.norm != WeightedVector::Norm::Sum) throw ValidationError("weights must be sum-normalised");
  x.validate();
  if (x.x.size() != g.num_vertices()) throw ValidationError("weight vector length mismatch");
  double lhs = 0.0;
  for (std::size_t k = 0; k < cat.cliques.size(); ++k) {
    double coeff = 0.0;
    for (Vertex v : cat.cliques[k]) coeff += clique_coefficient(cat.per_vertex_alpha[v], cat.t);
    lhs += coeff / cat.t * product_over(cat.cliques[k], x.x);
  }
  return make_bound_report(std::string(names::kVertexWeightedSum),
                           "sum_I (1/t) sum_(v in I) alpha(v)^t / C(alpha(v),t) x_I <= 1", lhs,
                           Interval::point(lhs), 1.0, Interval::point(1.0),
                           cat.t <= cat.omega && weighted_equality_structure(g, x.x, cat.omega), options);
}

// ---------------------------------------------------------------------------

double clique_local_zykov_rho_bound(const CliqueCatalog& cat) {
  require_applicable(cat);
  return cat.t * std::pow(sum_clique_weights(cat), (cat.t - 1.0) / cat.t);
}

BoundReport clique_local_zykov(const Graph&, const CliqueCatalog& cat, const SpectralResult& rho,
                               const EqualityCase& eq, const BoundOptions& options) {
  require_applicable(cat);
  require_matching(cat, rho);
  const int t = cat.t;
  auto lhs_of = [t](double r) { return std::pow(r / t, t); };
  const double rhs = std::pow(sum_clique_weights(cat), t - 1);
  return make_bound_report(std::string(names::kCliqueLocalZykov),
                           "(rho_t/t)^t <= (sum_I (C(alpha(I),t) alpha(I)^-t)^(1/(t-1)))^(t-1)",
                           lhs_of(rho.rho), map_increasing(rho, lhs_of), rhs, Interval::point(rhs),
                           multipartite_or_eq_t(eq), options);
}

BoundReport vertex_count_local_zykov(const Graph&, const CliqueCatalog& cat,
                                     const SpectralResult& rho, const EqualityCase& eq,
                                     const BoundOptions& options) {
  require_applicable(cat);
  require_matching(cat, rho);
  const int t = cat.t;
  auto lhs_of = [t](double r) { return std::pow(r, t); };
  const double rhs = t * std::pow(sum_count_vertex_weights(cat), t - 1);
  return make_bound_report(
      std::string(names::kVertexCountLocalZykov),
      "rho_t^t <= t (sum_v c_t(v) (C(alpha(v),t) alpha(v)^-t)^(1/(t-1)))^(t-1)", lhs_of(rho.rho),
      map_increasing(rho, lhs_of), rhs, Interval::point(rhs), multipartite_or_eq_t(eq), options);
}

BoundReport vertex_weight_power(const Graph&, const CliqueCatalog& cat, const EqualityCase& eq,
                                const BoundOptions& options) {
  require_order(cat);
  const double lhs = sum_count_vertex_weights(cat) / cat.t;
  const double rhs = std::pow(sum_vertex_weights(cat), cat.t);
  return make_bound_report(std::string(names::kVertexWeightPower),
                           "sum_v (c_t(v)/t) w_v <= (sum_v w_v)^t, w_v = (C(alpha(v),t) "
                           "alpha(v)^-t)^(1/(t-1))",
                           lhs, Interval::point(lhs), rhs, Interval::point(rhs), regular(eq),
                           options);
}

BoundReport vertex_local_zykov(const Graph&, const CliqueCatalog& cat, const SpectralResult& rho,
                               const EqualityCase& eq, const BoundOptions& options) {
  require_applicable(cat);
  require_matching(cat, rho);
  const double rhs = cat.t * std::pow(sum_vertex_weights(cat), cat.t - 1);
  return make_bound_report(std::string(names::kVertexLocalZykov),
                           "rho_t <= t (sum_v w_v)^(t-1)", rho.rho, {rho.lower, rho.upper}, rhs,
                           Interval::point(rhs), regular(eq), options);
}

BoundReport clique_count_weighted(const Graph& g, const CliqueCatalog& cat, const EqualityCase& eq,
                                  const BoundOptions& options) {
  require_applicable(cat);
  const double lhs = static_cast<double>(cat.cliques.size());
  const double rhs = cor35_rhs(g, cat);
  return make_bound_report(std::string(names::kCliqueCountWeighted),
                           "|C_t| <= n ((1/t) sum_v c_t(v) w_v)^((t-1)/t)", lhs,
                           Interval::point(lhs), rhs, Interval::point(rhs), regular_spanning(eq), options);
}

BoundReport clique_count_vertex(const Graph& g, const CliqueCatalog& cat, const EqualityCase& eq,
                                const BoundOptions& options) {
  require_applicable(cat);
  const double lhs = static_cast<double>(cat.cliques.size());
  const double rhs = cor36_rhs(g, cat);
  return make_bound_report(std::string(names::kCliqueCountVertex),
                           "|C_t| <= n (sum_v w_v)^(t-1)", lhs, Interval::point(lhs), rhs,
                           Interval::point(rhs), regular_spanning(eq), options);
}

std::optional<BoundReport> vertex_zykov_comparison(const Graph& g, const CliqueCatalog& cat,
                                                   const BoundOptions& options) {
  require_applicable(cat);
  if (cat.t < 3) return std::nullopt;
  const int t = cat.t;
  const double lhs = cor36_rhs(g, cat);
  double ratio_sum = 0.0;
  for (int a : cat.per_vertex_alpha) ratio_sum += density_ratio(a, t);
  const double rhs = std::pow(static_cast<double>(g.num_vertices()), t - 1) * ratio_sum;
  const auto& alpha = cat.per_vertex_alpha;
  const bool homogeneous =
      std::adjacent_find(alpha.begin(), alpha.end(), std::not_equal_to<>()) == alpha.end();
  return make_bound_report(std::string(names::kVertexZykovComparison),
                           "n (sum_v w_v)^(t-1) <= n^(t-1) sum_v C(alpha(v),t) alpha(v)^-t", lhs,
                           Interval::point(lhs), rhs, Interval::point(rhs), homogeneous, options);
}

std::vector<BoundReport> chain_checks(const Graph& g, const CliqueCatalog& cat,
                                      const BoundOptions& options) {
  require_applicable(cat);
  const int t = cat.t;
  const double clique_side = std::pow(sum_clique_weights(cat), t - 1);
  const double vertex_side = std::pow(sum_count_vertex_weights(cat) / t, t - 1);
  const double omega_side = binomial(cat.omega, t) * std::pow(cat.omega, -t) *
                            std::pow(static_cast<double>(cat.cliques.size()), t - 1);
  const double c35 = cor35_rhs(g, cat);
  const double c36 = cor36_rhs(g, cat);
  return {
      make_bound_report(std::string(names::kChainCliqueVertex),
                        "(sum_I w_I)^(t-1) <= ((1/t) sum_v c_t(v) w_v)^(t-1)", clique_side,
                        Interval::point(clique_side), vertex_side, Interval::point(vertex_side),
                        false, options),
      make_bound_report(std::string(names::kChainCliqueOmega),
                        "(sum_I w_I)^(t-1) <= C(omega,t) omega^-t |C_t|^(t-1)", clique_side,
                        Interval::point(clique_side), omega_side, Interval::point(omega_side),
                        false, options),
      make_bound_report(std::string(names::kChainCountWeighted),
                        "n ((1/t) sum_v c_t(v) w_v)^((t-1)/t) <= n (sum_v w_v)^(t-1)", c35,
                        Interval::point(c35), c36, Interval::point(c36), false, options),
  };
}

// ---------------------------------------------------------------------------

std::vector<BoundReport> classical_bounds(const Graph& g, const CliqueCatalog& edges,
                                          const SpectralResult* rho2, const BoundOptions& options) {
  std::vector<BoundReport> out;
  out.push_back(turan_edge_bound(g, edges.omega, options));
  out.push_back(localized_turan_sum(g, edges, options));
  if (rho2 != nullptr) {
    out.push_back(nikiforov_bound(g, edges, *rho2, options));
    out.push_back(liu_ning_bound(g, edges, *rho2, options));
  }
  return out;
}

std::vector<BoundReport> localized_bounds(const Graph& g, const CliqueCatalog& cat,
                                          const SpectralResult* rho, const EqualityCase& eq,
                                          const BoundOptions& options) {
  require_applicable(cat);
  std::vector<BoundReport> out;
  if (rho != nullptr) {
    out.push_back(clique_count_vs_rho(g, cat, *rho, options));
    out.push_back(zykov_spectral_bound(g, cat, *rho, eq, options));
    out.push_back(clique_local_zykov(g, cat, *rho, eq, options));
    out.push_back(vertex_count_local_zykov(g, cat, *rho, eq, options));
    out.push_back(vertex_local_zykov(g, cat, *rho, eq, options));
  }
  out.push_back(vertex_weight_power(g, cat, eq, options));
  out.push_back(clique_count_weighted(g, cat, eq, options));
  out.push_back(clique_count_vertex(g, cat, eq, options));
  if (auto remark = vertex_zykov_comparison(g, cat, options)) out.push_back(std::move(*remark));
  for (auto& c : chain_checks(g, cat, options)) out.push_back(std::move(c));
  return out;
}

BoundSuite evaluate_bound_suite(const Graph& g, int t, const BoundSuiteOptions& options) {
  if (t < 2) throw ValidationError("bound suite requires t >= 2");
  BoundSuite suite;
  suite.graph_id = options.graph_id;
  suite.n = g.num_vertices();
  suite.m = g.num_edges();
  suite.t = t;

  const CliqueCatalog edges = build_catalog(g, 2);
  suite.omega = edges.omega;
  std::optional<SpectralResult> rho2;
  if (options.spectral_bounds) rho2 = spectral_radius(edges, options.spectral);
  suite.bounds = classical_bounds(g, edges, rho2 ? &*rho2 : nullptr, options.bounds);

  if (t > suite.omega) {
    suite.notes.push_back(fmt::format(
        "t = {} exceeds the clique number {}; only clique-free rows are shown", t, suite.omega));
    return suite;
  }

  const CliqueCatalog cat = t == 2 ? edges : build_catalog(g, t);
  const EqualityCase eq = equality_case_predicate(g, t);
  suite.kind = eq.kind;
  if (options.spectral_bounds) suite.spectrum = t == 2 ? *rho2 : spectral_radius(cat, options.spectral);
  for (auto& r : localized_bounds(g, cat, suite.spectrum ? &*suite.spectrum : nullptr, eq,
                                  options.bounds))
    suite.bounds.push_back(std::move(r));

  if (suite.n > 0) {
    WeightedVector uniform{Eigen::VectorXd::Constant(suite.n, 1.0 / suite.n),
                           WeightedVector::Norm::Sum};
    suite.bounds.push_back(weighted_clique_sum(g, cat, uniform, options.bounds));
    suite.bounds.push_back(vertex_weighted_sum(g, cat, uniform, options.bounds));
  }
  return suite;
}

}  // namespace clique_spectra

#include "clique_spectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "clique_spectra/error.hpp"

namespace clique_spectra {

double CliqueTensorView::entry(std::span<const Vertex> index) const {
  const int t = order();
  if (static_cast<int>(index.size()) != t) throw ValidationError("entry: index length != order");
  std::vector<Vertex> sorted(index.begin(), index.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0.0;
  for (std::size_t k = 0; k < cliques_->size(); ++k) {
    const auto c = (*cliques_)[k];
    if (std::equal(c.begin(), c.end(), sorted.begin())) return 1.0 / std::tgamma(t);
  }
  return 0.0;
}

SpectralResult power_iteration(const CliqueTensorView& view, std::span<const Vertex> component,
                               const SpectralOptions& options) {
  if (component.empty()) throw ValidationError("power_iteration: empty component");
  const int n = view.dimension();
  const int t = view.order();
  if (t < 2) throw ValidationError("power_iteration: order must be at least 2");

  std::vector<int> local(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < component.size(); ++i) {
    const Vertex v = component[i];
    if (v < 0 || v >= n) throw ValidationError("power_iteration: vertex out of range");
    local[v] = static_cast<int>(i);
  }

  CliqueList sub(t);
  std::vector<Vertex> mapped(static_cast<std::size_t>(t));
  const auto& cliques = view.cliques();
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    const auto c = cliques[k];
    const auto inside = std::count_if(c.begin(), c.end(), [&](Vertex v) { return local[v] >= 0; });
    if (inside == 0) continue;
    if (inside != t)
      throw ValidationError("power_iteration: component splits a clique; pass a whole component");
    std::transform(c.begin(), c.end(), mapped.begin(), [&](Vertex v) { return local[v]; });
    sub.push_back(mapped);
  }
  if (sub.empty()) throw ValidationError("power_iteration: component holds no clique");

  const int m = static_cast<int>(component.size());
  const CliqueTensorView local_view(sub, m);
  const double inv_root = 1.0 / (t - 1);

  Eigen::VectorXd x = Eigen::VectorXd::Constant(m, std::pow(static_cast<double>(m), -1.0 / t));
  Eigen::VectorXd ax, xp;
  double lo = 0.0, hi = 0.0;
  int iter = 0;
  bool converged = false;
  for (;; ++iter) {
    ax = apply_unchecked(local_view, x);
    xp = x.array().pow(t - 1).matrix();
    const Eigen::ArrayXd ratio = ax.array() / xp.array();
    lo = ratio.minCoeff();
    hi = ratio.maxCoeff();
    if (hi - lo <= options.tol) {
      converged = true;
      break;
    }
    if (iter >= options.max_iter) break;
    x = (ax + options.shift * xp).array().pow(inv_root).matrix();
    x /= std::pow(x.array().pow(t).sum(), 1.0 / t);
  }

  SpectralResult r;
  r.t = t;
  r.lower = lo;
  r.upper = hi;
  r.rho = std::clamp(x.dot(ax), lo, hi);
  r.iterations = iter;
  r.converged = converged;
  r.component.assign(component.begin(), component.end());
  r.vector = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i) r.vector(component[static_cast<std::size_t>(i)]) = x(i);
  return r;
}

namespace {

SpectralResult radius_from_cliques(const CliqueList& cliques, int n, int t,
                                   const SpectralOptions& options) {
  SpectralResult best;
  best.t = t;
  best.vector = Eigen::VectorXd::Zero(n);
  const auto hyper = hypergraph_components(cliques, n);
  if (hyper.components.empty()) return best;

  const CliqueTensorView view(cliques, n);
  int total_iterations = 0;
  bool all_converged = true;
  double lower = 0.0, upper = 0.0;
  bool first = true;
  for (const auto& comp : hyper.components) {
    auto r = power_iteration(view, comp, options);
    total_iterations += r.iterations;
    all_converged = all_converged && r.converged;
    lower = std::max(lower, r.lower);
    upper = std::max(upper, r.upper);
    if (first || r.rho > best.rho) best = std::move(r);
    first = false;
  }
  best.lower = lower;
  best.upper = upper;
  best.rho = std::clamp(best.rho, lower, upper);
  best.iterations = total_iterations;
  best.converged = all_converged;
  return best;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, int t, const SpectralOptions& options) {
  if (t < 2) throw ValidationError("spectral_radius requires t >= 2, got " + std::to_string(t));
  return radius_from_cliques(enumerate_t_cliques(g, t), g.num_vertices(), t, options);
}

SpectralResult spectral_radius(const CliqueCatalog& catalog, const SpectralOptions& options) {
  if (catalog.t < 2) throw ValidationError("spectral_radius requires t >= 2");
  return radius_from_cliques(catalog.cliques, catalog.num_vertices(), catalog.t, options);
}

}  // namespace clique_spectra

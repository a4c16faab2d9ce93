#include "clique_spectra/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "clique_spectra/error.hpp"

namespace clique_spectra {

namespace {

// Every t-subset whose members are pairwise adjacent, by exhaustive scan.
std::vector<std::vector<int>> brute_force_cliques(const Graph& g, int t) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> out;
  if (t > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    bool clique = true;
    for (int a = 0; a < t && clique; ++a)
      for (int b = a + 1; b < t && clique; ++b) clique = g.adjacent(idx[a], idx[b]);
    if (clique) out.push_back(idx);
    int i = t - 1;
    while (i >= 0 && idx[i] == n - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

double objective(const std::vector<std::vector<int>>& subsets, const std::vector<double>& x,
                 int t) {
  double sum = 0.0;
  for (const auto& s : subsets) {
    double p = 1.0;
    for (int v : s) p *= x[v];
    sum += p;
  }
  return t * sum;
}

void normalise(std::vector<double>& x, int t) {
  double s = 0.0;
  for (double v : x) s += std::pow(v, t);
  const double scale = std::pow(s, -1.0 / t);
  for (double& v : x) v *= scale;
}

}  // namespace

double oracle_spectral_radius(const Graph& g, int t, int restarts, std::uint64_t seed) {
  if (t < 2) throw ValidationError("oracle requires t >= 2");
  const int n = g.num_vertices();
  const auto subsets = brute_force_cliques(g, t);
  if (subsets.empty()) return 0.0;

  constexpr double kShift = 0.5;
  constexpr int kMaxSteps = 20000;
  std::mt19937_64 rng(seed);
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  double best = 0.0;
  std::vector<double> x(static_cast<std::size_t>(n)), grad(static_cast<std::size_t>(n));
  for (int r = 0; r < std::max(restarts, 1); ++r) {
    // Even restarts start dense; odd restarts draw a random support, which
    // lets some starts sit inside a single clique component.
    bool any = false;
    for (int i = 0; i < n; ++i) {
      const bool keep = (r % 2 == 0) || uniform() < 0.5;
      x[i] = keep ? 0.05 + uniform() : 0.0;
      any = any || keep;
    }
    if (!any) x[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n))] = 1.0;
    normalise(x, t);

    for (int step = 0; step < kMaxSteps; ++step) {
      best = std::max(best, objective(subsets, x, t));
      // Partial derivatives of sum_I x_I, i.e. the tensor-vector product.
      std::fill(grad.begin(), grad.end(), 0.0);
      for (const auto& s : subsets)
        for (int i : s) {
          double p = 1.0;
          for (int j : s)
            if (j != i) p *= x[j];
          grad[i] += p;
        }
      double change = 0.0;
      std::vector<double> next(x.size());
      for (std::size_t i = 0; i < x.size(); ++i)
        next[i] = std::pow(grad[i] + kShift * std::pow(x[i], t - 1), 1.0 / (t - 1));
      normalise(next, t);
      for (std::size_t i = 0; i < x.size(); ++i) change = std::max(change, std::abs(next[i] - x[i]));
      x.swap(next);
      if (change < 1e-15) break;
    }
    best = std::max(best, objective(subsets, x, t));
  }
  return best;
}

}  // namespace clique_spectra

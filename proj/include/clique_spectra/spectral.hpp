#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "clique_spectra/cliques.hpp"
#include "clique_spectra/tensor.hpp"

namespace clique_spectra {

struct SpectralOptions {
  double tol = 1e-10;  // absolute width of the Collatz-Wielandt enclosure
  int max_iter = 100000;
  double shift = 1.0;
};

/// Spectral radius estimate with its Collatz-Wielandt enclosure.
struct SpectralResult {
  int t = 0;
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  Eigen::VectorXd vector;  // nonnegative, sum x_i^t = 1, supported on `component`
  int iterations = 0;
  bool converged = true;
  std::vector<Vertex> component;
};

/// Shifted higher-order power iteration on one clique-hypergraph component of
/// the tensor. Throws ValidationError for an empty component or one holding
/// no clique.
SpectralResult power_iteration(const CliqueTensorView& view, std::span<const Vertex> component,
                               const SpectralOptions& options = {});

/// rho_t(G): maximum over clique components; zero when G has no t-clique.
SpectralResult spectral_radius(const Graph& g, int t, const SpectralOptions& options = {});
SpectralResult spectral_radius(const CliqueCatalog& catalog, const SpectralOptions& options = {});

}  // namespace clique_spectra

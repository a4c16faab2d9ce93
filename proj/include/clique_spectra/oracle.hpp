#pragma once

#include <cstdint>

#include "clique_spectra/graph.hpp"

namespace clique_spectra {

/// Independent multistart maximisation of t * sum_I x_I over the nonnegative
/// t-norm sphere. Enumerates t-subsets directly and never touches the power
/// iteration or the clique engine; intended as a cross-check for small n.
double oracle_spectral_radius(const Graph& g, int t, int restarts, std::uint64_t seed);

}  // namespace clique_spectra

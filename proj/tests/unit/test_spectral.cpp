#include "doctest.h"

#include <array>
#include <cmath>
#include <random>

#include "clique_spectra/error.hpp"
#include "clique_spectra/oracle.hpp"
#include "clique_spectra/spectral.hpp"
#include "clique_spectra/tensor.hpp"
#include "oracles.hpp"

using namespace clique_spectra;
using doctest::Approx;

namespace {

Graph diamond() { return complete_multipartite(std::vector<int>{1, 1, 2}); }

// Residual of A x^{t-1} = rho x^{[t-1]} on the support of x.
double eigen_residual(const Graph& g, const SpectralResult& r) {
  const CliqueList cliques = enumerate_t_cliques(g, r.t);
  const CliqueTensorView view(cliques, g.num_vertices());
  const Eigen::VectorXd ax = apply(view, r.vector);
  double worst = 0.0;
  for (Vertex v : r.component)
    worst = std::max(worst, std::abs(ax(v) - r.rho * std::pow(r.vector(v), r.t - 1)));
  return worst;
}

}  // namespace

TEST_CASE("tensor entries are symmetric with value 1/(t-1)!") {
  const CliqueList cliques = enumerate_t_cliques(diamond(), 3);
  const CliqueTensorView view(cliques, 4);
  CHECK(view.order() == 3);
  CHECK(view.dimension() == 4);
  CHECK(view.entry(std::vector<Vertex>{0, 1, 2}) == Approx(0.5));
  CHECK(view.entry(std::vector<Vertex>{2, 0, 1}) == Approx(0.5));
  CHECK(view.entry(std::vector<Vertex>{3, 1, 0}) == Approx(0.5));
  CHECK(view.entry(std::vector<Vertex>{0, 2, 3}) == 0.0);
  CHECK(view.entry(std::vector<Vertex>{0, 0, 1}) == 0.0);
  CHECK_THROWS_AS(view.entry(std::vector<Vertex>{0, 1}), ValidationError);
}

TEST_CASE("tensor apply against the entrywise definition") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracles::random_graph(rng, 6, 0.7);
    const int t = 2 + trial % 3;
    const CliqueList cliques = enumerate_t_cliques(g, t);
    const CliqueTensorView view(cliques, 6);
    Eigen::VectorXd x(6);
    for (int i = 0; i < 6; ++i) x(i) = unif(rng);
    const Eigen::VectorXd y = apply(view, x);
    // Sum a_{i i_2 ... i_t} x_{i_2} ... x_{i_t} over all index tuples.
    for (int i = 0; i < 6; ++i) {
      double expected = 0.0;
      std::vector<Vertex> idx(static_cast<std::size_t>(t), 0);
      idx[0] = i;
      const int tail = t - 1;
      const int combos = static_cast<int>(std::pow(6, tail));
      for (int code = 0; code < combos; ++code) {
        int c = code;
        double prod = 1.0;
        for (int j = 1; j < t; ++j) {
          idx[j] = c % 6;
          c /= 6;
          prod *= x(idx[j]);
        }
        expected += view.entry(idx) * prod;
      }
      CHECK(y(i) == Approx(expected).epsilon(1e-12));
    }
    CHECK(x.dot(y) == Approx(clique_form(view, x)).epsilon(1e-12));
    std::vector<double> xs(x.data(), x.data() + 6);
    CHECK(clique_form(view, x) == Approx(oracles::clique_form(g, t, xs)).epsilon(1e-12));
  }
}

TEST_CASE("tensor functions accept Eigen expressions and other scalars") {
  const CliqueList cliques = enumerate_t_cliques(complete_graph(3), 2);
  const CliqueTensorView view(cliques, 3);
  const Eigen::VectorXd x = Eigen::VectorXd::Constant(3, 2.0);
  CHECK(apply(view, x * 0.5) == Eigen::VectorXd::Constant(3, 2.0));
  const Eigen::VectorXf xf = Eigen::VectorXf::Ones(3);
  CHECK(apply(view, xf)(0) == doctest::Approx(2.0f));
  CHECK(power_sum(x.array().sqrt().matrix(), 2) == Approx(6.0));
}

TEST_CASE("input validation") {
  const CliqueList cliques = enumerate_t_cliques(complete_graph(3), 3);
  const CliqueTensorView view(cliques, 3);
  CHECK_THROWS_AS(apply(view, Eigen::VectorXd::Ones(4)), ValidationError);
  Eigen::VectorXd neg = Eigen::VectorXd::Ones(3);
  neg(1) = -0.1;
  CHECK_THROWS_AS(apply(view, neg), ValidationError);
  neg(1) = std::nan("");
  CHECK_THROWS_AS(apply(view, neg), ValidationError);
  CHECK_THROWS_AS(rayleigh(view, Eigen::VectorXd::Ones(3)), ValidationError);
  const Eigen::VectorXd unit = Eigen::VectorXd::Constant(3, std::pow(1.0 / 3.0, 1.0 / 3.0));
  CHECK(rayleigh(view, unit) == Approx(1.0));
  CHECK_THROWS_AS(spectral_radius(complete_graph(3), 1), ValidationError);
  const std::vector<Vertex> none;
  CHECK_THROWS_AS(power_iteration(view, none), ValidationError);
  const std::vector<Vertex> split{0, 1};
  CHECK_THROWS_AS(power_iteration(view, split), ValidationError);
}

TEST_CASE("closed forms") {
  CHECK(spectral_radius(turan_graph(6, 3), 2).rho == Approx(4.0).epsilon(1e-10));
  CHECK(spectral_radius(turan_graph(6, 3), 3).rho == Approx(4.0).epsilon(1e-10));
  CHECK(spectral_radius(diamond(), 3).rho == Approx(std::cbrt(4.0)).epsilon(1e-10));
  CHECK(spectral_radius(diamond(), 2).rho == Approx((1 + std::sqrt(17.0)) / 2).epsilon(1e-10));
  CHECK(spectral_radius(complete_graph(4), 3).rho == Approx(3.0).epsilon(1e-10));
  CHECK(spectral_radius(complete_graph(5), 5).rho == Approx(1.0).epsilon(1e-10));
  CHECK(spectral_radius(petersen_graph(), 2).rho == Approx(3.0).epsilon(1e-10));
  CHECK(spectral_radius(cycle_graph(5), 2).rho == Approx(2.0).epsilon(1e-10));
  CHECK(spectral_radius(path_graph(3), 2).rho == Approx(std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("graphs without t-cliques have radius zero") {
  const SpectralResult r = spectral_radius(cycle_graph(5), 3);
  CHECK(r.rho == 0.0);
  CHECK(r.lower == 0.0);
  CHECK(r.upper == 0.0);
  CHECK(r.component.empty());
  CHECK(r.converged);
  CHECK(spectral_radius(Graph(4), 2).rho == 0.0);
}

TEST_CASE("disconnected graphs take the largest component") {
  const Graph g = disjoint_union(complete_graph(3), complete_graph(4));
  const SpectralResult r = spectral_radius(g, 3);
  CHECK(r.rho == Approx(3.0).epsilon(1e-10));
  CHECK(r.component == std::vector<Vertex>{3, 4, 5, 6});
  CHECK(r.vector.head(3).isZero());
}

TEST_CASE("a capped run reports non-convergence with a valid enclosure") {
  std::mt19937_64 rng(4);
  const Graph g = oracles::random_graph(rng, 12, 0.5);
  SpectralOptions opts;
  opts.max_iter = 1;
  opts.tol = 1e-14;
  const SpectralResult r = spectral_radius(g, 2, opts);
  const double exact = oracles::eigen_rho(g);
  CHECK_FALSE(r.converged);
  CHECK(r.lower <= exact + 1e-12);
  CHECK(r.upper >= exact - 1e-12);
}

TEST_CASE("property: enclosure, normalisation and eigen-equation") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = oracles::random_graph(rng, n, std::array{0.4, 0.6, 0.85}[trial % 3]);
    for (int t = 2; t <= 4; ++t) {
      const SpectralResult r = spectral_radius(g, t);
      CHECK(r.converged);
      CHECK(r.lower <= r.rho);
      CHECK(r.rho <= r.upper);
      CHECK(r.upper - r.lower <= 1e-10 * std::max(1.0, r.rho) + 1e-12);
      if (r.component.empty()) continue;
      CHECK(power_sum(r.vector, t) == Approx(1.0).epsilon(1e-12));
      CHECK(r.vector.minCoeff() >= 0.0);
      CHECK(eigen_residual(g, r) <= 1e-8);
      if (t == 2) CHECK(r.rho == Approx(oracles::eigen_rho(g)).epsilon(1e-9));
    }
  }
}

TEST_CASE("property: variational oracle agrees and is a lower bound") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = oracles::random_graph(rng, n, 0.7);
    for (int t = 2; t <= 4; ++t) {
      const SpectralResult r = spectral_radius(g, t);
      const double o = oracle_spectral_radius(g, t, 8, rng());
      CHECK(o <= r.upper + 1e-12);
      CHECK(std::abs(o - r.rho) <= 1e-6);
    }
  }
  CHECK(oracle_spectral_radius(cycle_graph(5), 3, 4, 1) == 0.0);
}

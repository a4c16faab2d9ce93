#include "doctest.h"

#include <array>
#include <random>

#include "clique_spectra/cliques.hpp"
#include "clique_spectra/error.hpp"
#include "oracles.hpp"

using namespace clique_spectra;

namespace {

Graph diamond() { return complete_multipartite(std::vector<int>{1, 1, 2}); }

// K_4 on {0,1,2,3} sharing vertex 3 with the triangle {3,4,5}.
Graph k4_glued_triangle() {
  Graph g = complete_graph(6);
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 4; v < 6; ++v) g.remove_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("enumeration") {
  const Graph d = diamond();
  CHECK(enumerate_t_cliques(d, 3).to_vectors() ==
        std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 1, 3}});
  CHECK(enumerate_t_cliques(d, 1).size() == 4);
  CHECK(enumerate_t_cliques(d, 4).empty());
  CHECK(enumerate_t_cliques(complete_graph(5), 4).size() == 5);
  CHECK(enumerate_t_cliques(cycle_graph(5), 3).empty());
  CHECK_THROWS_AS(enumerate_t_cliques(d, 0), ValidationError);
}

TEST_CASE("clique numbers and local orders") {
  CHECK(max_clique(Graph(0)) == 0);
  CHECK(max_clique(Graph(3)) == 1);
  CHECK(max_clique(petersen_graph()) == 2);
  CHECK(max_clique(turan_graph(12, 4)) == 4);
  CHECK(max_clique(k4_glued_triangle()) == 4);

  const Graph g = k4_glued_triangle();
  CHECK(alpha_vertex(g, 0) == 4);
  CHECK(alpha_vertex(g, 3) == 4);
  CHECK(alpha_vertex(g, 4) == 3);
  CHECK(alpha_clique(g, std::vector<Vertex>{3, 4}) == 3);
  CHECK(alpha_clique(g, std::vector<Vertex>{0, 3}) == 4);
  CHECK_THROWS_AS(alpha_clique(g, std::vector<Vertex>{0, 4}), ValidationError);

  VertexSet within(6);
  within.set(3);
  within.set(4);
  within.set(5);
  CHECK(max_clique_within(g, within) == 3);
}

TEST_CASE("catalog of the diamond") {
  const CliqueCatalog cat = build_catalog(diamond(), 3);
  CHECK(cat.t == 3);
  CHECK(cat.omega == 3);
  CHECK(cat.cliques.size() == 2);
  CHECK(cat.per_vertex_count == std::vector<std::int64_t>{2, 2, 1, 1});
  CHECK(cat.per_vertex_alpha == std::vector<int>{3, 3, 3, 3});
  CHECK(cat.per_clique_alpha == std::vector<int>{3, 3});

  const CliqueCatalog pet = build_catalog(petersen_graph(), 2);
  CHECK(pet.cliques.size() == 15);
  CHECK(pet.omega == 2);
}

TEST_CASE("t-clique core and hypergraph components") {
  Graph g = disjoint_union(diamond(), path_graph(2));
  g.add_edge(3, 4);  // pendant edge outside every triangle
  const Graph core = t_clique_core(g, 3);
  CHECK(core.num_vertices() == 6);
  CHECK(core.num_edges() == 5);
  CHECK_FALSE(core.adjacent(3, 4));
  CHECK(t_clique_core(g, 2) == g);

  const auto comps = hypergraph_components(build_catalog(g, 3), g.num_vertices());
  REQUIRE(comps.components.size() == 1);
  CHECK(comps.components[0] == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(comps.free == std::vector<Vertex>{4, 5});

  const auto two = hypergraph_components(build_catalog(disjoint_union(complete_graph(3), complete_graph(3)), 3), 6);
  CHECK(two.components.size() == 2);
}

TEST_CASE("property: engine agrees with subset scans") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 11);
    const double p = std::array{0.2, 0.5, 0.8}[trial % 3];
    const Graph g = oracles::random_graph(rng, n, p);
    const int omega = oracles::brute_omega(g);
    REQUIRE(max_clique(g) == omega);
    for (int t = 1; t <= 4; ++t) {
      const auto expected = oracles::brute_cliques(g, t);
      const CliqueCatalog cat = build_catalog(g, t);
      REQUIRE(cat.cliques.to_vectors() == expected);
      CHECK(cat.omega == omega);
      for (std::size_t k = 0; k < expected.size(); ++k)
        CHECK(cat.per_clique_alpha[k] == oracles::brute_alpha(g, expected[k]));
      for (Vertex v = 0; v < n; ++v) {
        CHECK(cat.per_vertex_alpha[v] == oracles::brute_alpha(g, {v}));
        std::int64_t count = 0;
        for (const auto& c : expected) count += std::count(c.begin(), c.end(), v);
        CHECK(cat.per_vertex_count[v] == count);
      }
    }
  }
}

TEST_CASE("property: wide graphs match the word kernel") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    // Pad a small graph with isolated vertices so it needs multi-word rows.
    const Graph small = oracles::random_graph(rng, 12, 0.6);
    Graph wide(70);
    for (const auto& [u, v] : small.edges()) wide.add_edge(u + 55, v + 55);
    CHECK(max_clique(wide) == max_clique(small));
    CHECK(enumerate_t_cliques(wide, 3).size() == enumerate_t_cliques(small, 3).size());
    const CliqueCatalog a = build_catalog(small, 3);
    const CliqueCatalog b = build_catalog(wide, 3);
    for (Vertex v = 0; v < 12; ++v) CHECK(b.per_vertex_alpha[v + 55] == a.per_vertex_alpha[v]);
  }
}

TEST_CASE("property: core edges are exactly the edges inside t-cliques") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracles::random_graph(rng, 8, 0.55);
    for (int t = 2; t <= 4; ++t) {
      const Graph core = t_clique_core(g, t);
      for (const auto& [u, v] : g.edges())
        CHECK(core.adjacent(u, v) == (oracles::brute_alpha(g, {u, v}) >= t));
      CHECK(core.num_edges() <= g.num_edges());
    }
  }
}

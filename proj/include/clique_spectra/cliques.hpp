#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "clique_spectra/graph.hpp"

namespace clique_spectra {

/// Fixed-order cliques stored contiguously; clique k is a sorted span of
/// `order()` vertices.
class CliqueList {
 public:
  CliqueList() = default;
  explicit CliqueList(int order) : order_(order) {}

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_ == 0 ? 0 : members_.size() / order_; }
  bool empty() const noexcept { return members_.empty(); }

  std::span<const Vertex> operator[](std::size_t k) const noexcept {
    return {members_.data() + k * static_cast<std::size_t>(order_),
            static_cast<std::size_t>(order_)};
  }

  void push_back(std::span<const Vertex> clique) {
    members_.insert(members_.end(), clique.begin(), clique.end());
  }

  std::vector<std::vector<Vertex>> to_vectors() const;
  std::span<const Vertex> flat() const noexcept { return members_; }

  friend bool operator==(const CliqueList&, const CliqueList&) = default;

 private:
  int order_ = 0;
  std::vector<Vertex> members_;
};

/// All t-cliques of a graph with their local clique orders.
struct CliqueCatalog {
  int t = 0;
  int omega = 0;
  CliqueList cliques;
  std::vector<std::int64_t> per_vertex_count;  // c_t(v)
  std::vector<int> per_vertex_alpha;           // largest clique containing v
  std::vector<int> per_clique_alpha;           // largest clique containing clique k

  int num_vertices() const noexcept { return static_cast<int>(per_vertex_count.size()); }
};

/// t-cliques in lexicographic order, each listed once.
CliqueList enumerate_t_cliques(const Graph& g, int t);

/// Exact clique number (branch and bound with greedy colouring).
int max_clique(const Graph& g);

/// Clique number of the subgraph induced on `candidates`.
int max_clique_within(const Graph& g, const VertexSet& candidates);

/// Order of the largest clique containing `clique`; throws ValidationError if
/// the vertices are not a clique of `g`.
int alpha_clique(const Graph& g, std::span<const Vertex> clique);
int alpha_vertex(const Graph& g, Vertex v);

CliqueCatalog build_catalog(const Graph& g, int t);

/// Spanning subgraph keeping exactly the edges of `g` that lie in a t-clique.
Graph t_clique_core(const Graph& g, int t);

struct HypergraphComponents {
  std::vector<std::vector<Vertex>> components;  // sorted, ordered by smallest vertex
  std::vector<Vertex> free;                     // vertices in no clique
};

/// Connected components of the hypergraph whose hyperedges are the cliques.
HypergraphComponents hypergraph_components(const CliqueList& cliques, int n);
inline HypergraphComponents hypergraph_components(const CliqueCatalog& catalog, int n) {
  return hypergraph_components(catalog.cliques, n);
}

}  // namespace clique_spectra

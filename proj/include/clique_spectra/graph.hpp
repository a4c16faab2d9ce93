#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "clique_spectra/vertex_set.hpp"

namespace clique_spectra {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Rows are stored as consecutive 64-bit words. Graphs with n <= 64 use one
/// word per row, which the clique kernels exploit through `row_word`; larger
/// graphs fall back to multi-word rows handled through `VertexSet`.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an edge list. Duplicates collapse; self-loops and
  /// out-of-range endpoints throw ValidationError.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept;

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (rows_[row_offset(u) + (static_cast<std::size_t>(v) >> 6)] >> (v & 63)) & 1U;
  }

  /// Inserts {u, v}; returns false if it was already present.
  bool add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  int degree(Vertex v) const noexcept;
  VertexSet neighbors(Vertex v) const;

  /// Single-word neighbourhood; only meaningful when `fits_word()`.
  std::uint64_t row_word(Vertex v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
  bool fits_word() const noexcept { return n_ <= 64; }

  /// Sorted edges (u, v) with u < v.
  std::vector<Edge> edges() const;
  Graph complement() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t row_offset(Vertex v) const noexcept {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_per_row_);
  }
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int words_per_row_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Disjoint nonempty vertex classes.
struct Partition {
  std::vector<std::vector<Vertex>> parts;

  std::vector<int> sizes() const;
  bool regular() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Result of recognising a complete multipartite graph: the classes of the
/// non-isolated vertices, plus the isolated vertices reported apart.
struct MultipartiteStructure {
  Partition partition;
  std::vector<Vertex> isolated;
};

/// A relabelled induced subgraph; `original[i]` is the host vertex of vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};

Graph complete_multipartite(std::span<const int> sizes);
Graph turan_graph(int n, int r);
Graph gnp_random(int n, double p, std::uint64_t seed);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();
Graph disjoint_union(const Graph& a, const Graph& b);

/// Labelled graph whose edge set is given by `mask` over the pairs (i, j),
/// i < j, in lexicographic order (bit k is the k-th pair).
Graph graph_from_mask(int n, std::uint64_t mask);

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Recognises complete multipartite graphs (ignoring isolated vertices) via the
/// connected components of the complement on the non-isolated vertices.
std::optional<MultipartiteStructure> complete_multipartite_partition(const Graph& g);

std::vector<Vertex> isolated_vertices(const Graph& g);

}  // namespace clique_spectra

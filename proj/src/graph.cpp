#include "clique_spectra/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "clique_spectra/error.hpp"

namespace clique_spectra {

Graph::Graph(int n) : n_(n), words_per_row_((n + 63) / 64) {
  if (n < 0) throw ValidationError("vertex count must be nonnegative");
  rows_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_per_row_), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw ValidationError("vertex " + std::to_string(v) + " out of range for n = " +
                          std::to_string(n_));
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return false;
  rows_[row_offset(u) + (static_cast<std::size_t>(v) >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[row_offset(v) + (static_cast<std::size_t>(u) >> 6)] |= std::uint64_t{1} << (u & 63);
  return true;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[row_offset(u) + (static_cast<std::size_t>(v) >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  rows_[row_offset(v) + (static_cast<std::size_t>(u) >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

std::size_t Graph::num_edges() const noexcept {
  std::size_t twice = 0;
  for (auto w : rows_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

int Graph::degree(Vertex v) const noexcept {
  int d = 0;
  for (int i = 0; i < words_per_row_; ++i) d += std::popcount(rows_[row_offset(v) + i]);
  return d;
}

VertexSet Graph::neighbors(Vertex v) const {
  VertexSet s(n_);
  auto words = s.words();
  std::copy_n(rows_.begin() + static_cast<std::ptrdiff_t>(row_offset(v)), words_per_row_,
              words.begin());
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < n_; ++u)
    neighbors(u).for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph Graph::complement() const {
  Graph c(n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) c.add_edge(u, v);
  return c;
}

std::vector<int> Partition::sizes() const {
  std::vector<int> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(static_cast<int>(p.size()));
  return out;
}

bool Partition::regular() const {
  return std::adjacent_find(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
           return a.size() != b.size();
         }) == parts.end();
}

Graph complete_multipartite(std::span<const int> sizes) {
  if (sizes.empty()) throw ValidationError("complete_multipartite: empty size list");
  if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s <= 0; }))
    throw ValidationError("complete_multipartite: part sizes must be positive");
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<int> part_of;
  part_of.reserve(static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < sizes.size(); ++p)
    part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[p]), static_cast<int>(p));
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph turan_graph(int n, int r) {
  if (r < 1 || r > n) throw ValidationError("turan_graph: requires 1 <= r <= n");
  std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
  // Smaller classes first, so T(5,2) is K_{2,3}.
  for (int i = 0; i < n % r; ++i) ++sizes[static_cast<std::size_t>(r - 1 - i)];
  return complete_multipartite(sizes);
}

Graph gnp_random(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("gnp_random: p must lie in [0, 1]");
  // mt19937_64 is fully specified, and the 53-bit conversion below avoids the
  // implementation-defined std::uniform_real_distribution.
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) g.add_edge(u, v);
    }
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw ValidationError("cycle_graph: n must be at least 3");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.num_vertices();
  Graph g(na + b.num_vertices());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
  return g;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  if (n < 0 || n * (n - 1) / 2 > 64) throw ValidationError("graph_from_mask: n too large");
  Graph g(n);
  int k = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++k)
      if ((mask >> k) & 1U) g.add_edge(u, v);
  return g;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  const int n = g.num_vertices();
  for (Vertex v : vertices)
    if (v < 0 || v >= n)
      throw ValidationError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
  InducedSubgraph out{Graph(static_cast<int>(vertices.size())),
                      std::vector<Vertex>(vertices.begin(), vertices.end())};
  const int k = static_cast<int>(vertices.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (vertices[i] == vertices[j]) throw ValidationError("induced_subgraph: repeated vertex");
      if (g.adjacent(vertices[i], vertices[j])) out.graph.add_edge(i, j);
    }
  return out;
}

namespace {

// Components of the subgraph of `g` (or its complement) restricted to `within`.
std::vector<std::vector<Vertex>> components_within(const Graph& g, const VertexSet& within,
                                                   bool complement) {
  const int n = g.num_vertices();
  VertexSet unvisited = within;
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  while (!unvisited.none()) {
    const Vertex root = unvisited.first();
    unvisited.reset(root);
    std::vector<Vertex> comp{root};
    stack.assign(1, root);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      VertexSet next = g.neighbors(u);
      if (complement) {
        next = VertexSet::full(n) - next;
        next.reset(u);
      }
      next &= unvisited;
      next.for_each([&](Vertex v) {
        unvisited.reset(v);
        comp.push_back(v);
        stack.push_back(v);
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  return components_within(g, VertexSet::full(g.num_vertices()), false);
}

std::vector<Vertex> isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return out;
}

std::optional<MultipartiteStructure> complete_multipartite_partition(const Graph& g) {
  const int n = g.num_vertices();
  MultipartiteStructure result;
  VertexSet active(n);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0)
      result.isolated.push_back(v);
    else
      active.set(v);
  }
  result.partition.parts = components_within(g, active, true);

  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  for (std::size_t p = 0; p < result.partition.parts.size(); ++p)
    for (Vertex v : result.partition.parts[p]) part_of[v] = static_cast<int>(p);

  // Each class must be independent and every cross pair adjacent.
  for (Vertex u = 0; u < n; ++u) {
    if (part_of[u] < 0) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[v] < 0) continue;
      if ((part_of[u] == part_of[v]) == g.adjacent(u, v)) return std::nullopt;
    }
  }
  return result;
}

}  // namespace clique_spectra

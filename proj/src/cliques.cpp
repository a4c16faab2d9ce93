#include "clique_spectra/cliques.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "clique_spectra/error.hpp"

namespace clique_spectra {

namespace {

// Neighbourhood access for graphs with n <= 64.
struct WordRows {
  using Set = SmallSet;
  const Graph& g;
  Set neighbors(Vertex v) const { return Set(g.row_word(v)); }
  static Set convert(const VertexSet& s) { return s.universe() == 0 ? Set() : Set(s.words()[0]); }
  Set all() const {
    const int n = g.num_vertices();
    return Set(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
};

// Fallback for larger graphs: rows materialised once as VertexSets.
struct WideRows {
  using Set = VertexSet;
  explicit WideRows(const Graph& graph) : g(graph) {
    rows.reserve(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v) rows.push_back(g.neighbors(v));
  }
  const Graph& g;
  std::vector<VertexSet> rows;
  const Set& neighbors(Vertex v) const { return rows[static_cast<std::size_t>(v)]; }
  static Set convert(const VertexSet& s) { return s; }
  Set all() const { return VertexSet::full(g.num_vertices()); }
};

template <class F>
decltype(auto) with_rows(const Graph& g, F&& f) {
  if (g.fits_word()) return f(WordRows{g});
  return f(WideRows(g));
}

// Branch and bound with greedy colouring bounds (MCQ ordering).
template <class Rows>
class MaxCliqueSearch {
 public:
  using Set = typename Rows::Set;

  explicit MaxCliqueSearch(const Rows& rows) : rows_(rows) {}

  int run(const Set& candidates) {
    best_ = 0;
    if (!candidates.none()) expand(candidates, 0);
    return best_;
  }

 private:
  struct Level {
    std::vector<Vertex> order;
    std::vector<int> colour;
  };

  void colour_sort(Set candidates, Level& level) const {
    level.order.clear();
    level.colour.clear();
    int colour = 0;
    while (!candidates.none()) {
      ++colour;
      Set independent = candidates;
      while (!independent.none()) {
        const Vertex v = independent.first();
        independent.reset(v);
        independent -= rows_.neighbors(v);
        candidates.reset(v);
        level.order.push_back(v);
        level.colour.push_back(colour);
      }
    }
  }

  void expand(Set candidates, int depth) {
    if (levels_.size() <= static_cast<std::size_t>(depth)) levels_.resize(depth + 1);
    colour_sort(candidates, levels_[depth]);
    for (std::size_t k = levels_[depth].order.size(); k-- > 0;) {
      // `levels_` may reallocate in the recursive call; index afresh each time.
      if (depth + levels_[depth].colour[k] <= best_) return;
      const Vertex v = levels_[depth].order[k];
      Set next = candidates & rows_.neighbors(v);
      if (next.none())
        best_ = std::max(best_, depth + 1);
      else
        expand(std::move(next), depth + 1);
      candidates.reset(v);
    }
  }

  const Rows& rows_;
  int best_ = 0;
  std::vector<Level> levels_;
};

template <class Rows>
void enumerate_into(const Rows& rows, int t, CliqueList& out) {
  using Set = typename Rows::Set;
  std::vector<Vertex> current(static_cast<std::size_t>(t));
  auto extend = [&](auto&& self, Set rest, int depth) -> void {
    while (!rest.none()) {
      const Vertex v = rest.first();
      rest.reset(v);
      current[static_cast<std::size_t>(depth)] = v;
      if (depth + 1 == t) {
        out.push_back(current);
        continue;
      }
      Set next = rest & rows.neighbors(v);
      if (depth + 1 + next.count() < t) continue;
      self(self, std::move(next), depth + 1);
    }
  };
  extend(extend, rows.all(), 0);
}

template <class Rows>
typename Rows::Set common_neighbourhood(const Rows& rows, std::span<const Vertex> clique) {
  auto s = rows.all();
  for (Vertex v : clique) s &= rows.neighbors(v);
  return s;
}

void check_clique(const Graph& g, std::span<const Vertex> clique) {
  const int n = g.num_vertices();
  for (std::size_t i = 0; i < clique.size(); ++i) {
    if (clique[i] < 0 || clique[i] >= n)
      throw ValidationError("vertex " + std::to_string(clique[i]) + " out of range");
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (!g.adjacent(clique[i], clique[j]))
        throw ValidationError("vertices " + std::to_string(clique[i]) + " and " +
                              std::to_string(clique[j]) + " are not adjacent");
  }
}

}  // namespace

std::vector<std::vector<Vertex>> CliqueList::to_vectors() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(size());
  for (std::size_t k = 0; k < size(); ++k) out.emplace_back((*this)[k].begin(), (*this)[k].end());
  return out;
}

CliqueList enumerate_t_cliques(const Graph& g, int t) {
  if (t < 1) throw ValidationError("clique order must be at least 1");
  CliqueList out(t);
  if (t <= g.num_vertices()) with_rows(g, [&](const auto& rows) { enumerate_into(rows, t, out); });
  return out;
}

int max_clique(const Graph& g) {
  return with_rows(g, [&](const auto& rows) {
    MaxCliqueSearch search(rows);
    return search.run(rows.all());
  });
}

int max_clique_within(const Graph& g, const VertexSet& candidates) {
  return with_rows(g, [&](const auto& rows) {
    MaxCliqueSearch search(rows);
    return search.run(rows.convert(candidates));
  });
}

int alpha_clique(const Graph& g, std::span<const Vertex> clique) {
  check_clique(g, clique);
  return with_rows(g, [&](const auto& rows) {
    MaxCliqueSearch search(rows);
    return static_cast<int>(clique.size()) + search.run(common_neighbourhood(rows, clique));
  });
}

int alpha_vertex(const Graph& g, Vertex v) {
  const Vertex single[] = {v};
  return alpha_clique(g, single);
}

CliqueCatalog build_catalog(const Graph& g, int t) {
  if (t < 1) throw ValidationError("clique order must be at least 1");
  const int n = g.num_vertices();
  CliqueCatalog cat;
  cat.t = t;
  cat.per_vertex_count.assign(static_cast<std::size_t>(n), 0);
  cat.per_vertex_alpha.assign(static_cast<std::size_t>(n), 1);

  with_rows(g, [&](const auto& rows) {
    MaxCliqueSearch search(rows);
    cat.cliques = CliqueList(t);
    if (t <= n) enumerate_into(rows, t, cat.cliques);
    for (Vertex v = 0; v < n; ++v) {
      cat.per_vertex_alpha[v] = 1 + search.run(rows.neighbors(v));
      cat.omega = std::max(cat.omega, cat.per_vertex_alpha[v]);
    }
    cat.per_clique_alpha.reserve(cat.cliques.size());
    for (std::size_t k = 0; k < cat.cliques.size(); ++k) {
      const auto clique = cat.cliques[k];
      for (Vertex v : clique) ++cat.per_vertex_count[v];
      cat.per_clique_alpha.push_back(t + search.run(common_neighbourhood(rows, clique)));
    }
  });
  return cat;
}

Graph t_clique_core(const Graph& g, int t) {
  if (t < 2) throw ValidationError("t_clique_core requires t >= 2");
  Graph core(g.num_vertices());
  const auto cliques = enumerate_t_cliques(g, t);
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    const auto c = cliques[k];
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) core.add_edge(c[i], c[j]);
  }
  return core;
}

HypergraphComponents hypergraph_components(const CliqueList& cliques, int n) {
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    const auto c = cliques[k];
    for (Vertex v : c) {
      if (v < 0 || v >= n) throw ValidationError("clique vertex out of range");
      covered[v] = true;
      const Vertex a = find(c[0]), b = find(v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  HypergraphComponents out;
  std::vector<int> index_of_root(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    if (!covered[v]) {
      out.free.push_back(v);
      continue;
    }
    const Vertex r = find(v);
    if (index_of_root[r] < 0) {
      index_of_root[r] = static_cast<int>(out.components.size());
      out.components.emplace_back();
    }
    out.components[static_cast<std::size_t>(index_of_root[r])].push_back(v);
  }
  return out;
}

}  // namespace clique_spectra

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "clique_spectra/graph.hpp"

namespace clique_spectra {

enum class GraphFormat { EdgeList, Dimacs };

/// Edge-list text: "u v" per line, '#' comments, optional "n <count>" header.
Graph parse_edge_list(std::string_view text);

/// DIMACS "p edge n m" / "e u v" text with 1-based vertices. A mismatched edge
/// count is not an error; it is appended to `warnings` when given.
Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr);

Graph parse_graph(std::string_view text, GraphFormat format,
                  std::vector<std::string>* warnings = nullptr);

/// Canonical edge list: "n <count>" header, then sorted "u v" lines with u < v.
std::string serialize_edge_list(const Graph& g);
std::string serialize_dimacs(const Graph& g);
std::string serialize_graph(const Graph& g, GraphFormat format);

/// Compact one-line form "u-v u-v ..." used in reports.
std::string edge_string(const Graph& g);

}  // namespace clique_spectra

#include "clique_spectra/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include <fmt/format.h>

#include "clique_spectra/error.hpp"

namespace clique_spectra {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

long long parse_index(std::string_view token, std::size_t line_no) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || value < 0)
    throw ParseError(line_no, fmt::format("expected a nonnegative integer, got '{}'", token));
  if (value > (1LL << 30)) throw ParseError(line_no, fmt::format("index {} too large", token));
  return value;
}

// Calls f(line_no, line) for each line of text.
template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    f(line_no, text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

struct PendingEdge {
  long long u, v;
  std::size_t line;
};

Graph build(int n, const std::vector<PendingEdge>& pending) {
  Graph g(n);
  for (const auto& e : pending) {
    if (e.u == e.v)
      throw ValidationError(fmt::format("line {}: self-loop at vertex {}", e.line, e.u));
    g.add_edge(static_cast<Vertex>(e.u), static_cast<Vertex>(e.v));
  }
  return g;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<long long> header;
  long long max_index = -1;
  std::vector<PendingEdge> pending;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_tokens(line);
    if (tokens.empty()) return;
    if (tokens[0] == "n") {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be 'n <count>'");
      if (header) throw ParseError(line_no, "duplicate 'n' header");
      header = parse_index(tokens[1], line_no);
      return;
    }
    if (tokens.size() != 2)
      throw ParseError(line_no, fmt::format("expected 'u v', got {} tokens", tokens.size()));
    const long long u = parse_index(tokens[0], line_no);
    const long long v = parse_index(tokens[1], line_no);
    max_index = std::max({max_index, u, v});
    pending.push_back({u, v, line_no});
  });

  long long n = max_index + 1;
  if (header) {
    if (*header < n)
      throw ParseError(0, fmt::format("header declares {} vertices but index {} appears", *header,
                                      max_index));
    n = *header;
  }
  return build(static_cast<int>(n), pending);
}

Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
  std::optional<long long> n;
  long long declared_edges = 0;
  std::vector<PendingEdge> pending;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") return;
    if (tokens[0] == "p") {
      if (n) throw ParseError(line_no, "duplicate 'p' line");
      if (tokens.size() != 4) throw ParseError(line_no, "expected 'p edge <n> <m>'");
      n = parse_index(tokens[2], line_no);
      declared_edges = parse_index(tokens[3], line_no);
      return;
    }
    if (tokens[0] == "e") {
      if (!n) throw ParseError(line_no, "edge before 'p' header");
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      const long long u = parse_index(tokens[1], line_no);
      const long long v = parse_index(tokens[2], line_no);
      if (u < 1 || v < 1 || u > *n || v > *n)
        throw ParseError(line_no, fmt::format("edge {} {} outside 1..{}", u, v, *n));
      pending.push_back({u - 1, v - 1, line_no});
      return;
    }
    throw ParseError(line_no, fmt::format("unknown line type '{}'", tokens[0]));
  });

  if (!n) throw ParseError(0, "missing 'p edge' header");
  if (static_cast<long long>(pending.size()) != declared_edges && warnings != nullptr)
    warnings->push_back(fmt::format("header declares {} edges but {} edge lines were read",
                                    declared_edges, pending.size()));
  return build(static_cast<int>(*n), pending);
}

Graph parse_graph(std::string_view text, GraphFormat format, std::vector<std::string>* warnings) {
  return format == GraphFormat::Dimacs ? parse_dimacs(text, warnings) : parse_edge_list(text);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = fmt::format("n {}\n", g.num_vertices());
  for (auto [u, v] : g.edges()) out += fmt::format("{} {}\n", u, v);
  return out;
}

std::string serialize_dimacs(const Graph& g) {
  std::string out = fmt::format("p edge {} {}\n", g.num_vertices(), g.num_edges());
  for (auto [u, v] : g.edges()) out += fmt::format("e {} {}\n", u + 1, v + 1);
  return out;
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Dimacs ? serialize_dimacs(g) : serialize_edge_list(g);
}

std::string edge_string(const Graph& g) {
  std::string out = fmt::format("n={}:", g.num_vertices());
  for (auto [u, v] : g.edges()) out += fmt::format(" {}-{}", u, v);
  return out;
}

}  // namespace clique_spectra

#pragma once

// Simple undirected graphs on dense vertex indices: builders for paths, cycles
// and Cartesian products, the degree-1/2 vertex removal, edge-list input and a
// brute-force isomorphism test for small graphs.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pebbling/error.hpp"

namespace pebbling {

using Vertex = std::size_t;

/// Hard ceiling imposed by the bitset adjacency rows.
inline constexpr std::size_t kMaxGraphVertices = 64;

struct GraphLimits {
  std::size_t max_product_vertices = 64;
  std::size_t max_isomorphism_vertices = 10;
};

/// Which builder produced the graph. Only `path` and `cycle` graphs are in
/// canonical index order (edges {i, i+1}, plus {n-1, 0} for cycles).
enum class Family { path, cycle, other };

/// old index -> new index, nullopt for deleted vertices.
using IndexMap = std::vector<std::optional<Vertex>>;

class Graph {
 public:
  Graph() : Graph(1, {}, {}) {}

  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
        std::string label = {}, Family family = Family::other)
      : rows_(n, 0), neighbors_(n), label_(std::move(label)), family_(family) {
    if (n == 0) throw Error(ErrorKind::invalid_argument, "graph needs at least one vertex");
    if (n > kMaxGraphVertices)
      throw Error(ErrorKind::size_limit, "graph has " + std::to_string(n) + " vertices; limit is " +
                                             std::to_string(kMaxGraphVertices));
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw Error(ErrorKind::invalid_argument,
                    "edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
      if (u == v) throw Error(ErrorKind::invalid_argument, "self-loop at " + std::to_string(u));
      rows_[u] |= bit(v);
      rows_[v] |= bit(u);
    }
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w = 0; w < n; ++w)
        if (rows_[v] & bit(w)) neighbors_[v].push_back(w);
      edge_count_ += neighbors_[v].size();
    }
    edge_count_ /= 2;
  }

  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::string& label() const noexcept { return label_; }
  Family family() const noexcept { return family_; }

  bool adjacent(Vertex u, Vertex v) const { return (rows_.at(u) & bit(v)) != 0; }
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_.at(v); }
  std::size_t degree(Vertex v) const { return neighbors_.at(v).size(); }
  std::uint64_t row(Vertex v) const { return rows_.at(v); }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < size(); ++u)
      for (Vertex v : neighbors_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::vector<std::size_t> degree_sequence() const {
    std::vector<std::size_t> degrees;
    for (const auto& nbrs : neighbors_) degrees.push_back(nbrs.size());
    std::sort(degrees.begin(), degrees.end());
    return degrees;
  }

  bool connected() const {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (Vertex v = 0; v < size(); ++v)
        if (frontier & bit(v)) next |= rows_[v];
      frontier = next & ~seen;
      seen |= next;
    }
    return std::popcount(seen) == static_cast<int>(size());
  }

  /// Edges exactly {i, i+1} for 0 <= i < n-1.
  bool is_canonical_path() const {
    if (edge_count_ + 1 != size()) return false;
    for (Vertex i = 0; i + 1 < size(); ++i)
      if (!adjacent(i, i + 1)) return false;
    return true;
  }

  /// Edges exactly {i, (i+1) mod n}, n >= 3.
  bool is_canonical_cycle() const {
    if (size() < 3 || edge_count_ != size()) return false;
    for (Vertex i = 0; i < size(); ++i)
      if (!adjacent(i, (i + 1) % size())) return false;
    return true;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

  std::vector<std::uint64_t> rows_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::size_t edge_count_ = 0;
  std::string label_;
  Family family_;
};

inline Graph make_path(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "path needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges, "path:" + std::to_string(n), Family::path);
}

inline Graph make_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "cycle needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges, "cycle:" + std::to_string(n), Family::cycle);
}

// Product vertex (a, b) lives at index a * |V(h)| + b.
inline Vertex product_index(Vertex a, Vertex b, std::size_t right_size) {
  return a * right_size + b;
}

inline std::pair<Vertex, Vertex> product_coordinates(Vertex index, std::size_t right_size) {
  return {index / right_size, index % right_size};
}

inline Graph cartesian_product(const Graph& g, const Graph& h, const GraphLimits& limits = {}) {
  const std::size_t n = g.size() * h.size();
  const std::size_t cap = std::min(limits.max_product_vertices, kMaxGraphVertices);
  if (n > cap)
    throw Error(ErrorKind::size_limit, "product has " + std::to_string(n) +
                                           " vertices; limit is " + std::to_string(cap));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < g.size(); ++a)
    for (auto [b1, b2] : h.edges())
      edges.emplace_back(product_index(a, b1, h.size()), product_index(a, b2, h.size()));
  for (Vertex b = 0; b < h.size(); ++b)
    for (auto [a1, a2] : g.edges())
      edges.emplace_back(product_index(a1, b, h.size()), product_index(a2, b, h.size()));
  return Graph(n, edges, "product(" + g.label() + "," + h.label() + ")");
}

struct SmoothingResult {
  Graph graph;
  IndexMap index_map;
};

/// Deletes a degree-1 vertex, or replaces a degree-2 vertex by an edge between
/// its neighbours. Survivors keep their relative order. Paths and cycles stay
/// canonical, so the family tag carries over.
inline SmoothingResult remove_vertex_smoothing(const Graph& g, Vertex v) {
  if (v >= g.size()) throw Error(ErrorKind::invalid_argument, "vertex out of range");
  const std::size_t deg = g.degree(v);
  if (deg != 1 && deg != 2)
    throw Error(ErrorKind::unsupported_degree,
                "cannot remove vertex " + std::to_string(v) + " of degree " + std::to_string(deg));
  if (deg == 2 && g.adjacent(g.neighbors(v)[0], g.neighbors(v)[1]))
    throw Error(ErrorKind::structure,
                "smoothing vertex " + std::to_string(v) + " would create a parallel edge");

  IndexMap map(g.size());
  Vertex next = 0;
  for (Vertex u = 0; u < g.size(); ++u)
    if (u != v) map[u] = next++;

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [a, b] : g.edges())
    if (a != v && b != v) edges.emplace_back(*map[a], *map[b]);
  if (deg == 2) edges.emplace_back(*map[g.neighbors(v)[0]], *map[g.neighbors(v)[1]]);

  const std::size_t n = g.size() - 1;
  std::string label;
  Family family = Family::other;
  if (g.family() == Family::path) {
    label = "path:" + std::to_string(n);
    family = Family::path;
  } else if (g.family() == Family::cycle) {
    label = "cycle:" + std::to_string(n);
    family = Family::cycle;
  }
  return {Graph(n, edges, std::move(label), family), std::move(map)};
}

/// Exhaustive permutation search with degree pre-filtering. Vertices of h are
/// assigned in order, each candidate restricted to equal degree.
inline bool are_isomorphic(const Graph& g, const Graph& h, const GraphLimits& limits = {}) {
  const std::size_t cap = limits.max_isomorphism_vertices;
  if (g.size() > cap || h.size() > cap)
    throw Error(ErrorKind::size_limit,
                "isomorphism test limited to " + std::to_string(cap) + " vertices");
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;

  const std::size_t n = g.size();
  std::vector<Vertex> image(n);
  std::vector<bool> used(n, false);

  auto extend = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || g.degree(v) != h.degree(w)) continue;
      bool consistent = true;
      for (Vertex u = 0; u < v && consistent; ++u)
        consistent = g.adjacent(u, v) == h.adjacent(image[u], w);
      if (!consistent) continue;
      used[w] = true;
      image[v] = w;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

/// Edge-list text: first content line is n, then "u v" per line; '#' starts a
/// comment line; duplicate edges are ignored. ParseError positions are 1-based
/// line numbers.
inline Graph read_edge_list(std::istream& in, std::string label = {}) {
  std::optional<std::size_t> n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!n) {
      long long count = 0;
      std::string extra;
      if (!(fields >> count) || (fields >> extra) || count < 1)
        throw ParseError(line_no, "line " + std::to_string(line_no) +
                                      ": expected a positive vertex count");
      n = static_cast<std::size_t>(count);
      continue;
    }
    long long u = 0, v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra))
      throw ParseError(line_no, "line " + std::to_string(line_no) + ": expected \"u v\"");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= *n || static_cast<std::size_t>(v) >= *n)
      throw ParseError(line_no, "line " + std::to_string(line_no) + ": vertex out of range");
    if (u == v) throw ParseError(line_no, "line " + std::to_string(line_no) + ": self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw ParseError(line_no, "edge list is empty");
  return Graph(*n, edges, std::move(label));
}

inline Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open " + path);
  return read_edge_list(in, "file:" + path);
}

}  // namespace pebbling

#pragma once

// Distribution surgeries on paths and cycles. Each one deletes a vertex (or
// two) and rearranges pebbles so that a distribution D on the larger graph
// becomes a strictly smaller distribution D* on the smaller graph. They are
// the reduction steps of the inductive lower-bound argument for f_opt; whether
// solvability survives is checked by the test suites, not enforced here.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pebbling/distribution.hpp"
#include "pebbling/error.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

struct SurgeryResult {
  Graph graph_after;
  Distribution dist_after;
  IndexMap index_map;
  /// |D| - |D*|
  std::int64_t pebbles_removed_net = 0;
  std::string operation;
};

namespace detail {

inline Distribution carry_over(const Distribution& d, const IndexMap& map, std::size_t n_after) {
  Distribution out(n_after);
  for (Vertex u = 0; u < map.size(); ++u)
    if (map[u]) out.add(*map[u], d[u]);
  return out;
}

inline IndexMap compose(const IndexMap& first, const IndexMap& second) {
  IndexMap out(first.size());
  for (Vertex u = 0; u < first.size(); ++u)
    if (first[u]) out[u] = second[*first[u]];
  return out;
}

inline SurgeryResult finish(const Distribution& before, const Distribution& adjusted,
                            SmoothingResult smoothed, std::string operation) {
  Distribution after = carry_over(adjusted, smoothed.index_map, smoothed.graph.size());
  const auto removed = static_cast<std::int64_t>(before.size()) - static_cast<std::int64_t>(after.size());
  return {std::move(smoothed.graph), std::move(after), std::move(smoothed.index_map), removed,
          std::move(operation)};
}

inline void require_path(const Graph& g) {
  if (!g.is_canonical_path()) throw Error(ErrorKind::invalid_argument, "surgery requires a path");
}

inline void require_cycle(const Graph& g) {
  if (!g.is_canonical_cycle()) throw Error(ErrorKind::invalid_argument, "surgery requires a cycle");
}

}  // namespace detail

/// Deletes v (which holds exactly one pebble) together with its pebble.
inline SurgeryResult remove_singleton(const Graph& g, const Distribution& d, Vertex v) {
  require_companion(g, d);
  if (v >= g.size()) throw Error(ErrorKind::invalid_argument, "vertex out of range");
  if (d[v] != 1)
    throw Error(ErrorKind::precondition,
                "vertex " + std::to_string(v) + " holds " + std::to_string(d[v]) + " pebbles, not 1");
  return detail::finish(d, d, remove_vertex_smoothing(g, v), "remove-singleton");
}

/// Path with every occupied vertex holding >= 2 pebbles. Finds the first
/// occupied vertex i followed by an unoccupied one (scanning from the low end,
/// then from the high end), deletes that unoccupied neighbour, takes 2 pebbles
/// off i and gives 1 to i's other neighbour when it exists.
inline SurgeryResult collapse_two_pebble_block_path(const Graph& g, const Distribution& d) {
  detail::require_path(g);
  require_companion(g, d);
  const std::size_t n = g.size();
  for (Vertex v = 0; v < n; ++v)
    if (d[v] == 1)
      throw Error(ErrorKind::precondition, "vertex " + std::to_string(v) + " holds a single pebble");

  std::optional<Vertex> source, removed, compensated;
  for (Vertex i = 0; i + 1 < n && !source; ++i)
    if (d.occupied(i) && !d.occupied(i + 1)) {
      source = i;
      removed = i + 1;
      if (i > 0) compensated = i - 1;
    }
  for (Vertex j = n; !source && j-- > 1;)
    if (d.occupied(j) && !d.occupied(j - 1)) {
      source = j;
      removed = j - 1;
      if (j + 1 < n) compensated = j + 1;
    }
  if (!source)
    throw Error(ErrorKind::not_applicable, "no occupied vertex next to an unoccupied one");

  Distribution adjusted = d;
  adjusted.remove(*source, 2);
  if (compensated) adjusted.add(*compensated, 1);
  return detail::finish(d, adjusted, remove_vertex_smoothing(g, *removed),
                        "collapse-two-pebble-block");
}

/// Cycle whose occupied vertices hold exactly 2 pebbles. At the first i with
/// D([i, i+1, i+2]) = [2,0,2] or [2,2,0], deletes i+1 and i+2 with their pebbles.
inline SurgeryResult cycle_remove_202_or_220(const Graph& g, const Distribution& d) {
  detail::require_cycle(g);
  require_companion(g, d);
  const std::size_t n = g.size();
  for (Vertex v = 0; v < n; ++v)
    if (d[v] != 0 && d[v] != 2)
      throw Error(ErrorKind::precondition,
                  "vertex " + std::to_string(v) + " holds " + std::to_string(d[v]) + " pebbles");
  if (n < 5) throw Error(ErrorKind::size_limit, "cycle would shrink below 3 vertices");

  for (Vertex i = 0; i < n; ++i) {
    const Vertex a = (i + 1) % n, b = (i + 2) % n;
    const bool two_zero_two = d[i] == 2 && d[a] == 0 && d[b] == 2;
    const bool two_two_zero = d[i] == 2 && d[a] == 2 && d[b] == 0;
    if (!two_zero_two && !two_two_zero) continue;
    SmoothingResult first = remove_vertex_smoothing(g, a);
    SmoothingResult second = remove_vertex_smoothing(first.graph, *first.index_map[b]);
    return detail::finish(d, d, {std::move(second.graph), detail::compose(first.index_map, second.index_map)},
                          two_zero_two ? "remove-202" : "remove-220");
  }
  throw Error(ErrorKind::not_applicable, "no [2,0,2] or [2,2,0] window");
}

/// Cycle with a vertex v holding >= 3 pebbles (the lowest such index):
///  (a) a neighbour of v is empty: delete it, take 2 from v, add 1 to v's other neighbour;
///  (b) both neighbours occupied, D(v) = 3: delete v and its pebbles, add 1 to each neighbour;
///  (c) both neighbours occupied, D(v) > 3: take 3 from v, add 2 to the neighbour facing
///      away from the nearest empty vertex, delete that empty vertex.
/// Neighbour v+1 is preferred over v-1, and ties in (c) go to the increasing direction.
inline SurgeryResult cycle_reduce_big_pile(const Graph& g, const Distribution& d) {
  detail::require_cycle(g);
  require_companion(g, d);
  const std::size_t n = g.size();
  std::optional<Vertex> pile;
  for (Vertex v = 0; v < n && !pile; ++v)
    if (d[v] >= 3) pile = v;
  if (!pile) throw Error(ErrorKind::not_applicable, "no vertex holds 3 or more pebbles");
  if (n < 4) throw Error(ErrorKind::size_limit, "cycle would shrink below 3 vertices");

  const Vertex v = *pile;
  const Vertex next = (v + 1) % n, prev = (v + n - 1) % n;
  Distribution adjusted = d;

  if (!d.occupied(next) || !d.occupied(prev)) {
    const Vertex empty = !d.occupied(next) ? next : prev;
    const Vertex other = empty == next ? prev : next;
    adjusted.remove(v, 2);
    adjusted.add(other, 1);
    return detail::finish(d, adjusted, remove_vertex_smoothing(g, empty), "reduce-big-pile-a");
  }
  if (d[v] == 3) {
    adjusted.remove(v, 3);
    adjusted.add(next, 1);
    adjusted.add(prev, 1);
    return detail::finish(d, adjusted, remove_vertex_smoothing(g, v), "reduce-big-pile-b");
  }
  for (std::size_t k = 2; k < n; ++k) {
    const Vertex ahead = (v + k) % n, behind = (v + n - k) % n;
    std::optional<std::pair<Vertex, Vertex>> choice;  // (empty vertex, receiving neighbour)
    if (!d.occupied(ahead))
      choice = {ahead, prev};
    else if (!d.occupied(behind))
      choice = {behind, next};
    if (!choice) continue;
    adjusted.remove(v, 3);
    adjusted.add(choice->second, 2);
    return detail::finish(d, adjusted, remove_vertex_smoothing(g, choice->first),
                          "reduce-big-pile-c");
  }
  throw Error(ErrorKind::not_applicable, "every vertex is occupied");
}

/// Tries the reductions in order: singleton removal, then the two-pebble
/// reduction for the graph's shape, then the big-pile reduction on cycles.
inline std::optional<SurgeryResult> try_reduce(const Graph& g, const Distribution& d) {
  require_companion(g, d);
  auto attempt = [](auto&& op) -> std::optional<SurgeryResult> {
    try {
      return op();
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::not_applicable:
        case ErrorKind::precondition:
        case ErrorKind::size_limit:
        case ErrorKind::unsupported_degree:
        case ErrorKind::structure:
          return std::nullopt;
        default:
          throw;
      }
    }
  };
  for (Vertex v = 0; v < g.size(); ++v)
    if (d[v] == 1)
      if (auto r = attempt([&] { return remove_singleton(g, d, v); })) return r;
  if (g.is_canonical_path())
    return attempt([&] { return collapse_two_pebble_block_path(g, d); });
  if (g.is_canonical_cycle()) {
    if (auto r = attempt([&] { return cycle_remove_202_or_220(g, d); })) return r;
    return attempt([&] { return cycle_reduce_big_pile(g, d); });
  }
  return std::nullopt;
}

/// On a cycle: every occupied vertex is followed by exactly two empty ones
/// before the next occupied vertex. Forces n = 3 * (occupied count).
inline bool all_gaps_exactly_two(const Distribution& d) {
  const std::size_t n = d.vertex_count();
  std::vector<Vertex> occupied;
  for (Vertex v = 0; v < n; ++v)
    if (d.occupied(v)) occupied.push_back(v);
  if (occupied.empty()) return false;
  for (std::size_t k = 0; k < occupied.size(); ++k) {
    const Vertex here = occupied[k];
    const Vertex there = occupied[(k + 1) % occupied.size()];
    const std::size_t gap = (there + n - here - 1) % n;
    if (gap != 2) return false;
  }
  return true;
}

/// Pebbles reaching v_{i+2} through the collapsed block, before and after the
/// two-pebble collapse, given a = D(v_i) and b pebbles gathered on v_{i-1}.
struct CollapseTransport {
  std::int64_t before;  // floor(floor((floor(b/2) + a) / 2) / 2)
  std::int64_t after;   // floor((floor((b+1)/2) + a - 2) / 2)
};

inline CollapseTransport collapse_transport(std::int64_t a, std::int64_t b) {
  const std::int64_t before = ((b / 2 + a) / 2) / 2;
  const std::int64_t after = ((b + 1) / 2 + a - 2) / 2;
  return {before, after};
}

}  // namespace pebbling

#pragma once

// Exact reachability and transport decisions by memoized depth-first search
// over distribution states.
//
// Pruning uses the weight function P(D) = sum_v D(v) / 2^dist(v, target).
// A move u -> w removes 2 / 2^dist(u) and adds 1 / 2^dist(w) with
// dist(w) >= dist(u) - 1, so P never increases, and D(target) <= P(D) always.
// Any state with P < 1 is therefore dead, and in a maximisation no state with
// floor(P) <= best can improve on best.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <unordered_set>
#include <vector>

#include "pebbling/distribution.hpp"
#include "pebbling/error.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

/// Run-time caps for a single engine query. `max_states == 0` means unbounded.
struct SearchLimits {
  std::size_t max_vertices = 20;
  std::size_t max_pebbles = 64;
  std::uint64_t max_states = 0;
};

struct SolveReport {
  bool verdict = false;
  std::optional<MoveSequence> witness;  // present iff verdict
  std::uint64_t states_explored = 0;
};

struct SolvabilityReport {
  bool solvable = false;
  /// Per-vertex verdicts; nullopt where the check stopped early.
  std::vector<std::optional<bool>> reachable;
  std::uint64_t states_explored = 0;
};

namespace detail {

using Weight = unsigned __int128;
inline constexpr std::size_t kWeightShift = 63;
inline constexpr Weight kUnitWeight = Weight{1} << kWeightShift;

inline std::vector<std::size_t> distances_from(const Graph& g, Vertex source) {
  constexpr auto unreachable = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.size(), unreachable);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v))
      if (dist[w] == unreachable) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
  }
  return dist;
}

inline void check_query(const Graph& g, const Distribution& d, Vertex target,
                        const SearchLimits& limits) {
  require_companion(g, d);
  if (target >= g.size()) throw Error(ErrorKind::invalid_argument, "target out of range");
  if (g.size() > limits.max_vertices)
    throw Error(ErrorKind::size_limit, "graph has " + std::to_string(g.size()) +
                                           " vertices; engine limit is " +
                                           std::to_string(limits.max_vertices));
  if (d.size() > limits.max_pebbles || d.size() > 255)
    throw Error(ErrorKind::size_limit, "distribution has " + std::to_string(d.size()) +
                                           " pebbles; engine limit is " +
                                           std::to_string(std::min<std::size_t>(limits.max_pebbles, 255)));
}

/// Shared state of one query: the target, per-vertex weights and the memo.
class Search {
 public:
  Search(const Graph& g, const Distribution& d, Vertex target, const SearchLimits& limits)
      : graph_(g), target_(target), max_states_(limits.max_states) {
    check_query(g, d, target, limits);
    const auto dist = distances_from(g, target);
    weights_.resize(g.size(), 0);
    for (Vertex v = 0; v < g.size(); ++v)
      if (dist[v] <= kWeightShift) weights_[v] = Weight{1} << (kWeightShift - dist[v]);
    state_.resize(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
      state_[v] = static_cast<char>(d[v]);
      potential_ += weights_[v] * d[v];
    }
  }

  std::uint64_t states() const noexcept { return states_; }
  const MoveSequence& path() const noexcept { return path_; }

  bool reach() {
    if (count(target_) > 0) return true;
    if (potential_ < kUnitWeight) return false;
    if (!visit()) return false;
    const std::size_t n = graph_.size();
    for (Vertex from = 0; from < n; ++from) {
      if (count(from) < 2) continue;
      for (Vertex to : graph_.neighbors(from)) {
        apply(from, to);
        if (reach()) return true;
        undo(from, to);
      }
    }
    return false;
  }

  Count maximise() {
    best_ = std::max(best_, count(target_));
    if (static_cast<Count>(potential_ >> kWeightShift) <= best_) return best_;
    if (!visit()) return best_;
    const std::size_t n = graph_.size();
    for (Vertex from = 0; from < n; ++from) {
      if (count(from) < 2) continue;
      for (Vertex to : graph_.neighbors(from)) {
        apply(from, to);
        maximise();
        undo(from, to);
      }
    }
    return best_;
  }

 private:
  Count count(Vertex v) const { return static_cast<unsigned char>(state_[v]); }

  bool visit() {
    if (!memo_.insert(state_).second) return false;
    if (++states_ > max_states_ && max_states_ != 0)
      throw Error(ErrorKind::budget,
                  "search exceeded " + std::to_string(max_states_) + " states");
    return true;
  }

  void apply(Vertex from, Vertex to) {
    state_[from] = static_cast<char>(count(from) - 2);
    state_[to] = static_cast<char>(count(to) + 1);
    potential_ = potential_ - 2 * weights_[from] + weights_[to];
    path_.push_back({from, to});
  }

  void undo(Vertex from, Vertex to) {
    state_[from] = static_cast<char>(count(from) + 2);
    state_[to] = static_cast<char>(count(to) - 1);
    potential_ = potential_ + 2 * weights_[from] - weights_[to];
    path_.pop_back();
  }

  const Graph& graph_;
  Vertex target_;
  std::uint64_t max_states_;
  std::vector<Weight> weights_;
  std::string state_;
  Weight potential_ = 0;
  std::unordered_set<std::string> memo_;
  MoveSequence path_;
  std::uint64_t states_ = 0;
  Count best_ = 0;
};

}  // namespace detail

/// Can some move sequence put a pebble on `target`? The witness is the first
/// sequence found in vertex-index order.
inline SolveReport is_reachable(const Graph& g, const Distribution& d, Vertex target,
                                const SearchLimits& limits = {}) {
  detail::Search search(g, d, target, limits);
  SolveReport report;
  report.verdict = search.reach();
  if (report.verdict) report.witness = search.path();
  report.states_explored = search.states();
  return report;
}

/// Checks targets in increasing index. With `stop_at_first_failure` the
/// remaining vertices are left unexamined once one is unreachable.
inline SolvabilityReport check_solvability(const Graph& g, const Distribution& d,
                                           const SearchLimits& limits = {},
                                           bool stop_at_first_failure = true) {
  require_companion(g, d);
  SolvabilityReport report;
  report.solvable = true;
  report.reachable.assign(g.size(), std::nullopt);
  for (Vertex t = 0; t < g.size(); ++t) {
    const SolveReport r = is_reachable(g, d, t, limits);
    report.states_explored += r.states_explored;
    report.reachable[t] = r.verdict;
    if (!r.verdict) {
      report.solvable = false;
      if (stop_at_first_failure) break;
    }
  }
  return report;
}

inline bool is_solvable(const Graph& g, const Distribution& d, const SearchLimits& limits = {}) {
  return check_solvability(g, d, limits).solvable;
}

/// Largest pile that any move sequence can leave on `target`.
inline Count max_pebbles_to(const Graph& g, const Distribution& d, Vertex target,
                            const SearchLimits& limits = {}) {
  detail::Search search(g, d, target, limits);
  return search.maximise();
}

/// Transport on a path, accumulated toward the target from both ends:
/// carry <- floor((carry + D(v)) / 2).
inline Count max_pebbles_to_path_greedy(const Graph& g, const Distribution& d, Vertex target) {
  if (!g.is_canonical_path())
    throw Error(ErrorKind::invalid_argument, "greedy transport requires a path graph");
  require_companion(g, d);
  if (target >= g.size()) throw Error(ErrorKind::invalid_argument, "target out of range");
  Count left = 0;
  for (Vertex v = 0; v < target; ++v) left = (left + d[v]) / 2;
  Count right = 0;
  for (Vertex v = g.size() - 1; v > target; --v) right = (right + d[v]) / 2;
  return left + right + d[target];
}

}  // namespace pebbling

#pragma once

// Optimal pebbling numbers of paths and cycles: closed forms, the explicit
// optimal distributions, and exact brute-force values of f and f_opt for
// small graphs, including the product bound f_opt(G x H) <= f_opt(G) f_opt(H).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "pebbling/distribution.hpp"
#include "pebbling/engine.hpp"
#include "pebbling/error.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

struct TRDecomposition {
  std::size_t t = 0;
  std::size_t r = 0;  // in {0, 1, 2}
  friend bool operator==(const TRDecomposition&, const TRDecomposition&) = default;
};

/// n = 3t + r with r in {0, 1, 2}.
inline TRDecomposition decompose_3t_r(std::size_t n) { return {n / 3, n % 3}; }

inline std::size_t formula_fopt_path(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "path needs n >= 1");
  const auto [t, r] = decompose_3t_r(n);
  return 2 * t + r;
}

inline std::size_t formula_fopt_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "cycle needs n >= 3");
  const auto [t, r] = decompose_3t_r(n);
  return 2 * t + r;
}

namespace detail {

// Two pebbles on every vertex at (1-based) position i = 2 mod 3 up to 3t, then
// one pebble on each of the r leftover vertices.
inline Distribution three_block_distribution(std::size_t n) {
  const auto [t, r] = decompose_3t_r(n);
  Distribution d(n);
  for (std::size_t i = 1; i <= 3 * t; ++i)
    if (i % 3 == 2) d.add(i - 1, 2);
  for (std::size_t k = 0; k < r; ++k) d.add(3 * t + k, 1);
  return d;
}

}  // namespace detail

inline Distribution construct_optimal_path_distribution(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "path needs n >= 1");
  return detail::three_block_distribution(n);
}

inline Distribution construct_optimal_cycle_distribution(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "cycle needs n >= 3");
  return detail::three_block_distribution(n);
}

/// Sufficient test used by the constructions: every vertex is occupied or
/// adjacent to a vertex holding at least two pebbles.
inline bool covered_by_two_piles(const Graph& g, const Distribution& d) {
  require_companion(g, d);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (d.occupied(v)) continue;
    const auto nbrs = g.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return d[w] >= 2; })) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Compositions of k pebbles over n vertices.

/// Colexicographic order: compares the last vertex first.
inline bool colex_less(const std::vector<Count>& a, const std::vector<Count>& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

/// Walks all compositions of `pebbles` into `vertices` parts in colex order,
/// starting from [k, 0, ..., 0] and ending at [0, ..., 0, k].
class CompositionEnumerator {
 public:
  CompositionEnumerator(std::size_t vertices, Count pebbles) : counts_(vertices, 0) {
    if (vertices == 0) throw Error(ErrorKind::invalid_argument, "need at least one vertex");
    counts_[0] = pebbles;
  }

  const std::vector<Count>& current() const noexcept { return counts_; }

  /// Advances; returns false once the last composition has been passed.
  bool next() {
    std::size_t first = 0;
    while (first < counts_.size() && counts_[first] == 0) ++first;
    if (first + 1 >= counts_.size()) return false;
    const Count head = counts_[first];
    counts_[first] = 0;
    counts_[0] = head - 1;
    counts_[first + 1] += 1;
    return true;
  }

 private:
  std::vector<Count> counts_;
};

namespace detail {

// Images of `counts` under the automorphisms known for the family: reversal
// for paths, the dihedral group for cycles. True when no image precedes it.
inline bool is_orbit_minimum(Family family, const std::vector<Count>& counts) {
  const std::size_t n = counts.size();
  std::vector<Count> image(n);
  if (family == Family::path) {
    std::reverse_copy(counts.begin(), counts.end(), image.begin());
    return !colex_less(image, counts);
  }
  if (family == Family::cycle) {
    for (std::size_t shift = 0; shift < n; ++shift) {
      for (std::size_t i = 0; i < n; ++i) image[i] = counts[(i + shift) % n];
      if (colex_less(image, counts)) return false;
      for (std::size_t i = 0; i < n; ++i) image[i] = counts[(shift + n - i) % n];
      if (colex_less(image, counts)) return false;
    }
  }
  return true;
}

struct Verdict {
  bool hit = false;
  std::uint64_t states = 0;
};

struct Outcome {
  Verdict verdict;
  std::exception_ptr error;
};

// Evaluates `check` over a batch on `jobs` threads. Errors are captured per
// item so the caller can surface them in enumeration order.
template <typename Check>
std::vector<Outcome> evaluate_batch(const std::vector<std::vector<Count>>& batch, std::size_t jobs,
                                    const Check& check) {
  std::vector<Outcome> outcomes(batch.size());
  auto work = [&](std::size_t offset, std::size_t stride) {
    for (std::size_t i = offset; i < batch.size(); i += stride) {
      try {
        outcomes[i].verdict = check(batch[i]);
      } catch (...) {
        outcomes[i].error = std::current_exception();
      }
    }
  };
  if (jobs <= 1 || batch.size() < 2) {
    work(0, 1);
  } else {
    std::vector<std::jthread> workers;
    for (std::size_t j = 0; j < jobs; ++j) workers.emplace_back(work, j, jobs);
  }
  return outcomes;
}

inline constexpr std::size_t kBatchSize = 2048;

struct FirstHit {
  std::optional<std::vector<Count>> hit;
  std::uint64_t examined = 0;
  std::uint64_t states = 0;
};

// Scans compositions of k in colex order for the first one satisfying
// `check`. Counters cover the prefix up to and including the hit, so they do
// not depend on the number of workers.
template <typename Check>
FirstHit find_first_composition(std::size_t vertices, Count k, Family symmetry, std::size_t jobs,
                                std::uint64_t budget, std::uint64_t already_examined,
                                const Check& check) {
  FirstHit result;
  CompositionEnumerator compositions(vertices, k);
  bool more = true;
  while (more) {
    std::vector<std::vector<Count>> batch;
    while (more && batch.size() < kBatchSize) {
      if (is_orbit_minimum(symmetry, compositions.current())) batch.push_back(compositions.current());
      more = compositions.next();
    }
    bool truncated = false;
    if (budget != 0) {
      const std::uint64_t used = already_examined + result.examined;
      const std::uint64_t remaining = budget > used ? budget - used : 0;
      if (batch.size() > remaining) {
        batch.resize(remaining);
        truncated = true;
      }
    }
    const auto outcomes = evaluate_batch(batch, jobs, check);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (outcomes[i].error) std::rethrow_exception(outcomes[i].error);
      ++result.examined;
      result.states += outcomes[i].verdict.states;
      if (outcomes[i].verdict.hit) {
        result.hit = batch[i];
        return result;
      }
    }
    if (truncated) throw Error(ErrorKind::budget, "distribution budget exhausted");
  }
  return result;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Brute-force invariants.

enum class InvariantKind { optimal_pebbling, pebbling };

inline const char* to_string(InvariantKind kind) {
  return kind == InvariantKind::optimal_pebbling ? "optimal_pebbling" : "pebbling";
}

struct NumberReport {
  InvariantKind invariant_kind = InvariantKind::optimal_pebbling;
  std::size_t value = 0;
  /// optimal_pebbling: solvable, size == value. pebbling: unsolvable, size == value - 1.
  std::optional<Distribution> witness;
  std::uint64_t distributions_examined = 0;
  std::uint64_t states_explored = 0;
};

struct OptimalSearchOptions {
  SearchLimits engine{};
  std::size_t max_vertices = 20;
  std::size_t jobs = 1;
  /// 0 = unbounded; counts distributions handed to the engine.
  std::uint64_t max_distributions = 0;
  /// Skip distributions that are not orbit minima under the path/cycle symmetry.
  bool use_symmetry = true;
};

/// Least k for which some k-pebble distribution is solvable, by trying k = 1,
/// 2, ... and enumerating compositions in colex order. The witness is the
/// first solvable distribution in that order.
inline NumberReport optimal_pebbling_number(const Graph& g, const OptimalSearchOptions& options = {}) {
  if (g.size() > options.max_vertices)
    throw Error(ErrorKind::size_limit, "optimal pebbling search limited to " +
                                           std::to_string(options.max_vertices) + " vertices");
  const Family symmetry = options.use_symmetry ? g.family() : Family::other;
  NumberReport report;
  report.invariant_kind = InvariantKind::optimal_pebbling;

  auto solvable = [&](const std::vector<Count>& counts) {
    const auto r = check_solvability(g, Distribution(counts), options.engine);
    return detail::Verdict{r.solvable, r.states_explored};
  };

  // One pebble on every vertex is always solvable, so k never exceeds n.
  for (Count k = 1; k <= g.size(); ++k) {
    detail::FirstHit scan;
    try {
      scan = detail::find_first_composition(g.size(), k, symmetry, options.jobs,
                                            options.max_distributions,
                                            report.distributions_examined, solvable);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::budget) throw;
      throw BudgetError(k, g.size(),
                        std::string(e.what()) + "; f_opt in [" + std::to_string(k) + ", " +
                            std::to_string(g.size()) + "]");
    }
    report.distributions_examined += scan.examined;
    report.states_explored += scan.states;
    if (scan.hit) {
      report.value = k;
      report.witness = Distribution(*scan.hit);
      return report;
    }
  }
  throw Error(ErrorKind::structure, "no solvable distribution found");  // unreachable
}

struct PebblingSearchOptions {
  SearchLimits engine{};
  std::size_t max_vertices = 8;
  std::size_t max_value = 32;
  std::size_t jobs = 1;
};

/// Least k such that every k-pebble distribution is solvable. Each unsolvable
/// distribution of size k raises the lower bound to k + 1; the last one found
/// is returned as the witness.
inline NumberReport pebbling_number(const Graph& g, const PebblingSearchOptions& options = {}) {
  if (g.size() > options.max_vertices)
    throw Error(ErrorKind::size_limit, "pebbling number search limited to " +
                                           std::to_string(options.max_vertices) + " vertices");
  NumberReport report;
  report.invariant_kind = InvariantKind::pebbling;

  auto unsolvable = [&](const std::vector<Count>& counts) {
    const auto r = check_solvability(g, Distribution(counts), options.engine);
    return detail::Verdict{!r.solvable, r.states_explored};
  };

  for (Count k = 0; k <= options.max_value; ++k) {
    const auto scan =
        detail::find_first_composition(g.size(), k, g.family(), options.jobs, 0, 0, unsolvable);
    report.distributions_examined += scan.examined;
    report.states_explored += scan.states;
    if (scan.hit) {
      report.witness = Distribution(*scan.hit);
      continue;
    }
    report.value = k;
    return report;
  }
  throw Error(ErrorKind::size_limit,
              "pebbling number exceeds " + std::to_string(options.max_value));
}

/// Places dg(v) * dh(w) pebbles on product vertex (v, w).
inline Distribution product_distribution(const Distribution& dg, const Distribution& dh) {
  Distribution d(dg.vertex_count() * dh.vertex_count());
  for (Vertex a = 0; a < dg.vertex_count(); ++a)
    for (Vertex b = 0; b < dh.vertex_count(); ++b)
      d.add(product_index(a, b, dh.vertex_count()), dg[a] * dh[b]);
  return d;
}

struct GrahamRow {
  std::size_t fopt_g = 0;
  std::size_t fopt_h = 0;
  std::size_t fopt_product = 0;
  bool holds = false;
  bool tight = false;
  std::uint64_t distributions_examined = 0;
  std::uint64_t states_explored = 0;
};

struct GrahamOptions {
  OptimalSearchOptions search{};
  std::size_t max_product_vertices = 16;
};

/// Brute-force instance check of f_opt(G x H) <= f_opt(G) f_opt(H).
inline GrahamRow graham_optimal_check(const Graph& g, const Graph& h,
                                      const GrahamOptions& options = {}) {
  if (g.size() * h.size() > options.max_product_vertices)
    throw Error(ErrorKind::size_limit, "product check limited to " +
                                           std::to_string(options.max_product_vertices) +
                                           " vertices");
  const Graph product = cartesian_product(g, h);
  const auto rg = optimal_pebbling_number(g, options.search);
  const auto rh = optimal_pebbling_number(h, options.search);
  const auto rp = optimal_pebbling_number(product, options.search);
  GrahamRow row;
  row.fopt_g = rg.value;
  row.fopt_h = rh.value;
  row.fopt_product = rp.value;
  row.holds = rp.value <= rg.value * rh.value;
  row.tight = rp.value == rg.value * rh.value;
  row.distributions_examined =
      rg.distributions_examined + rh.distributions_examined + rp.distributions_examined;
  row.states_explored = rg.states_explored + rh.states_explored + rp.states_explored;
  return row;
}

}  // namespace pebbling

#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "pebbling/error.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

using Count = std::uint32_t;

/// Pebble counts per vertex. The total is kept in step with the counts.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::size_t vertices) : counts_(vertices, 0) {}
  explicit Distribution(std::vector<Count> counts)
      : counts_(std::move(counts)),
        size_(std::accumulate(counts_.begin(), counts_.end(), std::size_t{0})) {}
  Distribution(std::initializer_list<Count> counts) : Distribution(std::vector<Count>(counts)) {}

  std::size_t vertex_count() const noexcept { return counts_.size(); }
  /// Total number of pebbles.
  std::size_t size() const noexcept { return size_; }
  Count operator[](Vertex v) const { return counts_.at(v); }
  bool occupied(Vertex v) const { return counts_.at(v) > 0; }
  const std::vector<Count>& counts() const noexcept { return counts_; }

  void add(Vertex v, Count pebbles) {
    counts_.at(v) += pebbles;
    size_ += pebbles;
  }

  void remove(Vertex v, Count pebbles) {
    if (counts_.at(v) < pebbles)
      throw Error(ErrorKind::invalid_argument,
                  "vertex " + std::to_string(v) + " holds fewer than " + std::to_string(pebbles));
    counts_[v] -= pebbles;
    size_ -= pebbles;
  }

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.counts_ == b.counts_;
  }

 private:
  std::vector<Count> counts_;
  std::size_t size_ = 0;
};

struct Move {
  Vertex from;
  Vertex to;
  friend bool operator==(const Move&, const Move&) = default;
};

using MoveSequence = std::vector<Move>;

/// "0,2,0,1" -> [0,2,0,1]. Strict: digits only, no empty fields.
inline Distribution parse_distribution(std::string_view text) {
  std::vector<Count> counts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    Count value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
      throw ParseError(start, "bad pebble count \"" + std::string(field) + "\" at offset " +
                                  std::to_string(start));
    counts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Distribution(std::move(counts));
}

inline std::string format_distribution(const Distribution& d) {
  std::string out;
  for (std::size_t i = 0; i < d.vertex_count(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out;
}

inline void require_companion(const Graph& g, const Distribution& d) {
  if (d.vertex_count() != g.size())
    throw Error(ErrorKind::invalid_argument,
                "distribution has " + std::to_string(d.vertex_count()) + " entries, graph has " +
                    std::to_string(g.size()) + " vertices");
}

inline Distribution apply_move(const Graph& g, Distribution d, Move m) {
  require_companion(g, d);
  if (m.from >= g.size() || m.to >= g.size() || !g.adjacent(m.from, m.to))
    throw Error(ErrorKind::illegal_move, "vertices " + std::to_string(m.from) + " and " +
                                             std::to_string(m.to) + " are not adjacent");
  if (d[m.from] < 2)
    throw Error(ErrorKind::illegal_move,
                "vertex " + std::to_string(m.from) + " holds fewer than 2 pebbles");
  d.remove(m.from, 2);
  d.add(m.to, 1);
  return d;
}

/// Folds apply_move over `moves`; throws ReplayError carrying the index of the
/// first illegal move.
inline Distribution replay(const Graph& g, Distribution d, const MoveSequence& moves) {
  for (std::size_t k = 0; k < moves.size(); ++k) {
    try {
      d = apply_move(g, std::move(d), moves[k]);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::illegal_move) throw;
      throw ReplayError(k, "move " + std::to_string(k) + ": " + e.what());
    }
  }
  return d;
}

}  // namespace pebbling

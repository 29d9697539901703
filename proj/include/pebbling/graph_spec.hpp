#pragma once

// Textual graph descriptions:
//
//   SPEC := "path:" INT | "cycle:" INT | "product(" SPEC "," SPEC ")" | "file:" PATH
//
// Inside a product a file path ends at the next ',' or ')'.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pebbling/error.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

struct GraphSpec {
  enum class Kind { path, cycle, product, file };

  Kind kind = Kind::path;
  std::size_t n = 0;
  std::string file;
  std::vector<GraphSpec> factors;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GraphSpec parse() {
    GraphSpec spec = parse_spec(0);
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  GraphSpec parse_spec(int depth) {
    GraphSpec spec;
    if (accept("path:")) {
      spec.kind = GraphSpec::Kind::path;
      spec.n = parse_int();
    } else if (accept("cycle:")) {
      spec.kind = GraphSpec::Kind::cycle;
      spec.n = parse_int();
    } else if (accept("product(")) {
      spec.kind = GraphSpec::Kind::product;
      spec.factors.push_back(parse_spec(depth + 1));
      expect(',');
      spec.factors.push_back(parse_spec(depth + 1));
      expect(')');
    } else if (accept("file:")) {
      spec.kind = GraphSpec::Kind::file;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (depth == 0 || (text_[pos_] != ',' && text_[pos_] != ')')))
        ++pos_;
      if (pos_ == start) fail("empty file path");
      spec.file = std::string(text_.substr(start, pos_ - start));
    } else {
      fail("expected path:, cycle:, product( or file:");
    }
    return spec;
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t parse_int() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(pos_, "graph spec \"" + std::string(text_) + "\" at position " +
                               std::to_string(pos_) + ": " + message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Throws ParseError with a 0-based character position.
inline GraphSpec parse_graph_spec_text(std::string_view text) {
  return detail::SpecParser(text).parse();
}

inline std::string to_string(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphSpec::Kind::path: return "path:" + std::to_string(spec.n);
    case GraphSpec::Kind::cycle: return "cycle:" + std::to_string(spec.n);
    case GraphSpec::Kind::file: return "file:" + spec.file;
    case GraphSpec::Kind::product:
      return "product(" + to_string(spec.factors.at(0)) + "," + to_string(spec.factors.at(1)) + ")";
  }
  return {};
}

inline Graph build_graph(const GraphSpec& spec, const GraphLimits& limits = {}) {
  switch (spec.kind) {
    case GraphSpec::Kind::path: return make_path(spec.n);
    case GraphSpec::Kind::cycle: return make_cycle(spec.n);
    case GraphSpec::Kind::file: return load_edge_list(spec.file);
    case GraphSpec::Kind::product:
      return cartesian_product(build_graph(spec.factors.at(0), limits),
                               build_graph(spec.factors.at(1), limits), limits);
  }
  throw Error(ErrorKind::invalid_argument, "unknown graph spec kind");
}

inline Graph parse_graph_spec(std::string_view text, const GraphLimits& limits = {}) {
  return build_graph(parse_graph_spec_text(text), limits);
}

}  // namespace pebbling

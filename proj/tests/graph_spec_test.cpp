#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "pebbling/graph_spec.hpp"

using namespace pebbling;

TEST(GraphSpec, Examples) {
  EXPECT_EQ(parse_graph_spec("cycle:7"), make_cycle(7));
  const Graph grid = parse_graph_spec("product(path:3,path:3)");
  EXPECT_EQ(grid.size(), 9u);
  EXPECT_EQ(grid.edge_count(), 12u);
  try {
    parse_graph_spec("path:0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
  }
}

TEST(GraphSpec, NestedProducts) {
  const Graph cube = parse_graph_spec("product(product(path:2,path:2),path:2)");
  EXPECT_EQ(cube.size(), 8u);
  EXPECT_EQ(cube.edge_count(), 12u);
  EXPECT_THROW(parse_graph_spec("product(path:9,path:8)"), Error);
  EXPECT_THROW(parse_graph_spec("product(path:5,path:4)", GraphLimits{16, 10}), Error);
}

TEST(GraphSpec, ParseErrorsCarryPosition) {
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"", 0},           {"star:4", 0},           {"path:", 5},
      {"path:3x", 6},    {"product(path:3", 14},  {"product(path:3;path:2)", 14},
      {"cycle:-1", 6},   {"product(path:2,path:2", 21}, {"file:", 5}};
  for (const auto& [text, pos] : cases) {
    try {
      parse_graph_spec_text(text);
      ADD_FAILURE() << "accepted \"" << text << "\"";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), pos) << text;
      EXPECT_EQ(e.kind(), ErrorKind::parse);
    }
  }
}

TEST(GraphSpec, RoundTrip) {
  for (const char* text : {"path:1", "cycle:12", "product(path:3,cycle:4)",
                           "product(product(path:2,path:2),cycle:3)", "file:graphs/a b.txt",
                           "product(file:x.txt,path:2)"}) {
    const GraphSpec spec = parse_graph_spec_text(text);
    EXPECT_EQ(to_string(spec), text);
    EXPECT_EQ(parse_graph_spec_text(to_string(spec)), spec);
  }
}

TEST(GraphSpec, FileInsideProduct) {
  const auto path = std::filesystem::temp_directory_path() / "pebbling_spec_edge.txt";
  {
    std::ofstream out(path);
    out << "3\n0 1\n1 2\n";
  }
  const Graph g = parse_graph_spec("product(file:" + path.string() + ",path:2)");
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(g.edge_count(), 7u);
  EXPECT_EQ(parse_graph_spec("file:" + path.string()), make_path(3));
  std::filesystem::remove(path);
  EXPECT_THROW(parse_graph_spec("file:" + path.string()), Error);
}

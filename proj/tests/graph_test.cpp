#include <gtest/gtest.h>

#include <functional>
#include <sstream>

#include "pebbling/graph.hpp"

using namespace pebbling;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::parse;
}

}  // namespace

TEST(Path, Basics) {
  const Graph p1 = make_path(1);
  EXPECT_EQ(p1.size(), 1u);
  EXPECT_EQ(p1.edge_count(), 0u);

  const Graph p2 = make_path(2);
  EXPECT_TRUE(p2.adjacent(0, 1));
  EXPECT_EQ(p2.edge_count(), 1u);

  const Graph p5 = make_path(5);
  EXPECT_EQ(p5.edge_count(), 4u);
  EXPECT_EQ(p5.degree(0), 1u);
  EXPECT_EQ(p5.degree(4), 1u);
  EXPECT_EQ(p5.degree(2), 2u);
  EXPECT_EQ(p5.label(), "path:5");
  EXPECT_TRUE(p5.is_canonical_path());

  EXPECT_EQ(kind_of([] { make_path(0); }), ErrorKind::invalid_argument);
}

TEST(Cycle, Basics) {
  const Graph c3 = make_cycle(3);
  EXPECT_EQ(c3.size(), 3u);
  EXPECT_EQ(c3.edge_count(), 3u);

  const Graph c4 = make_cycle(4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(c4.degree(v), 2u);

  const Graph c6 = make_cycle(6);
  EXPECT_EQ(c6.edge_count(), 6u);
  // Bipartite: every edge joins an even and an odd index.
  for (auto [u, v] : c6.edges()) EXPECT_NE(u % 2, v % 2);

  EXPECT_EQ(kind_of([] { make_cycle(2); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { make_cycle(1); }), ErrorKind::invalid_argument);
}

TEST(Graph, EdgeCountsAndConnectivity) {
  for (std::size_t n = 1; n <= 20; ++n) {
    EXPECT_EQ(make_path(n).edge_count(), n - 1);
    EXPECT_TRUE(make_path(n).connected());
  }
  for (std::size_t n = 3; n <= 20; ++n) {
    EXPECT_EQ(make_cycle(n).edge_count(), n);
    EXPECT_TRUE(make_cycle(n).connected());
  }
}

TEST(Graph, RejectsBadEdges) {
  const std::vector<std::pair<Vertex, Vertex>> loop{{1, 1}};
  EXPECT_EQ(kind_of([&] { Graph(3, loop); }), ErrorKind::invalid_argument);
  const std::vector<std::pair<Vertex, Vertex>> out{{0, 3}};
  EXPECT_EQ(kind_of([&] { Graph(3, out); }), ErrorKind::invalid_argument);
  const std::vector<std::pair<Vertex, Vertex>> none;
  EXPECT_EQ(kind_of([&] { Graph(0, none); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([&] { Graph(65, none); }), ErrorKind::size_limit);

  const std::vector<std::pair<Vertex, Vertex>> dup{{0, 1}, {1, 0}, {0, 1}};
  EXPECT_EQ(Graph(2, dup).edge_count(), 1u);
}

TEST(CartesianProduct, SmallCases) {
  const Graph square = cartesian_product(make_path(2), make_path(2));
  EXPECT_EQ(square.size(), 4u);
  EXPECT_EQ(square.edge_count(), 4u);
  EXPECT_TRUE(are_isomorphic(square, make_cycle(4)));

  const Graph grid = cartesian_product(make_path(3), make_path(3));
  EXPECT_EQ(grid.size(), 9u);
  EXPECT_EQ(grid.edge_count(), 12u);
  EXPECT_EQ(grid.degree(product_index(1, 1, 3)), 4u);
  EXPECT_EQ(grid.label(), "product(path:3,path:3)");

  const Graph c5 = make_cycle(5);
  EXPECT_TRUE(are_isomorphic(cartesian_product(make_path(1), c5), c5));
  EXPECT_TRUE(are_isomorphic(cartesian_product(c5, make_path(1)), c5));
}

TEST(CartesianProduct, EncodingRoundTrip) {
  for (std::size_t right = 1; right <= 8; ++right)
    for (Vertex a = 0; a < 8; ++a)
      for (Vertex b = 0; b < right; ++b) {
        const auto [x, y] = product_coordinates(product_index(a, b, right), right);
        EXPECT_EQ(x, a);
        EXPECT_EQ(y, b);
      }
}

TEST(CartesianProduct, EdgeRuleAndCount) {
  std::vector<Graph> factors;
  for (std::size_t n = 1; n <= 8; ++n) factors.push_back(make_path(n));
  for (std::size_t n = 3; n <= 8; ++n) factors.push_back(make_cycle(n));
  for (const Graph& g : factors)
    for (const Graph& h : factors) {
      if (g.size() * h.size() > 64) continue;
      const Graph p = cartesian_product(g, h);
      EXPECT_EQ(p.edge_count(), g.size() * h.edge_count() + h.size() * g.edge_count())
          << g.label() << " x " << h.label();
      for (Vertex u = 0; u < p.size(); ++u)
        for (Vertex v = 0; v < p.size(); ++v) {
          const auto [g1, h1] = product_coordinates(u, h.size());
          const auto [g2, h2] = product_coordinates(v, h.size());
          const bool expected = (g1 == g2 && h.adjacent(h1, h2)) || (h1 == h2 && g.adjacent(g1, g2));
          ASSERT_EQ(p.adjacent(u, v), expected);
        }
    }
}

TEST(CartesianProduct, SizeCap) {
  EXPECT_EQ(kind_of([] { cartesian_product(make_path(9), make_path(8)); }), ErrorKind::size_limit);
  EXPECT_EQ(kind_of([] { cartesian_product(make_path(4), make_path(4), GraphLimits{15, 10}); }),
            ErrorKind::size_limit);
  EXPECT_NO_THROW(cartesian_product(make_path(8), make_path(8)));
}

TEST(CartesianProduct, CommutativeUpToIsomorphism) {
  const std::vector<Graph> factors{make_path(1), make_path(2), make_path(3), make_cycle(3),
                                   make_path(4)};
  for (const Graph& g : factors)
    for (const Graph& h : factors) {
      if (g.size() * h.size() > 10) continue;
      EXPECT_TRUE(are_isomorphic(cartesian_product(g, h), cartesian_product(h, g)))
          << g.label() << " x " << h.label();
    }
}

TEST(Smoothing, PathAndCycleExamples) {
  const SmoothingResult mid = remove_vertex_smoothing(make_path(5), 2);
  EXPECT_EQ(mid.graph, make_path(4));
  EXPECT_EQ(mid.graph.label(), "path:4");
  EXPECT_EQ(mid.index_map[1], std::optional<Vertex>(1));
  EXPECT_FALSE(mid.index_map[2].has_value());
  EXPECT_EQ(mid.index_map[3], std::optional<Vertex>(2));

  const SmoothingResult cyc = remove_vertex_smoothing(make_cycle(6), 4);
  EXPECT_EQ(cyc.graph, make_cycle(5));
  EXPECT_EQ(cyc.graph.family(), Family::cycle);

  const SmoothingResult end = remove_vertex_smoothing(make_path(2), 0);
  EXPECT_EQ(end.graph.size(), 1u);
  EXPECT_EQ(end.graph.edge_count(), 0u);
}

TEST(Smoothing, Errors) {
  const Graph star(4, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(kind_of([&] { remove_vertex_smoothing(star, 0); }), ErrorKind::unsupported_degree);
  EXPECT_EQ(kind_of([] { remove_vertex_smoothing(make_path(1), 0); }),
            ErrorKind::unsupported_degree);
  // C3: the two neighbours are already adjacent.
  EXPECT_EQ(kind_of([] { remove_vertex_smoothing(make_cycle(3), 1); }), ErrorKind::structure);
}

TEST(Smoothing, EveryVertexGivesTheShorterFamilyMember) {
  for (std::size_t n = 2; n <= 9; ++n)
    for (Vertex v = 0; v < n; ++v)
      EXPECT_TRUE(are_isomorphic(remove_vertex_smoothing(make_path(n), v).graph, make_path(n - 1)));
  for (std::size_t n = 4; n <= 9; ++n)
    for (Vertex v = 0; v < n; ++v)
      EXPECT_TRUE(
          are_isomorphic(remove_vertex_smoothing(make_cycle(n), v).graph, make_cycle(n - 1)));
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(are_isomorphic(make_cycle(4), cartesian_product(make_path(2), make_path(2))));
  EXPECT_FALSE(are_isomorphic(make_path(4), make_cycle(4)));
  const Graph grid = cartesian_product(make_path(3), make_path(3));
  EXPECT_TRUE(are_isomorphic(grid, grid));

  // Same degree sequence, not isomorphic: C6 versus two triangles.
  const Graph two_triangles(
      6, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_FALSE(are_isomorphic(make_cycle(6), two_triangles));

  // A relabelled path.
  const Graph shuffled(5, std::vector<std::pair<Vertex, Vertex>>{{3, 0}, {0, 4}, {4, 1}, {1, 2}});
  EXPECT_TRUE(are_isomorphic(shuffled, make_path(5)));

  EXPECT_EQ(kind_of([] { are_isomorphic(make_path(11), make_path(11)); }), ErrorKind::size_limit);
}

TEST(EdgeList, ParsesCommentsAndDuplicates) {
  std::istringstream in("# a comment\n4\n0 1\n\n1 2\n2 1\n  # indented comment\n2 3\n");
  const Graph g = read_edge_list(in);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g, make_path(4));
}

TEST(EdgeList, Errors) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  EXPECT_EQ(kind_of([&] { parse(""); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([&] { parse("3\n0 3\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([&] { parse("3\n1 1\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([&] { parse("3\n0 x\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([&] { parse("0\n"); }), ErrorKind::parse);
  try {
    parse("3\n0 1\n0 1 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

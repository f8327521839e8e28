#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace jumpgraph;

TEST(Jump, FourCycleWithEdgeGivesBowtie) {
  EXPECT_TRUE(is_isomorphic(jump(fixtures::gamma()), fixtures::bowtie()));
}

TEST(Jump, SingleEdgeGivesOneVertex) {
  const Graph j = jump(graphs::path(2));
  EXPECT_EQ(j.order(), 1u);
  EXPECT_EQ(j.size(), 0u);
}

TEST(Jump, K23GivesSixCycle) { EXPECT_TRUE(is_isomorphic(jump(graphs::complete_bipartite(2, 3)), graphs::cycle(6))); }

TEST(Jump, C5AndNetAreFixed) {
  EXPECT_TRUE(is_isomorphic(jump(graphs::cycle(5)), graphs::cycle(5)));
  EXPECT_TRUE(is_isomorphic(jump(graphs::net()), graphs::net()));
}

TEST(Jump, VertexIOfJumpIsEdgeI) {
  const Graph g = graphs::path(4);  // edges 0-1, 1-2, 2-3
  const Graph j = jump(g);
  EXPECT_TRUE(j.adjacent(0, 2));
  EXPECT_FALSE(j.adjacent(0, 1));
  EXPECT_FALSE(j.adjacent(1, 2));
}

TEST(Jump, EdgelessAndEmpty) {
  EXPECT_EQ(jump(Graph(5)).order(), 0u);
  EXPECT_EQ(jump(Graph()).order(), 0u);
}

TEST(Jump, MoreThan64EdgesIsRejected) { EXPECT_THROW(jump(graphs::complete(12)), vertex_limit_error); }

TEST(LineGraph, Examples) {
  EXPECT_TRUE(is_isomorphic(line_graph(graphs::cycle(3)), graphs::cycle(3)));
  EXPECT_TRUE(is_isomorphic(line_graph(graphs::star(3)), graphs::cycle(3)));
  EXPECT_TRUE(is_isomorphic(line_graph(graphs::path(4)), graphs::path(3)));
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(Graph(4)), graphs::complete(4));
  EXPECT_TRUE(is_isomorphic(complement(graphs::cycle(5)), graphs::cycle(5)));
  EXPECT_EQ(complement(graphs::path(2)), Graph(2));
}

TEST(StripIsolated, Examples) {
  EXPECT_EQ(strip_isolated(disjoint_union(graphs::path(2), Graph(3))), graphs::path(2));
  EXPECT_EQ(strip_isolated(Graph(5)).order(), 0u);
  EXPECT_EQ(strip_isolated(graphs::cycle(4)), graphs::cycle(4));
}

TEST(StripIsolated, KeepsRelativeOrder) {
  Graph g(5);
  g.add_edge(1, 4);
  g.add_edge(3, 4);
  const Graph s = strip_isolated(g);
  EXPECT_EQ(s, Graph(3, {{0, 2}, {1, 2}}));
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(graphs::cycle(5)), 2u);
  EXPECT_EQ(diameter(graphs::path(5)), 4u);
  EXPECT_EQ(diameter(graphs::matching(2)), std::nullopt);
  EXPECT_EQ(diameter(Graph(1)), 0u);
  EXPECT_THROW(diameter(Graph()), std::domain_error);
}

TEST(EdgeCountOfJump, Examples) {
  EXPECT_EQ(edge_count_of_jump(graphs::cycle(5)), 5u);
  EXPECT_EQ(edge_count_of_jump(graphs::star(4)), 0u);
  EXPECT_EQ(edge_count_of_jump(graphs::complete_bipartite(2, 3)), 6u);
}

TEST(GraphType, RejectsLoopsAndOutOfRange) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
  EXPECT_THROW(Graph(65), vertex_limit_error);
}

TEST(GraphType, EdgesAreLexicographic) {
  const Graph g(4, {{2, 3}, {0, 3}, {1, 0}, {0, 2}});
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {0, 3}, {2, 3}};
  EXPECT_EQ(g.edges(), expected);
}

// Properties over every graph on at most 7 vertices.
class GraphCatalogProperties : public ::testing::Test {
 protected:
  const GraphCatalog& catalog = fixtures::catalog_upto(7);
};

TEST_F(GraphCatalogProperties, JumpHasOneVertexPerEdge) {
  for (const auto* e : catalog.entries()) {
    EXPECT_EQ(jump(e->graph).order(), e->graph.size());
  }
}

TEST_F(GraphCatalogProperties, JumpIsComplementOfLineGraph) {
  for (const auto* e : catalog.entries()) {
    EXPECT_EQ(jump(e->graph), complement(line_graph(e->graph)));
  }
}

TEST_F(GraphCatalogProperties, ClosedFormEdgeCountsMatch) {
  for (const auto* e : catalog.entries()) {
    const Graph j = jump(e->graph);
    EXPECT_EQ(j.size(), edge_count_of_jump(e->graph));
    if (j.size() <= kMaxVertices) {
      EXPECT_EQ(jump(j).size(), edge_count_of_double_jump(e->graph));
    }
  }
}

TEST_F(GraphCatalogProperties, DisconnectedWithoutIsolatedVerticesHasConnectedJump) {
  for (const auto* e : catalog.entries())
    if (e->stripped.size() > 0 && !is_connected(e->stripped)) {
      EXPECT_TRUE(is_connected(jump(e->stripped)));
    }
}

TEST_F(GraphCatalogProperties, StrippingKeepsJumpIdentical) {
  for (const auto* e : catalog.entries()) {
    EXPECT_EQ(jump(strip_isolated(e->graph)), jump(e->graph));
  }
}

TEST_F(GraphCatalogProperties, ComplementIsAnInvolution) {
  for (const auto* e : catalog.entries()) {
    EXPECT_EQ(complement(complement(e->graph)), e->graph);
  }
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(to_graph6(Graph()), "?");
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(graphs::path(2)), "A_");
  EXPECT_EQ(to_graph6(graphs::cycle(5)), "Dhc");
  EXPECT_EQ(to_graph6(graphs::petersen()), "IheA@GUAo");
}

TEST(Graph6, RoundTripsEveryGraph) {
  for (const auto* e : fixtures::catalog_upto(7).entries()) {
    EXPECT_EQ(from_graph6(to_graph6(e->graph)), e->graph);
  }
  const Graph big = graphs::cycle(64);
  const std::string text = to_graph6(big);
  EXPECT_EQ(text.substr(0, 4), "~?@?");
  EXPECT_EQ(from_graph6(text), big);
}

TEST(Graph6, AcceptsHeader) { EXPECT_EQ(from_graph6(">>graph6<<Dhc"), graphs::cycle(5)); }

TEST(Graph6, Rejections) {
  EXPECT_THROW(from_graph6(""), format_error);
  EXPECT_THROW(from_graph6("Dh"), format_error);
  EXPECT_THROW(from_graph6("Dhc?"), format_error);
  EXPECT_THROW(from_graph6("D h"), format_error);
  EXPECT_THROW(from_graph6("A`"), format_error);  // padding bit set
  EXPECT_THROW(from_graph6("~?A?"), vertex_limit_error);
  try {
    from_graph6("D!c", 7);
    FAIL();
  } catch (const format_error& e) {
    EXPECT_EQ(e.line(), 7u);
  }
}

TEST(EdgeList, ParsesAndPrints) {
  const Graph g = parse_edge_list("# a path\nn 3\n0 1\n1 2\n");
  EXPECT_EQ(g, graphs::path(3));
  EXPECT_EQ(to_edge_list(g), "n 3\n0 1\n1 2\n");
  EXPECT_EQ(parse_edge_list("n 3;0 1;1 2"), graphs::path(3));
}

TEST(EdgeList, ErrorsNameTheLine) {
  auto line_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const format_error& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("n 3\n0 1\n1 5\n"), 3u);
  EXPECT_EQ(line_of("n 3\n0 0\n"), 2u);
  EXPECT_EQ(line_of("0 1\n"), 1u);
  EXPECT_EQ(line_of("n 2\n0 x\n"), 2u);
}

TEST(ParseGraph, DetectsFormat) {
  EXPECT_EQ(detect_format("n 4\n0 1\n"), GraphFormat::edge_list);
  EXPECT_EQ(detect_format("Dhc\n"), GraphFormat::graph6);
  EXPECT_EQ(parse_graph("Dhc\n"), graphs::cycle(5));
  EXPECT_EQ(parse_graph("n 2\n0 1\n"), graphs::path(2));
  EXPECT_THROW(parse_graph("Dhc\nDhc\n"), format_error);
}

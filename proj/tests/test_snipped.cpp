#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace jumpgraph;

namespace {

void expect_snipped(const Graph& h, const Graph& g) {
  const auto w = find_snipped(h, g);
  ASSERT_TRUE(w.has_value()) << to_graph6(h) << " in " << to_graph6(g);
  EXPECT_TRUE(verify_snipped(*w, h, g));
  EXPECT_EQ(w->edge_map.size(), h.size());
}

// A random quotient of a random edge subgraph of g, without isolated vertices.
Graph random_snipped(const Graph& g, std::mt19937_64& rng) {
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (rng() % 4 != 0) kept.push_back(e);
  std::vector<std::size_t> block(g.order());
  std::iota(block.begin(), block.end(), std::size_t{0});
  const std::size_t glues = rng() % 3;
  for (std::size_t i = 0; i < glues && g.order() > 1; ++i) {
    const std::size_t a = rng() % g.order();
    const std::size_t b = rng() % g.order();
    const std::size_t from = block[b];
    for (auto& x : block)
      if (x == from) x = block[a];
  }
  Graph q(g.order());
  for (const Edge& e : kept)
    if (block[e.u] != block[e.v]) q.add_edge(block[e.u], block[e.v]);
  return strip_isolated(q);
}

}  // namespace

TEST(FindSnipped, HostExamples) {
  expect_snipped(graphs::cycle(4), fixtures::snipped_host());
  expect_snipped(graphs::cycle(5), fixtures::snipped_host());
}

TEST(FindSnipped, GraphInItself) {
  for (const Graph& g : {fixtures::snipped_host(), graphs::petersen(), graphs::net(), fixtures::gamma()}) {
    const auto w = find_snipped(g, g);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(verify_snipped(*w, g, g));
  }
}

TEST(FindSnipped, FiveCycleInSixPath) {
  const Graph p6 = graphs::path(6);
  const auto w = find_snipped(graphs::cycle(5), p6);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_snipped(*w, graphs::cycle(5), p6));
  EXPECT_EQ(w->label[0], w->label[5]);
}

TEST(FindSnipped, K23ByGluingPathEnds) {
  const Graph g = fixtures::diameter4_six_edges_b();
  expect_snipped(graphs::complete_bipartite(2, 3), g);
  const auto w = *find_snipped(graphs::complete_bipartite(2, 3), g);
  EXPECT_EQ(w.label[0], w.label[4]);
}

TEST(FindSnipped, NegativeCases) {
  EXPECT_FALSE(find_snipped(graphs::cycle(5), graphs::path(5)).has_value());
  EXPECT_FALSE(find_snipped(graphs::cycle(3), graphs::star(5)).has_value());
  EXPECT_FALSE(find_snipped(graphs::path(2), Graph(4)).has_value());
  EXPECT_THROW(find_snipped(Graph(1), graphs::cycle(3)), std::invalid_argument);
}

TEST(VerifySnipped, RejectsBrokenWitnesses) {
  const Graph h = graphs::cycle(5);
  const Graph g = graphs::path(6);
  auto w = *find_snipped(h, g);

  auto double_use = w;
  double_use.edge_map[1] = double_use.edge_map[0];
  EXPECT_FALSE(verify_snipped(double_use, h, g));

  auto wrong_label = w;
  wrong_label.label[2] = (*wrong_label.label[2] + 2) % 5;
  EXPECT_FALSE(verify_snipped(wrong_label, h, g));

  auto non_edge = w;
  non_edge.edge_map[0] = g.size();
  EXPECT_FALSE(verify_snipped(non_edge, h, g));

  auto stray = w;
  stray.label.push_back(0);
  EXPECT_FALSE(verify_snipped(stray, h, g));
}

TEST(VerifySnipped, RejectsLabelOnUnusedVertex) {
  const Graph h = graphs::path(2);
  const Graph g = graphs::path(3);
  SnippedWitness w{{0}, {0, 1, std::nullopt}};
  EXPECT_TRUE(verify_snipped(w, h, g));
  w.label[2] = 1;
  EXPECT_FALSE(verify_snipped(w, h, g));
}

TEST(NamedGraphs, Shapes) {
  const auto named = named_graphs();
  ASSERT_EQ(named.size(), 6u);
  std::map<NamedTag, std::pair<std::size_t, std::size_t>> expected{
      {NamedTag::C5, {5, 5}},  {NamedTag::Net, {6, 6}},      {NamedTag::K23, {5, 6}},
      {NamedTag::Bug, {6, 6}}, {NamedTag::Stickman, {7, 6}}, {NamedTag::Pendulum, {6, 6}}};
  for (const auto& x : named) {
    EXPECT_EQ(std::make_pair(x.graph.order(), x.graph.size()), expected.at(x.tag));
  }

  auto degrees = [](const Graph& g) {
    auto d = g.degrees();
    std::sort(d.begin(), d.end());
    return d;
  };
  EXPECT_EQ(degrees(graphs::net()), (std::vector<std::size_t>{1, 1, 1, 3, 3, 3}));
  EXPECT_EQ(degrees(graphs::bug()), (std::vector<std::size_t>{1, 1, 2, 2, 2, 4}));
  EXPECT_EQ(degrees(graphs::stickman()), (std::vector<std::size_t>{1, 1, 1, 1, 1, 3, 4}));
  EXPECT_EQ(degrees(graphs::pendulum()), (std::vector<std::size_t>{1, 1, 2, 2, 3, 3}));
  EXPECT_EQ(to_string(NamedTag::Net), "Net");
}

TEST(NamedGraphs, AllDiverge) {
  for (const auto& x : named_graphs()) {
    const auto c = classify(x.graph);
    if (x.tag == NamedTag::C5 || x.tag == NamedTag::Net) {
      EXPECT_EQ(c.verdict, Verdict::converges) << to_string(x.tag);
    } else {
      EXPECT_EQ(c.verdict, Verdict::diverges) << to_string(x.tag);
    }
    EXPECT_FALSE(dissipation_number(x.graph, 4).has_value());
  }
}

// Snipped H in G gives J(H) as a subgraph of J(G).
TEST(SnippedProperty, JumpOfSnippedIsSubgraph) {
  std::mt19937_64 rng(2024);
  const auto entries = fixtures::catalog_upto(7).entries();
  std::size_t tested = 0;
  for (std::size_t round = 0; round < 400; ++round) {
    const Graph& g = entries[rng() % entries.size()]->graph;
    if (g.size() == 0 || g.size() > 12) continue;
    const Graph h = random_snipped(g, rng);
    if (h.size() == 0) continue;
    const auto w = find_snipped(h, g);
    ASSERT_TRUE(w.has_value()) << to_graph6(h) << " in " << to_graph6(g);
    ASSERT_TRUE(verify_snipped(*w, h, g));
    const Graph jh = jump(h);
    const Graph jg = jump(g);
    const auto sub = find_subgraph(jh, jg, false);
    ASSERT_TRUE(sub.has_value()) << to_graph6(h) << " in " << to_graph6(g);
    EXPECT_TRUE(is_valid_witness(jh, jg, *sub));
    ++tested;
  }
  EXPECT_GT(tested, 200u);
}

TEST(SnippedProperty, PlainSubgraphsAreSnipped) {
  for (const auto* e : fixtures::catalog_upto(5).entries()) {
    if (e->stripped.size() == 0) continue;
    for (const Graph& h : {graphs::path(3), graphs::cycle(3), graphs::path(4), graphs::matching(2)})
      if (find_subgraph(h, e->graph, false)) {
        EXPECT_TRUE(find_snipped(h, e->graph).has_value());
      }
  }
}

TEST(SnippedProperty, DissipationIsMonotone) {
  const auto& entries = dissipating_entries();
  for (const auto& h : entries) {
    if (h.graph.size() == 0 || isolated_vertices(h.graph) != 0) continue;
    for (const auto& g : entries) {
      if (g.graph.size() < h.graph.size()) continue;
      if (find_snipped(h.graph, g.graph)) {
        EXPECT_LE(h.d, g.d) << h.name << " in " << g.name;
      }
    }
  }
}

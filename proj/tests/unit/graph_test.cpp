// Copyright 2026 The racgrowth Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "racgrowth/error.hpp"
#include "racgrowth/graph.hpp"
#include "racgrowth/graph_io.hpp"
#include "support/reference.hpp"

namespace racgrowth {
namespace {

DefiningGraph golden() { return DefiningGraph::from_edges({"a", "b", "c"}, {{1, 2}}); }

TEST(VertexSetTest, BasicOperations) {
  VertexSet s = VertexSet::single(3).with(5).with(0);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.min(), 0u);
  EXPECT_TRUE(s.contains(5));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.without(0).min(), 3u);
  EXPECT_EQ(s.members(), (std::vector<std::size_t>{0, 3, 5}));
  EXPECT_TRUE(VertexSet::single(3).subset_of(s));
  EXPECT_EQ((s - VertexSet::single(3)).size(), 2u);
  EXPECT_EQ(VertexSet::first(64).size(), 64u);
  EXPECT_TRUE(VertexSet().empty());
}

TEST(DefiningGraphTest, ValidatesInput) {
  EXPECT_THROW(DefiningGraph::from_edges({"a", "a"}, {}), ParseError);
  EXPECT_THROW(DefiningGraph::from_edges({"a", ""}, {}), ParseError);
  EXPECT_THROW(DefiningGraph::from_edges({"a", "b"}, {{0, 0}}), ParseError);
  EXPECT_THROW(DefiningGraph::from_edges({"a", "b"}, {{0, 2}}), ParseError);
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("v" + std::to_string(i));
  EXPECT_THROW(DefiningGraph::from_edges(many, {}), ParseError);
}

TEST(DefiningGraphTest, MergesDuplicateEdges) {
  auto g = DefiningGraph::from_edges({"a", "b", "c"}, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
}

TEST(DefiningGraphTest, StarComplementInduced) {
  auto g = golden();
  EXPECT_EQ(star(g, "b"), VertexSet::single(2));
  EXPECT_TRUE(star(g, "a").empty());
  EXPECT_THROW(star(g, "z"), Error);
  auto c = g.complement();
  EXPECT_EQ(c.edge_count(), 2u);
  EXPECT_TRUE(c.adjacent(0, 1));
  EXPECT_FALSE(c.adjacent(1, 2));
  auto sub = g.induced(VertexSet::single(1).with(2));
  EXPECT_EQ(sub.labels(), (std::vector<std::string>{"b", "c"}));
  EXPECT_TRUE(sub.is_complete());
}

TEST(ComplementComponentsTest, OrderedByLeastVertex) {
  // Path a-b-c: complement is the edge a-c plus isolated b.
  auto g = DefiningGraph::from_edges({"a", "b", "c"}, {{0, 1}, {1, 2}});
  auto comps = complement_components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], VertexSet::single(0).with(2));
  EXPECT_EQ(comps[1], VertexSet::single(1));
  EXPECT_EQ(complement_components(golden()).size(), 1u);
}

TEST(CliqueTest, GoldenGraph) {
  auto cliques = enumerate_cliques(golden());
  // {a}, {b}, {b,c}, {c}
  ASSERT_EQ(cliques.size(), 4u);
  EXPECT_EQ(cliques[0], VertexSet::single(0));
  EXPECT_EQ(cliques[1], VertexSet::single(1));
  EXPECT_EQ(cliques[2], VertexSet::single(1).with(2));
  EXPECT_EQ(cliques[3], VertexSet::single(2));
}

TEST(CliqueTest, MatchesSubsetScanOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    auto g = reference::graph_from_mask(n, rng());
    auto cliques = enumerate_cliques(g);
    EXPECT_EQ(cliques.size(), reference::clique_count(g));
    for (VertexSet c : cliques) EXPECT_TRUE(g.is_clique(c));
    std::vector<VertexSet> sorted = cliques;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
  }
}

TEST(CliqueTest, CapIsEnforced) {
  // K_12 has 4095 cliques.
  auto g = reference::graph_from_mask(12, ~std::uint64_t{0});
  EXPECT_EQ(enumerate_cliques(g).size(), 4095u);
  try {
    enumerate_cliques(g, 100);
    FAIL() << "expected CliqueExplosion";
  } catch (const CliqueExplosion& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCliqueExplosion);
    EXPECT_EQ(e.cap(), 100u);
    EXPECT_GT(e.lower_bound(), 100u);
  }
}

TEST(DoubleGraphTest, OrderAndEdges) {
  auto g = DefiningGraph::from_edges({"x", "y", "z"}, {{0, 1}});
  auto d = double_graph(g);
  EXPECT_EQ(d.labels(), (std::vector<std::string>{"z-", "y-", "x-", "x+", "y+", "z+"}));
  EXPECT_EQ(doubled_plus(3, 0), 3u);
  EXPECT_EQ(doubled_minus(3, 0), 2u);
  for (std::size_t v = 0; v < 3; ++v) EXPECT_FALSE(d.adjacent(doubled_plus(3, v), doubled_minus(3, v)));
  // Four cross edges for x-y, nothing else.
  EXPECT_EQ(d.edge_count(), 4u);
  for (auto p : {doubled_plus(3, 0), doubled_minus(3, 0)}) {
    for (auto q : {doubled_plus(3, 1), doubled_minus(3, 1)}) EXPECT_TRUE(d.adjacent(p, q));
  }
}

TEST(TreeOrderTest, BreadthFirstOnComplement) {
  // Complement of 1-2, 1-4, 2-3 is the path 1-3-4-2.
  auto g = DefiningGraph::from_edges({"1", "2", "3", "4"}, {{0, 1}, {0, 3}, {1, 2}});
  auto order = complement_tree_order(g);
  EXPECT_EQ(order, (std::vector<std::size_t>{0, 2, 3, 1}));
  auto h = reordered(g, order);
  EXPECT_EQ(h.labels(), (std::vector<std::string>{"1", "3", "4", "2"}));
  EXPECT_EQ(h.edge_count(), 3u);
  EXPECT_TRUE(h.adjacent(0, 3));
  EXPECT_TRUE(h.adjacent(0, 2));
  EXPECT_TRUE(h.adjacent(3, 1));
}

TEST(TreeOrderTest, ForestAndEdgeCases) {
  auto complete = reference::graph_from_mask(3, 0b111);
  EXPECT_EQ(complement_tree_order(complete), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(complement_tree_order(DefiningGraph()).empty());
  std::vector<std::size_t> bad{0, 0, 1};
  EXPECT_THROW(reordered(complete, bad), Error);
  EXPECT_THROW(reordered(complete, std::vector<std::size_t>{0, 1}), Error);
}

TEST(TreeOrderTest, IsAPermutationPreservingAdjacency) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    auto g = reference::graph_from_mask(n, rng() & ((std::uint64_t{1} << reference::pair_count(n)) - 1));
    auto order = complement_tree_order(g);
    auto h = reordered(g, order);
    ASSERT_EQ(h.size(), n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(h.adjacent(i, j), i != j && g.adjacent(order[i], order[j]));
  }
}

TEST(GraphIoTest, JsonWithVertices) {
  auto spec = parse_graph(R"({"kind": "racg", "vertices": ["c", "a", "b"], "edges": [["a", "b"]]})");
  EXPECT_EQ(spec.kind, GroupKind::kRacg);
  EXPECT_EQ(spec.graph.labels(), (std::vector<std::string>{"c", "a", "b"}));
  EXPECT_TRUE(spec.graph.adjacent(1, 2));
}

TEST(GraphIoTest, OrderKeyWins) {
  auto spec = parse_graph(R"({"kind": "raag", "vertices": ["a", "b"], "edges": [], "order": ["b", "a"]})");
  EXPECT_EQ(spec.kind, GroupKind::kRaag);
  EXPECT_EQ(spec.graph.labels(), (std::vector<std::string>{"b", "a"}));
}

TEST(GraphIoTest, LabelsFromEdgesAreSorted) {
  auto spec = parse_graph(R"({"kind": "racg", "edges": [["q", "b"], ["b", "m"]]})");
  EXPECT_EQ(spec.graph.labels(), (std::vector<std::string>{"b", "m", "q"}));
}

TEST(GraphIoTest, EdgeList) {
  auto spec = parse_graph("# comment\nraag 3\n1 2\n\n2 3 # trailing\n");
  EXPECT_EQ(spec.kind, GroupKind::kRaag);
  EXPECT_EQ(spec.graph.size(), 3u);
  EXPECT_EQ(spec.graph.edge_count(), 2u);
  EXPECT_EQ(spec.graph.label(0), "1");
}

TEST(GraphIoTest, KindOverride) {
  auto spec = parse_graph(R"({"vertices": ["a"], "edges": []})", GroupKind::kRaag);
  EXPECT_EQ(spec.kind, GroupKind::kRaag);
  EXPECT_THROW(parse_graph(R"({"vertices": ["a"], "edges": []})"), ParseError);
}

TEST(GraphIoTest, ErrorsCarryPosition) {
  try {
    parse_graph("racg 3\n1 2\n2 9\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_graph("{\"kind\": \"racg\",\n \"edges\": [[\"a\" \"b\"]]}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 0u);
  }
  EXPECT_THROW(parse_graph(R"({"kind": "racg", "vertices": ["a"], "edges": [["a", "z"]]})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"kind": "coxeter", "vertices": ["a"], "edges": []})"), ParseError);
}

TEST(GraphIoTest, JsonRoundTrip) {
  auto spec = parse_graph(R"({"kind": "racg", "vertices": ["c", "a", "b"], "edges": [["a", "b"], ["c", "b"]]})");
  auto again = parse_graph_json(graph_to_json(spec));
  EXPECT_EQ(again.graph, spec.graph);
  EXPECT_EQ(again.kind, spec.kind);
}

TEST(GraphIoTest, DigraphFixture) {
  auto m = parse_digraph_json(parse_json_text(
      R"({"nodes": ["p", "q"], "edges": [["p", "q"], ["q", "p"], ["q", "p"]], "start_weights": {"p": 2}})"));
  EXPECT_EQ(m.dimension(), 2u);
  EXPECT_EQ(m.entry(1, 0), 2u);
  EXPECT_EQ(m.start_vector(), (std::vector<std::uint64_t>{2, 0}));
  EXPECT_EQ(m.name(1), "q");
  auto defaults = parse_digraph_json(parse_json_text(R"({"nodes": ["x"], "edges": []})"));
  EXPECT_EQ(defaults.start_vector(), (std::vector<std::uint64_t>{1}));
  EXPECT_THROW(parse_digraph_json(parse_json_text(R"({"nodes": ["x"], "edges": [["x", "y"]]})")), ParseError);
}

}  // namespace
}  // namespace racgrowth

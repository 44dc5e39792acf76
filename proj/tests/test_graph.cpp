// Copyright 2026 The g2s Authors
//
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

#include "g2s/graph.hpp"
#include "g2s/random.hpp"
#include "oracles.hpp"

namespace g2s {
namespace {

TEST(ParseGraph, SingleEdge) {
  const Graph g = parse_graph("graph 2\ne 0 1");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_FALSE(g.directed());
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges()[0].u, 0u);
  EXPECT_EQ(g.edges()[0].v, 1u);
}

TEST(ParseGraph, DirectedOppositePair) {
  const Graph g = parse_graph("graph 3 directed\ne 0 1\ne 1 0");
  EXPECT_TRUE(g.directed());
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, {}}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 0, {}}));
}

TEST(ParseGraph, CanonicalizesUndirectedAndReadsWeights) {
  const Graph g = parse_graph(
      "# a weighted triangle\n"
      "graph 3\n"
      "\n"
      "e 2 0 alpha=0.5 beta=-1e-3   # trailing comment\n"
      "e 1 2\n");
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges()[0].u, 0u);
  EXPECT_EQ(g.edges()[0].v, 2u);
  EXPECT_DOUBLE_EQ(g.edges()[0].weight.at("alpha"), 0.5);
  EXPECT_DOUBLE_EQ(g.edges()[0].weight.at("beta"), -1e-3);
  EXPECT_TRUE(g.edges()[1].weight.empty());
}

TEST(ParseGraph, Errors) {
  EXPECT_THROW(parse_graph("graph 2\ne 0 0"), ParseError);
  EXPECT_THROW(parse_graph("graph 2\ne 0 2"), ParseError);
  EXPECT_THROW(parse_graph("e 0 1"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("graph two"), ParseError);
  EXPECT_THROW(parse_graph("graph 2 weighted"), ParseError);
  EXPECT_THROW(parse_graph("graph 2\ne 0 1 w"), ParseError);
  EXPECT_THROW(parse_graph("graph 2\ne 0 1 w=abc"), ParseError);
  EXPECT_THROW(parse_graph("graph 2\ne 0 1 w=1 w=2"), ParseError);
  EXPECT_THROW(parse_graph("graph 2\nx 0 1"), ParseError);
}

TEST(ParseGraph, ReportsLineNumber) {
  try {
    parse_graph("graph 3\n# comment\ne 0 1\ne 1 1\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_NE(std::string(e.what()).find("loop"), std::string::npos);
  }
}

TEST(ParseGraph, KeepsParallelEdges) {
  const Graph g = parse_graph("graph 2\ne 0 1\ne 1 0\ne 0 1");
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.max_multiplicity(), 3u);
}

TEST(DisjointUnion, Examples) {
  const Graph e5 = disjoint_union(Graph::empty(2), Graph::empty(3));
  EXPECT_EQ(e5, Graph::empty(5));

  const Graph kk = disjoint_union(Graph::complete(2), Graph::complete(2));
  EXPECT_EQ(kk, Graph(4, {{0, 1, {}}, {2, 3, {}}}));

  const Graph k3e1 = disjoint_union(Graph::complete(3), Graph::empty(1));
  EXPECT_EQ(k3e1.order(), 4u);
  EXPECT_EQ(k3e1, Graph(4, {{0, 1, {}}, {0, 2, {}}, {1, 2, {}}}));
}

TEST(DisjointUnion, RejectsMixedDirectedness) {
  const Graph directed(2, {{0, 1, {}}}, true);
  EXPECT_THROW(disjoint_union(directed, Graph::complete(2)), IncompatibleGraph);
}

TEST(ApplyPermutation, Examples) {
  const Permutation swap({1, 0});
  EXPECT_EQ(apply_permutation(Graph::complete(2), swap), Graph::complete(2));

  const Graph path = Graph::path(3);
  EXPECT_EQ(apply_permutation(path, Permutation({2, 1, 0})), path);

  const Graph arrow(2, {{0, 1, {}}}, true);
  EXPECT_EQ(apply_permutation(arrow, swap), Graph(2, {{1, 0, {}}}, true));
}

TEST(ApplyPermutation, LengthMismatch) {
  EXPECT_THROW(apply_permutation(Graph::path(3), Permutation({1, 0})),
               DimensionError);
}

TEST(ApplyPermutation, ConjugatesAdjacencyMatrix) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(rng, 2, 7);
    const Permutation p = random_permutation(rng, g.order());
    const auto P = oracle::permutation_matrix(p);
    EXPECT_EQ(oracle::adjacency_matrix(apply_permutation(g, p)),
              P * oracle::adjacency_matrix(g) * P.transpose());
  }
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0}), InvalidParameters);
  EXPECT_THROW(Permutation({0, 2}), InvalidParameters);
}

TEST(Permutation, CompositionActsRightToLeft) {
  const Permutation p({1, 2, 0});
  const Permutation q({0, 2, 1});
  const Permutation pq = p * q;
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(pq(i), p(q(i)));
  EXPECT_EQ(p * p.inverse(), Permutation::identity(3));
}

TEST(FindIsomorphism, Examples) {
  const Graph a = Graph::path(3);
  const Graph b(3, {{1, 0, {}}, {0, 2, {}}});
  const auto p = find_isomorphism(a, b);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(apply_permutation(a, *p), b);

  EXPECT_FALSE(find_isomorphism(Graph::complete(3), Graph::empty(3)));
}

TEST(FindIsomorphism, CycleVersusPathByExhaustiveSearch) {
  const Graph c4 = Graph::cycle(4);
  const Graph p4 = Graph::path(4);
  std::size_t hits = 0;
  for (const auto& p : oracle::all_permutations(4)) {
    hits += apply_permutation(c4, p) == p4;
  }
  EXPECT_EQ(hits, 0u);
  EXPECT_FALSE(find_isomorphism(c4, p4));
}

TEST(FindIsomorphism, SizeCap) {
  EXPECT_NO_THROW(find_isomorphism(Graph::path(10), Graph::path(10)));
  EXPECT_THROW(find_isomorphism(Graph::path(11), Graph::path(11)), CapacityError);
}

TEST(FindIsomorphism, RespectsWeightsAndDirection) {
  const Graph w1(3, {{0, 1, {{"w", 1.0}}}, {1, 2, {{"w", 2.0}}}});
  const Graph w2(3, {{0, 1, {{"w", 2.0}}}, {1, 2, {{"w", 1.0}}}});
  const Graph w3(3, {{0, 1, {{"w", 2.0}}}, {1, 2, {{"w", 2.0}}}});
  EXPECT_TRUE(find_isomorphism(w1, w2));
  EXPECT_FALSE(find_isomorphism(w1, w3));

  const Graph out_star(3, {{0, 1, {}}, {0, 2, {}}}, true);
  const Graph in_star(3, {{1, 0, {}}, {2, 0, {}}}, true);
  EXPECT_FALSE(find_isomorphism(out_star, in_star));
}

TEST(FindIsomorphism, AgreesWithExhaustiveSearch) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g1 = random_graph(rng, 5, 5);
    const Graph g2 = random_graph(rng, 5, 5);
    bool exists = false;
    for (const auto& p : oracle::all_permutations(5)) {
      exists = exists || apply_permutation(g1, p) == g2;
    }
    EXPECT_EQ(find_isomorphism(g1, g2).has_value(), exists);
  }
}

TEST(Automorphisms, CountsMatchKnownGroups) {
  EXPECT_EQ(automorphisms(Graph::complete(4)).size(), 24u);
  EXPECT_EQ(automorphisms(Graph::cycle(5)).size(), 10u);
  EXPECT_EQ(automorphisms(Graph::path(4)).size(), 2u);
  EXPECT_EQ(automorphisms(Graph::star(4)).size(), 6u);
}

TEST(BoundaryEdges, Examples) {
  EXPECT_EQ(boundary_edges(Graph::path(3), {0}), 1u);
  EXPECT_EQ(boundary_edges(Graph::complete(4), {0, 1}), 4u);

  // 2x3 grid, cut between column 0 and columns 1-2: one crossing edge per row.
  const std::size_t rows = 2;
  const std::size_t cols = 3;
  std::size_t expected = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c + 1 < cols; ++c) expected += (c == 0);
  }
  EXPECT_EQ(expected, 2u);
  EXPECT_EQ(boundary_edges(Graph::grid(rows, cols), {0, 3}), expected);
}

TEST(BoundaryEdges, CountsMultiplicity) {
  const Graph g(2, {{0, 1, {}}, {0, 1, {}}});
  EXPECT_EQ(boundary_edges(g, {0}), 2u);
}

TEST(GraphProperties, RandomInstances) {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 1, 6);
    const Permutation p = random_permutation(rng, g.order());

    EXPECT_EQ(apply_permutation(apply_permutation(g, p), p.inverse()), g);

    const auto witness = find_isomorphism(g, apply_permutation(g, p));
    ASSERT_TRUE(witness.has_value());
    EXPECT_EQ(apply_permutation(g, *witness), apply_permutation(g, p));

    std::vector<std::size_t> subset;
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (rng.coin()) subset.push_back(v);
    }
    EXPECT_EQ(boundary_edges(g, subset), boundary_edges(g, complement(g, subset)));

    const Graph h = random_graph(rng, 1, 4);
    const Graph k = random_graph(rng, 1, 4);
    const Graph left = disjoint_union(disjoint_union(g, h), k);
    const Graph right = disjoint_union(g, disjoint_union(h, k));
    EXPECT_EQ(left, right);
    EXPECT_EQ(left.edge_count(), g.edge_count() + h.edge_count() + k.edge_count());
  }
}

}  // namespace
}  // namespace g2s

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

#include "g2s/analysis.hpp"
#include "g2s/random.hpp"
#include "oracles.hpp"

namespace g2s {
namespace {

EncodedState graph_state(const Graph& g) {
  return encode(EncodingSpec::with_defaults(family::CZ{}), g);
}

std::vector<std::size_t> random_subset(SplitMix64& rng, std::size_t n) {
  std::vector<std::size_t> subset;
  while (subset.empty() || subset.size() == n) {
    subset.clear();
    for (std::size_t v = 0; v < n; ++v) {
      if (rng.coin()) subset.push_back(v);
    }
  }
  return subset;
}

// Entropy from the full density matrix, eigenvalue by eigenvalue.
double oracle_entropy(const StateVector& s, const std::vector<std::size_t>& keep) {
  const Matrix rho = oracle::partial_trace(s.normalized(), keep);
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(rho);
  double h = 0.0;
  for (double l : eig.eigenvalues()) {
    if (l > 1e-12) h -= l * std::log2(l);
  }
  return h;
}

TEST(Entropy, ProductStateHasNone) {
  const auto es = graph_state(Graph::empty(3));
  for (const std::vector<std::size_t>& s :
       {std::vector<std::size_t>{0}, {1, 2}, {0, 2}}) {
    EXPECT_NEAR(bipartition_entropy(es, s), 0.0, 1e-12);
  }
}

TEST(Entropy, ClusterChainAndGrid) {
  EXPECT_NEAR(bipartition_entropy(graph_state(Graph::path(4)), {0, 1}), 1.0, 1e-10);
  EXPECT_NEAR(bipartition_entropy(graph_state(Graph::grid(2, 3)), {0, 3}), 2.0, 1e-10);
}

TEST(Entropy, CompleteGraphIsGhzLike) {
  const auto es = graph_state(Graph::complete(4));
  const double h = bipartition_entropy(es, {0, 1});
  EXPECT_NEAR(h, 1.0, 1e-10);
  EXPECT_NEAR(h, oracle_entropy(es.state, {0, 1}), 1e-10);
  EXPECT_EQ(oracle::cut_rank(Graph::complete(4), {0, 1}), 1u);
}

TEST(Entropy, Errors) {
  const auto es = graph_state(Graph::path(3));
  EXPECT_THROW(bipartition_entropy(es, {}), DimensionError);
  EXPECT_THROW(bipartition_entropy(es, {0, 1, 2}), DimensionError);
  EXPECT_THROW(bipartition_entropy(es, {0, 0}), DimensionError);
  EXPECT_THROW(bipartition_entropy(es, {3}), DimensionError);
}

TEST(Entropy, UnnormalizedStatesAreNormalizedFirst) {
  const auto es = encode(EncodingSpec::with_defaults(family::Parity{}),
                         Graph::complete(2));
  EXPECT_NEAR(es.norm_squared, 0.5, 1e-15);
  EXPECT_NEAR(bipartition_entropy(es, {0}), 1.0, 1e-12);
}

TEST(Entropy, CompositeSubsetTakesAllPorts) {
  // Each QRN link at p = 1 is a perfect Bell pair; on a path 0-1-2 vertex 1
  // shares two of them with the rest.
  const auto es = encode_composite(EncodingSpec::with_defaults(family::QrnV{1.0}),
                                   Graph::path(3));
  EXPECT_NEAR(bipartition_entropy(es, {1}), 2.0, 1e-10);
  EXPECT_NEAR(bipartition_entropy(es, {0}), 1.0, 1e-10);
}

TEST(Entropy, MatchesGf2RankOnRandomGraphs) {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(rng, 2, 8);
    const auto es = graph_state(g);
    const auto subset = random_subset(rng, g.order());
    const double h = bipartition_entropy(es, subset);
    EXPECT_NEAR(h, double(oracle::cut_rank(g, subset)), 1e-8);
    EXPECT_LE(h, double(boundary_edges(g, subset)) + 1e-8);
    if (g.order() <= 6) {
      EXPECT_NEAR(h, oracle_entropy(es.state, subset), 1e-8);
    }
  }
}

TEST(Entropy, InvariantUnderRelabelling) {
  SplitMix64 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(rng, 3, 7);
    const auto p = random_permutation(rng, g.order());
    const auto subset = random_subset(rng, g.order());
    std::vector<std::size_t> image;
    for (auto v : subset) image.push_back(p(v));
    EXPECT_NEAR(bipartition_entropy(graph_state(g), subset),
                bipartition_entropy(graph_state(apply_permutation(g, p)), image),
                1e-10);
  }
}

TEST(AreaLaw, Reports) {
  const auto chain = area_law_report(graph_state(Graph::path(4)), Graph::path(4), {1, 0});
  EXPECT_EQ(chain.subset, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(chain.crossing, 1u);
  EXPECT_NEAR(chain.entropy_bits, 1.0, 1e-10);
  ASSERT_TRUE(chain.ratio.has_value());
  EXPECT_NEAR(*chain.ratio, 1.0, 1e-10);

  const auto none = area_law_report(graph_state(Graph::empty(4)), Graph::empty(4), {0});
  EXPECT_EQ(none.crossing, 0u);
  EXPECT_NEAR(none.entropy_bits, 0.0, 1e-12);
  EXPECT_FALSE(none.ratio.has_value());

  const auto k4 = area_law_report(graph_state(Graph::complete(4)), Graph::complete(4), {0, 1});
  EXPECT_EQ(k4.crossing, 4u);
  EXPECT_LE(k4.entropy_bits, 2.0 + 1e-10);

  EXPECT_THROW(area_law_report(graph_state(Graph::path(3)), Graph::path(4), {0}),
               DimensionError);
}

TEST(Slocc, ConversionProbability) {
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(slocc_conversion_probability(StateVector({2, 2}, Vector{{r, 0, 0, r}})),
              1.0, 1e-12);
  EXPECT_NEAR(slocc_conversion_probability(StateVector::basis({2, 2}, 0)), 0.0, 1e-12);
  for (int k = 0; k <= 20; ++k) {
    const double p = k / 20.0;
    const Vector omega = make_operator(family::QrnV{p}).matrix() * basis_vector(4, 0);
    EXPECT_NEAR(slocc_conversion_probability(StateVector({2, 2}, omega)), p, 1e-10);
  }
  EXPECT_THROW(slocc_conversion_probability(StateVector::basis({2, 3}, 0)),
               DimensionError);
  EXPECT_THROW(slocc_conversion_probability(StateVector({2, 2}, Vector{{1, 1, 0, 0}})),
               InvalidParameters);
}

TEST(Stabilizers, Examples) {
  for (const Graph& g : {Graph::complete(2), Graph::empty(3), Graph::star(4)}) {
    for (double r : stabilizer_residuals(graph_state(g), g)) EXPECT_LE(r, 1e-10);
  }
  EXPECT_THROW(stabilizer_residuals(
                   encode(EncodingSpec::with_defaults(family::Parity{}), Graph::path(2)),
                   Graph::path(2)),
               IncompatibleGraph);
}

TEST(Stabilizers, RandomGraphs) {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(rng, 2, 8);
    const auto res = stabilizer_residuals(graph_state(g), g);
    ASSERT_EQ(res.size(), g.order());
    for (double r : res) EXPECT_LE(r, 1e-10);
  }
}

TEST(Stabilizers, WrongGraphIsDetected) {
  const auto es = graph_state(Graph::path(3));
  const auto res = stabilizer_residuals(es, Graph::complete(3));
  EXPECT_GT(*std::max_element(res.begin(), res.end()), 0.5);
}

}  // namespace
}  // namespace g2s

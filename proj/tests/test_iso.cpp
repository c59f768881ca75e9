// Copyright 2026 The Authors.
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

#include <random>

#include "cyclemap.hpp"
#include "oracles.hpp"

using namespace cyclemap;

namespace {

// Smallest relabelled adjacency bit pattern over all vertex permutations.
std::uint32_t brute_canonical(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::uint32_t best = ~0u;
  do {
    std::uint32_t code = 0;
    for (auto [a, b] : edges) {
      int x = p[a], y = p[b];
      if (x > y) std::swap(x, y);
      code |= 1u << (x * n + y);
    }
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

Graph relabel(const Graph& g, std::mt19937& rng) {
  std::vector<int> p(static_cast<std::size_t>(g.vertex_count()));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  auto es = oracle::raw_edges(g);
  std::shuffle(es.begin(), es.end(), rng);
  std::vector<std::pair<VertexId, VertexId>> out;
  for (auto [a, b] : es) out.push_back({p[a], p[b]});
  return build_graph(g.vertex_count(), out);
}

}  // namespace

TEST(Isomorphism, RelabelledGraphsMatch) {
  std::mt19937 rng(4);
  for (const auto& [name, g] : catalog_graphs()) {
    const Graph h = relabel(g, rng);
    const auto phi = find_isomorphism(g, h);
    ASSERT_TRUE(phi.has_value()) << name;
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto [a, b] = g.endpoints(e);
      EXPECT_TRUE(h.edge_between((*phi)[a], (*phi)[b]).has_value()) << name;
    }
    EXPECT_EQ(invariant_hash(g), invariant_hash(h)) << name;
  }
}

TEST(Isomorphism, AgreesWithPermutationCanonicalForm) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Graph a = oracle::random_graph(rng, n, 0.5);
    const Graph b = oracle::random_graph(rng, n, 0.5);
    const bool same = brute_canonical(n, oracle::raw_edges(a)) == brute_canonical(n, oracle::raw_edges(b));
    EXPECT_EQ(are_isomorphic(a, b), same);
  }
  EXPECT_FALSE(are_isomorphic(prism_graph(), build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})));
}

TEST(Isomorphism, ConnectedGraphCounts) {
  for (int n = 4; n <= 6; ++n) {
    std::set<std::uint32_t> classes;
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) all.push_back({a, b});
    }
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<std::pair<int, int>> es;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (mask >> i & 1) es.push_back(all[i]);
      }
      if (oracle::components(n, es, oracle::all_bits(static_cast<int>(es.size())), oracle::all_bits(n)) != 1) continue;
      classes.insert(brute_canonical(n, es));
    }
    const auto graphs = connected_graphs(n);
    EXPECT_EQ(graphs.size(), classes.size()) << n;
    std::set<std::uint32_t> produced;
    for (const auto& g : graphs) {
      EXPECT_TRUE(is_connected(g));
      EXPECT_EQ(g.vertex_count(), n);
      produced.insert(brute_canonical(n, oracle::raw_edges(g)));
    }
    EXPECT_EQ(produced, classes) << n;
  }
}

TEST(Isomorphism, EdgeCountCensus) {
  const auto levels = graphs_by_edge_count(7);
  const std::vector<std::size_t> expected = {1, 1, 2, 5, 11, 26, 68, 177};
  ASSERT_EQ(levels.size(), expected.size());
  for (std::size_t m = 0; m < levels.size(); ++m) {
    EXPECT_EQ(levels[m].size(), expected[m]) << m;
    for (const auto& g : levels[m]) {
      EXPECT_EQ(g.edge_count(), static_cast<int>(m));
      EXPECT_FALSE(has_isolated_vertex(g));
    }
    for (std::size_t i = 0; i < levels[m].size(); ++i) {
      for (std::size_t j = i + 1; j < levels[m].size(); ++j) {
        EXPECT_FALSE(are_isomorphic(levels[m][i], levels[m][j]));
      }
    }
  }
}

TEST(Isomorphism, ClassSetDeduplicates) {
  std::mt19937 rng(9);
  IsoClassSet set;
  EXPECT_TRUE(set.insert(petersen_graph()));
  EXPECT_FALSE(set.insert(relabel(petersen_graph(), rng)));
  EXPECT_TRUE(set.insert(prism_graph(5)));
  EXPECT_EQ(set.graphs().size(), 2u);
}

// Copyright 2026 The fastscramble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <random>

#include "fastscramble/graphstate.h"

namespace fastscramble {
namespace {

TEST(Graph, HypercubeShape) {
    for (size_t m = 1; m <= 7; m++) {
        Graph g = hypercube(m);
        const size_t n = size_t{1} << m;
        EXPECT_EQ(g.num_vertices(), n);
        EXPECT_EQ(g.num_edges(), m * n / 2);
        for (size_t v = 0; v < n; v++) EXPECT_EQ(g.degree(v), m);
        for (auto [i, j] : g.edges()) EXPECT_EQ(std::popcount(i ^ j), 1);
    }
}

TEST(Graph, EdgeListRoundTrip) {
    Graph g = hypercube(3);
    std::string text = g.to_edge_list();
    EXPECT_EQ(text.substr(0, 6), "8\n0 1\n");
    EXPECT_EQ(Graph::from_edge_list(text), g);
    EXPECT_THROW(Graph(3).add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(Graph(3).add_edge(0, 3), std::invalid_argument);
}

TEST(GraphState, EntropyIsCutRank) {
    // Path 0-1-2-3: any contiguous block strictly inside has entropy 1 or 2.
    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    std::vector<size_t> left{0, 1}, middle{1, 2}, ends{0, 3}, all{0, 1, 2, 3};
    EXPECT_EQ(graph_entropy_bits(path, left), 1u);
    EXPECT_EQ(graph_entropy_bits(path, middle), 2u);
    EXPECT_EQ(graph_entropy_bits(path, ends), 2u);
    EXPECT_EQ(graph_entropy_bits(path, all), 0u);
}

TEST(GraphState, TableauAgreesOnRandomGraphs) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10; trial++) {
        const size_t n = 8;
        Graph g(n);
        for (size_t i = 0; i < n; i++)
            for (size_t j = i + 1; j < n; j++)
                if (rng() % 2) g.add_edge(i, j);
        auto t = tableau_from_graph(g);
        EXPECT_TRUE(t.is_valid());
        for (uint32_t mask = 0; mask < (1u << n); mask++) {
            std::vector<size_t> s;
            for (size_t q = 0; q < n; q++)
                if ((mask >> q) & 1) s.push_back(q);
            EXPECT_EQ(t.entropy_bits(s), graph_entropy_bits(g, s));
        }
    }
}

TEST(GraphState, PageScramblingFraction) {
    Graph g = hypercube(4);
    std::vector<size_t> sizes{1, 2, 8};
    auto table = page_scrambling_fraction(g, sizes, 3000, 5);
    ASSERT_EQ(table.rows.size(), 3u);
    EXPECT_EQ(table.total_samples(), 3000u);
    EXPECT_DOUBLE_EQ(table.find(1)->fraction(0), 1.0);  // every vertex has neighbours
    EXPECT_DOUBLE_EQ(table.find(2)->fraction(0), 1.0);
    // Exhaustive fraction over all C(16, 8) subsets.
    double full = 0, total = 0;
    for (uint32_t mask = 0; mask < (1u << 16); mask++) {
        if (std::popcount(mask) != 8) continue;
        std::vector<size_t> s;
        for (size_t q = 0; q < 16; q++)
            if ((mask >> q) & 1) s.push_back(q);
        full += graph_entropy_bits(g, s) == 8;
        total += 1;
    }
    const auto *row = table.find(8);
    double exact = full / total;
    double sigma = std::sqrt(exact * (1 - exact) / static_cast<double>(row->samples));
    EXPECT_NEAR(row->fraction(0), exact, 5 * sigma + 1e-12);
    auto again = page_scrambling_fraction(g, sizes, 3000, 5);
    EXPECT_EQ(again.find(8)->counts, table.find(8)->counts);
}

}  // namespace
}  // namespace fastscramble

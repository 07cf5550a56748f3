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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fastscramble/circuits.h"
#include "fastscramble/experiments.h"
#include "fastscramble/graphstate.h"
#include "fastscramble/tableau.h"

namespace fastscramble {
namespace {

// Exact rank distribution of k uniformly random vectors in GF(2)^n, by the
// Markov chain rank r -> r + 1 with probability 1 - 2^{r - n}.
std::vector<double> exact_rank_distribution(size_t k, size_t n) {
    std::vector<double> p(k + 1, 0.0);
    p[0] = 1.0;
    for (size_t step = 0; step < k; step++) {
        std::vector<double> next(k + 1, 0.0);
        for (size_t r = 0; r <= step; r++) {
            double up = r < n ? 1.0 - std::exp2(static_cast<double>(r) - static_cast<double>(n)) : 0.0;
            next[r + 1] += p[r] * up;
            next[r] += p[r] * (1.0 - up);
        }
        p = next;
    }
    return p;
}

TEST(RankDistribution, MarkovChainMatchesBruteForce) {
    // All 2a x n matrices for small shapes.
    for (auto [k, n] : std::vector<std::pair<size_t, size_t>>{{2, 5}, {2, 6}, {4, 3}, {3, 4}, {2, 8}}) {
        std::vector<double> counts(k + 1, 0.0);
        const uint64_t total = uint64_t{1} << (k * n);
        for (uint64_t bits = 0; bits < total; bits++) {
            BitMatrix m(k, n);
            for (size_t i = 0; i < k * n; i++) m.set(i / n, i % n, (bits >> i) & 1);
            counts[rank_gf2(m)] += 1;
        }
        auto exact = exact_rank_distribution(k, n);
        for (size_t r = 0; r <= k; r++) EXPECT_NEAR(counts[r] / static_cast<double>(total), exact[r], 1e-12);
    }
}

TEST(Rmt, RankProbMatchesExactLargeMatrices) {
    // For 2a -> infinity at fixed N - 2a the exact distribution approaches the formula.
    const size_t a = 30, n = 66;
    auto exact = exact_rank_distribution(2 * a, n);
    for (size_t eps = 0; eps <= 4; eps++) {
        EXPECT_NEAR(rmt_rank_prob(n, a, eps), exact[2 * a - eps], 1e-9) << eps;
    }
}

TEST(Rmt, NormalisedAndZeroBeyondRange) {
    double total = 0;
    for (size_t eps = 0; eps <= 64; eps++) total += rmt_rank_prob(128, 32, eps);
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_EQ(rmt_rank_prob(16, 3, 7), 0.0);
    EXPECT_THROW(rmt_rank_prob(16, 8, 0), std::invalid_argument);
}

TEST(Rmt, MeanDeficitClosedFormMatchesSum) {
    EXPECT_DOUBLE_EQ(rmt_mean_deficit(16, 6), std::exp2(-4.0) * std::numbers::ln2);
    for (size_t a = 2; a <= 20; a++) {
        const size_t n = 2 * a + 16;
        EXPECT_NEAR(rmt_mean_deficit_sum(n, a) / rmt_mean_deficit(n, a), 1.0, 1e-3);
    }
}

TEST(Rmt, SampledHistogramMatchesExact) {
    const size_t n = 10, a = 3, samples = 40000;
    auto hist = rmt_sampled_deficits(n, a, samples, 17);
    auto exact = exact_rank_distribution(2 * a, n);
    for (size_t eps = 0; eps <= 2 * a; eps++) {
        double p = exact[2 * a - eps];
        double f = static_cast<double>(hist[eps]) / samples;
        EXPECT_NEAR(f, p, 5 * std::sqrt(p * (1 - p) / samples) + 1e-12) << eps;
    }
    EXPECT_EQ(hist, rmt_sampled_deficits(n, a, samples, 17));
}

TEST(PageCurve, ProductStateHasFullDeficit) {
    auto t = StabilizerTableau::polarized(12, Basis::Z);
    std::vector<size_t> sizes{1, 5, 9};
    auto stats = page_curve(t, sizes, 200, 1);
    ASSERT_EQ(stats.sizes.size(), 3u);
    EXPECT_EQ(stats.sizes[2].mean_entropy_bits, 0.0);
    EXPECT_EQ(stats.sizes[2].mean_deficit_bits, 3.0);
    EXPECT_DOUBLE_EQ(stats.find(5)->fraction(5), 1.0);
    EXPECT_EQ(stats.find(4), nullptr);
    std::vector<size_t> too_big{13};
    EXPECT_THROW(page_curve(t, too_big, 10, 1), std::invalid_argument);
}

TEST(PageCurve, DeterministicAndConsistentWithFractions) {
    auto t = StabilizerTableau::polarized(16, Basis::Z);
    execute(build_scrambling_circuit(4), t);
    std::vector<size_t> sizes{6, 7};
    auto a = page_curve(t, sizes, 500, 99);
    auto b = page_curve(t, sizes, 500, 99);
    EXPECT_EQ(a.sizes[1].deficit_counts, b.sizes[1].deficit_counts);
    auto table = deficit_fractions(t, sizes, 500, 99);
    EXPECT_EQ(table.rows[1].counts, a.sizes[1].deficit_counts);
    EXPECT_NE(page_curve(t, sizes, 500, 100).sizes[1].deficit_counts, a.sizes[1].deficit_counts);
}

TEST(SampleBipartitions, ShapeAndRange) {
    std::vector<size_t> sizes{2, 4};
    auto subsets = sample_bipartitions(10, sizes, 50, 3);
    ASSERT_EQ(subsets.size(), 100u);
    EXPECT_EQ(subsets[0].size(), 2u);
    EXPECT_EQ(subsets[99].size(), 4u);
    for (const auto &s : subsets) {
        for (size_t i = 1; i < s.size(); i++) EXPECT_LT(s[i - 1], s[i]);
        for (size_t q : s) EXPECT_LT(q, 10u);
    }
}

// Brute-force area-law coefficients: enumerate all subsets of an open chain.
std::vector<double> subset_coefficients(size_t a, size_t n) {
    std::vector<double> coeff(a, 0.0);
    double count = 0;
    for (uint32_t mask = 0; mask < (1u << n); mask++) {
        if (static_cast<size_t>(std::popcount(mask)) != a) continue;
        count += 1;
        size_t run = 0;
        for (size_t q = 0; q <= n; q++) {
            if (q < n && ((mask >> q) & 1)) {
                run++;
            } else if (run > 0) {
                coeff[run - 1] += 1;
                run = 0;
            }
        }
    }
    for (double &c : coeff) c /= count;
    return coeff;
}

TEST(AreaLaw, ArrangementsMatchSubsetEnumeration) {
    for (size_t n : {8, 12}) {
        for (size_t a = 1; a <= 6; a++) {
            auto brute = subset_coefficients(a, n);
            auto coeff = area_law_coefficients(a, n, AreaLawWeighting::Arrangements);
            for (size_t r = 0; r < a; r++) EXPECT_NEAR(coeff[r], brute[r], 1e-12) << n << " " << a << " " << r;
        }
    }
}

TEST(AreaLaw, VolumeLawProfileReturnsSize) {
    std::vector<double> linear;
    for (size_t r = 1; r <= 10; r++) linear.push_back(static_cast<double>(r));
    for (size_t a = 1; a <= 10; a++) {
        EXPECT_NEAR(area_law_mean_entropy(linear, a, 64, AreaLawWeighting::PartitionWeights), a, 1e-9);
        EXPECT_NEAR(area_law_mean_entropy(linear, a, 64, AreaLawWeighting::Arrangements), a, 1e-9);
    }
    // The printed normaliser counts each cell, so it undershoots for |A| > 1.
    EXPECT_NEAR(area_law_mean_entropy(linear, 1, 64), 1.0, 1e-12);
    EXPECT_LT(area_law_mean_entropy(linear, 4, 64), 4.0);
}

TEST(AreaLaw, ConstantProfileCountsCells) {
    // S(r) = 1 for every block: <S_A> is the mean number of cells.
    std::vector<double> ones(6, 1.0);
    auto brute = subset_coefficients(6, 12);
    double cells = 0;
    for (double c : brute) cells += c;
    EXPECT_NEAR(area_law_mean_entropy(ones, 6, 12, AreaLawWeighting::Arrangements), cells, 1e-12);
    EXPECT_THROW(area_law_coefficients(0, 10, AreaLawWeighting::AsPrinted), std::invalid_argument);
    EXPECT_THROW(area_law_mean_entropy(ones, 7, 12), std::invalid_argument);
}

TEST(ConsecutiveProfile, ClusterStateCountsBoundaries) {
    Graph path(8);
    for (size_t i = 0; i + 1 < 8; i++) path.add_edge(i, i + 1);
    auto t = tableau_from_graph(path);
    EXPECT_EQ(consecutive_entropy_profile(t, 0), (std::vector<size_t>{1, 1, 1, 1, 1, 1, 1, 0}));
    // Interior blocks cut two bonds; blocks reaching the end cut one.
    EXPECT_EQ(consecutive_entropy_profile(t, 4), (std::vector<size_t>{1, 2, 2, 1}));
    EXPECT_THROW(consecutive_entropy_profile(t, 8), std::out_of_range);
}

}  // namespace
}  // namespace fastscramble

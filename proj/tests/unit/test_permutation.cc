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

#include <random>

#include "fastscramble/permutation.h"

namespace fastscramble {
namespace {

TEST(Permutation, FaroOracles) {
    EXPECT_EQ(faro_shuffle(16)(3), 9u);
    EXPECT_EQ(inverse(faro_shuffle(8))(4), 1u);
}

TEST(Permutation, FaroHasOrderM) {
    for (size_t m = 1; m <= 8; m++) {
        const size_t n = size_t{1} << m;
        Permutation f = faro_shuffle(n);
        Permutation acc = Permutation::identity(n);
        for (size_t k = 0; k < m; k++) {
            EXPECT_EQ(acc.is_identity(), k == 0) << "m=" << m << " k=" << k;
            acc = compose(acc, f);
        }
        EXPECT_TRUE(acc.is_identity());
    }
}

TEST(Permutation, FaroInterleavesHalves) {
    // The inverse shuffle deals the two half-decks alternately.
    Permutation inv = inverse(faro_shuffle(8));
    std::vector<size_t> dealt(8);
    for (size_t i = 0; i < 8; i++) dealt[inv(i)] = i;
    EXPECT_EQ(dealt, (std::vector<size_t>{0, 4, 1, 5, 2, 6, 3, 7}));
}

TEST(Permutation, ComposeAppliesFirstThenSecond) {
    Permutation a({1, 2, 0});
    Permutation b({0, 2, 1});
    Permutation c = compose(a, b);
    for (size_t i = 0; i < 3; i++) EXPECT_EQ(c(i), b(a(i)));
    EXPECT_TRUE(compose(a, inverse(a)).is_identity());
}

TEST(Permutation, RejectsNonBijection) {
    EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation({0, 3}), std::invalid_argument);
    EXPECT_THROW(faro_shuffle(12), std::invalid_argument);
}

TEST(Permutation, RandomIsBijectionAndSeeded) {
    std::mt19937_64 a(5), b(5);
    Permutation p = random_permutation(50, a);
    EXPECT_EQ(p, random_permutation(50, b));
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
}

TEST(Permutation, Log2Helpers) {
    EXPECT_TRUE(is_power_of_two(64));
    EXPECT_FALSE(is_power_of_two(0));
    EXPECT_FALSE(is_power_of_two(12));
    EXPECT_EQ(exact_log2(256), 8u);
    EXPECT_THROW(exact_log2(10), std::invalid_argument);
}

}  // namespace
}  // namespace fastscramble

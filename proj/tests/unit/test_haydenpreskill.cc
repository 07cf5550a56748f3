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

#include "fastscramble/circuits.h"
#include "fastscramble/haydenpreskill.h"
#include "fastscramble/sampling.h"

namespace fastscramble {
namespace {

TEST(ChannelState, IdentityProgramGivesBellPairs) {
    auto cs = channel_state(CircuitProgram(6));
    EXPECT_EQ(cs.n, 6u);
    EXPECT_EQ(cs.state.num_qubits(), 12u);
    for (size_t i = 0; i < 6; i++) {
        std::vector<size_t> pair{i, cs.reference(i)}, one{i};
        EXPECT_EQ(cs.state.entropy_bits(one), 1u);
        EXPECT_EQ(cs.state.entropy_bits(pair), 0u);
    }
}

TEST(MutualInfo, IdentityCountsCollectedPartners) {
    auto cs = channel_state(CircuitProgram(6));
    std::vector<size_t> alice{0, 1};
    std::vector<size_t> none{}, one{1}, both{0, 1, 4};
    EXPECT_EQ(mutual_info_sample(cs, alice, none).direct, 0u);
    EXPECT_EQ(mutual_info_sample(cs, alice, one).direct, 2u);
    EXPECT_EQ(mutual_info_sample(cs, alice, both).direct, 4u);
    EXPECT_EQ(mutual_info_sample(cs, alice, one).a_rbar, 2u);
}

TEST(MutualInfo, RoutesAgreeAndIdentityHolds) {
    auto cs = channel_state(build_scrambling_circuit(4));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; trial++) {
        size_t a = 1 + rng() % 8, r = rng() % 17;
        auto alice = random_subset(16, a, rng);
        auto outputs = random_subset(16, r, rng);
        auto s = mutual_info_sample(cs, alice, outputs);
        EXPECT_EQ(s.direct, s.complement);
        EXPECT_EQ(s.direct + s.a_rbar, 2 * a);
    }
    std::vector<size_t> bad{16};
    EXPECT_THROW(mutual_info_sample(cs, bad, bad), std::out_of_range);
}

TEST(MutualInfo, FullOutputRecoversEverything) {
    auto cs = channel_state(build_scrambling_circuit(3));
    auto stats = mutual_info_A_RB(cs, 2, 8, 50, 1, Placement::Random);
    EXPECT_DOUBLE_EQ(stats.mean_bits, 4.0);
    EXPECT_DOUBLE_EQ(stats.stderr_bits, 0.0);
    auto none = mutual_info_A_RB(cs, 2, 0, 50, 1, Placement::Random);
    EXPECT_DOUBLE_EQ(none.mean_bits, 0.0);
}

TEST(MutualInfo, Deterministic) {
    auto cs = channel_state(build_scrambling_circuit(4));
    auto a = mutual_info_A_RB(cs, 3, 4, 400, 7, Placement::Random);
    auto b = mutual_info_A_RB(cs, 3, 4, 400, 7, Placement::Random);
    EXPECT_EQ(a.mean_bits, b.mean_bits);
    EXPECT_EQ(a.samples, 400u);
}

TEST(Saturation, ScramblerSaturatesQuickly) {
    auto cs = channel_state(build_scrambling_circuit(5));
    auto sat = min_R_for_saturation(cs, 1, 2000, 11, Placement::Random);
    EXPECT_TRUE(sat.saturated);
    EXPECT_LE(sat.size_r, 3u);
    ASSERT_EQ(sat.curve.size(), sat.size_r + 1);
    EXPECT_GE(sat.curve.back().mean_bits, 0.95 * 2);
}

TEST(Saturation, IdentityNeedsPartnerQubits) {
    // Contiguous A = {0}; R random: saturation needs R to contain output 0.
    auto cs = channel_state(CircuitProgram(8));
    auto sat = min_R_for_saturation(cs, 1, 500, 2, Placement::Contiguous);
    EXPECT_EQ(sat.size_r, 8u);
    EXPECT_TRUE(sat.saturated);
}

TEST(ChannelState, TruncationMatchesTruncatedProgram) {
    auto es = build_scrambling_circuit(3);
    EXPECT_EQ(channel_state(es, 2).state, channel_state(es.truncated(2)).state);
}

}  // namespace
}  // namespace fastscramble

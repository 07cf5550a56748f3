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
#include <random>

#include "fastscramble/circuits.h"
#include "fastscramble/decoder.h"
#include "fastscramble/haydenpreskill.h"
#include "fastscramble/sampling.h"

namespace fastscramble {
namespace {

DecoderSetup make_setup(CircuitProgram program, double p, bool crosstalk) {
    DecoderSetup s;
    s.program = std::move(program);
    s.p = p;
    s.crosstalk = crosstalk;
    return s;
}

void expect_samples_equal(const DecoderSample &a, const DecoderSample &b, double tol) {
    ASSERT_EQ(a.probability.size(), b.probability.size());
    for (size_t r = 0; r < a.probability.size(); r++) {
        EXPECT_NEAR(a.probability[r], b.probability[r], tol) << r;
        EXPECT_NEAR(a.joint[r], b.joint[r], tol) << r;
    }
}

TEST(Decoder, KernelMatchesGateByGateReference) {
    std::mt19937_64 order_rng(1);
    for (bool crosstalk : {false, true}) {
        for (const auto &prog : {build_scrambling_circuit(2), build_brickwork_circuit(4, 3)}) {
            auto setup = make_setup(prog, 0.15, crosstalk);
            for (int trial = 0; trial < 15; trial++) {
                auto order = random_permutation(4, order_rng).map();
                std::mt19937_64 r1(100 + trial), r2(100 + trial);
                expect_samples_equal(decoder_sample(setup, order, r1), decoder_sample_reference(setup, order, r2),
                                     1e-12);
            }
        }
    }
}

TEST(Decoder, PauliFrameMatchesFullSimulation) {
    auto fast = make_setup(build_scrambling_circuit(3), 0.05, false);
    auto full = fast;
    full.force_full_simulation = true;
    std::mt19937_64 order_rng(2);
    for (int trial = 0; trial < 20; trial++) {
        auto order = random_permutation(8, order_rng).map();
        std::mt19937_64 r1(trial), r2(trial);
        expect_samples_equal(decoder_sample(fast, order, r1), decoder_sample(full, order, r2), 1e-12);
    }
}

TEST(Decoder, NoiselessMatchesMutualInformation) {
    auto prog = build_scrambling_circuit(3);
    auto setup = make_setup(prog, 0.0, false);
    auto cs = channel_state(prog);
    std::vector<size_t> alice{0};
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; trial++) {
        auto order = random_permutation(8, rng).map();
        auto sample = decoder_sample(setup, order, rng);
        for (size_t r = 0; r <= 8; r++) {
            std::vector<size_t> outputs(order.begin(), order.begin() + r);
            double i2 = static_cast<double>(mutual_info_sample(cs, alice, outputs).direct);
            EXPECT_NEAR(sample.probability[r], std::exp2(-i2), 1e-12);
            EXPECT_NEAR(sample.joint[r], 0.25, 1e-12);
        }
    }
}

TEST(Decoder, RunDecoderStatistics) {
    auto setup = make_setup(build_scrambling_circuit(2), 0.0, false);
    auto stats = run_decoder(setup, 200, 5);
    ASSERT_EQ(stats.size(), 5u);
    EXPECT_DOUBLE_EQ(stats[0].p_epr, 1.0);
    for (const auto &s : stats) {
        EXPECT_EQ(s.trajectories, 200u);
        EXPECT_NEAR(s.delta, 1.0, 1e-12);
        EXPECT_NEAR(s.f_epr, 0.25 / s.p_epr, 1e-12);  // joint = 1/4 on every trajectory
    }
    EXPECT_NEAR(stats[4].f_epr, 1.0, 1e-12);

    auto noisy = make_setup(build_scrambling_circuit(2), 0.05, true);
    auto a = run_decoder(noisy, 300, 9);
    auto b = run_decoder(noisy, 300, 9);
    EXPECT_EQ(a[4].f_epr, b[4].f_epr);
    EXPECT_LT(a[4].delta, 1.0);
    auto single = run_decoder(noisy, 4, 300, 9);
    EXPECT_DOUBLE_EQ(single.delta, a[4].delta);
}

TEST(Decoder, DepthTruncation) {
    auto full = make_setup(build_scrambling_circuit(2), 0.0, false);
    auto cut = full;
    cut.depth = 2;
    auto explicit_cut = make_setup(build_scrambling_circuit(2).truncated(2), 0.0, false);
    std::vector<size_t> order{0, 1, 2, 3};
    std::mt19937_64 r1(1), r2(1);
    expect_samples_equal(decoder_sample(cut, order, r1), decoder_sample(explicit_cut, order, r2), 1e-14);
}

TEST(Decoder, Validation) {
    auto big = make_setup(build_scrambling_circuit(4), 0.0, false);  // 34 qubits
    EXPECT_THROW(run_decoder(big, 10, 1), ResourceLimitError);
    auto zero = make_setup(build_scrambling_circuit(2), 0.0, false);
    EXPECT_THROW(run_decoder(zero, 0, 1), std::invalid_argument);
    zero.p = 2.0;
    EXPECT_THROW(run_decoder(zero, 10, 1), std::invalid_argument);
}

}  // namespace
}  // namespace fastscramble

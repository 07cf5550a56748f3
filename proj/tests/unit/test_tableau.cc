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
#include <vector>

#include "fastscramble/circuits.h"
#include "fastscramble/dense.h"
#include "fastscramble/tableau.h"

namespace fastscramble {
namespace {

std::vector<size_t> bits_of(uint32_t mask, size_t n) {
    std::vector<size_t> out;
    for (size_t q = 0; q < n; q++) {
        if ((mask >> q) & 1) out.push_back(q);
    }
    return out;
}

TEST(Tableau, PolarizedGenerators) {
    EXPECT_EQ(StabilizerTableau::polarized(3, Basis::Z).str(), "+ZII\n+IZI\n+IIZ\n");
    EXPECT_EQ(StabilizerTableau::polarized(2, Basis::X).generator_string(1), "+IX");
    EXPECT_EQ(StabilizerTableau::polarized(2, Basis::Y).generator_string(0), "+YI");
    EXPECT_THROW(StabilizerTableau::polarized(0, Basis::Z), std::invalid_argument);
}

TEST(Tableau, SingleQubitConjugations) {
    auto t = StabilizerTableau::polarized(1, Basis::X);
    t.apply_phase(0);  // X -> Y
    EXPECT_EQ(t.generator_string(0), "+Y");
    t.apply_phase(0);  // Y -> -X
    EXPECT_EQ(t.generator_string(0), "-X");
    t.apply_phase_dag(0);  // -X -> Y
    EXPECT_EQ(t.generator_string(0), "+Y");
    t.apply_h(0);  // Y -> -Y
    EXPECT_EQ(t.generator_string(0), "-Y");

    auto z = StabilizerTableau::polarized(1, Basis::Z);
    z.apply_x(0);
    EXPECT_EQ(z.generator_string(0), "-Z");
    z.apply_z(0);
    EXPECT_EQ(z.generator_string(0), "-Z");
    z.apply_y(0);
    EXPECT_EQ(z.generator_string(0), "+Z");
}

TEST(Tableau, BellPair) {
    auto t = StabilizerTableau::polarized(2, Basis::Z);
    t.apply_h(0);
    t.apply_cnot(0, 1);
    EXPECT_TRUE(t.is_valid());
    std::vector<size_t> a{0}, b{1}, ab{0, 1};
    EXPECT_EQ(t.entropy_bits(a), 1u);
    EXPECT_EQ(t.entropy_bits(b), 1u);
    EXPECT_EQ(t.entropy_bits(ab), 0u);
    EXPECT_EQ(mutual_info_bits(t, a, b), 2u);
}

TEST(Tableau, CzEqualsConjugatedCnot) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; trial++) {
        auto t1 = StabilizerTableau::polarized(4, Basis::X);
        for (int k = 0; k < 6; k++) t1.apply_phase(rng() % 4), t1.apply_cnot(0, 1 + rng() % 3);
        auto t2 = t1;
        t1.apply_cz(1, 3);
        t2.apply_h(3);
        t2.apply_cnot(1, 3);
        t2.apply_h(3);
        EXPECT_EQ(t1, t2);
    }
}

TEST(Tableau, MatrixLayoutUsesPlusOneConvention) {
    auto t = StabilizerTableau::polarized(2, Basis::Z);
    t.apply_x(1);
    BitMatrix m = t.matrix();
    ASSERT_EQ(m.rows(), 2u);
    ASSERT_EQ(m.cols(), 5u);
    // Row i: x bits, z bits, phase (1 = +1).
    EXPECT_EQ(m.str(), "00101\n00010\n");
}

TEST(Tableau, PermutationMovesQubits) {
    auto t = StabilizerTableau::polarized(3, Basis::Z);
    t.apply_h(0);  // X on qubit 0
    t.apply_permutation(Permutation({2, 0, 1}));
    EXPECT_EQ(t.generator_string(0), "+IIX");
    std::vector<size_t> sites{0, 1};
    t.apply_permutation(Permutation({1, 0}), sites);
    EXPECT_EQ(t.generator_string(0), "+IIX");
}

TEST(Tableau, EntropyComplementSymmetryAndValidity) {
    std::mt19937_64 rng(21);
    const size_t n = 10;
    auto t = StabilizerTableau::polarized(n, Basis::Z);
    auto prog = build_random_nn(n, 6, rng);
    execute(prog, t);
    EXPECT_TRUE(t.is_valid());
    for (uint32_t mask = 0; mask < (1u << n); mask += 7) {
        auto a = bits_of(mask, n);
        auto b = bits_of(~mask & ((1u << n) - 1), n);
        EXPECT_EQ(t.entropy_bits(a), t.entropy_bits(b));
        EXPECT_LE(t.entropy_bits(a), std::min(a.size(), b.size()));
    }
}

TEST(Tableau, MatchesDenseEngineOnRandomCircuits) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 25; trial++) {
        const size_t n = 2 * (1 + trial % 3);
        auto prog = build_random_all_to_all(n, 1 + trial % 5, rng);
        auto t = StabilizerTableau::polarized(n, Basis::Z);
        DenseState psi(n);
        execute(prog, t);
        execute(prog, psi);
        for (uint32_t mask = 1; mask + 1 < (1u << n); mask++) {
            auto a = bits_of(mask, n);
            EXPECT_NEAR(psi.renyi2_entropy_bits(a), static_cast<double>(t.entropy_bits(a)), 1e-9);
        }
    }
}

TEST(Tableau, RangeChecks) {
    auto t = StabilizerTableau::polarized(2, Basis::Z);
    EXPECT_THROW(t.apply_h(2), std::out_of_range);
    EXPECT_THROW(t.apply_cnot(1, 1), std::invalid_argument);
    EXPECT_THROW(t.generator_string(5), std::out_of_range);
}

}  // namespace
}  // namespace fastscramble

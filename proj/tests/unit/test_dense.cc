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
#include <complex>
#include <numbers>
#include <random>

#include "fastscramble/circuits.h"
#include "fastscramble/dense.h"

namespace fastscramble {
namespace {

using C = std::complex<double>;

C overlap(const DenseState &a, const DenseState &b) {
    C s = 0;
    for (size_t i = 0; i < a.amplitudes().size(); i++) s += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    return s;
}

DenseState random_state(size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<C> amps(size_t{1} << n);
    double norm = 0;
    for (auto &x : amps) {
        x = {g(rng), g(rng)};
        norm += std::norm(x);
    }
    for (auto &x : amps) x /= std::sqrt(norm);
    return DenseState::from_amplitudes(amps);
}

void expect_same(const DenseState &a, const DenseState &b, double tol = 1e-12) {
    ASSERT_EQ(a.amplitudes().size(), b.amplitudes().size());
    for (size_t i = 0; i < a.amplitudes().size(); i++) {
        EXPECT_NEAR(std::abs(a.amplitudes()[i] - b.amplitudes()[i]), 0.0, tol) << i;
    }
}

TEST(Dense, HadamardSquaredIsIdentity) {
    std::mt19937_64 rng(1);
    auto psi = random_state(3, rng);
    auto phi = psi;
    phi.apply_h(1);
    phi.apply_h(1);
    expect_same(psi, phi);
}

TEST(Dense, CphasePiIsCz) {
    std::mt19937_64 rng(2);
    auto a = random_state(3, rng);
    auto b = a;
    a.apply_cz(0, 2);
    b.apply_cphase(0, 2, std::numbers::pi);
    expect_same(a, b);
}

TEST(Dense, PauliRelations) {
    std::mt19937_64 rng(3);
    auto a = random_state(2, rng);
    auto b = a;
    a.apply_y(1);
    b.apply_z(1);
    b.apply_x(1);
    auto amps = b.amplitudes();
    for (auto &x : amps) x *= C(0, 1);
    expect_same(a, DenseState::from_amplitudes(amps));  // Y = iXZ

    auto s = random_state(2, rng);
    auto t = s;
    s.apply_phase(0);
    s.apply_phase(0);
    t.apply_z(0);
    expect_same(s, t);
    s.apply_phase_dag(0);
    s.apply_phase(0);
    expect_same(s, t);
}

TEST(Dense, CnotFromHadamardAndCz) {
    std::mt19937_64 rng(4);
    auto a = random_state(3, rng);
    auto b = a;
    a.apply_cnot(2, 0);
    b.apply_h(0);
    b.apply_cz(2, 0);
    b.apply_h(0);
    expect_same(a, b);
}

TEST(Dense, BellPairEntropyAndProjection) {
    DenseState psi(2);
    psi.apply_h(0);
    psi.apply_cnot(0, 1);
    std::vector<size_t> a{0};
    EXPECT_NEAR(psi.renyi2_entropy_bits(a), 1.0, 1e-12);
    auto copy = psi;
    EXPECT_NEAR(copy.project_epr(0, 1), 1.0, 1e-12);
    DenseState zero(2);
    EXPECT_NEAR(zero.project_epr(0, 1), 0.5, 1e-12);
    EXPECT_NEAR(zero.norm_squared(), 0.5, 1e-12);
}

TEST(Dense, PermutationMovesQubits) {
    DenseState psi(3);
    psi.apply_x(0);
    psi.apply_permutation(Permutation({2, 0, 1}));
    EXPECT_NEAR(std::abs(psi.amplitudes()[4]), 1.0, 1e-12);  // qubit 2 set
}

TEST(Dense, CliffordWordsMatchTableauConvention) {
    // apply_clifford2 with a gate's own element equals applying the gate.
    std::mt19937_64 rng(5);
    auto a = random_state(2, rng);
    auto b = a;
    a.apply_clifford2(Clifford2::from_gate(Gate2::CX01), 0, 1);
    b.apply_cnot(0, 1);
    EXPECT_NEAR(std::abs(overlap(a, b)), 1.0, 1e-12);
}

TEST(Dense, ConjugateProgramGivesComplexConjugate) {
    std::mt19937_64 rng(6);
    for (auto prog : {build_scrambling_circuit(2), build_random_all_to_all(4, 4, rng), build_random_nn(6, 5, rng)}) {
        DenseState u(prog.num_qubits()), v(prog.num_qubits());
        execute(prog, u);
        execute(conjugate_program(prog), v);
        auto amps = u.amplitudes();
        for (auto &x : amps) x = std::conj(x);
        auto u_conj = DenseState::from_amplitudes(amps);
        EXPECT_NEAR(std::abs(overlap(u_conj, v)), 1.0, 1e-10);
    }
}

TEST(Dense, CrosstalkReducesFidelity) {
    DenseState ideal(6), noisy(6);
    for (size_t q = 0; q < 6; q++) ideal.apply_h(q), noisy.apply_h(q);
    auto bonds = cz_even_bonds(6);
    EXPECT_EQ(crosstalk_pairs(6, bonds), (std::vector<Bond>{{1, 2}, {3, 4}}));
    rydberg_cz_layer(ideal, bonds, false);
    rydberg_cz_layer(noisy, bonds, true);
    double f = std::norm(overlap(ideal, noisy));
    EXPECT_LT(f, 1.0 - 1e-4);
    EXPECT_GT(f, 0.9);
    DenseState reference(6);
    for (size_t q = 0; q < 6; q++) reference.apply_h(q);
    for (auto [a, b] : bonds) reference.apply_cz(a, b);
    expect_same(reference, ideal);
}

TEST(Noise, PauliFrequencies) {
    std::mt19937_64 rng(7);
    std::array<int, 4> counts{};
    const int draws = 200000;
    for (int i = 0; i < draws; i++) counts[sample_pauli(0.4, NoiseModel::Depolarizing, rng)]++;
    for (int k = 1; k < 4; k++) EXPECT_NEAR(counts[k] / double(draws), 0.1, 0.005);
    std::array<int, 4> deph{};
    for (int i = 0; i < draws; i++) deph[sample_pauli(0.4, NoiseModel::Dephasing, rng)]++;
    EXPECT_EQ(deph[1] + deph[2], 0);
    EXPECT_NEAR(deph[3] / double(draws), 0.2, 0.005);
}

TEST(Noise, RejectsBadProbability) {
    DenseState psi(1);
    std::mt19937_64 rng(1);
    std::vector<size_t> q{0};
    EXPECT_THROW(depolarize_trajectory(psi, q, 1.5, rng), std::invalid_argument);
}

TEST(Dense, Limits) {
    EXPECT_THROW(DenseState(kMaxDenseQubits + 1), ResourceLimitError);
    EXPECT_THROW(DenseState(0), std::invalid_argument);
    EXPECT_THROW(DenseState::from_amplitudes({1.0, 0.0, 0.0}), std::invalid_argument);
    DenseState psi(2);
    EXPECT_THROW(psi.apply_h(2), std::out_of_range);
}

}  // namespace
}  // namespace fastscramble

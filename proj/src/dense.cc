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

#include "fastscramble/dense.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace fastscramble {

namespace {

constexpr Amplitude kI{0.0, 1.0};

}  // namespace

DenseState::DenseState(size_t n) : n_(n) {
    if (n == 0) {
        throw std::invalid_argument("DenseState: need at least one qubit");
    }
    if (n > kMaxDenseQubits) {
        throw ResourceLimitError(
            "DenseState: " + std::to_string(n) + " qubits exceeds the limit of " + std::to_string(kMaxDenseQubits));
    }
    amps_.assign(size_t{1} << n, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

DenseState DenseState::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const size_t len = amplitudes.size();
    if (len < 2 || !std::has_single_bit(len)) {
        throw std::invalid_argument("DenseState::from_amplitudes: length must be a power of two >= 2");
    }
    DenseState s(static_cast<size_t>(std::countr_zero(len)));
    s.amps_ = std::move(amplitudes);
    return s;
}

void DenseState::check_qubit(size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("DenseState: qubit " + std::to_string(q) + " out of range");
    }
}

double DenseState::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void DenseState::apply_h(size_t q) {
    check_qubit(q);
    const size_t bit = size_t{1} << q;
    const double r = std::numbers::sqrt2 / 2;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (!(i & bit)) {
            Amplitude u = amps_[i];
            Amplitude v = amps_[i | bit];
            amps_[i] = (u + v) * r;
            amps_[i | bit] = (u - v) * r;
        }
    }
}

void DenseState::apply_phase(size_t q) {
    check_qubit(q);
    const size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & bit) amps_[i] *= kI;
    }
}

void DenseState::apply_phase_dag(size_t q) {
    check_qubit(q);
    const size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & bit) amps_[i] *= -kI;
    }
}

void DenseState::apply_x(size_t q) {
    check_qubit(q);
    const size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
    }
}

void DenseState::apply_y(size_t q) {
    // Y = i X Z.
    apply_z(q);
    apply_x(q);
    for (auto &a : amps_) a *= kI;
}

void DenseState::apply_z(size_t q) {
    check_qubit(q);
    const size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & bit) amps_[i] = -amps_[i];
    }
}

void DenseState::apply_cnot(size_t control, size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("DenseState::apply_cnot: control equals target");
    }
    const size_t c = size_t{1} << control;
    const size_t t = size_t{1} << target;
    for (size_t i = 0; i < amps_.size(); i++) {
        if ((i & c) && !(i & t)) std::swap(amps_[i], amps_[i | t]);
    }
}

void DenseState::apply_cz(size_t a, size_t b) {
    apply_cphase(a, b, std::numbers::pi);
}

void DenseState::apply_cphase(size_t a, size_t b, double theta) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("DenseState::apply_cphase: qubits must differ");
    }
    // Exact -1 for theta = pi, so CZ stays real.
    const Amplitude phase = theta == std::numbers::pi ? Amplitude{-1.0, 0.0} : std::polar(1.0, theta);
    const size_t mask = (size_t{1} << a) | (size_t{1} << b);
    for (size_t i = 0; i < amps_.size(); i++) {
        if ((i & mask) == mask) amps_[i] *= phase;
    }
}

void DenseState::apply_clifford2(const Clifford2 &op, size_t a, size_t b) {
    const auto &group = TwoQubitCliffordGroup::instance();
    for (Gate2 g : group[group.index_of(op)].word) {
        switch (g) {
            case Gate2::H0: apply_h(a); break;
            case Gate2::H1: apply_h(b); break;
            case Gate2::S0: apply_phase(a); break;
            case Gate2::S1: apply_phase(b); break;
            case Gate2::CX01: apply_cnot(a, b); break;
            case Gate2::CX10: apply_cnot(b, a); break;
        }
    }
}

void DenseState::apply_permutation(const Permutation &p) {
    std::vector<size_t> sites(n_);
    std::iota(sites.begin(), sites.end(), size_t{0});
    apply_permutation(p, sites);
}

void DenseState::apply_permutation(const Permutation &p, std::span<const size_t> sites) {
    if (p.size() != sites.size()) {
        throw std::invalid_argument("DenseState::apply_permutation: permutation and site list sizes differ");
    }
    std::vector<size_t> dest(n_);
    std::iota(dest.begin(), dest.end(), size_t{0});
    for (size_t i = 0; i < sites.size(); i++) {
        check_qubit(sites[i]);
        dest[sites[i]] = sites[p(i)];
    }
    std::vector<Amplitude> out(amps_.size());
    for (size_t idx = 0; idx < amps_.size(); idx++) {
        size_t moved = 0;
        for (size_t q = 0; q < n_; q++) {
            moved |= ((idx >> q) & 1) << dest[q];
        }
        out[moved] = amps_[idx];
    }
    amps_ = std::move(out);
}

double DenseState::project_epr(size_t a, size_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("DenseState::project_epr: qubits must differ");
    }
    const double before = norm_squared();
    const size_t ba = size_t{1} << a;
    const size_t bb = size_t{1} << b;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & (ba | bb)) continue;
        Amplitude avg = (amps_[i] + amps_[i | ba | bb]) * 0.5;
        amps_[i] = avg;
        amps_[i | ba | bb] = avg;
        amps_[i | ba] = 0.0;
        amps_[i | bb] = 0.0;
    }
    return before > 0 ? norm_squared() / before : 0.0;
}

double DenseState::renyi2_entropy_bits(std::span<const size_t> subset) const {
    std::vector<bool> in_a(n_, false);
    for (size_t q : subset) {
        check_qubit(q);
        in_a[q] = true;
    }
    std::vector<size_t> a_bits, b_bits;
    for (size_t q = 0; q < n_; q++) {
        (in_a[q] ? a_bits : b_bits).push_back(q);
    }
    if (a_bits.empty() || b_bits.empty()) {
        return 0.0;
    }
    // Reduce over the smaller side: Tr rho_A^2 = Tr rho_B^2 for pure states.
    if (a_bits.size() > b_bits.size()) {
        std::swap(a_bits, b_bits);
    }
    const size_t da = size_t{1} << a_bits.size();
    const size_t db = size_t{1} << b_bits.size();
    auto spread = [](size_t v, const std::vector<size_t> &bits) {
        size_t out = 0;
        for (size_t k = 0; k < bits.size(); k++) {
            out |= ((v >> k) & 1) << bits[k];
        }
        return out;
    };
    std::vector<size_t> a_index(da), b_index(db);
    for (size_t v = 0; v < da; v++) a_index[v] = spread(v, a_bits);
    for (size_t v = 0; v < db; v++) b_index[v] = spread(v, b_bits);

    double purity = 0;
    for (size_t i = 0; i < da; i++) {
        for (size_t j = i; j < da; j++) {
            Amplitude rho{0.0, 0.0};
            for (size_t k = 0; k < db; k++) {
                rho += amps_[a_index[i] | b_index[k]] * std::conj(amps_[a_index[j] | b_index[k]]);
            }
            purity += (i == j ? 1.0 : 2.0) * std::norm(rho);
        }
    }
    return -std::log2(purity);
}

std::vector<Bond> crosstalk_pairs(size_t n, std::span<const Bond> bonds) {
    std::vector<Bond> out;
    for (size_t i = 0; i + 1 < n; i++) {
        bool bonded = std::any_of(bonds.begin(), bonds.end(), [&](const Bond &b) {
            return (b.first == i && b.second == i + 1) || (b.first == i + 1 && b.second == i);
        });
        if (!bonded) {
            out.emplace_back(i, i + 1);
        }
    }
    return out;
}

void rydberg_cz_layer(DenseState &state, std::span<const Bond> bonds, bool crosstalk, std::span<const size_t> sites) {
    std::vector<size_t> identity;
    if (sites.empty()) {
        identity.resize(state.num_qubits());
        std::iota(identity.begin(), identity.end(), size_t{0});
        sites = identity;
    }
    std::vector<bool> used(sites.size(), false);
    for (auto [a, b] : bonds) {
        if (a >= sites.size() || b >= sites.size()) {
            throw std::out_of_range("rydberg_cz_layer: bond site out of range");
        }
        if (a == b || used[a] || used[b]) {
            throw std::invalid_argument("rydberg_cz_layer: bonds must be disjoint");
        }
        used[a] = used[b] = true;
    }
    for (auto [a, b] : bonds) {
        state.apply_cz(sites[a], sites[b]);
    }
    if (crosstalk) {
        for (auto [a, b] : crosstalk_pairs(sites.size(), bonds)) {
            state.apply_cphase(sites[a], sites[b], kCrosstalkPhase);
        }
    }
}

uint8_t sample_pauli(double p, NoiseModel model, std::mt19937_64 &rng) {
    double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    if (model == NoiseModel::Dephasing) {
        return u < p / 2 ? 3 : 0;
    }
    if (u < p / 4) return 1;
    if (u < p / 2) return 2;
    if (u < 3 * p / 4) return 3;
    return 0;
}

void depolarize_trajectory(
    DenseState &state, std::span<const size_t> qubits, double p, std::mt19937_64 &rng, NoiseModel model) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("depolarize_trajectory: p must lie in [0, 1]");
    }
    for (size_t q : qubits) {
        switch (sample_pauli(p, model, rng)) {
            case 1: state.apply_x(q); break;
            case 2: state.apply_y(q); break;
            case 3: state.apply_z(q); break;
            default: break;
        }
    }
}

CircuitProgram conjugate_program(const CircuitProgram &program) {
    const auto &group = TwoQubitCliffordGroup::instance();
    CircuitProgram out(program.num_qubits());
    for (const CircuitLayer &l : program.layers()) {
        if (std::holds_alternative<layer::GlobalP>(l)) {
            out.push(layer::GlobalPdag{});
        } else if (std::holds_alternative<layer::GlobalPdag>(l)) {
            out.push(layer::GlobalP{});
        } else if (const auto *c = std::get_if<layer::CliffordLayer>(&l)) {
            layer::CliffordLayer conj = *c;
            for (auto &g : conj.gates) {
                g.id = group.conjugate_index(g.id);
            }
            out.push(std::move(conj));
        } else {
            out.push(l);
        }
    }
    return out;
}

}  // namespace fastscramble

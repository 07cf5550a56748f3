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

#include "fastscramble/clifford2.h"

#include <bit>
#include <deque>
#include <stdexcept>

namespace fastscramble {

namespace {

constexpr uint8_t kX0 = 1, kZ0 = 2, kX1 = 4, kZ1 = 8;

// x bits at positions 0 and 2, z bits at 1 and 3.
uint8_t x_part(uint8_t bits) {
    return bits & 0b0101;
}
uint8_t z_part(uint8_t bits) {
    return (bits >> 1) & 0b0101;
}
int y_count(uint8_t bits) {
    return std::popcount(static_cast<unsigned>(x_part(bits) & z_part(bits)));
}

// i^phase * X^x Z^z on each qubit.
struct PhasedPauli {
    uint8_t bits;
    int phase;
};

PhasedPauli to_phased(Pauli2 p) {
    return {p.bits, (2 * (p.negative ? 1 : 0) + y_count(p.bits)) & 3};
}

PhasedPauli mul(PhasedPauli a, PhasedPauli b) {
    // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{z1.x2} X^{x1+x2} Z^{z1+z2}
    int swaps = std::popcount(static_cast<unsigned>(z_part(a.bits) & x_part(b.bits)));
    return {static_cast<uint8_t>(a.bits ^ b.bits), (a.phase + b.phase + 2 * swaps) & 3};
}

Pauli2 to_hermitian(PhasedPauli p) {
    int diff = (p.phase - y_count(p.bits)) & 3;
    if (diff & 1) {
        throw std::invalid_argument("Pauli product is not Hermitian");
    }
    return Pauli2{p.bits, diff == 2};
}

}  // namespace

std::string Pauli2::str() const {
    static const char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    std::string out;
    out.push_back(negative ? '-' : '+');
    out.push_back(kLetters[bits & 3]);
    out.push_back(kLetters[(bits >> 2) & 3]);
    return out;
}

bool anticommutes(Pauli2 a, Pauli2 b) {
    int s = std::popcount(static_cast<unsigned>(x_part(a.bits) & z_part(b.bits))) +
            std::popcount(static_cast<unsigned>(z_part(a.bits) & x_part(b.bits)));
    return s & 1;
}

Pauli2 multiply_commuting(Pauli2 a, Pauli2 b) {
    return to_hermitian(mul(to_phased(a), to_phased(b)));
}

Clifford2::Clifford2() : Clifford2({Pauli2{kX0}, Pauli2{kZ0}, Pauli2{kX1}, Pauli2{kZ1}}) {
}

Clifford2::Clifford2(std::array<Pauli2, 4> images) : images_(images) {
    for (uint8_t b = 0; b < 16; b++) {
        // Hermitian P = i^{#Y} X0^x0 Z0^z0 X1^x1 Z1^z1, so
        // U P U^dag = i^{#Y} img(X0)^x0 img(Z0)^z0 img(X1)^x1 img(Z1)^z1.
        PhasedPauli acc{0, y_count(b)};
        for (int k = 0; k < 4; k++) {
            if ((b >> k) & 1) {
                acc = mul(acc, to_phased(images_[k]));
            }
        }
        table_[b] = to_hermitian(acc);
    }
}

Clifford2 Clifford2::from_gate(Gate2 g) {
    switch (g) {
        case Gate2::H0:
            return Clifford2({Pauli2{kZ0}, Pauli2{kX0}, Pauli2{kX1}, Pauli2{kZ1}});
        case Gate2::H1:
            return Clifford2({Pauli2{kX0}, Pauli2{kZ0}, Pauli2{kZ1}, Pauli2{kX1}});
        case Gate2::S0:
            return Clifford2({Pauli2{kX0 | kZ0}, Pauli2{kZ0}, Pauli2{kX1}, Pauli2{kZ1}});
        case Gate2::S1:
            return Clifford2({Pauli2{kX0}, Pauli2{kZ0}, Pauli2{kX1 | kZ1}, Pauli2{kZ1}});
        case Gate2::CX01:
            return Clifford2({Pauli2{kX0 | kX1}, Pauli2{kZ0}, Pauli2{kX1}, Pauli2{kZ0 | kZ1}});
        case Gate2::CX10:
            return Clifford2({Pauli2{kX0}, Pauli2{kZ0 | kZ1}, Pauli2{kX0 | kX1}, Pauli2{kZ1}});
    }
    throw std::invalid_argument("unknown Gate2");
}

Clifford2 Clifford2::then(const Clifford2 &after) const {
    std::array<Pauli2, 4> out;
    for (int k = 0; k < 4; k++) {
        out[k] = after.conjugate(images_[k]);
    }
    return Clifford2(out);
}

Clifford2 Clifford2::complex_conjugate() const {
    // X and Z are real, so U* X U^T = (U X U^dag)*; conjugation flips the sign
    // of each Y factor.
    std::array<Pauli2, 4> out = images_;
    for (auto &p : out) {
        if (y_count(p.bits) & 1) {
            p.negative = !p.negative;
        }
    }
    return Clifford2(out);
}

bool Clifford2::is_valid() const {
    // X0 anticommutes with Z0, X1 with Z1; all other pairs commute.
    for (int a = 0; a < 4; a++) {
        if (images_[a].bits == 0) {
            return false;
        }
        for (int b = a + 1; b < 4; b++) {
            bool expect = (a == 0 && b == 1) || (a == 2 && b == 3);
            if (anticommutes(images_[a], images_[b]) != expect) {
                return false;
            }
        }
    }
    return true;
}

uint32_t Clifford2::key() const {
    uint32_t k = 0;
    for (int i = 0; i < 4; i++) {
        k |= static_cast<uint32_t>(images_[i].bits | (images_[i].negative ? 16 : 0)) << (5 * i);
    }
    return k;
}

std::vector<Clifford2Element> gen_two_qubit_clifford_group() {
    static constexpr Gate2 kGenerators[] = {Gate2::H0, Gate2::H1, Gate2::S0, Gate2::S1, Gate2::CX01, Gate2::CX10};
    std::array<Clifford2, 6> gens;
    for (size_t k = 0; k < 6; k++) {
        gens[k] = Clifford2::from_gate(kGenerators[k]);
    }

    std::vector<Clifford2Element> elements;
    std::vector<bool> seen(size_t{1} << 20, false);
    elements.push_back({Clifford2(), {}});
    seen[elements[0].op.key()] = true;
    for (size_t head = 0; head < elements.size(); head++) {
        for (size_t k = 0; k < 6; k++) {
            Clifford2 next = elements[head].op.then(gens[k]);
            uint32_t key = next.key();
            if (seen[key]) {
                continue;
            }
            seen[key] = true;
            std::vector<Gate2> word = elements[head].word;
            word.push_back(kGenerators[k]);
            elements.push_back({next, std::move(word)});
        }
    }
    return elements;
}

const TwoQubitCliffordGroup &TwoQubitCliffordGroup::instance() {
    static const TwoQubitCliffordGroup group;
    return group;
}

TwoQubitCliffordGroup::TwoQubitCliffordGroup()
    : elements_(gen_two_qubit_clifford_group()), by_key_(size_t{1} << 20, -1) {
    for (size_t i = 0; i < elements_.size(); i++) {
        by_key_[elements_[i].op.key()] = static_cast<int32_t>(i);
    }
    conjugate_.resize(elements_.size());
    for (size_t i = 0; i < elements_.size(); i++) {
        conjugate_[i] = static_cast<uint32_t>(index_of(elements_[i].op.complex_conjugate()));
    }
}

size_t TwoQubitCliffordGroup::index_of(const Clifford2 &op) const {
    int32_t id = by_key_[op.key()];
    if (id < 0) {
        throw std::out_of_range("Clifford2 not found in the two-qubit Clifford table");
    }
    return static_cast<size_t>(id);
}

}  // namespace fastscramble

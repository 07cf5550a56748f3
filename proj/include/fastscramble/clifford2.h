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

#ifndef FASTSCRAMBLE_CLIFFORD2_H
#define FASTSCRAMBLE_CLIFFORD2_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fastscramble {

/// Hermitian two-qubit Pauli operator with a sign.
///
/// `bits` packs x0 | z0 << 1 | x1 << 2 | z1 << 3; a qubit with both x and z set
/// carries Y (not XZ).
struct Pauli2 {
    uint8_t bits = 0;
    bool negative = false;

    bool operator==(const Pauli2 &) const = default;
    std::string str() const;  // e.g. "-XY"
};

/// Product of two Hermitian Paulis, which must commute (so the product is
/// Hermitian). Throws std::invalid_argument for anticommuting inputs.
Pauli2 multiply_commuting(Pauli2 a, Pauli2 b);

/// True when the two Paulis anticommute.
bool anticommutes(Pauli2 a, Pauli2 b);

/// Elementary gates used to spell a two-qubit Clifford as a gate word.
enum class Gate2 : uint8_t { H0, H1, S0, S1, CX01, CX10 };

/// Two-qubit Clifford operation modulo global phase, identified by the signed
/// images of X0, Z0, X1, Z1 under conjugation.
class Clifford2 {
   public:
    Clifford2();  // identity
    explicit Clifford2(std::array<Pauli2, 4> images);

    static Clifford2 from_gate(Gate2 g);

    const std::array<Pauli2, 4> &images() const { return images_; }
    /// U P U^dagger for a Hermitian input.
    Pauli2 conjugate(Pauli2 p) const { return Pauli2{table_[p.bits].bits, table_[p.bits].negative != p.negative}; }
    /// Lookup row: image of the positively signed Pauli with the given bits.
    const std::array<Pauli2, 16> &table() const { return table_; }

    /// `this` followed by `after`.
    Clifford2 then(const Clifford2 &after) const;
    /// Complex conjugate U* in the computational basis.
    Clifford2 complex_conjugate() const;

    /// Images preserve the commutation relations of X0, Z0, X1, Z1.
    bool is_valid() const;

    /// 20-bit canonical key built from the four images.
    uint32_t key() const;

    bool operator==(const Clifford2 &other) const { return images_ == other.images_; }

   private:
    std::array<Pauli2, 4> images_;
    std::array<Pauli2, 16> table_;
};

struct Clifford2Element {
    Clifford2 op;
    /// Gate sequence realising `op`, in application order.
    std::vector<Gate2> word;
};

/// Every distinct two-qubit Clifford modulo phase (11520 elements), obtained by
/// breadth-first closure over {H0, H1, S0, S1, CX01, CX10}. Element 0 is the
/// identity. Order is deterministic.
std::vector<Clifford2Element> gen_two_qubit_clifford_group();

/// Process-wide cached copy of the group with index lookups.
class TwoQubitCliffordGroup {
   public:
    static const TwoQubitCliffordGroup &instance();

    size_t size() const { return elements_.size(); }
    const Clifford2Element &operator[](size_t id) const { return elements_[id]; }
    const std::vector<Clifford2Element> &elements() const { return elements_; }
    /// Throws std::out_of_range if `op` is not in the table (it always is for
    /// valid Cliffords).
    size_t index_of(const Clifford2 &op) const;
    size_t conjugate_index(size_t id) const { return conjugate_[id]; }

   private:
    TwoQubitCliffordGroup();
    std::vector<Clifford2Element> elements_;
    std::vector<int32_t> by_key_;
    std::vector<uint32_t> conjugate_;
};

}  // namespace fastscramble

#endif

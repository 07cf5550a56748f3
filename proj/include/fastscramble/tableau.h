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

#ifndef FASTSCRAMBLE_TABLEAU_H
#define FASTSCRAMBLE_TABLEAU_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fastscramble/clifford2.h"
#include "fastscramble/gf2.h"
#include "fastscramble/permutation.h"

namespace fastscramble {

enum class Basis { X, Y, Z };

/// Stabilizer state on n qubits, tracked as its n stabilizer generators
/// (no destabilizers).
///
/// Storage is qubit-major: for every qubit q there is one bit vector over the
/// n generators holding the X components and one holding the Z components,
/// plus one vector of sign bits (set = negative). A gate on qubit q therefore
/// touches two contiguous rows of 64-bit blocks, and the entropy of a qubit
/// subset is the rank of a block of rows copied out of the store.
///
/// matrix() exports the conventional n x (2n + 1) layout: generator rows, X
/// columns 0..n-1, Z columns n..2n-1, and a phase column in which 1 means +1.
class StabilizerTableau {
   public:
    StabilizerTableau() = default;

    /// Product state with every qubit in the +1 eigenstate of the basis Pauli.
    /// Throws std::invalid_argument for n == 0.
    static StabilizerTableau polarized(size_t n, Basis basis);

    size_t num_qubits() const { return n_; }

    void apply_h(size_t q);
    /// S = diag(1, i): X -> Y, Y -> -X.
    void apply_phase(size_t q);
    /// S^dagger: X -> -Y, Y -> X.
    void apply_phase_dag(size_t q);
    void apply_x(size_t q);
    void apply_y(size_t q);
    void apply_z(size_t q);
    void apply_cnot(size_t control, size_t target);
    void apply_cz(size_t a, size_t b);
    /// Applies a two-qubit Clifford with `a` as its qubit 0 and `b` as qubit 1.
    void apply_clifford2(const Clifford2 &op, size_t a, size_t b);
    /// Moves the qubit at site i to site p(i).
    void apply_permutation(const Permutation &p);
    /// Same, restricted to the listed qubits: the qubit at sites[i] moves to
    /// sites[p(i)]. Other qubits are untouched.
    void apply_permutation(const Permutation &p, std::span<const size_t> sites);

    /// Renyi-2 entropy of the qubit subset in bits: rank of its X and Z columns
    /// minus its size.
    size_t entropy_bits(std::span<const size_t> subset) const;

    BitMatrix matrix() const;
    /// Generator i as a sign followed by one of I, X, Y, Z per qubit.
    std::string generator_string(size_t i) const;
    /// One generator per line.
    std::string str() const;

    /// Generators independent and mutually commuting.
    bool is_valid() const;

    bool operator==(const StabilizerTableau &other) const = default;

   private:
    explicit StabilizerTableau(size_t n);
    void check_qubit(size_t q) const;
    uint64_t *xs(size_t q) { return store_.row(2 * q).data(); }
    uint64_t *zs(size_t q) { return store_.row(2 * q + 1).data(); }
    uint64_t *signs() { return signs_.row(0).data(); }

    size_t n_ = 0;
    size_t blocks_ = 0;
    BitMatrix store_;  // 2n rows (X then Z per qubit) x n generator columns
    BitMatrix signs_;  // 1 x n
};

/// S_A in bits. Empty subsets give 0.
size_t renyi2_entropy_bits(const StabilizerTableau &t, std::span<const size_t> subset);

/// S_A + S_B - S_AB in bits. Throws std::invalid_argument if A and B overlap.
size_t mutual_info_bits(const StabilizerTableau &t, std::span<const size_t> a, std::span<const size_t> b);

}  // namespace fastscramble

#endif

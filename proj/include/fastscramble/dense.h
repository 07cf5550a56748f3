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

#ifndef FASTSCRAMBLE_DENSE_H
#define FASTSCRAMBLE_DENSE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "fastscramble/circuits.h"
#include "fastscramble/clifford2.h"
#include "fastscramble/permutation.h"

namespace fastscramble {

using Amplitude = std::complex<double>;

/// Largest register the dense engine will allocate.
inline constexpr size_t kMaxDenseQubits = 20;

/// Raised when a dense simulation would exceed kMaxDenseQubits.
class ResourceLimitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Statevector on n <= kMaxDenseQubits qubits. Qubit q is bit q of the basis
/// index.
class DenseState {
   public:
    DenseState() = default;
    /// |0...0>. Throws ResourceLimitError for n > kMaxDenseQubits and
    /// std::invalid_argument for n == 0.
    explicit DenseState(size_t n);
    /// Throws std::invalid_argument unless the length is a power of two.
    static DenseState from_amplitudes(std::vector<Amplitude> amplitudes);

    size_t num_qubits() const { return n_; }
    const std::vector<Amplitude> &amplitudes() const { return amps_; }
    double norm_squared() const;

    void apply_h(size_t q);
    void apply_phase(size_t q);
    void apply_phase_dag(size_t q);
    void apply_x(size_t q);
    void apply_y(size_t q);
    void apply_z(size_t q);
    void apply_cnot(size_t control, size_t target);
    void apply_cz(size_t a, size_t b);
    /// diag(1, 1, 1, e^{i theta}).
    void apply_cphase(size_t a, size_t b, double theta);
    /// Spells `op` with its gate word from TwoQubitCliffordGroup; exact up to a
    /// global phase.
    void apply_clifford2(const Clifford2 &op, size_t a, size_t b);
    void apply_permutation(const Permutation &p);
    /// The qubit at sites[i] moves to sites[p(i)].
    void apply_permutation(const Permutation &p, std::span<const size_t> sites);

    /// Projects qubits a, b onto (|00> + |11>)/sqrt(2) without renormalising.
    /// Returns the squared norm after projection divided by the one before.
    double project_epr(size_t a, size_t b);

    /// -log2 Tr rho_A^2. Requires a normalised state.
    double renyi2_entropy_bits(std::span<const size_t> subset) const;

   private:
    void check_qubit(size_t q) const;
    size_t n_ = 0;
    std::vector<Amplitude> amps_;
};

/// Crosstalk phase between atoms 2 R_nn apart: pi (1/2)^6.
inline constexpr double kCrosstalkPhase = std::numbers::pi / 64.0;

/// Adjacent chain pairs (i, i+1) that are not among `bonds`. During a CZ layer
/// these atoms sit 2 R_nn apart.
std::vector<Bond> crosstalk_pairs(size_t n, std::span<const Bond> bonds);

/// CZ on each bond and, with crosstalk, CPhase(kCrosstalkPhase) on every
/// crosstalk pair. Chain site j lives on state qubit sites[j]; an empty
/// `sites` means the identity map over all qubits. Throws
/// std::invalid_argument for overlapping bonds.
void rydberg_cz_layer(
    DenseState &state, std::span<const Bond> bonds, bool crosstalk, std::span<const size_t> sites = {});

enum class NoiseModel {
    /// X, Y, Z each with probability p/4.
    Depolarizing,
    /// Z with probability p/2.
    Dephasing,
};

/// One single-qubit error draw: 0 = I, 1 = X, 2 = Y, 3 = Z.
uint8_t sample_pauli(double p, NoiseModel model, std::mt19937_64 &rng);

/// Applies an independent sample_pauli draw to each listed qubit. Throws
/// std::invalid_argument for p outside [0, 1].
void depolarize_trajectory(
    DenseState &state, std::span<const size_t> qubits, double p, std::mt19937_64 &rng,
    NoiseModel model = NoiseModel::Depolarizing);

/// Complex conjugate in the computational basis: P becomes P^dagger (and back),
/// two-qubit Cliffords map to their conjugates, everything else is unchanged.
CircuitProgram conjugate_program(const CircuitProgram &program);

}  // namespace fastscramble

#endif

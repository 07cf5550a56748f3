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

#ifndef FASTSCRAMBLE_DECODER_H
#define FASTSCRAMBLE_DECODER_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "fastscramble/circuits.h"
#include "fastscramble/dense.h"

namespace fastscramble {

/// Probabilistic teleportation decoder around a scrambling program U on N
/// qubits.
///
/// Qubit layout of the 2N + 2|A| qubit register, low bits first:
///   q_A[k]        bit k                 (k < |A|)
///   scrambler j   bit |A| + j           (j < N)
///   decoder j     bit |A| + N + j
///   q_B[k]        bit |A| + 2N + k
/// Initial Bell pairs: q_A[k] with scrambler k, scrambler j with decoder j for
/// j >= |A|, and decoder k with q_B[k]. U runs on the scrambler and U* on the
/// decoder in lockstep. Noise hits every qubit after each interaction layer.
struct DecoderSetup {
    CircuitProgram program;
    size_t size_a = 1;
    /// Truncate U to this many interaction layers.
    std::optional<size_t> depth;
    double p = 0.0;
    NoiseModel noise = NoiseModel::Depolarizing;
    /// Crosstalk phases on CZ layers of both halves. They are physical, so
    /// the decoder half gets the same sign as the scrambler half.
    bool crosstalk = true;
    /// Skip the Pauli-frame shortcut used when every layer is Clifford.
    bool force_full_simulation = false;

    size_t num_qubits() const { return 2 * program.num_qubits() + 2 * size_a; }
};

/// Decoder statistics for one |R|.
struct TrajectoryStats {
    size_t size_r = 0;
    uint64_t trajectories = 0;
    /// Mean EPR success probability on the R pairs.
    double p_epr = 0;
    /// Fidelity of (q_A, q_B) with the Bell state given success:
    /// mean(joint) / mean(P).
    double f_epr = 0;
    /// P_EPR * F_EPR * 2^{2|A|}.
    double delta = 0;
    double stderr_p = 0;
    double stderr_f = 0;
    double stderr_delta = 0;
    /// Mean of the per-trajectory conditional fidelity joint / P, over
    /// trajectories with P > 0.
    double mean_conditional_f = 0;
    double stderr_conditional_f = 0;
};

/// One trajectory's outcome for nested R sets.
struct DecoderSample {
    /// probability[r]: EPR success on the first r sites of the ordering.
    std::vector<double> probability;
    /// joint[r]: success on those r pairs and on every (q_A, q_B) pair.
    std::vector<double> joint;
};

/// Runs one trajectory and evaluates the projectors for R = the first r
/// entries of `r_order` (output sites of U), r = 0..|r_order|. With p = 0 the
/// rng is not consumed. Throws ResourceLimitError if the register would
/// exceed kMaxDenseQubits and std::invalid_argument for inconsistent setups.
DecoderSample decoder_sample(const DecoderSetup &setup, std::span<const size_t> r_order, std::mt19937_64 &rng);

/// Same, via a plain DenseState simulation of every gate. Slow; kept as a
/// reference for decoder_sample.
DecoderSample decoder_sample_reference(
    const DecoderSetup &setup, std::span<const size_t> r_order, std::mt19937_64 &rng);

/// Trajectory-averaged statistics for |R| = 0..N. Trajectory i draws its noise
/// and a uniformly random site ordering (whose prefixes give the R sets) from
/// its own stream.
std::vector<TrajectoryStats> run_decoder(const DecoderSetup &setup, size_t trajectories, uint64_t seed);

/// The entry of run_decoder for a single |R|.
TrajectoryStats run_decoder(const DecoderSetup &setup, size_t size_r, size_t trajectories, uint64_t seed);

}  // namespace fastscramble

#endif

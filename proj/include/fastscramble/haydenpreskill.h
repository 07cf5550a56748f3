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

#ifndef FASTSCRAMBLE_HAYDENPRESKILL_H
#define FASTSCRAMBLE_HAYDENPRESKILL_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fastscramble/circuits.h"
#include "fastscramble/tableau.h"

namespace fastscramble {

/// Choi state of a circuit: qubits 0..N-1 are the circuit's inputs/outputs,
/// qubit N + i is the reference maximally entangled with input i.
struct ChannelState {
    size_t n = 0;
    StabilizerTableau state;

    size_t reference(size_t input) const { return n + input; }
};

/// N Bell pairs (H on each reference, CNOT reference -> input), then the
/// program (optionally truncated) on the input half.
ChannelState channel_state(const CircuitProgram &program, std::optional<size_t> upto = std::nullopt);

/// Where Alice's qubits sit among the inputs.
enum class Placement {
    Contiguous,  // inputs 0..|A|-1
    Random,      // uniform |A|-subset, redrawn per sample
};

/// Both evaluations of I2(A:RB) for one choice of A and R, all in bits.
struct MutualInfoSample {
    /// S_A + S_RB - S_ARB.
    size_t direct = 0;
    /// S_A + S_AR' - S_R' with R' the outputs outside R.
    size_t complement = 0;
    /// I2(A:R') = S_A + S_R' - S_AR'.
    size_t a_rbar = 0;
};

/// `alice` lists inputs whose references form A; `outputs` lists R.
/// Throws std::out_of_range for indices >= N.
MutualInfoSample mutual_info_sample(
    const ChannelState &cs, std::span<const size_t> alice, std::span<const size_t> outputs);

struct MutualInfoStats {
    size_t size_a = 0;
    size_t size_r = 0;
    uint64_t samples = 0;
    double mean_bits = 0;
    double stderr_bits = 0;
};

/// Mean I2(A:RB) over `samples` draws of R (and of A under Random placement),
/// via the complement route. Sample i uses a stream keyed by (size_a, size_r, i).
/// Throws std::invalid_argument if a size exceeds N.
MutualInfoStats mutual_info_A_RB(
    const ChannelState &cs, size_t size_a, size_t size_r, size_t samples, uint64_t seed,
    Placement placement = Placement::Contiguous);

struct Saturation {
    /// Smallest |R| reaching the threshold, or N when none does.
    size_t size_r = 0;
    bool saturated = false;
    /// Statistics for |R| = 0..size_r.
    std::vector<MutualInfoStats> curve;
};

/// Scans |R| = 0, 1, ... until mean I2(A:RB) >= threshold * 2|A|.
Saturation min_R_for_saturation(
    const ChannelState &cs, size_t size_a, size_t samples, uint64_t seed,
    Placement placement = Placement::Contiguous, double threshold = 0.95);

}  // namespace fastscramble

#endif

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

#include "fastscramble/haydenpreskill.h"

#include <numeric>
#include <stdexcept>

#include "fastscramble/sampling.h"

namespace fastscramble {

ChannelState channel_state(const CircuitProgram &program, std::optional<size_t> upto) {
    const size_t n = program.num_qubits();
    if (n == 0) {
        throw std::invalid_argument("channel_state: empty program");
    }
    ChannelState cs{n, StabilizerTableau::polarized(2 * n, Basis::Z)};
    for (size_t i = 0; i < n; i++) {
        cs.state.apply_h(cs.reference(i));
        cs.state.apply_cnot(cs.reference(i), i);
    }
    std::vector<size_t> inputs(n);
    std::iota(inputs.begin(), inputs.end(), size_t{0});
    execute(program, cs.state, std::span<const size_t>(inputs), upto);
    return cs;
}

MutualInfoSample mutual_info_sample(
    const ChannelState &cs, std::span<const size_t> alice, std::span<const size_t> outputs) {
    const size_t n = cs.n;
    std::vector<bool> is_alice(n, false);
    std::vector<bool> in_r(n, false);
    for (size_t i : alice) {
        if (i >= n) throw std::out_of_range("mutual_info_sample: Alice input out of range");
        is_alice[i] = true;
    }
    for (size_t i : outputs) {
        if (i >= n) throw std::out_of_range("mutual_info_sample: output out of range");
        in_r[i] = true;
    }

    std::vector<size_t> a, rb, r_bar;
    for (size_t i = 0; i < n; i++) {
        (is_alice[i] ? a : rb).push_back(cs.reference(i));
    }
    for (size_t i = 0; i < n; i++) {
        (in_r[i] ? rb : r_bar).push_back(i);
    }
    std::vector<size_t> arb(a);
    arb.insert(arb.end(), rb.begin(), rb.end());
    std::vector<size_t> a_rbar(a);
    a_rbar.insert(a_rbar.end(), r_bar.begin(), r_bar.end());

    const auto &t = cs.state;
    const size_t s_a = t.entropy_bits(a);
    const size_t s_rbar = t.entropy_bits(r_bar);
    const size_t s_a_rbar = t.entropy_bits(a_rbar);
    MutualInfoSample out;
    out.direct = s_a + t.entropy_bits(rb) - t.entropy_bits(arb);
    out.complement = s_a + s_a_rbar - s_rbar;
    out.a_rbar = s_a + s_rbar - s_a_rbar;
    return out;
}

MutualInfoStats mutual_info_A_RB(
    const ChannelState &cs, size_t size_a, size_t size_r, size_t samples, uint64_t seed, Placement placement) {
    const size_t n = cs.n;
    if (size_a > n || size_r > n) {
        throw std::invalid_argument("mutual_info_A_RB: |A| and |R| must not exceed N");
    }
    const uint64_t stream = stream_id("hp-mutual-info") ^ mix64((uint64_t{size_a} << 32) | size_r);
    std::vector<size_t> contiguous(size_a);
    std::iota(contiguous.begin(), contiguous.end(), size_t{0});
    std::vector<size_t> values(samples);
    parallel_for(samples, [&](size_t i) {
        auto rng = stream_rng(seed, stream, i);
        std::vector<size_t> alice = placement == Placement::Random ? random_subset(n, size_a, rng) : contiguous;
        std::vector<size_t> outputs = random_subset(n, size_r, rng);
        values[i] = mutual_info_sample(cs, alice, outputs).complement;
    });
    RunningStats stats;
    for (size_t v : values) {
        stats.add(static_cast<double>(v));
    }
    return {size_a, size_r, samples, stats.mean(), stats.stderr_mean()};
}

Saturation min_R_for_saturation(
    const ChannelState &cs, size_t size_a, size_t samples, uint64_t seed, Placement placement, double threshold) {
    Saturation out;
    const double target = threshold * 2.0 * static_cast<double>(size_a);
    for (size_t r = 0; r <= cs.n; r++) {
        out.curve.push_back(mutual_info_A_RB(cs, size_a, r, samples, seed, placement));
        if (out.curve.back().mean_bits >= target) {
            out.size_r = r;
            out.saturated = true;
            return out;
        }
    }
    out.size_r = cs.n;
    return out;
}

}  // namespace fastscramble

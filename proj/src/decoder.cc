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

#include "fastscramble/decoder.h"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <variant>

#include "fastscramble/sampling.h"

namespace fastscramble {

namespace {

// Avoids the NaN-recovery path of std::complex multiplication.
inline Amplitude mul(Amplitude a, Amplitude b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

inline Amplitude i_pow(size_t k) {
    static constexpr double re[4] = {1, 0, -1, 0};
    static constexpr double im[4] = {0, 1, 0, -1};
    return {re[k & 3], im[k & 3]};
}

void validate(const DecoderSetup &setup) {
    const size_t n = setup.program.num_qubits();
    if (n < 2) {
        throw std::invalid_argument("decoder: the program needs at least two qubits");
    }
    if (setup.size_a < 1 || setup.size_a > n) {
        throw std::invalid_argument("decoder: need 1 <= |A| <= N");
    }
    if (!(setup.p >= 0.0 && setup.p <= 1.0)) {
        throw std::invalid_argument("decoder: p must lie in [0, 1]");
    }
    if (setup.num_qubits() > kMaxDenseQubits) {
        throw ResourceLimitError(
            "decoder: 2N + 2|A| = " + std::to_string(setup.num_qubits()) + " exceeds the dense limit of " +
            std::to_string(kMaxDenseQubits) + " qubits");
    }
}

CircuitProgram forward_program(const DecoderSetup &setup) {
    return setup.depth.has_value() ? setup.program.truncated(*setup.depth) : setup.program;
}

// Logical qubit order used for noise draws: q_A, scrambler sites, decoder
// sites, q_B. Both simulators draw in this order so they see the same errors.
struct NoiseDraw {
    std::vector<uint8_t> paulis;  // per logical qubit
    bool any = false;
};

NoiseDraw draw_noise(const DecoderSetup &setup, std::mt19937_64 &rng) {
    NoiseDraw d;
    d.paulis.resize(setup.num_qubits(), 0);
    if (setup.p == 0.0) {
        return d;
    }
    for (auto &x : d.paulis) {
        x = sample_pauli(setup.p, setup.noise, rng);
        d.any |= x != 0;
    }
    return d;
}

// ---------------------------------------------------------------------------
// Compiled doubled circuit in register bit space.

struct DiagStep {
    std::vector<Amplitude> scrambler;  // factor per register value
    std::vector<Amplitude> decoder;
    size_t phase_layers = 0;  // P or P^dagger layers folded in
    std::vector<std::pair<size_t, size_t>> cz_bits;
};
struct HadamardStep {};
struct CliffordStep {
    size_t bit_a;
    size_t bit_b;
    size_t id_scrambler;
    size_t id_decoder;
};
struct NoiseStep {
    std::vector<size_t> loc;  // register bit of each site at this point
};
using Step = std::variant<DiagStep, HadamardStep, CliffordStep, NoiseStep>;

class Kernel {
   public:
    explicit Kernel(const DecoderSetup &setup);

    size_t num_qubits() const { return q_; }
    /// Final state of one trajectory, fully flushed.
    std::vector<Amplitude> run(std::mt19937_64 &rng) const;
    DecoderSample evaluate(const std::vector<Amplitude> &state, std::span<const size_t> r_order) const;

   private:
    struct Exec {
        std::vector<Amplitude> amps;
        std::vector<Amplitude> ts, td;  // pending diagonal, empty when identity
        double scale = 1.0;
        uint64_t zmask = 0;
    };

    void compile(const CircuitProgram &forward);
    void push_diag(DiagStep d);
    std::vector<Amplitude> initial_state() const;
    /// Applies step s; `noise_index` is the index of s among noise steps.
    void apply_step(Exec &e, size_t s, const std::vector<NoiseDraw> *noise, size_t noise_index) const;
    void flush(Exec &e) const;
    void apply_noise(Exec &e, const NoiseStep &step, const NoiseDraw &draw) const;
    std::pair<uint64_t, uint64_t> noise_masks(const NoiseStep &step, const NoiseDraw &draw) const;

    void h_raw(std::vector<Amplitude> &amps, size_t bit) const;
    void s_raw(std::vector<Amplitude> &amps, size_t bit) const;
    void cx_raw(std::vector<Amplitude> &amps, size_t c, size_t t) const;
    void word_raw(Exec &e, size_t id, size_t a, size_t b) const;

    const DecoderSetup &setup_;
    size_t n_, a_, q_;
    std::vector<Step> steps_;
    std::vector<size_t> noise_steps_;  // step index of each NoiseStep
    std::vector<size_t> final_loc_;
    bool frame_path_ = false;

    // Noiseless states just before each noise step, and at the end.
    std::vector<std::vector<Amplitude>> snapshots_;
    std::vector<Amplitude> noiseless_;
};

Kernel::Kernel(const DecoderSetup &setup)
    : setup_(setup), n_(setup.program.num_qubits()), a_(setup.size_a), q_(setup.num_qubits()) {
    validate(setup);
    compile(forward_program(setup));

    Exec e;
    e.amps = initial_state();
    for (size_t s = 0; s < steps_.size(); s++) {
        if (std::holds_alternative<NoiseStep>(steps_[s])) {
            flush(e);
            if (!frame_path_) {
                snapshots_.push_back(e.amps);
            }
        } else {
            apply_step(e, s, nullptr, 0);
        }
    }
    flush(e);
    noiseless_ = std::move(e.amps);
}

void Kernel::push_diag(DiagStep d) {
    if (!steps_.empty()) {
        if (auto *prev = std::get_if<DiagStep>(&steps_.back())) {
            for (size_t v = 0; v < prev->scrambler.size(); v++) {
                prev->scrambler[v] = mul(prev->scrambler[v], d.scrambler[v]);
                prev->decoder[v] = mul(prev->decoder[v], d.decoder[v]);
            }
            prev->phase_layers += d.phase_layers;
            prev->cz_bits.insert(prev->cz_bits.end(), d.cz_bits.begin(), d.cz_bits.end());
            return;
        }
    }
    steps_.push_back(std::move(d));
}

void Kernel::compile(const CircuitProgram &forward) {
    const size_t dim = size_t{1} << n_;
    const auto &group = TwoQubitCliffordGroup::instance();
    std::vector<size_t> loc(n_);
    std::iota(loc.begin(), loc.end(), size_t{0});
    bool has_crosstalk = false;

    auto cz_layer = [&](const std::vector<Bond> &bonds) {
        DiagStep d;
        d.scrambler.assign(dim, 1.0);
        std::vector<std::pair<size_t, size_t>> cz, xt;
        for (auto [i, j] : bonds) cz.emplace_back(loc[i], loc[j]);
        if (setup_.crosstalk) {
            for (auto [i, j] : crosstalk_pairs(n_, bonds)) xt.emplace_back(loc[i], loc[j]);
        }
        has_crosstalk |= !xt.empty();
        const Amplitude xt_phase = std::polar(1.0, kCrosstalkPhase);
        for (size_t v = 0; v < dim; v++) {
            Amplitude f = 1.0;
            for (auto [i, j] : cz) {
                if ((v >> i) & (v >> j) & 1) f = -f;
            }
            for (auto [i, j] : xt) {
                if ((v >> i) & (v >> j) & 1) f = mul(f, xt_phase);
            }
            d.scrambler[v] = f;
        }
        // Same physical phases on both halves.
        d.decoder = d.scrambler;
        d.cz_bits = std::move(cz);
        push_diag(std::move(d));
        steps_.push_back(NoiseStep{loc});
    };
    auto phase_layer = [&](bool dagger) {
        DiagStep d;
        d.scrambler.resize(dim);
        d.decoder.resize(dim);
        for (size_t v = 0; v < dim; v++) {
            size_t w = static_cast<size_t>(std::popcount(v));
            d.scrambler[v] = i_pow(dagger ? 3 * w : w);
            d.decoder[v] = i_pow(dagger ? w : 3 * w);
        }
        d.phase_layers = 1;
        push_diag(std::move(d));
    };

    for (const CircuitLayer &l : forward.layers()) {
        std::visit(
            [&](const auto &x) {
                using L = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<L, layer::GlobalH>) {
                    steps_.push_back(HadamardStep{});
                } else if constexpr (std::is_same_v<L, layer::GlobalP>) {
                    phase_layer(false);
                } else if constexpr (std::is_same_v<L, layer::GlobalPdag>) {
                    phase_layer(true);
                } else if constexpr (std::is_same_v<L, layer::CZEven>) {
                    cz_layer(cz_even_bonds(n_));
                } else if constexpr (std::is_same_v<L, layer::CZOdd>) {
                    cz_layer(cz_odd_bonds(n_));
                } else if constexpr (std::is_same_v<L, layer::Permute>) {
                    std::vector<size_t> next(n_);
                    for (size_t i = 0; i < n_; i++) next[x.perm(i)] = loc[i];
                    loc = std::move(next);
                } else if constexpr (std::is_same_v<L, layer::CliffordLayer>) {
                    for (const auto &g : x.gates) {
                        steps_.push_back(CliffordStep{loc[g.a], loc[g.b], g.id, group.conjugate_index(g.id)});
                    }
                    steps_.push_back(NoiseStep{loc});
                }
            },
            l);
    }
    final_loc_ = loc;
    for (size_t s = 0; s < steps_.size(); s++) {
        if (std::holds_alternative<NoiseStep>(steps_[s])) noise_steps_.push_back(s);
    }
    frame_path_ = !has_crosstalk && !setup_.force_full_simulation;
}

std::vector<Amplitude> Kernel::initial_state() const {
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t k = 0; k < a_; k++) pairs.emplace_back(k, a_ + k);
    for (size_t j = a_; j < n_; j++) pairs.emplace_back(a_ + j, a_ + n_ + j);
    for (size_t k = 0; k < a_; k++) pairs.emplace_back(a_ + n_ + k, a_ + 2 * n_ + k);
    std::vector<Amplitude> amps(size_t{1} << q_, 0.0);
    const double amp = std::exp2(-0.5 * static_cast<double>(pairs.size()));
    for (size_t v = 0; v < (size_t{1} << pairs.size()); v++) {
        size_t idx = 0;
        for (size_t p = 0; p < pairs.size(); p++) {
            if ((v >> p) & 1) idx |= (size_t{1} << pairs[p].first) | (size_t{1} << pairs[p].second);
        }
        amps[idx] = amp;
    }
    return amps;
}

void Kernel::flush(Exec &e) const {
    const bool diag = !e.ts.empty();
    if (!diag && e.scale == 1.0 && e.zmask == 0) {
        return;
    }
    const size_t outer_lo = size_t{1} << a_;
    const size_t mask = (size_t{1} << n_) - 1;
    const size_t blocks = e.amps.size() >> a_;
    for (size_t blk = 0; blk < blocks; blk++) {
        Amplitude f = e.scale;
        if (diag) {
            f = mul(f, mul(e.ts[blk & mask], e.td[(blk >> n_) & mask]));
        }
        const size_t base = blk << a_;
        for (size_t lo = 0; lo < outer_lo; lo++) {
            size_t idx = base | lo;
            Amplitude g = (std::popcount(idx & e.zmask) & 1) ? -f : f;
            e.amps[idx] = mul(e.amps[idx], g);
        }
    }
    e.ts.clear();
    e.td.clear();
    e.scale = 1.0;
    e.zmask = 0;
}

void Kernel::h_raw(std::vector<Amplitude> &amps, size_t bit) const {
    const size_t stride = size_t{1} << bit;
    for (size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (size_t i = base; i < base + stride; i++) {
            Amplitude u = amps[i];
            Amplitude v = amps[i + stride];
            amps[i] = u + v;
            amps[i + stride] = u - v;
        }
    }
}

void Kernel::s_raw(std::vector<Amplitude> &amps, size_t bit) const {
    const size_t b = size_t{1} << bit;
    for (size_t i = 0; i < amps.size(); i++) {
        if (i & b) amps[i] = {-amps[i].imag(), amps[i].real()};
    }
}

void Kernel::cx_raw(std::vector<Amplitude> &amps, size_t c, size_t t) const {
    const size_t cb = size_t{1} << c;
    const size_t tb = size_t{1} << t;
    for (size_t i = 0; i < amps.size(); i++) {
        if ((i & cb) && !(i & tb)) std::swap(amps[i], amps[i | tb]);
    }
}

void Kernel::word_raw(Exec &e, size_t id, size_t a, size_t b) const {
    for (Gate2 g : TwoQubitCliffordGroup::instance()[id].word) {
        switch (g) {
            case Gate2::H0: h_raw(e.amps, a); e.scale *= std::numbers::sqrt2 / 2; break;
            case Gate2::H1: h_raw(e.amps, b); e.scale *= std::numbers::sqrt2 / 2; break;
            case Gate2::S0: s_raw(e.amps, a); break;
            case Gate2::S1: s_raw(e.amps, b); break;
            case Gate2::CX01: cx_raw(e.amps, a, b); break;
            case Gate2::CX10: cx_raw(e.amps, b, a); break;
        }
    }
}

std::pair<uint64_t, uint64_t> Kernel::noise_masks(const NoiseStep &step, const NoiseDraw &draw) const {
    uint64_t x = 0, z = 0;
    auto add = [&](uint8_t pauli, size_t bit) {
        if (pauli == 1 || pauli == 2) x |= uint64_t{1} << bit;
        if (pauli == 2 || pauli == 3) z |= uint64_t{1} << bit;
    };
    size_t k = 0;
    for (size_t i = 0; i < a_; i++) add(draw.paulis[k++], i);
    for (size_t j = 0; j < n_; j++) add(draw.paulis[k++], a_ + step.loc[j]);
    for (size_t j = 0; j < n_; j++) add(draw.paulis[k++], a_ + n_ + step.loc[j]);
    for (size_t i = 0; i < a_; i++) add(draw.paulis[k++], a_ + 2 * n_ + i);
    return {x, z};
}

void Kernel::apply_noise(Exec &e, const NoiseStep &step, const NoiseDraw &draw) const {
    if (!draw.any) {
        return;
    }
    // Y is X Z up to a global phase.
    auto [x, z] = noise_masks(step, draw);
    e.zmask ^= z;
    flush(e);
    if (x != 0) {
        for (size_t i = 0; i < e.amps.size(); i++) {
            size_t j = i ^ x;
            if (i < j) std::swap(e.amps[i], e.amps[j]);
        }
    }
}

void Kernel::apply_step(Exec &e, size_t s, const std::vector<NoiseDraw> *noise, size_t noise_index) const {
    const size_t dim = size_t{1} << n_;
    const Step &step = steps_[s];
    if (const auto *d = std::get_if<DiagStep>(&step)) {
        if (e.ts.empty()) {
            e.ts = d->scrambler;
            e.td = d->decoder;
        } else {
            for (size_t v = 0; v < dim; v++) {
                e.ts[v] = mul(e.ts[v], d->scrambler[v]);
                e.td[v] = mul(e.td[v], d->decoder[v]);
            }
        }
    } else if (std::holds_alternative<HadamardStep>(step)) {
        flush(e);
        for (size_t b = a_; b < a_ + 2 * n_; b++) h_raw(e.amps, b);
        e.scale = std::exp2(-static_cast<double>(n_));
    } else if (const auto *c = std::get_if<CliffordStep>(&step)) {
        flush(e);
        word_raw(e, c->id_scrambler, a_ + c->bit_a, a_ + c->bit_b);
        word_raw(e, c->id_decoder, a_ + n_ + c->bit_a, a_ + n_ + c->bit_b);
    } else if (const auto *ns = std::get_if<NoiseStep>(&step)) {
        if (noise != nullptr) {
            apply_noise(e, *ns, (*noise)[noise_index]);
        }
    }
}

std::vector<Amplitude> Kernel::run(std::mt19937_64 &rng) const {
    std::vector<NoiseDraw> noise;
    noise.reserve(noise_steps_.size());
    size_t first = noise_steps_.size();
    for (size_t k = 0; k < noise_steps_.size(); k++) {
        noise.push_back(draw_noise(setup_, rng));
        if (noise.back().any && first == noise_steps_.size()) first = k;
    }
    if (first == noise_steps_.size()) {
        return noiseless_;
    }

    if (frame_path_) {
        // Propagate the errors to the end of the circuit as a Pauli frame.
        uint64_t fx = 0, fz = 0;
        const auto &group = TwoQubitCliffordGroup::instance();
        const uint64_t middle = ((uint64_t{1} << (2 * n_)) - 1) << a_;
        auto flip = [](uint64_t &m, size_t bit, bool on) {
            if (on) m ^= uint64_t{1} << bit;
        };
        auto conj2 = [&](size_t id, size_t ba, size_t bb) {
            uint8_t bits = static_cast<uint8_t>(((fx >> ba) & 1) | (((fz >> ba) & 1) << 1) | (((fx >> bb) & 1) << 2) |
                                                (((fz >> bb) & 1) << 3));
            uint8_t out = group[id].op.table()[bits].bits;
            fx &= ~((uint64_t{1} << ba) | (uint64_t{1} << bb));
            fz &= ~((uint64_t{1} << ba) | (uint64_t{1} << bb));
            fx |= (uint64_t{out & 1u} << ba) | (uint64_t{(out >> 2) & 1u} << bb);
            fz |= (uint64_t{(out >> 1) & 1u} << ba) | (uint64_t{(out >> 3) & 1u} << bb);
        };
        size_t k = 0;
        for (size_t s = noise_steps_[first]; s < steps_.size(); s++) {
            const Step &step = steps_[s];
            if (const auto *d = std::get_if<DiagStep>(&step)) {
                if (d->phase_layers & 1) fz ^= fx & middle;
                for (auto [i, j] : d->cz_bits) {
                    for (size_t off : {a_, a_ + n_}) {
                        bool xi = (fx >> (off + i)) & 1;
                        bool xj = (fx >> (off + j)) & 1;
                        flip(fz, off + i, xj);
                        flip(fz, off + j, xi);
                    }
                }
            } else if (std::holds_alternative<HadamardStep>(step)) {
                uint64_t sx = fx & middle, sz = fz & middle;
                fx = (fx & ~middle) | sz;
                fz = (fz & ~middle) | sx;
            } else if (const auto *c = std::get_if<CliffordStep>(&step)) {
                conj2(c->id_scrambler, a_ + c->bit_a, a_ + c->bit_b);
                conj2(c->id_decoder, a_ + n_ + c->bit_a, a_ + n_ + c->bit_b);
            } else if (const auto *ns = std::get_if<NoiseStep>(&step)) {
                size_t idx = first + k++;
                if (noise[idx].any) {
                    auto [x, z] = noise_masks(*ns, noise[idx]);
                    fx ^= x;
                    fz ^= z;
                }
            }
        }
        std::vector<Amplitude> out(noiseless_.size());
        for (size_t i = 0; i < out.size(); i++) {
            Amplitude v = noiseless_[i];
            out[i ^ fx] = (std::popcount(i & fz) & 1) ? -v : v;
        }
        return out;
    }

    Exec e;
    e.amps = snapshots_[first];
    size_t k = first;
    for (size_t s = noise_steps_[first]; s < steps_.size(); s++) {
        apply_step(e, s, &noise, k);
        if (std::holds_alternative<NoiseStep>(steps_[s])) k++;
    }
    flush(e);
    return std::move(e.amps);
}

// Projects bits b1 < b2 of an nb-bit state onto (|00> + |11>)/sqrt(2) and
// drops them.
std::vector<Amplitude> contract_pair(const std::vector<Amplitude> &in, size_t b1, size_t b2) {
    if (b1 > b2) std::swap(b1, b2);
    std::vector<Amplitude> out(in.size() / 4);
    const double r = std::numbers::sqrt2 / 2;
    const size_t low_mask = (size_t{1} << b1) - 1;
    const size_t mid_mask = (size_t{1} << (b2 - 1 - b1)) - 1;
    const size_t both = (size_t{1} << b1) | (size_t{1} << b2);
    for (size_t k = 0; k < out.size(); k++) {
        size_t low = k & low_mask;
        size_t mid = (k >> b1) & mid_mask;
        size_t high = k >> (b2 - 1);
        size_t i00 = low | (mid << (b1 + 1)) | (high << (b2 + 1));
        out[k] = (in[i00] + in[i00 | both]) * r;
    }
    return out;
}

double norm2(const std::vector<Amplitude> &v) {
    double total = 0;
    for (const auto &x : v) total += std::norm(x);
    return total;
}

DecoderSample Kernel::evaluate(const std::vector<Amplitude> &state, std::span<const size_t> r_order) const {
    // pos[b]: current bit position of original bit b.
    std::vector<size_t> pos(q_);
    std::iota(pos.begin(), pos.end(), size_t{0});
    auto drop = [&](size_t b1, size_t b2, std::vector<size_t> &p) {
        size_t lo = std::min(p[b1], p[b2]);
        size_t hi = std::max(p[b1], p[b2]);
        for (auto &x : p) {
            x -= (x > lo) + (x > hi);
        }
    };
    auto joint_of = [&](const std::vector<Amplitude> &cur, std::vector<size_t> p) {
        std::vector<Amplitude> tmp = cur;
        for (size_t k = 0; k < a_; k++) {
            size_t qa = k, qb = a_ + 2 * n_ + k;
            tmp = contract_pair(tmp, p[qa], p[qb]);
            drop(qa, qb, p);
        }
        return norm2(tmp);
    };

    DecoderSample out;
    std::vector<Amplitude> cur = state;
    std::vector<bool> seen(n_, false);
    out.probability.push_back(norm2(cur));
    out.joint.push_back(joint_of(cur, pos));
    for (size_t site : r_order) {
        if (site >= n_ || seen[site]) {
            throw std::invalid_argument("decoder: R ordering must list distinct output sites");
        }
        seen[site] = true;
        size_t bs = a_ + final_loc_[site];
        size_t bd = a_ + n_ + final_loc_[site];
        cur = contract_pair(cur, pos[bs], pos[bd]);
        drop(bs, bd, pos);
        out.probability.push_back(norm2(cur));
        out.joint.push_back(joint_of(cur, pos));
    }
    return out;
}

}  // namespace

DecoderSample decoder_sample(const DecoderSetup &setup, std::span<const size_t> r_order, std::mt19937_64 &rng) {
    Kernel kernel(setup);
    return kernel.evaluate(kernel.run(rng), r_order);
}

DecoderSample decoder_sample_reference(
    const DecoderSetup &setup, std::span<const size_t> r_order, std::mt19937_64 &rng) {
    validate(setup);
    const size_t n = setup.program.num_qubits();
    const size_t a = setup.size_a;
    const size_t q = setup.num_qubits();
    const CircuitProgram forward = forward_program(setup);
    const CircuitProgram backward = conjugate_program(forward);
    const auto &group = TwoQubitCliffordGroup::instance();

    std::vector<size_t> s_sites(n), d_sites(n);
    for (size_t j = 0; j < n; j++) {
        s_sites[j] = a + j;
        d_sites[j] = a + n + j;
    }
    auto bell = [](DenseState &st, size_t x, size_t y) {
        st.apply_h(x);
        st.apply_cnot(x, y);
    };
    DenseState state(q);
    for (size_t k = 0; k < a; k++) bell(state, k, a + k);
    for (size_t j = a; j < n; j++) bell(state, a + j, a + n + j);
    for (size_t k = 0; k < a; k++) bell(state, a + n + k, a + 2 * n + k);

    auto run_layer = [&](const CircuitLayer &l, std::span<const size_t> sites) {
        std::visit(
            [&](const auto &x) {
                using L = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<L, layer::GlobalH>) {
                    for (size_t s : sites) state.apply_h(s);
                } else if constexpr (std::is_same_v<L, layer::GlobalP>) {
                    for (size_t s : sites) state.apply_phase(s);
                } else if constexpr (std::is_same_v<L, layer::GlobalPdag>) {
                    for (size_t s : sites) state.apply_phase_dag(s);
                } else if constexpr (std::is_same_v<L, layer::CZEven>) {
                    auto bonds = cz_even_bonds(n);
                    rydberg_cz_layer(state, bonds, setup.crosstalk, sites);
                } else if constexpr (std::is_same_v<L, layer::CZOdd>) {
                    auto bonds = cz_odd_bonds(n);
                    rydberg_cz_layer(state, bonds, setup.crosstalk, sites);
                } else if constexpr (std::is_same_v<L, layer::Permute>) {
                    state.apply_permutation(x.perm, sites);
                } else if constexpr (std::is_same_v<L, layer::CliffordLayer>) {
                    for (const auto &g : x.gates) state.apply_clifford2(group[g.id].op, sites[g.a], sites[g.b]);
                }
            },
            l);
    };

    std::vector<size_t> logical;
    for (size_t k = 0; k < a; k++) logical.push_back(k);
    for (size_t j = 0; j < n; j++) logical.push_back(a + j);
    for (size_t j = 0; j < n; j++) logical.push_back(a + n + j);
    for (size_t k = 0; k < a; k++) logical.push_back(a + 2 * n + k);

    for (size_t i = 0; i < forward.layers().size(); i++) {
        run_layer(forward.layers()[i], s_sites);
        run_layer(backward.layers()[i], d_sites);
        if (is_interaction_layer(forward.layers()[i]) && setup.p > 0.0) {
            depolarize_trajectory(state, logical, setup.p, rng, setup.noise);
        }
    }

    DecoderSample out;
    auto joint_of = [&](DenseState st) {
        double prob = st.norm_squared();
        for (size_t k = 0; k < a; k++) prob *= st.project_epr(k, a + 2 * n + k);
        return prob;
    };
    out.probability.push_back(state.norm_squared());
    out.joint.push_back(joint_of(state));
    double prob = state.norm_squared();
    for (size_t site : r_order) {
        prob *= state.project_epr(a + site, a + n + site);
        out.probability.push_back(prob);
        out.joint.push_back(joint_of(state));
    }
    return out;
}

std::vector<TrajectoryStats> run_decoder(const DecoderSetup &setup, size_t trajectories, uint64_t seed) {
    if (trajectories == 0) {
        throw std::invalid_argument("run_decoder: need at least one trajectory");
    }
    Kernel kernel(setup);
    const size_t n = setup.program.num_qubits();
    const uint64_t stream = stream_id("decoder-trajectory");
    std::vector<DecoderSample> samples(trajectories);
    parallel_for(trajectories, [&](size_t i) {
        auto rng = stream_rng(seed, stream, i);
        Permutation order = random_permutation(n, rng);
        samples[i] = kernel.evaluate(kernel.run(rng), order.map());
    });

    const double tn = static_cast<double>(trajectories);
    const double scale = std::exp2(2.0 * static_cast<double>(setup.size_a));
    std::vector<TrajectoryStats> out;
    for (size_t r = 0; r <= n; r++) {
        double mp = 0, mj = 0;
        RunningStats cond;
        for (const auto &s : samples) {
            mp += s.probability[r];
            mj += s.joint[r];
            if (s.probability[r] > 0) cond.add(s.joint[r] / s.probability[r]);
        }
        mp /= tn;
        mj /= tn;
        double vp = 0, vj = 0, cjp = 0;
        for (const auto &s : samples) {
            double dp = s.probability[r] - mp;
            double dj = s.joint[r] - mj;
            vp += dp * dp;
            vj += dj * dj;
            cjp += dp * dj;
        }
        const double denom = trajectories > 1 ? tn - 1 : 1.0;
        vp /= denom;
        vj /= denom;
        cjp /= denom;

        TrajectoryStats st;
        st.size_r = r;
        st.trajectories = trajectories;
        st.p_epr = mp;
        st.f_epr = mp > 0 ? mj / mp : 0.0;
        st.delta = scale * mj;
        st.stderr_p = std::sqrt(vp / tn);
        st.stderr_delta = scale * std::sqrt(vj / tn);
        if (mp > 0) {
            double f = st.f_epr;
            double var_f = (vj - 2 * f * cjp + f * f * vp) / (tn * mp * mp);
            st.stderr_f = std::sqrt(std::max(0.0, var_f));
        }
        st.mean_conditional_f = cond.mean();
        st.stderr_conditional_f = cond.stderr_mean();
        out.push_back(st);
    }
    return out;
}

TrajectoryStats run_decoder(const DecoderSetup &setup, size_t size_r, size_t trajectories, uint64_t seed) {
    if (size_r > setup.program.num_qubits()) {
        throw std::invalid_argument("run_decoder: |R| exceeds N");
    }
    return run_decoder(setup, trajectories, seed)[size_r];
}

}  // namespace fastscramble

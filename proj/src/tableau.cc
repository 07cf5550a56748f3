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

#include "fastscramble/tableau.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace fastscramble {

StabilizerTableau::StabilizerTableau(size_t n)
    : n_(n), blocks_((n + 63) / 64), store_(2 * n, n), signs_(1, n) {
}

StabilizerTableau StabilizerTableau::polarized(size_t n, Basis basis) {
    if (n == 0) {
        throw std::invalid_argument("StabilizerTableau::polarized: need at least one qubit");
    }
    StabilizerTableau t(n);
    for (size_t q = 0; q < n; q++) {
        // Generator q acts only on qubit q.
        if (basis == Basis::X || basis == Basis::Y) {
            t.store_.set(2 * q, q, true);
        }
        if (basis == Basis::Z || basis == Basis::Y) {
            t.store_.set(2 * q + 1, q, true);
        }
    }
    return t;
}

void StabilizerTableau::check_qubit(size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " + std::to_string(n_) +
                                " qubits");
    }
}

void StabilizerTableau::apply_h(size_t q) {
    check_qubit(q);
    uint64_t *x = xs(q), *z = zs(q), *r = signs();
    for (size_t k = 0; k < blocks_; k++) {
        r[k] ^= x[k] & z[k];
        std::swap(x[k], z[k]);
    }
}

void StabilizerTableau::apply_phase(size_t q) {
    check_qubit(q);
    uint64_t *x = xs(q), *z = zs(q), *r = signs();
    for (size_t k = 0; k < blocks_; k++) {
        r[k] ^= x[k] & z[k];
        z[k] ^= x[k];
    }
}

void StabilizerTableau::apply_phase_dag(size_t q) {
    check_qubit(q);
    uint64_t *x = xs(q), *z = zs(q), *r = signs();
    for (size_t k = 0; k < blocks_; k++) {
        r[k] ^= x[k] & ~z[k];
        z[k] ^= x[k];
    }
}

void StabilizerTableau::apply_x(size_t q) {
    check_qubit(q);
    uint64_t *z = zs(q), *r = signs();
    for (size_t k = 0; k < blocks_; k++) {
        r[k] ^= z[k];
    }
}

void StabilizerTableau::apply_y(size_t q) {
    check_qubit(q);
    uint64_t *x = xs(q), *z = zs(q), *r = signs();
    for (size_t k = 0; k < blocks_; k++) {
        r[k] ^= x[k] ^ z[k];
    }
}

void StabilizerTableau::apply_z(size_t q) {
    check_qubit(q);
    uint64_t *x = xs(q), *r = signs();
    for (size_t k = 0; k < blocks_; k++) {
        r[k] ^= x[k];
    }
}

void StabilizerTableau::apply_cnot(size_t control, size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("apply_cnot: control and target must differ");
    }
    uint64_t *xc = xs(control), *zc = zs(control), *xt = xs(target), *zt = zs(target), *r = signs();
    for (size_t k = 0; k < blocks_; k++) {
        r[k] ^= xc[k] & zt[k] & ~(xt[k] ^ zc[k]);
        xt[k] ^= xc[k];
        zc[k] ^= zt[k];
    }
}

void StabilizerTableau::apply_cz(size_t a, size_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("apply_cz: qubits must differ");
    }
    uint64_t *xa = xs(a), *za = zs(a), *xb = xs(b), *zb = zs(b), *r = signs();
    for (size_t k = 0; k < blocks_; k++) {
        r[k] ^= xa[k] & xb[k] & (za[k] ^ zb[k]);
        za[k] ^= xb[k];
        zb[k] ^= xa[k];
    }
}

void StabilizerTableau::apply_clifford2(const Clifford2 &op, size_t a, size_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("apply_clifford2: qubits must differ");
    }
    const auto &table = op.table();
    uint64_t *xa = xs(a), *za = zs(a), *xb = xs(b), *zb = zs(b), *r = signs();
    for (size_t k = 0; k < blocks_; k++) {
        const uint64_t in[4] = {xa[k], za[k], xb[k], zb[k]};
        uint64_t out[4] = {0, 0, 0, 0};
        uint64_t flip = 0;
        for (uint8_t pattern = 1; pattern < 16; pattern++) {
            uint64_t mask = ~uint64_t{0};
            for (int j = 0; j < 4; j++) {
                mask &= ((pattern >> j) & 1) ? in[j] : ~in[j];
            }
            if (!mask) {
                continue;
            }
            const Pauli2 image = table[pattern];
            for (int j = 0; j < 4; j++) {
                if ((image.bits >> j) & 1) {
                    out[j] |= mask;
                }
            }
            if (image.negative) {
                flip |= mask;
            }
        }
        xa[k] = out[0];
        za[k] = out[1];
        xb[k] = out[2];
        zb[k] = out[3];
        r[k] ^= flip;
    }
}

void StabilizerTableau::apply_permutation(const Permutation &p) {
    if (p.size() != n_) {
        throw std::invalid_argument("apply_permutation: size mismatch");
    }
    BitMatrix moved(2 * n_, n_);
    for (size_t i = 0; i < n_; i++) {
        size_t dst = p(i);
        for (size_t part = 0; part < 2; part++) {
            auto src = store_.row(2 * i + part);
            std::copy(src.begin(), src.end(), moved.row(2 * dst + part).begin());
        }
    }
    store_ = std::move(moved);
}

void StabilizerTableau::apply_permutation(const Permutation &p, std::span<const size_t> sites) {
    if (p.size() != sites.size()) {
        throw std::invalid_argument("apply_permutation: permutation and site list differ in size");
    }
    for (size_t s : sites) {
        check_qubit(s);
    }
    BitMatrix saved(2 * sites.size(), n_);
    for (size_t i = 0; i < sites.size(); i++) {
        for (size_t part = 0; part < 2; part++) {
            auto src = store_.row(2 * sites[i] + part);
            std::copy(src.begin(), src.end(), saved.row(2 * i + part).begin());
        }
    }
    for (size_t i = 0; i < sites.size(); i++) {
        size_t dst = sites[p(i)];
        for (size_t part = 0; part < 2; part++) {
            auto src = saved.row(2 * i + part);
            std::copy(src.begin(), src.end(), store_.row(2 * dst + part).begin());
        }
    }
}

size_t StabilizerTableau::entropy_bits(std::span<const size_t> subset) const {
    if (subset.empty()) {
        return 0;
    }
    BitMatrix block(2 * subset.size(), n_);
    for (size_t i = 0; i < subset.size(); i++) {
        check_qubit(subset[i]);
        for (size_t part = 0; part < 2; part++) {
            auto src = store_.row(2 * subset[i] + part);
            std::copy(src.begin(), src.end(), block.row(2 * i + part).begin());
        }
    }
    return rank_gf2_inplace(block) - subset.size();
}

BitMatrix StabilizerTableau::matrix() const {
    BitMatrix m(n_, 2 * n_ + 1);
    for (size_t g = 0; g < n_; g++) {
        for (size_t q = 0; q < n_; q++) {
            m.set(g, q, store_.get(2 * q, g));
            m.set(g, n_ + q, store_.get(2 * q + 1, g));
        }
        m.set(g, 2 * n_, !signs_.get(0, g));
    }
    return m;
}

std::string StabilizerTableau::generator_string(size_t i) const {
    if (i >= n_) {
        throw std::out_of_range("generator index out of range");
    }
    static const char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    std::string out;
    out.reserve(n_ + 1);
    out.push_back(signs_.get(0, i) ? '-' : '+');
    for (size_t q = 0; q < n_; q++) {
        int code = (store_.get(2 * q, i) ? 1 : 0) | (store_.get(2 * q + 1, i) ? 2 : 0);
        out.push_back(kLetters[code]);
    }
    return out;
}

std::string StabilizerTableau::str() const {
    std::string out;
    for (size_t i = 0; i < n_; i++) {
        out += generator_string(i);
        out.push_back('\n');
    }
    return out;
}

bool StabilizerTableau::is_valid() const {
    if (rank_gf2(store_) != n_) {
        return false;
    }
    // Symplectic product of every pair of generators.
    BitMatrix gens(n_, 2 * n_);
    for (size_t g = 0; g < n_; g++) {
        for (size_t q = 0; q < n_; q++) {
            gens.set(g, q, store_.get(2 * q, g));
            gens.set(g, n_ + q, store_.get(2 * q + 1, g));
        }
    }
    for (size_t a = 0; a < n_; a++) {
        for (size_t b = a + 1; b < n_; b++) {
            int parity = 0;
            for (size_t q = 0; q < n_; q++) {
                parity ^= (gens.get(a, q) & gens.get(b, n_ + q)) ^ (gens.get(a, n_ + q) & gens.get(b, q));
            }
            if (parity) {
                return false;
            }
        }
    }
    return true;
}

size_t renyi2_entropy_bits(const StabilizerTableau &t, std::span<const size_t> subset) {
    return t.entropy_bits(subset);
}

size_t mutual_info_bits(const StabilizerTableau &t, std::span<const size_t> a, std::span<const size_t> b) {
    std::vector<size_t> joint(a.begin(), a.end());
    for (size_t q : b) {
        if (std::find(a.begin(), a.end(), q) != a.end()) {
            throw std::invalid_argument("mutual_info_bits: subsets overlap");
        }
        joint.push_back(q);
    }
    return t.entropy_bits(a) + t.entropy_bits(b) - t.entropy_bits(joint);
}

}  // namespace fastscramble

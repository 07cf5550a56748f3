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

#include "fastscramble/permutation.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fastscramble {

Permutation::Permutation(std::vector<size_t> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (size_t v : map_) {
        if (v >= map_.size() || seen[v]) {
            throw std::invalid_argument("Permutation: map is not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(size_t n) {
    std::vector<size_t> map(n);
    std::iota(map.begin(), map.end(), size_t{0});
    return Permutation(std::move(map));
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < map_.size(); i++) {
        if (map_[i] != i) {
            return false;
        }
    }
    return true;
}

Permutation inverse(const Permutation &p) {
    std::vector<size_t> inv(p.size());
    for (size_t i = 0; i < p.size(); i++) {
        inv[p(i)] = i;
    }
    return Permutation(std::move(inv));
}

Permutation compose(const Permutation &first, const Permutation &second) {
    if (first.size() != second.size()) {
        throw std::invalid_argument("compose: permutations have different sizes");
    }
    std::vector<size_t> out(first.size());
    for (size_t i = 0; i < first.size(); i++) {
        out[i] = second(first(i));
    }
    return Permutation(std::move(out));
}

bool is_power_of_two(size_t n) {
    return std::has_single_bit(n);
}

size_t exact_log2(size_t n) {
    if (!is_power_of_two(n)) {
        throw std::invalid_argument("expected a power of two, got " + std::to_string(n));
    }
    return static_cast<size_t>(std::countr_zero(n));
}

Permutation faro_shuffle(size_t n) {
    const size_t m = exact_log2(n);
    std::vector<size_t> map(n);
    for (size_t i = 0; i < n; i++) {
        map[i] = m == 0 ? i : (i >> 1) | ((i & 1) << (m - 1));
    }
    return Permutation(std::move(map));
}

Permutation random_permutation(size_t n, std::mt19937_64 &rng) {
    std::vector<size_t> map(n);
    std::iota(map.begin(), map.end(), size_t{0});
    for (size_t i = n; i > 1; i--) {
        std::uniform_int_distribution<size_t> pick(0, i - 1);
        std::swap(map[i - 1], map[pick(rng)]);
    }
    return Permutation(std::move(map));
}

}  // namespace fastscramble

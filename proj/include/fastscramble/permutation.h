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

#ifndef FASTSCRAMBLE_PERMUTATION_H
#define FASTSCRAMBLE_PERMUTATION_H

#include <cstddef>
#include <random>
#include <vector>

namespace fastscramble {

/// Bijection on {0, ..., n-1}. `image(i)` is the site that the qubit currently
/// at site i is moved to.
class Permutation {
   public:
    Permutation() = default;
    /// Throws std::invalid_argument unless `map` is a bijection.
    explicit Permutation(std::vector<size_t> map);

    static Permutation identity(size_t n);

    size_t size() const { return map_.size(); }
    size_t image(size_t i) const { return map_[i]; }
    size_t operator()(size_t i) const { return map_[i]; }
    const std::vector<size_t> &map() const { return map_; }
    bool is_identity() const;

    bool operator==(const Permutation &other) const = default;

   private:
    std::vector<size_t> map_;
};

Permutation inverse(const Permutation &p);

/// Applies `first`, then `second`: result(i) = second(first(i)).
Permutation compose(const Permutation &first, const Permutation &second);

/// Perfect (Faro) shuffle on n = 2^m sites. Rotates the binary site label
/// right by one, so the least significant bit becomes the most significant.
/// For n = 8 the images of 0..7 are 0 4 1 5 2 6 3 7.
/// Throws std::invalid_argument if n is not a power of two.
Permutation faro_shuffle(size_t n);

Permutation random_permutation(size_t n, std::mt19937_64 &rng);

bool is_power_of_two(size_t n);
/// log2 of a power of two; throws std::invalid_argument otherwise.
size_t exact_log2(size_t n);

}  // namespace fastscramble

#endif

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

#ifndef FASTSCRAMBLE_SAMPLING_H
#define FASTSCRAMBLE_SAMPLING_H

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <thread>
#include <vector>

namespace fastscramble {

/// SplitMix64 finaliser.
constexpr uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// FNV-1a of a label, used to separate experiment streams.
constexpr uint64_t stream_id(std::string_view label) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Seed for sample `index` of stream `stream` under `master`. Samples drawn
/// from these seeds do not depend on how work is split across threads.
constexpr uint64_t derive_seed(uint64_t master, uint64_t stream, uint64_t index) {
    return mix64(mix64(mix64(master) ^ stream) ^ index);
}

inline std::mt19937_64 stream_rng(uint64_t master, uint64_t stream, uint64_t index) {
    return std::mt19937_64(derive_seed(master, stream, index));
}

/// Uniform k-subset of {0..n-1}, returned in ascending order.
std::vector<size_t> random_subset(size_t n, size_t k, std::mt19937_64 &rng);

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 = hardware
/// concurrency). Callers write results into slot i so aggregation order is
/// fixed by index, never by completion order.
void parallel_for(size_t count, const std::function<void(size_t)> &body, size_t threads = 0);

/// Running mean and variance (Welford).
class RunningStats {
   public:
    void add(double x) {
        count_++;
        double delta = x - mean_;
        mean_ += delta / static_cast<double>(count_);
        m2_ += delta * (x - mean_);
    }
    size_t count() const { return count_; }
    double mean() const { return mean_; }
    /// Unbiased sample variance; 0 for fewer than two samples.
    double variance() const { return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0; }
    /// Standard error of the mean.
    double stderr_mean() const;

   private:
    size_t count_ = 0;
    double mean_ = 0;
    double m2_ = 0;
};

}  // namespace fastscramble

#endif

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

#ifndef FASTSCRAMBLE_EXPERIMENTS_H
#define FASTSCRAMBLE_EXPERIMENTS_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fastscramble/graphstate.h"
#include "fastscramble/tableau.h"

namespace fastscramble {

/// Entropy statistics of one subset size.
struct SizeStats {
    size_t size = 0;
    uint64_t samples = 0;
    double mean_entropy_bits = 0;
    /// Deficit is min(|A|, N - |A|) - S_A, so complements are symmetric.
    double mean_deficit_bits = 0;
    /// Standard error of both means (they differ by a constant).
    double stderr_bits = 0;
    std::vector<uint64_t> deficit_counts;  // index = deficit in bits

    double fraction(size_t eps) const {
        return eps < deficit_counts.size() && samples > 0 ? static_cast<double>(deficit_counts[eps]) / samples : 0.0;
    }
};

struct PageStats {
    size_t num_qubits = 0;
    std::vector<SizeStats> sizes;  // in the order requested

    const SizeStats *find(size_t size) const;
};

/// `count_per_size` uniform subsets for every requested size, grouped by size
/// in request order. Sample i of size index s uses stream index
/// s * count_per_size + i. Throws std::invalid_argument if a size exceeds n.
std::vector<std::vector<size_t>> sample_bipartitions(
    size_t n, std::span<const size_t> sizes, size_t count_per_size, uint64_t seed,
    std::string_view stream = "bipartitions");

/// Samples `count` random subsets per size and summarises their entropies.
PageStats page_curve(
    const StabilizerTableau &t, std::span<const size_t> sizes, size_t count, uint64_t seed,
    std::string_view stream = "page-curve");

/// Histogram of deficits over the same samples as page_curve.
DeficitTable deficit_fractions(
    const StabilizerTableau &t, std::span<const size_t> sizes, size_t count, uint64_t seed,
    std::string_view stream = "page-curve");

/// Probability that the n x 2a binary matrix of a random stabilizer state's
/// subsystem has rank 2a - eps, in the large-n approximation
///   2^{-eps (n - 2a + eps)} prod_{i > eps} (1 - 2^-i) / prod_{i <= n - 2a + eps} (1 - 2^-i).
/// The infinite product is truncated at 64 factors. Returns 0 for eps > 2a.
/// Throws std::invalid_argument unless 2a < n.
double rmt_rank_prob(size_t n, size_t a, size_t eps);

/// Closed-form mean deficit 2^{2a - n} ln 2, in nats. Requires 2a < n.
double rmt_mean_deficit(size_t n, size_t a);

/// sum_eps eps * rmt_rank_prob(n, a, eps) * ln 2, in nats. Requires 2a < n.
double rmt_mean_deficit_sum(size_t n, size_t a);

/// Monte-Carlo rank histogram of uniformly random n x 2a binary matrices,
/// indexed by deficit 2a - rank.
std::vector<uint64_t> rmt_sampled_deficits(size_t n, size_t a, size_t samples, uint64_t seed);

/// How the partition sum of the area-law estimate is weighted.
enum class AreaLawWeighting {
    /// Each integer partition of |A| into Q cells is weighted by
    /// C(N - |A| + 1, Q), and the normaliser sums that weight once per cell.
    AsPrinted,
    /// Same C(N - |A| + 1, Q) weight per partition, normalised by the sum of
    /// the weights so a volume-law profile S(r) = r returns |A|.
    PartitionWeights,
    /// Each partition is weighted by the number of subsets of the open chain
    /// that realise it: C(N - |A| + 1, Q) times the number of distinct cell
    /// orderings. The weights sum to C(N, |A|).
    Arrangements,
};

/// Coefficients c_r (r = 1..a, stored at r - 1) with <S_A> = sum_r c_r S(r).
/// Throws std::invalid_argument for a == 0, a > 40 or a > n.
std::vector<double> area_law_coefficients(size_t a, size_t n, AreaLawWeighting weighting);

/// Mean entropy of a random size-a subset of an area-law chain of n sites,
/// given the entropy S(r) of r consecutive sites (s_of_r[r - 1], r = 1..a).
double area_law_mean_entropy(
    std::span<const double> s_of_r, size_t a, size_t n, AreaLawWeighting weighting = AreaLawWeighting::AsPrinted);

/// S_start(r) for r = 1..n - start: entropy in bits of sites start..start+r-1.
std::vector<size_t> consecutive_entropy_profile(const StabilizerTableau &t, size_t start);

}  // namespace fastscramble

#endif

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

#include "fastscramble/experiments.h"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fastscramble/sampling.h"

namespace fastscramble {

namespace {

void check_sizes(size_t n, std::span<const size_t> sizes) {
    for (size_t s : sizes) {
        if (s > n) {
            throw std::invalid_argument(
                "subset size " + std::to_string(s) + " exceeds qubit count " + std::to_string(n));
        }
    }
}

struct Sample {
    size_t entropy;
    size_t deficit;
};

// One entropy evaluation per (size, index); results stored by index.
std::vector<Sample> evaluate_samples(
    const StabilizerTableau &t, std::span<const size_t> sizes, size_t count, uint64_t seed, std::string_view stream) {
    const size_t n = t.num_qubits();
    check_sizes(n, sizes);
    const uint64_t sid = stream_id(stream);
    std::vector<Sample> out(sizes.size() * count);
    parallel_for(out.size(), [&](size_t i) {
        const size_t k = sizes[i / count];
        auto rng = stream_rng(seed, sid, i);
        auto subset = random_subset(n, k, rng);
        size_t s = t.entropy_bits(subset);
        out[i] = {s, std::min(k, n - k) - s};
    });
    return out;
}

void two_check(size_t n, size_t a, const char *who) {
    if (2 * a >= n) {
        throw std::invalid_argument(std::string(who) + ": requires 2a < n");
    }
}

}  // namespace

const SizeStats *PageStats::find(size_t size) const {
    for (const auto &s : sizes) {
        if (s.size == size) {
            return &s;
        }
    }
    return nullptr;
}

std::vector<std::vector<size_t>> sample_bipartitions(
    size_t n, std::span<const size_t> sizes, size_t count_per_size, uint64_t seed, std::string_view stream) {
    check_sizes(n, sizes);
    const uint64_t sid = stream_id(stream);
    std::vector<std::vector<size_t>> out(sizes.size() * count_per_size);
    parallel_for(out.size(), [&](size_t i) {
        auto rng = stream_rng(seed, sid, i);
        out[i] = random_subset(n, sizes[i / count_per_size], rng);
    });
    return out;
}

PageStats page_curve(
    const StabilizerTableau &t, std::span<const size_t> sizes, size_t count, uint64_t seed, std::string_view stream) {
    auto samples = evaluate_samples(t, sizes, count, seed, stream);
    PageStats stats;
    stats.num_qubits = t.num_qubits();
    for (size_t s = 0; s < sizes.size(); s++) {
        SizeStats row;
        row.size = sizes[s];
        RunningStats entropy;
        RunningStats deficit;
        for (size_t i = 0; i < count; i++) {
            const Sample &x = samples[s * count + i];
            entropy.add(static_cast<double>(x.entropy));
            deficit.add(static_cast<double>(x.deficit));
            if (row.deficit_counts.size() <= x.deficit) {
                row.deficit_counts.resize(x.deficit + 1, 0);
            }
            row.deficit_counts[x.deficit]++;
        }
        row.samples = count;
        row.mean_entropy_bits = entropy.mean();
        row.mean_deficit_bits = deficit.mean();
        row.stderr_bits = entropy.stderr_mean();
        stats.sizes.push_back(std::move(row));
    }
    return stats;
}

DeficitTable deficit_fractions(
    const StabilizerTableau &t, std::span<const size_t> sizes, size_t count, uint64_t seed, std::string_view stream) {
    PageStats stats = page_curve(t, sizes, count, seed, stream);
    DeficitTable table;
    for (const auto &s : stats.sizes) {
        table.rows.push_back({s.size, s.samples, s.deficit_counts});
    }
    return table;
}

double rmt_rank_prob(size_t n, size_t a, size_t eps) {
    two_check(n, a, "rmt_rank_prob");
    if (eps > 2 * a) {
        return 0.0;
    }
    const size_t gap = n - 2 * a;
    double p = std::exp2(-static_cast<double>(eps) * static_cast<double>(gap + eps));
    for (size_t i = eps + 1; i <= 64; i++) {
        p *= 1.0 - std::exp2(-static_cast<double>(i));
    }
    for (size_t i = 1; i <= gap + eps; i++) {
        p /= 1.0 - std::exp2(-static_cast<double>(i));
    }
    return p;
}

double rmt_mean_deficit(size_t n, size_t a) {
    two_check(n, a, "rmt_mean_deficit");
    return std::exp2(2.0 * static_cast<double>(a) - static_cast<double>(n)) * std::numbers::ln2;
}

double rmt_mean_deficit_sum(size_t n, size_t a) {
    two_check(n, a, "rmt_mean_deficit_sum");
    double total = 0;
    for (size_t eps = 1; eps <= 2 * a; eps++) {
        total += static_cast<double>(eps) * rmt_rank_prob(n, a, eps);
    }
    return total * std::numbers::ln2;
}

std::vector<uint64_t> rmt_sampled_deficits(size_t n, size_t a, size_t samples, uint64_t seed) {
    std::vector<size_t> deficits(samples);
    const uint64_t sid = stream_id("rmt-random-matrix");
    parallel_for(samples, [&](size_t i) {
        auto rng = stream_rng(seed, sid, i);
        BitMatrix m = random_bitmatrix(2 * a, n, rng);
        deficits[i] = 2 * a - rank_gf2_inplace(m);
    });
    std::vector<uint64_t> hist(2 * a + 1, 0);
    for (size_t d : deficits) {
        hist[d]++;
    }
    return hist;
}

namespace {

double binomial(size_t n, size_t k) {
    if (k > n) {
        return 0.0;
    }
    k = std::min(k, n - k);
    double out = 1.0;
    for (size_t i = 1; i <= k; i++) {
        out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return out;
}

// Calls visit(parts) for every partition of `total` into non-increasing parts.
void for_each_partition(size_t total, const std::function<void(const std::vector<size_t> &)> &visit) {
    std::vector<size_t> parts;
    std::function<void(size_t, size_t)> rec = [&](size_t remaining, size_t max_part) {
        if (remaining == 0) {
            visit(parts);
            return;
        }
        for (size_t p = std::min(remaining, max_part); p >= 1; p--) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(total, total);
}

// Distinct orderings of a multiset given in non-increasing order.
double orderings(const std::vector<size_t> &parts) {
    double out = 1.0;
    size_t placed = 0;
    size_t run = 0;
    for (size_t i = 0; i < parts.size(); i++) {
        placed++;
        run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
        out = out * static_cast<double>(placed) / static_cast<double>(run);
    }
    return out;
}

}  // namespace

std::vector<double> area_law_coefficients(size_t a, size_t n, AreaLawWeighting weighting) {
    if (a == 0 || a > 40 || a > n) {
        throw std::invalid_argument("area_law_coefficients: need 1 <= |A| <= min(40, N)");
    }
    std::vector<double> coeff(a, 0.0);
    double norm = 0;
    for_each_partition(a, [&](const std::vector<size_t> &parts) {
        const size_t cells = parts.size();
        double weight = binomial(n - a + 1, cells);
        switch (weighting) {
            case AreaLawWeighting::AsPrinted:
                norm += weight * static_cast<double>(cells);
                break;
            case AreaLawWeighting::PartitionWeights:
                norm += weight;
                break;
            case AreaLawWeighting::Arrangements:
                weight *= orderings(parts);
                norm += weight;
                break;
        }
        for (size_t q : parts) {
            coeff[q - 1] += weight;
        }
    });
    for (double &c : coeff) {
        c /= norm;
    }
    return coeff;
}

double area_law_mean_entropy(std::span<const double> s_of_r, size_t a, size_t n, AreaLawWeighting weighting) {
    if (s_of_r.size() < a) {
        throw std::invalid_argument("area_law_mean_entropy: S(r) must be tabulated for r = 1..|A|");
    }
    auto coeff = area_law_coefficients(a, n, weighting);
    double total = 0;
    for (size_t r = 0; r < a; r++) {
        total += coeff[r] * s_of_r[r];
    }
    return total;
}

std::vector<size_t> consecutive_entropy_profile(const StabilizerTableau &t, size_t start) {
    const size_t n = t.num_qubits();
    if (start >= n) {
        throw std::out_of_range("consecutive_entropy_profile: start site out of range");
    }
    std::vector<size_t> profile;
    std::vector<size_t> window;
    for (size_t q = start; q < n; q++) {
        window.push_back(q);
        profile.push_back(t.entropy_bits(window));
    }
    return profile;
}

}  // namespace fastscramble

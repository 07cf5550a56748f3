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

#ifndef FASTSCRAMBLE_GRAPHSTATE_H
#define FASTSCRAMBLE_GRAPHSTATE_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fastscramble/gf2.h"
#include "fastscramble/tableau.h"

namespace fastscramble {

/// Simple undirected graph stored as a symmetric adjacency matrix with a zero
/// diagonal.
class Graph {
   public:
    Graph() = default;
    explicit Graph(size_t n) : adjacency_(n, n) {}

    size_t num_vertices() const { return adjacency_.rows(); }
    const BitMatrix &adjacency() const { return adjacency_; }

    /// Throws std::invalid_argument for self loops or out-of-range vertices.
    void add_edge(size_t i, size_t j);
    bool has_edge(size_t i, size_t j) const { return adjacency_.get(i, j); }
    size_t degree(size_t v) const { return adjacency_.row_popcount(v); }
    size_t num_edges() const;
    /// Edges (i, j) with i < j in lexicographic order.
    std::vector<std::pair<size_t, size_t>> edges() const;

    /// "N\n" followed by one "i j" line per edge.
    std::string to_edge_list() const;
    static Graph from_edge_list(const std::string &text);

    bool operator==(const Graph &other) const = default;

   private:
    BitMatrix adjacency_;
};

/// Hypercube Q_m: 2^m vertices, i ~ j iff i XOR j is a power of two.
Graph hypercube(size_t m);

/// Entropy of the graph state on subset A in bits: GF(2) rank of the
/// off-diagonal adjacency block between A and its complement.
size_t graph_entropy_bits(const Graph &g, std::span<const size_t> subset);

/// |G> = prod over edges of CZ applied to |+>^n, built with the tableau engine.
StabilizerTableau tableau_from_graph(const Graph &g);

/// Histogram of entropy deficits eps = min(|A|, N - |A|) - S_A, per subset size.
struct DeficitTable {
    struct Row {
        size_t size = 0;
        uint64_t samples = 0;
        std::vector<uint64_t> counts;  // counts[eps]

        double fraction(size_t eps) const {
            return eps < counts.size() && samples > 0 ? static_cast<double>(counts[eps]) / samples : 0.0;
        }
    };
    std::vector<Row> rows;  // ascending size, one per candidate size

    const Row *find(size_t size) const;
    uint64_t total_samples() const;
};

/// Samples bipartitions of the graph state: each sample draws |A| uniformly
/// from `sizes`, then a uniform subset of that size.
DeficitTable page_scrambling_fraction(
    const Graph &g, std::span<const size_t> sizes, size_t samples, uint64_t seed);

}  // namespace fastscramble

#endif

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

#include "fastscramble/graphstate.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fastscramble/sampling.h"

namespace fastscramble {

void Graph::add_edge(size_t i, size_t j) {
    if (i >= num_vertices() || j >= num_vertices()) {
        throw std::invalid_argument("Graph::add_edge: vertex out of range");
    }
    if (i == j) {
        throw std::invalid_argument("Graph::add_edge: self loops are not allowed");
    }
    adjacency_.set(i, j, true);
    adjacency_.set(j, i, true);
}

size_t Graph::num_edges() const {
    size_t total = 0;
    for (size_t v = 0; v < num_vertices(); v++) {
        total += degree(v);
    }
    return total / 2;
}

std::vector<std::pair<size_t, size_t>> Graph::edges() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < num_vertices(); i++) {
        for (size_t j = i + 1; j < num_vertices(); j++) {
            if (has_edge(i, j)) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    out << num_vertices() << "\n";
    for (auto [i, j] : edges()) {
        out << i << " " << j << "\n";
    }
    return out.str();
}

Graph Graph::from_edge_list(const std::string &text) {
    std::istringstream in(text);
    size_t n;
    if (!(in >> n)) {
        throw std::invalid_argument("Graph::from_edge_list: missing vertex count header");
    }
    Graph g(n);
    size_t i, j;
    while (in >> i) {
        if (!(in >> j)) {
            throw std::invalid_argument("Graph::from_edge_list: dangling vertex on last line");
        }
        g.add_edge(i, j);
    }
    if (!in.eof()) {
        throw std::invalid_argument("Graph::from_edge_list: malformed edge line");
    }
    return g;
}

Graph hypercube(size_t m) {
    if (m < 1) {
        throw std::invalid_argument("hypercube: m must be >= 1");
    }
    const size_t n = size_t{1} << m;
    Graph g(n);
    for (size_t v = 0; v < n; v++) {
        for (size_t b = 0; b < m; b++) {
            size_t w = v ^ (size_t{1} << b);
            if (v < w) {
                g.add_edge(v, w);
            }
        }
    }
    return g;
}

size_t graph_entropy_bits(const Graph &g, std::span<const size_t> subset) {
    const size_t n = g.num_vertices();
    std::vector<bool> inside(n, false);
    for (size_t v : subset) {
        if (v >= n) {
            throw std::out_of_range("graph_entropy_bits: vertex out of range");
        }
        inside[v] = true;
    }
    std::vector<size_t> outside;
    outside.reserve(n);
    for (size_t v = 0; v < n; v++) {
        if (!inside[v]) {
            outside.push_back(v);
        }
    }
    BitMatrix block(subset.size(), outside.size());
    for (size_t r = 0; r < subset.size(); r++) {
        for (size_t c = 0; c < outside.size(); c++) {
            if (g.has_edge(subset[r], outside[c])) {
                block.set(r, c, true);
            }
        }
    }
    return rank_gf2_inplace(block);
}

StabilizerTableau tableau_from_graph(const Graph &g) {
    StabilizerTableau t = StabilizerTableau::polarized(g.num_vertices(), Basis::X);
    for (auto [i, j] : g.edges()) {
        t.apply_cz(i, j);
    }
    return t;
}

const DeficitTable::Row *DeficitTable::find(size_t size) const {
    for (const auto &row : rows) {
        if (row.size == size) {
            return &row;
        }
    }
    return nullptr;
}

uint64_t DeficitTable::total_samples() const {
    uint64_t total = 0;
    for (const auto &row : rows) {
        total += row.samples;
    }
    return total;
}

DeficitTable page_scrambling_fraction(
    const Graph &g, std::span<const size_t> sizes, size_t samples, uint64_t seed) {
    const size_t n = g.num_vertices();
    if (sizes.empty()) {
        throw std::invalid_argument("page_scrambling_fraction: no subset sizes given");
    }
    for (size_t s : sizes) {
        if (s > n) {
            throw std::invalid_argument("page_scrambling_fraction: subset size exceeds vertex count");
        }
    }

    struct Outcome {
        size_t size_index;
        size_t eps;
    };
    std::vector<Outcome> outcomes(samples);
    const uint64_t stream = stream_id("graph-deficit");
    parallel_for(samples, [&](size_t i) {
        auto rng = stream_rng(seed, stream, i);
        std::uniform_int_distribution<size_t> pick(0, sizes.size() - 1);
        size_t which = pick(rng);
        size_t k = sizes[which];
        auto subset = random_subset(n, k, rng);
        size_t entropy = graph_entropy_bits(g, subset);
        outcomes[i] = {which, std::min(k, n - k) - entropy};
    });

    std::map<size_t, DeficitTable::Row> by_size;
    for (size_t s : sizes) {
        by_size[s].size = s;
    }
    for (const auto &o : outcomes) {
        auto &row = by_size[sizes[o.size_index]];
        if (row.counts.size() <= o.eps) {
            row.counts.resize(o.eps + 1, 0);
        }
        row.counts[o.eps]++;
        row.samples++;
    }
    DeficitTable table;
    for (auto &[size, row] : by_size) {
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace fastscramble

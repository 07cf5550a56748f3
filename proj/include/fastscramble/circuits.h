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

#ifndef FASTSCRAMBLE_CIRCUITS_H
#define FASTSCRAMBLE_CIRCUITS_H

#include <cstddef>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "fastscramble/clifford2.h"
#include "fastscramble/permutation.h"

namespace fastscramble {

using Bond = std::pair<size_t, size_t>;

/// (2i, 2i+1) for an open chain of n sites.
std::vector<Bond> cz_even_bonds(size_t n);
/// (2i+1, 2i+2) for an open chain of n sites; no wraparound.
std::vector<Bond> cz_odd_bonds(size_t n);

namespace layer {
struct GlobalH {
    bool operator==(const GlobalH &) const = default;
};
struct GlobalP {
    bool operator==(const GlobalP &) const = default;
};
/// Only produced by complex conjugation of a program containing GlobalP.
struct GlobalPdag {
    bool operator==(const GlobalPdag &) const = default;
};
struct CZEven {
    bool operator==(const CZEven &) const = default;
};
struct CZOdd {
    bool operator==(const CZOdd &) const = default;
};
struct Permute {
    Permutation perm;
    bool operator==(const Permute &) const = default;
};
struct CliffordGate {
    size_t a;
    size_t b;
    /// Index into TwoQubitCliffordGroup::instance().
    size_t id;
    bool operator==(const CliffordGate &) const = default;
};
struct CliffordLayer {
    std::vector<CliffordGate> gates;
    bool operator==(const CliffordLayer &) const = default;
};
}  // namespace layer

using CircuitLayer = std::variant<
    layer::GlobalH,
    layer::GlobalP,
    layer::GlobalPdag,
    layer::CZEven,
    layer::CZOdd,
    layer::Permute,
    layer::CliffordLayer>;

/// True for layers made of two-qubit gates; these are the circuit's unit of time.
bool is_interaction_layer(const CircuitLayer &layer);

/// Ordered list of layers on a fixed number of qubits. Layers act in list
/// order: in product notation [A . B]^m the rightmost factor comes first.
class CircuitProgram {
   public:
    CircuitProgram() = default;
    explicit CircuitProgram(size_t n_qubits) : n_qubits_(n_qubits) {}

    size_t num_qubits() const { return n_qubits_; }
    const std::vector<CircuitLayer> &layers() const { return layers_; }
    size_t interaction_layers() const { return interaction_layers_; }

    /// Validates the layer against num_qubits(); throws std::invalid_argument.
    void push(CircuitLayer layer);

    /// Prefix of the program ending after `interaction_layers` entangling
    /// layers. Permutations directly following the last kept entangling layer
    /// are kept; single-qubit layers that precede the next one are dropped.
    CircuitProgram truncated(size_t interaction_layers) const;

    /// Net site permutation of all Permute layers, in order.
    Permutation net_permutation() const;

    /// {"n_qubits": n, "interaction_layers": t, "layers": [...]}.
    std::string to_json(int indent = -1) const;
    static CircuitProgram from_json(const std::string &text);

    bool operator==(const CircuitProgram &other) const = default;

   private:
    size_t n_qubits_ = 0;
    size_t interaction_layers_ = 0;
    std::vector<CircuitLayer> layers_;
};

/// [R . CZ(even)]^m on 2^m qubits: m rounds of CZ(even) then the Faro shuffle.
CircuitProgram build_hypercube_circuit(size_t m);

/// [R^-1 . CZ(odd) . H . P]^m [R^-1 . CZ(even) . H . P]^m on 2^m qubits.
/// Each round is P, H, CZ, inverse shuffle in that order; the first m rounds
/// use even bonds and the last m odd bonds.
CircuitProgram build_scrambling_circuit(size_t m);

/// The scrambling circuit's rounds without the shuffles: round k applies P, H
/// and CZ on even bonds (k even) or odd bonds (k odd). Deterministic
/// nearest-neighbour reference circuit for the decoder experiments.
CircuitProgram build_brickwork_circuit(size_t n, size_t depth);

/// Brickwork of uniformly random two-qubit Cliffords: even bonds on even
/// layers, odd bonds on odd layers.
CircuitProgram build_random_nn(size_t n, size_t depth, std::mt19937_64 &rng);

/// Each interaction layer: random two-qubit Cliffords on even bonds, then a
/// uniformly random permutation of all sites.
CircuitProgram build_random_all_to_all(size_t n, size_t depth, std::mt19937_64 &rng);

/// Runs `program` on an engine.
///
/// Program qubit j acts on engine qubit sites[j]. When `upto` is set, execution
/// stops after that many interaction layers (plus any permutations that
/// directly follow the last one), matching CircuitProgram::truncated.
///
/// Engine needs apply_h, apply_phase, apply_phase_dag, apply_cz,
/// apply_clifford2(op, a, b) and apply_permutation(perm, sites).
template <class Engine>
void execute(
    const CircuitProgram &program,
    Engine &engine,
    std::span<const size_t> sites,
    std::optional<size_t> upto = std::nullopt) {
    if (sites.size() != program.num_qubits()) {
        throw std::invalid_argument("execute: program and state sizes differ");
    }
    const size_t n = sites.size();
    const auto &group = TwoQubitCliffordGroup::instance();
    size_t done = 0;
    for (const CircuitLayer &current : program.layers()) {
        bool entangling = is_interaction_layer(current);
        if (upto.has_value() && done == *upto) {
            if (entangling || !std::holds_alternative<layer::Permute>(current)) {
                break;
            }
        }
        std::visit(
            [&](const auto &l) {
                using L = std::decay_t<decltype(l)>;
                if constexpr (std::is_same_v<L, layer::GlobalH>) {
                    for (size_t q = 0; q < n; q++) engine.apply_h(sites[q]);
                } else if constexpr (std::is_same_v<L, layer::GlobalP>) {
                    for (size_t q = 0; q < n; q++) engine.apply_phase(sites[q]);
                } else if constexpr (std::is_same_v<L, layer::GlobalPdag>) {
                    for (size_t q = 0; q < n; q++) engine.apply_phase_dag(sites[q]);
                } else if constexpr (std::is_same_v<L, layer::CZEven>) {
                    for (auto [a, b] : cz_even_bonds(n)) engine.apply_cz(sites[a], sites[b]);
                } else if constexpr (std::is_same_v<L, layer::CZOdd>) {
                    for (auto [a, b] : cz_odd_bonds(n)) engine.apply_cz(sites[a], sites[b]);
                } else if constexpr (std::is_same_v<L, layer::Permute>) {
                    engine.apply_permutation(l.perm, sites);
                } else if constexpr (std::is_same_v<L, layer::CliffordLayer>) {
                    for (const auto &g : l.gates) engine.apply_clifford2(group[g.id].op, sites[g.a], sites[g.b]);
                }
            },
            current);
        if (entangling) {
            done++;
        }
    }
}

/// Runs `program` on all qubits of an engine of matching size.
template <class Engine>
void execute(const CircuitProgram &program, Engine &engine, std::optional<size_t> upto = std::nullopt) {
    if (engine.num_qubits() != program.num_qubits()) {
        throw std::invalid_argument("execute: program and state sizes differ");
    }
    std::vector<size_t> sites(program.num_qubits());
    std::iota(sites.begin(), sites.end(), size_t{0});
    execute(program, engine, std::span<const size_t>(sites), upto);
}

}  // namespace fastscramble

#endif

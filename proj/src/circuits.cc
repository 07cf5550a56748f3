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

#include "fastscramble/circuits.h"

#include <json.hpp>

namespace fastscramble {

std::vector<Bond> cz_even_bonds(size_t n) {
    std::vector<Bond> bonds;
    for (size_t i = 0; i + 1 < n; i += 2) {
        bonds.emplace_back(i, i + 1);
    }
    return bonds;
}

std::vector<Bond> cz_odd_bonds(size_t n) {
    std::vector<Bond> bonds;
    for (size_t i = 1; i + 1 < n; i += 2) {
        bonds.emplace_back(i, i + 1);
    }
    return bonds;
}

bool is_interaction_layer(const CircuitLayer &layer) {
    return std::holds_alternative<layer::CZEven>(layer) || std::holds_alternative<layer::CZOdd>(layer) ||
           std::holds_alternative<layer::CliffordLayer>(layer);
}

void CircuitProgram::push(CircuitLayer l) {
    if (const auto *p = std::get_if<layer::Permute>(&l)) {
        if (p->perm.size() != n_qubits_) {
            throw std::invalid_argument("CircuitProgram: permutation size does not match qubit count");
        }
    }
    if (const auto *c = std::get_if<layer::CliffordLayer>(&l)) {
        std::vector<bool> used(n_qubits_, false);
        const size_t group_size = TwoQubitCliffordGroup::instance().size();
        for (const auto &g : c->gates) {
            if (g.a >= n_qubits_ || g.b >= n_qubits_ || g.a == g.b) {
                throw std::invalid_argument("CircuitProgram: bad two-qubit gate qubits");
            }
            if (used[g.a] || used[g.b]) {
                throw std::invalid_argument("CircuitProgram: gates in one layer must act on disjoint qubits");
            }
            if (g.id >= group_size) {
                throw std::invalid_argument("CircuitProgram: Clifford id out of range");
            }
            used[g.a] = used[g.b] = true;
        }
    }
    if (is_interaction_layer(l)) {
        interaction_layers_++;
    }
    layers_.push_back(std::move(l));
}

CircuitProgram CircuitProgram::truncated(size_t keep) const {
    CircuitProgram out(n_qubits_);
    size_t done = 0;
    for (const auto &l : layers_) {
        bool entangling = is_interaction_layer(l);
        if (done == keep && (entangling || !std::holds_alternative<layer::Permute>(l))) {
            break;
        }
        out.push(l);
        if (entangling) {
            done++;
        }
    }
    return out;
}

Permutation CircuitProgram::net_permutation() const {
    Permutation net = Permutation::identity(n_qubits_);
    for (const auto &l : layers_) {
        if (const auto *p = std::get_if<layer::Permute>(&l)) {
            net = compose(net, p->perm);
        }
    }
    return net;
}

namespace {

nlohmann::json layer_to_json(const CircuitLayer &l) {
    return std::visit(
        [](const auto &x) -> nlohmann::json {
            using L = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<L, layer::GlobalH>) {
                return {{"type", "H"}};
            } else if constexpr (std::is_same_v<L, layer::GlobalP>) {
                return {{"type", "P"}};
            } else if constexpr (std::is_same_v<L, layer::GlobalPdag>) {
                return {{"type", "P_dag"}};
            } else if constexpr (std::is_same_v<L, layer::CZEven>) {
                return {{"type", "CZ_even"}};
            } else if constexpr (std::is_same_v<L, layer::CZOdd>) {
                return {{"type", "CZ_odd"}};
            } else if constexpr (std::is_same_v<L, layer::Permute>) {
                return {{"type", "permute"}, {"map", x.perm.map()}};
            } else {
                nlohmann::json gates = nlohmann::json::array();
                for (const auto &g : x.gates) {
                    gates.push_back({g.a, g.b, g.id});
                }
                return {{"type", "clifford"}, {"gates", gates}};
            }
        },
        l);
}

CircuitLayer layer_from_json(const nlohmann::json &j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "H") return layer::GlobalH{};
    if (type == "P") return layer::GlobalP{};
    if (type == "P_dag") return layer::GlobalPdag{};
    if (type == "CZ_even") return layer::CZEven{};
    if (type == "CZ_odd") return layer::CZOdd{};
    if (type == "permute") return layer::Permute{Permutation(j.at("map").get<std::vector<size_t>>())};
    if (type == "clifford") {
        layer::CliffordLayer out;
        for (const auto &g : j.at("gates")) {
            out.gates.push_back({g.at(0).get<size_t>(), g.at(1).get<size_t>(), g.at(2).get<size_t>()});
        }
        return out;
    }
    throw std::invalid_argument("unknown layer type '" + type + "'");
}

}  // namespace

std::string CircuitProgram::to_json(int indent) const {
    nlohmann::json layers = nlohmann::json::array();
    for (const auto &l : layers_) {
        layers.push_back(layer_to_json(l));
    }
    nlohmann::json j = {{"n_qubits", n_qubits_}, {"interaction_layers", interaction_layers_}, {"layers", layers}};
    return j.dump(indent);
}

CircuitProgram CircuitProgram::from_json(const std::string &text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        CircuitProgram out(j.at("n_qubits").get<size_t>());
        for (const auto &l : j.at("layers")) {
            out.push(layer_from_json(l));
        }
        return out;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed circuit JSON: ") + e.what());
    }
}

CircuitProgram build_hypercube_circuit(size_t m) {
    if (m < 1) {
        throw std::invalid_argument("build_hypercube_circuit: m must be >= 1");
    }
    const size_t n = size_t{1} << m;
    const Permutation shuffle = faro_shuffle(n);
    CircuitProgram program(n);
    for (size_t k = 0; k < m; k++) {
        program.push(layer::CZEven{});
        program.push(layer::Permute{shuffle});
    }
    return program;
}

CircuitProgram build_scrambling_circuit(size_t m) {
    if (m < 1) {
        throw std::invalid_argument("build_scrambling_circuit: m must be >= 1");
    }
    const size_t n = size_t{1} << m;
    const Permutation unshuffle = inverse(faro_shuffle(n));
    CircuitProgram program(n);
    for (size_t k = 0; k < 2 * m; k++) {
        program.push(layer::GlobalP{});
        program.push(layer::GlobalH{});
        if (k < m) {
            program.push(layer::CZEven{});
        } else {
            program.push(layer::CZOdd{});
        }
        program.push(layer::Permute{unshuffle});
    }
    return program;
}

CircuitProgram build_brickwork_circuit(size_t n, size_t depth) {
    if (n < 2) {
        throw std::invalid_argument("build_brickwork_circuit: need at least two qubits");
    }
    CircuitProgram program(n);
    for (size_t k = 0; k < depth; k++) {
        program.push(layer::GlobalP{});
        program.push(layer::GlobalH{});
        if (k % 2 == 0) {
            program.push(layer::CZEven{});
        } else {
            program.push(layer::CZOdd{});
        }
    }
    return program;
}

namespace {

layer::CliffordLayer random_clifford_layer(const std::vector<Bond> &bonds, std::mt19937_64 &rng) {
    std::uniform_int_distribution<size_t> pick(0, TwoQubitCliffordGroup::instance().size() - 1);
    layer::CliffordLayer out;
    for (auto [a, b] : bonds) {
        out.gates.push_back({a, b, pick(rng)});
    }
    return out;
}

void check_random_args(size_t n, size_t depth, const char *who) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument(std::string(who) + ": qubit count must be even and >= 2");
    }
    if (depth < 1) {
        throw std::invalid_argument(std::string(who) + ": depth must be >= 1");
    }
}

}  // namespace

CircuitProgram build_random_nn(size_t n, size_t depth, std::mt19937_64 &rng) {
    check_random_args(n, depth, "build_random_nn");
    const auto even = cz_even_bonds(n);
    const auto odd = cz_odd_bonds(n);
    CircuitProgram program(n);
    for (size_t k = 0; k < depth; k++) {
        program.push(random_clifford_layer(k % 2 == 0 ? even : odd, rng));
    }
    return program;
}

CircuitProgram build_random_all_to_all(size_t n, size_t depth, std::mt19937_64 &rng) {
    check_random_args(n, depth, "build_random_all_to_all");
    const auto even = cz_even_bonds(n);
    CircuitProgram program(n);
    for (size_t k = 0; k < depth; k++) {
        program.push(random_clifford_layer(even, rng));
        program.push(layer::Permute{random_permutation(n, rng)});
    }
    return program;
}

}  // namespace fastscramble

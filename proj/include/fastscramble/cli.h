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

#ifndef FASTSCRAMBLE_CLI_H
#define FASTSCRAMBLE_CLI_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fastscramble/circuits.h"
#include "fastscramble/dense.h"
#include "fastscramble/haydenpreskill.h"
#include "fastscramble/tableau.h"

namespace fastscramble {

/// Invalid command-line configuration (exit code 2).
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string command;
    /// Qubit count; for hypercube-based circuits N = 2^m and either may be given.
    size_t n = 0;
    size_t m = 0;
    /// Interaction-layer counts; empty means the circuit's natural depth.
    std::vector<size_t> depths;
    std::string circuit = "es";  // es | qm | nn | a2a | bw
    std::vector<size_t> sizes;
    size_t samples = 20000;
    size_t trajectories = 60000;
    std::vector<double> p{0.0};
    bool crosstalk = true;
    Basis basis = Basis::Z;
    Placement placement = Placement::Contiguous;
    NoiseModel noise = NoiseModel::Depolarizing;
    std::optional<uint64_t> seed;
    std::string out;
    std::string format = "csv";  // csv | json
};

/// A cell is empty, an unsigned integer, a real or a string.
using Cell = std::variant<std::monostate, uint64_t, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Fills N from m (or m from N when N is a power of two) and checks the
/// fields the command needs. Throws ConfigError.
RunConfig normalized(RunConfig cfg);

/// Circuit selected by cfg.circuit on cfg.n qubits at the given depth. Random
/// circuits draw from a stream derived from the seed.
CircuitProgram build_program(const RunConfig &cfg, size_t depth);
/// Natural depth: 2m for es, m for qm, 2m for the others.
size_t default_depth(const RunConfig &cfg);

Table cmd_page_curve(const RunConfig &cfg);
Table cmd_hypercube(const RunConfig &cfg);
Table cmd_mutual_info(const RunConfig &cfg);
/// Throws ResourceLimitError when 2N + 2|A| exceeds the dense limit.
Table cmd_decoder(const RunConfig &cfg);
Table cmd_rmt(const RunConfig &cfg);

/// Dispatches on cfg.command after normalising.
Table run_command(const RunConfig &cfg);

/// CSV with the configuration as leading "# key=value" lines. Reals use 17
/// significant digits.
std::string render_csv(const RunConfig &cfg, const Table &table);
/// {"config": {...}, "columns": [...], "rows": [{column: value}, ...]}.
std::string render_json(const RunConfig &cfg, const Table &table);
std::string render(const RunConfig &cfg, const Table &table);

}  // namespace fastscramble

#endif

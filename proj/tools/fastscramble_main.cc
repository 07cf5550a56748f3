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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "fastscramble/cli.h"

using namespace fastscramble;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;

void add_common(CLI::App *sub, RunConfig &cfg, bool &crosstalk_set, std::string &crosstalk) {
    sub->add_option("--N", cfg.n, "Number of qubits");
    sub->add_option("--m", cfg.m, "log2 of the number of qubits");
    sub->add_option("--depth", cfg.depths, "Interaction layers (comma list for decoder sweeps)")->delimiter(',');
    sub->add_option("--circuit", cfg.circuit, "es | qm | nn | a2a | bw")
        ->check(CLI::IsMember({"es", "qm", "nn", "a2a", "bw"}));
    sub->add_option("--sizes", cfg.sizes, "Subsystem sizes |A| (comma list)")->delimiter(',');
    sub->add_option("--samples", cfg.samples, "Samples per point");
    sub->add_option("--trajectories", cfg.trajectories, "Decoder trajectories");
    sub->add_option("--p", cfg.p, "Noise rates (comma list)")->delimiter(',');
    sub->add_option("--crosstalk", crosstalk, "on | off")->check(CLI::IsMember({"on", "off"}))->each([&](const std::string &) {
        crosstalk_set = true;
    });
    sub->add_option("--basis", cfg.basis, "Input polarisation x | y | z")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Basis>{{"x", Basis::X}, {"y", Basis::Y}, {"z", Basis::Z}}, CLI::ignore_case));
    sub->add_option("--placement", cfg.placement, "Alice's inputs: contiguous | random")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Placement>{{"contiguous", Placement::Contiguous}, {"random", Placement::Random}},
            CLI::ignore_case));
    sub->add_option("--noise", cfg.noise, "depolarizing | dephasing")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, NoiseModel>{
                {"depolarizing", NoiseModel::Depolarizing}, {"dephasing", NoiseModel::Dephasing}},
            CLI::ignore_case));
    sub->add_option("--seed", cfg.seed, "Master seed (required)");
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
    sub->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Deterministic fast-scrambling circuit experiments"};
    app.require_subcommand(1);
    RunConfig cfg;
    bool crosstalk_set = false;
    std::string crosstalk = "on";

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"page-curve", "Entropy deficit time series and final Page curve"},
        {"hypercube", "Hypercube graph state: circuit/graph cross-check and deficit fractions"},
        {"mutual-info", "Hayden-Preskill mutual information I2(A:RB) vs |R| and |R|_min"},
        {"decoder", "Teleportation decoder with noise and crosstalk"},
        {"rmt", "Random-matrix rank distribution and mean deficit"},
    };
    for (const auto &[name, help] : commands) {
        add_common(app.add_subcommand(name, help), cfg, crosstalk_set, crosstalk);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.crosstalk = crosstalk == "on";

    try {
        cfg = normalized(cfg);
        std::string text = render(cfg, run_command(cfg));
        if (cfg.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream file(cfg.out, std::ios::binary);
            if (!file) {
                std::cerr << "error: cannot open " << cfg.out << "\n";
                return kExitConfig;
            }
            file << text;
        }
    } catch (const ResourceLimitError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return 0;
}

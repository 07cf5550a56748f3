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

#include "fastscramble/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "fastscramble/decoder.h"
#include "fastscramble/experiments.h"
#include "fastscramble/graphstate.h"
#include "fastscramble/sampling.h"

namespace fastscramble {

namespace {

constexpr size_t kMaxEpsColumns = 5;

const char *basis_name(Basis b) {
    switch (b) {
        case Basis::X: return "x";
        case Basis::Y: return "y";
        case Basis::Z: return "z";
    }
    return "?";
}

std::vector<size_t> range_inclusive(size_t lo, size_t hi) {
    std::vector<size_t> out;
    for (size_t v = lo; v <= hi; v++) out.push_back(v);
    return out;
}

size_t single_depth(const RunConfig &cfg) {
    if (cfg.depths.size() > 1) {
        throw ConfigError(cfg.command + " takes a single --depth");
    }
    return cfg.depths.empty() ? default_depth(cfg) : cfg.depths[0];
}

void push_eps(std::vector<Cell> &row, const std::vector<uint64_t> &counts, uint64_t samples) {
    for (size_t e = 0; e < kMaxEpsColumns; e++) {
        double f = (e < counts.size() && samples > 0) ? static_cast<double>(counts[e]) / static_cast<double>(samples) : 0.0;
        row.emplace_back(f);
    }
}

void add_eps_columns(std::vector<std::string> &cols) {
    for (size_t e = 0; e < kMaxEpsColumns; e++) cols.push_back("f_eps" + std::to_string(e));
}

nlohmann::ordered_json config_json(const RunConfig &cfg) {
    nlohmann::ordered_json j;
    j["command"] = cfg.command;
    j["N"] = cfg.n;
    j["m"] = cfg.m;
    j["depth"] = cfg.depths;
    j["circuit"] = cfg.circuit;
    j["sizes"] = cfg.sizes;
    j["samples"] = cfg.samples;
    j["trajectories"] = cfg.trajectories;
    j["p"] = cfg.p;
    j["crosstalk"] = cfg.crosstalk ? "on" : "off";
    j["basis"] = basis_name(cfg.basis);
    j["placement"] = cfg.placement == Placement::Random ? "random" : "contiguous";
    j["noise"] = cfg.noise == NoiseModel::Dephasing ? "dephasing" : "depolarizing";
    j["seed"] = cfg.seed.value_or(0);
    j["format"] = cfg.format;
    return j;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

size_t default_depth(const RunConfig &cfg) {
    return cfg.circuit == "qm" ? cfg.m : 2 * cfg.m;
}

RunConfig normalized(RunConfig cfg) {
    static const std::vector<std::string> commands = {"page-curve", "hypercube", "mutual-info", "decoder", "rmt"};
    static const std::vector<std::string> circuits = {"es", "qm", "nn", "a2a", "bw"};
    if (std::find(commands.begin(), commands.end(), cfg.command) == commands.end()) {
        throw ConfigError("unknown command '" + cfg.command + "'");
    }
    if (!cfg.seed.has_value()) {
        throw ConfigError("--seed is required");
    }
    if (cfg.format != "csv" && cfg.format != "json") {
        throw ConfigError("--format must be csv or json");
    }
    if (std::find(circuits.begin(), circuits.end(), cfg.circuit) == circuits.end()) {
        throw ConfigError("--circuit must be one of es, qm, nn, a2a, bw");
    }
    for (double p : cfg.p) {
        if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("--p values must lie in [0, 1]");
    }

    if (cfg.command == "rmt") {
        if (cfg.n < 3) throw ConfigError("rmt needs --N >= 3");
        return cfg;
    }
    if (cfg.m > 0) {
        if (cfg.m > 20) throw ConfigError("--m too large");
        size_t from_m = size_t{1} << cfg.m;
        if (cfg.n != 0 && cfg.n != from_m) throw ConfigError("--N and --m disagree");
        cfg.n = from_m;
    } else if (cfg.n > 0 && is_power_of_two(cfg.n)) {
        cfg.m = exact_log2(cfg.n);
    }
    if (cfg.command == "hypercube") {
        cfg.circuit = "qm";
    }
    const bool needs_power = cfg.circuit == "es" || cfg.circuit == "qm";
    if (cfg.n < 2) throw ConfigError("--N (or --m) must give at least 2 qubits");
    if (needs_power && cfg.m == 0) throw ConfigError("circuit '" + cfg.circuit + "' needs N = 2^m");
    if (cfg.n % 2 != 0) throw ConfigError("--N must be even");
    if (cfg.m == 0 && cfg.depths.empty()) throw ConfigError("--depth is required when N is not a power of two");
    for (size_t s : cfg.sizes) {
        if (s > cfg.n) throw ConfigError("--sizes entries must not exceed N");
    }
    if (cfg.samples == 0) throw ConfigError("--samples must be positive");
    if (cfg.command == "decoder" && cfg.trajectories == 0) throw ConfigError("--trajectories must be positive");
    return cfg;
}

CircuitProgram build_program(const RunConfig &cfg, size_t depth) {
    const uint64_t seed = cfg.seed.value_or(0);
    if (cfg.circuit == "es" || cfg.circuit == "qm") {
        CircuitProgram full = cfg.circuit == "es" ? build_scrambling_circuit(cfg.m) : build_hypercube_circuit(cfg.m);
        if (depth > full.interaction_layers()) {
            throw ConfigError(
                "circuit '" + cfg.circuit + "' has only " + std::to_string(full.interaction_layers()) +
                " interaction layers");
        }
        return full.truncated(depth);
    }
    if (depth == 0) {
        return CircuitProgram(cfg.n);
    }
    if (cfg.circuit == "bw") {
        return build_brickwork_circuit(cfg.n, depth);
    }
    auto rng = stream_rng(seed, stream_id("cli-circuit-" + cfg.circuit), depth);
    return cfg.circuit == "nn" ? build_random_nn(cfg.n, depth, rng) : build_random_all_to_all(cfg.n, depth, rng);
}

Table cmd_page_curve(const RunConfig &cfg) {
    const size_t depth = single_depth(cfg);
    const uint64_t seed = *cfg.seed;
    const CircuitProgram program = build_program(cfg, depth);
    const size_t ts_size = cfg.n / 2 - 1;

    Table table;
    table.columns = {"experiment", "N", "t", "size_A", "mean_S_bits", "mean_deficit_bits", "stderr"};
    add_eps_columns(table.columns);
    table.columns.insert(table.columns.end(), {"samples", "seed"});

    auto emit = [&](const char *name, size_t t, const SizeStats &s) {
        std::vector<Cell> row = {std::string(name), uint64_t{cfg.n}, uint64_t{t}, uint64_t{s.size},
                                 s.mean_entropy_bits, s.mean_deficit_bits, s.stderr_bits};
        push_eps(row, s.deficit_counts, s.samples);
        row.emplace_back(uint64_t{s.samples});
        row.emplace_back(seed);
        table.rows.push_back(std::move(row));
    };

    StabilizerTableau final_state;
    const std::vector<size_t> ts_sizes = {ts_size};
    for (size_t t = 0; t <= depth; t++) {
        StabilizerTableau state = StabilizerTableau::polarized(cfg.n, cfg.basis);
        execute(program, state, t);
        PageStats stats = page_curve(state, ts_sizes, cfg.samples, seed, "page-curve/t" + std::to_string(t));
        emit("timeseries", t, stats.sizes[0]);
        if (t == depth) final_state = std::move(state);
    }
    std::vector<size_t> sizes = cfg.sizes.empty() ? range_inclusive(1, cfg.n - 1) : cfg.sizes;
    PageStats stats = page_curve(final_state, sizes, cfg.samples, seed, "page-curve/final");
    for (const auto &s : stats.sizes) emit("page_curve", depth, s);
    return table;
}

Table cmd_hypercube(const RunConfig &cfg) {
    const uint64_t seed = *cfg.seed;
    const size_t n = cfg.n;
    Graph graph = hypercube(cfg.m);
    StabilizerTableau circuit_state = StabilizerTableau::polarized(n, Basis::X);
    execute(build_hypercube_circuit(cfg.m), circuit_state);

    Table table;
    table.columns = {"experiment", "N", "size_A", "samples"};
    add_eps_columns(table.columns);
    table.columns.insert(table.columns.end(), {"mismatches", "seed"});

    // Exhaustive for N <= 16, otherwise `samples` random subsets of random size.
    const bool exhaustive = n <= 16;
    const size_t checks = exhaustive ? (size_t{1} << n) : cfg.samples;
    std::vector<uint8_t> mismatch(checks, 0);
    const uint64_t stream = stream_id("hypercube-crosscheck");
    parallel_for(checks, [&](size_t i) {
        std::vector<size_t> subset;
        if (exhaustive) {
            for (size_t q = 0; q < n; q++) {
                if ((i >> q) & 1) subset.push_back(q);
            }
        } else {
            auto rng = stream_rng(seed, stream, i);
            size_t k = std::uniform_int_distribution<size_t>(0, n)(rng);
            subset = random_subset(n, k, rng);
        }
        mismatch[i] = graph_entropy_bits(graph, subset) != circuit_state.entropy_bits(subset);
    });
    uint64_t bad = 0;
    for (auto x : mismatch) bad += x;
    std::vector<Cell> row = {std::string("crosscheck"), uint64_t{n}, std::monostate{}, uint64_t{checks}};
    for (size_t e = 0; e < kMaxEpsColumns; e++) row.emplace_back(std::monostate{});
    row.emplace_back(bad);
    row.emplace_back(seed);
    table.rows.push_back(std::move(row));

    std::vector<size_t> sizes = cfg.sizes.empty() ? range_inclusive(1, n / 2) : cfg.sizes;
    DeficitTable fractions = page_scrambling_fraction(graph, sizes, cfg.samples, seed);
    for (const auto &r : fractions.rows) {
        std::vector<Cell> out = {std::string("fraction"), uint64_t{n}, uint64_t{r.size}, uint64_t{r.samples}};
        push_eps(out, r.counts, r.samples);
        out.emplace_back(std::monostate{});
        out.emplace_back(seed);
        table.rows.push_back(std::move(out));
    }
    return table;
}

Table cmd_mutual_info(const RunConfig &cfg) {
    const size_t depth = single_depth(cfg);
    const uint64_t seed = *cfg.seed;
    const ChannelState cs = channel_state(build_program(cfg, depth));
    std::vector<size_t> sizes = cfg.sizes;
    if (sizes.empty()) {
        for (size_t a : {1, 3, 5}) {
            if (a <= cfg.n) sizes.push_back(a);
        }
    }

    Table table;
    table.columns = {"experiment", "N", "t", "size_A", "size_R", "mean_I2_bits", "stderr", "saturated", "samples",
                     "seed"};
    for (size_t a : sizes) {
        const double target = 0.95 * 2.0 * static_cast<double>(a);
        std::optional<size_t> r_min;
        for (size_t r = 0; r <= cfg.n; r++) {
            MutualInfoStats s = mutual_info_A_RB(cs, a, r, cfg.samples, seed, cfg.placement);
            if (!r_min && s.mean_bits >= target) r_min = r;
            table.rows.push_back({std::string("mutual_info"), uint64_t{cfg.n}, uint64_t{depth}, uint64_t{a},
                                  uint64_t{r}, s.mean_bits, s.stderr_bits, std::monostate{}, uint64_t{s.samples},
                                  seed});
        }
        table.rows.push_back({std::string("r_min"), uint64_t{cfg.n}, uint64_t{depth}, uint64_t{a},
                              uint64_t{r_min.value_or(cfg.n)}, std::monostate{}, std::monostate{},
                              uint64_t{r_min.has_value() ? 1u : 0u}, uint64_t{cfg.samples}, seed});
    }
    return table;
}

Table cmd_decoder(const RunConfig &cfg) {
    const uint64_t seed = *cfg.seed;
    std::vector<size_t> depths = cfg.depths.empty() ? std::vector<size_t>{default_depth(cfg)} : cfg.depths;
    std::vector<size_t> sizes = cfg.sizes.empty() ? std::vector<size_t>{1} : cfg.sizes;
    for (size_t a : sizes) {
        if (2 * cfg.n + 2 * a > kMaxDenseQubits) {
            throw ResourceLimitError(
                "decoder: 2N + 2|A| = " + std::to_string(2 * cfg.n + 2 * a) + " exceeds " +
                std::to_string(kMaxDenseQubits) + " qubits");
        }
    }

    Table table;
    table.columns = {"N", "size_A", "size_R", "t", "p", "crosstalk", "P_EPR", "F_EPR", "delta", "stderr_F",
                     "stderr_P", "trajectories", "seed"};
    for (size_t a : sizes) {
        for (size_t t : depths) {
            for (double p : cfg.p) {
                DecoderSetup setup;
                setup.program = build_program(cfg, t);
                setup.size_a = a;
                setup.p = p;
                setup.noise = cfg.noise;
                setup.crosstalk = cfg.crosstalk;
                for (const auto &s : run_decoder(setup, cfg.trajectories, seed)) {
                    table.rows.push_back({uint64_t{cfg.n}, uint64_t{a}, uint64_t{s.size_r}, uint64_t{t}, p,
                                          std::string(cfg.crosstalk ? "on" : "off"), s.p_epr, s.f_epr, s.delta,
                                          s.stderr_f, s.stderr_p, uint64_t{s.trajectories}, seed});
                }
            }
        }
    }
    return table;
}

Table cmd_rmt(const RunConfig &cfg) {
    const uint64_t seed = *cfg.seed;
    const size_t n = cfg.n;
    std::vector<size_t> sizes = cfg.sizes.empty() ? range_inclusive(1, (n - 1) / 2) : cfg.sizes;
    for (size_t a : sizes) {
        if (a == 0 || 2 * a >= n) throw ConfigError("rmt: every size must satisfy 1 <= 2|A| < N");
    }

    Table table;
    table.columns = {"experiment", "N", "size_A", "eps", "probability", "mc_fraction", "mc_stderr",
                     "closed_form_nats", "eps_sum_nats", "mc_mean_nats", "samples", "seed"};
    const double samples = static_cast<double>(cfg.samples);
    for (size_t a : sizes) {
        auto hist = rmt_sampled_deficits(n, a, cfg.samples, derive_seed(seed, stream_id("cli-rmt"), a));
        double mc_mean = 0;
        for (size_t eps = 0; eps <= 2 * a; eps++) {
            double f = static_cast<double>(hist[eps]) / samples;
            mc_mean += static_cast<double>(eps) * f;
            table.rows.push_back({std::string("rank_prob"), uint64_t{n}, uint64_t{a}, uint64_t{eps},
                                  rmt_rank_prob(n, a, eps), f, std::sqrt(f * (1 - f) / samples), std::monostate{},
                                  std::monostate{}, std::monostate{}, uint64_t{cfg.samples}, seed});
        }
        table.rows.push_back({std::string("mean_deficit"), uint64_t{n}, uint64_t{a}, std::monostate{},
                              std::monostate{}, std::monostate{}, std::monostate{}, rmt_mean_deficit(n, a),
                              rmt_mean_deficit_sum(n, a), mc_mean * std::numbers::ln2, uint64_t{cfg.samples}, seed});
    }
    return table;
}

Table run_command(const RunConfig &raw) {
    RunConfig cfg = normalized(raw);
    if (cfg.command == "page-curve") return cmd_page_curve(cfg);
    if (cfg.command == "hypercube") return cmd_hypercube(cfg);
    if (cfg.command == "mutual-info") return cmd_mutual_info(cfg);
    if (cfg.command == "decoder") return cmd_decoder(cfg);
    return cmd_rmt(cfg);
}

std::string render_csv(const RunConfig &cfg, const Table &table) {
    std::ostringstream out;
    const nlohmann::ordered_json config = config_json(cfg);
    for (const auto &[key, value] : config.items()) {
        out << "# " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    for (size_t c = 0; c < table.columns.size(); c++) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << "\n";
    for (const auto &row : table.rows) {
        for (size_t c = 0; c < row.size(); c++) {
            if (c) out << ",";
            std::visit(
                [&](const auto &v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, uint64_t>) {
                        out << v;
                    } else if constexpr (std::is_same_v<V, double>) {
                        out << format_real(v);
                    } else if constexpr (std::is_same_v<V, std::string>) {
                        out << v;
                    }
                },
                row[c]);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_json(const RunConfig &cfg, const Table &table) {
    nlohmann::ordered_json j;
    j["config"] = config_json(cfg);
    j["columns"] = table.columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
        nlohmann::ordered_json r;
        for (size_t c = 0; c < row.size(); c++) {
            std::visit(
                [&](const auto &v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, std::monostate>) {
                        r[table.columns[c]] = nullptr;
                    } else {
                        r[table.columns[c]] = v;
                    }
                },
                row[c]);
        }
        j["rows"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

std::string render(const RunConfig &cfg, const Table &table) {
    return cfg.format == "json" ? render_json(cfg, table) : render_csv(cfg, table);
}

}  // namespace fastscramble

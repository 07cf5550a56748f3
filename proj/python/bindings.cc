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

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fastscramble/circuits.h"
#include "fastscramble/cli.h"
#include "fastscramble/decoder.h"
#include "fastscramble/dense.h"
#include "fastscramble/experiments.h"
#include "fastscramble/graphstate.h"
#include "fastscramble/haydenpreskill.h"
#include "fastscramble/tableau.h"

namespace py = pybind11;
using namespace fastscramble;

namespace {

py::dict size_stats_dict(const SizeStats &s) {
    py::dict d;
    d["size"] = s.size;
    d["samples"] = s.samples;
    d["mean_entropy_bits"] = s.mean_entropy_bits;
    d["mean_deficit_bits"] = s.mean_deficit_bits;
    d["stderr_bits"] = s.stderr_bits;
    d["deficit_counts"] = s.deficit_counts;
    return d;
}

py::dict mutual_info_dict(const MutualInfoStats &s) {
    py::dict d;
    d["size_a"] = s.size_a;
    d["size_r"] = s.size_r;
    d["samples"] = s.samples;
    d["mean_bits"] = s.mean_bits;
    d["stderr_bits"] = s.stderr_bits;
    return d;
}

py::dict trajectory_dict(const TrajectoryStats &s) {
    py::dict d;
    d["size_r"] = s.size_r;
    d["trajectories"] = s.trajectories;
    d["p_epr"] = s.p_epr;
    d["f_epr"] = s.f_epr;
    d["delta"] = s.delta;
    d["stderr_p"] = s.stderr_p;
    d["stderr_f"] = s.stderr_f;
    d["stderr_delta"] = s.stderr_delta;
    d["mean_conditional_f"] = s.mean_conditional_f;
    d["stderr_conditional_f"] = s.stderr_conditional_f;
    return d;
}

// Python-facing mirror of the command line.
std::string run_command_py(
    const std::string &command, uint64_t seed, size_t n, size_t m, std::vector<size_t> depths,
    const std::string &circuit, std::vector<size_t> sizes, size_t samples, size_t trajectories, std::vector<double> p,
    bool crosstalk, Basis basis, Placement placement, NoiseModel noise, const std::string &format) {
    RunConfig cfg;
    cfg.command = command;
    cfg.seed = seed;
    cfg.n = n;
    cfg.m = m;
    cfg.depths = std::move(depths);
    cfg.circuit = circuit;
    cfg.sizes = std::move(sizes);
    cfg.samples = samples;
    cfg.trajectories = trajectories;
    cfg.p = std::move(p);
    cfg.crosstalk = crosstalk;
    cfg.basis = basis;
    cfg.placement = placement;
    cfg.noise = noise;
    cfg.format = format;
    cfg = normalized(cfg);
    return render(cfg, run_command(cfg));
}

}  // namespace

PYBIND11_MODULE(_fastscramble, m) {
    m.doc() = "Stabilizer and state-vector simulation of shuffle-based fast scrambling circuits.";

    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

    py::enum_<Basis>(m, "Basis").value("X", Basis::X).value("Y", Basis::Y).value("Z", Basis::Z);
    py::enum_<Placement>(m, "Placement")
        .value("CONTIGUOUS", Placement::Contiguous)
        .value("RANDOM", Placement::Random);
    py::enum_<NoiseModel>(m, "NoiseModel")
        .value("DEPOLARIZING", NoiseModel::Depolarizing)
        .value("DEPHASING", NoiseModel::Dephasing);
    py::enum_<AreaLawWeighting>(m, "AreaLawWeighting")
        .value("AS_PRINTED", AreaLawWeighting::AsPrinted)
        .value("PARTITION_WEIGHTS", AreaLawWeighting::PartitionWeights)
        .value("ARRANGEMENTS", AreaLawWeighting::Arrangements);

    m.def("faro_shuffle", [](size_t n) { return faro_shuffle(n).map(); }, py::arg("n"),
          "Image list of the perfect shuffle on n = 2^m sites.");
    m.def("inverse_permutation", [](std::vector<size_t> map) { return inverse(Permutation(std::move(map))).map(); });

    py::class_<CircuitProgram>(m, "CircuitProgram")
        .def(py::init<size_t>(), py::arg("n_qubits"))
        .def_property_readonly("num_qubits", &CircuitProgram::num_qubits)
        .def_property_readonly("interaction_layers", &CircuitProgram::interaction_layers)
        .def("__len__", [](const CircuitProgram &p) { return p.layers().size(); })
        .def("truncated", &CircuitProgram::truncated, py::arg("interaction_layers"))
        .def("to_json", &CircuitProgram::to_json, py::arg("indent") = -1)
        .def_static("from_json", &CircuitProgram::from_json)
        .def(py::self == py::self);

    m.def("build_hypercube_circuit", &build_hypercube_circuit, py::arg("m"));
    m.def("build_scrambling_circuit", &build_scrambling_circuit, py::arg("m"));
    m.def("build_brickwork_circuit", &build_brickwork_circuit, py::arg("n"), py::arg("depth"));
    m.def("build_random_nn", [](size_t n, size_t depth, uint64_t seed) {
        std::mt19937_64 rng(seed);
        return build_random_nn(n, depth, rng);
    }, py::arg("n"), py::arg("depth"), py::arg("seed"));
    m.def("build_random_all_to_all", [](size_t n, size_t depth, uint64_t seed) {
        std::mt19937_64 rng(seed);
        return build_random_all_to_all(n, depth, rng);
    }, py::arg("n"), py::arg("depth"), py::arg("seed"));

    py::class_<StabilizerTableau>(m, "StabilizerTableau")
        .def_static("polarized", &StabilizerTableau::polarized, py::arg("n"), py::arg("basis") = Basis::Z)
        .def_property_readonly("num_qubits", &StabilizerTableau::num_qubits)
        .def("apply_h", &StabilizerTableau::apply_h)
        .def("apply_phase", &StabilizerTableau::apply_phase)
        .def("apply_phase_dag", &StabilizerTableau::apply_phase_dag)
        .def("apply_x", &StabilizerTableau::apply_x)
        .def("apply_y", &StabilizerTableau::apply_y)
        .def("apply_z", &StabilizerTableau::apply_z)
        .def("apply_cnot", &StabilizerTableau::apply_cnot)
        .def("apply_cz", &StabilizerTableau::apply_cz)
        .def("execute", [](StabilizerTableau &t, const CircuitProgram &p, std::optional<size_t> upto) {
            execute(p, t, upto);
        }, py::arg("program"), py::arg("upto") = py::none())
        .def("entropy_bits", [](const StabilizerTableau &t, std::vector<size_t> subset) {
            return t.entropy_bits(subset);
        })
        .def("generator_string", &StabilizerTableau::generator_string)
        .def("is_valid", &StabilizerTableau::is_valid)
        .def("__str__", &StabilizerTableau::str)
        .def(py::self == py::self);

    py::class_<DenseState>(m, "DenseState")
        .def(py::init<size_t>(), py::arg("n"))
        .def_static("from_amplitudes", &DenseState::from_amplitudes)
        .def_property_readonly("num_qubits", &DenseState::num_qubits)
        .def_property_readonly("amplitudes", &DenseState::amplitudes)
        .def("norm_squared", &DenseState::norm_squared)
        .def("apply_h", &DenseState::apply_h)
        .def("apply_phase", &DenseState::apply_phase)
        .def("apply_x", &DenseState::apply_x)
        .def("apply_z", &DenseState::apply_z)
        .def("apply_cnot", &DenseState::apply_cnot)
        .def("apply_cz", &DenseState::apply_cz)
        .def("apply_cphase", &DenseState::apply_cphase)
        .def("project_epr", &DenseState::project_epr)
        .def("execute", [](DenseState &s, const CircuitProgram &p, std::optional<size_t> upto) {
            execute(p, s, upto);
        }, py::arg("program"), py::arg("upto") = py::none())
        .def("renyi2_entropy_bits", [](const DenseState &s, std::vector<size_t> subset) {
            return s.renyi2_entropy_bits(subset);
        });

    py::class_<Graph>(m, "Graph")
        .def(py::init<size_t>())
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def("add_edge", &Graph::add_edge)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("to_edge_list", &Graph::to_edge_list)
        .def_static("from_edge_list", &Graph::from_edge_list);
    m.def("hypercube", &hypercube, py::arg("m"));
    m.def("graph_entropy_bits", [](const Graph &g, std::vector<size_t> subset) {
        return graph_entropy_bits(g, subset);
    });
    m.def("tableau_from_graph", &tableau_from_graph);

    m.def("page_curve", [](const StabilizerTableau &t, std::vector<size_t> sizes, size_t count, uint64_t seed) {
        py::list out;
        for (const auto &s : page_curve(t, sizes, count, seed).sizes) out.append(size_stats_dict(s));
        return out;
    }, py::arg("tableau"), py::arg("sizes"), py::arg("count"), py::arg("seed"),
       "Entropy statistics of random subsets, one dict per size.");
    m.def("rmt_rank_prob", &rmt_rank_prob, py::arg("n"), py::arg("a"), py::arg("eps"));
    m.def("rmt_mean_deficit", &rmt_mean_deficit, py::arg("n"), py::arg("a"));
    m.def("rmt_mean_deficit_sum", &rmt_mean_deficit_sum, py::arg("n"), py::arg("a"));
    m.def("area_law_coefficients", &area_law_coefficients, py::arg("a"), py::arg("n"),
          py::arg("weighting") = AreaLawWeighting::AsPrinted);
    m.def("area_law_mean_entropy", [](std::vector<double> s, size_t a, size_t n, AreaLawWeighting w) {
        return area_law_mean_entropy(s, a, n, w);
    }, py::arg("s_of_r"), py::arg("a"), py::arg("n"), py::arg("weighting") = AreaLawWeighting::AsPrinted);
    m.def("consecutive_entropy_profile", &consecutive_entropy_profile, py::arg("tableau"), py::arg("start"));

    py::class_<ChannelState>(m, "ChannelState")
        .def_readonly("n", &ChannelState::n)
        .def_readonly("state", &ChannelState::state)
        .def("reference", &ChannelState::reference);
    m.def("channel_state", &channel_state, py::arg("program"), py::arg("upto") = py::none());
    m.def("mutual_info_sample", [](const ChannelState &cs, std::vector<size_t> alice, std::vector<size_t> outputs) {
        auto s = mutual_info_sample(cs, alice, outputs);
        py::dict d;
        d["direct"] = s.direct;
        d["complement"] = s.complement;
        d["a_rbar"] = s.a_rbar;
        return d;
    });
    m.def("mutual_info_A_RB", [](const ChannelState &cs, size_t a, size_t r, size_t samples, uint64_t seed,
                                 Placement placement) {
        return mutual_info_dict(mutual_info_A_RB(cs, a, r, samples, seed, placement));
    }, py::arg("cs"), py::arg("size_a"), py::arg("size_r"), py::arg("samples"), py::arg("seed"),
       py::arg("placement") = Placement::Contiguous);
    m.def("min_R_for_saturation", [](const ChannelState &cs, size_t a, size_t samples, uint64_t seed,
                                     Placement placement, double threshold) {
        auto s = min_R_for_saturation(cs, a, samples, seed, placement, threshold);
        py::dict d;
        d["size_r"] = s.size_r;
        d["saturated"] = s.saturated;
        py::list curve;
        for (const auto &c : s.curve) curve.append(mutual_info_dict(c));
        d["curve"] = curve;
        return d;
    }, py::arg("cs"), py::arg("size_a"), py::arg("samples"), py::arg("seed"),
       py::arg("placement") = Placement::Contiguous, py::arg("threshold") = 0.95);

    m.def("run_decoder", [](const CircuitProgram &program, size_t trajectories, uint64_t seed, size_t size_a,
                            std::optional<size_t> depth, double p, NoiseModel noise, bool crosstalk) {
        DecoderSetup setup;
        setup.program = program;
        setup.size_a = size_a;
        setup.depth = depth;
        setup.p = p;
        setup.noise = noise;
        setup.crosstalk = crosstalk;
        std::vector<TrajectoryStats> stats;
        {
            py::gil_scoped_release release;
            stats = run_decoder(setup, trajectories, seed);
        }
        py::list out;
        for (const auto &s : stats) out.append(trajectory_dict(s));
        return out;
    }, py::arg("program"), py::arg("trajectories"), py::arg("seed"), py::arg("size_a") = 1,
       py::arg("depth") = py::none(), py::arg("p") = 0.0, py::arg("noise") = NoiseModel::Depolarizing,
       py::arg("crosstalk") = true, "Decoder statistics for |R| = 0..N, one dict each.");

    m.def("run_command", &run_command_py, py::arg("command"), py::arg("seed"), py::arg("n") = 0, py::arg("m") = 0,
          py::arg("depths") = std::vector<size_t>{}, py::arg("circuit") = "es",
          py::arg("sizes") = std::vector<size_t>{}, py::arg("samples") = 20000, py::arg("trajectories") = 60000,
          py::arg("p") = std::vector<double>{0.0}, py::arg("crosstalk") = true, py::arg("basis") = Basis::Z,
          py::arg("placement") = Placement::Contiguous, py::arg("noise") = NoiseModel::Depolarizing,
          py::arg("format") = "csv", "Runs a command-line experiment and returns its rendered table.");
}

# Copyright 2026 The fastscramble Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import csv
import io
import json
import math

import pytest

import fastscramble as fs


def test_faro_oracles():
    assert fs.faro_shuffle(16)[3] == 9
    assert fs.inverse_permutation(fs.faro_shuffle(8))[4] == 1


def test_hypercube_circuit_matches_graph_state():
    t = fs.StabilizerTableau.polarized(8, fs.Basis.X)
    t.execute(fs.build_hypercube_circuit(3))
    g = fs.hypercube(3)
    for mask in range(256):
        subset = [q for q in range(8) if mask >> q & 1]
        assert t.entropy_bits(subset) == fs.graph_entropy_bits(g, subset)


def test_program_json_round_trip():
    p = fs.build_scrambling_circuit(3)
    assert p.interaction_layers == 6
    assert fs.CircuitProgram.from_json(p.to_json()) == p
    assert p.truncated(2).interaction_layers == 2
    with pytest.raises(ValueError):
        fs.CircuitProgram.from_json("{}")


def test_page_curve_near_random_matrix_theory():
    t = fs.StabilizerTableau.polarized(32, fs.Basis.Z)
    t.execute(fs.build_scrambling_circuit(5))
    (row,) = fs.page_curve(t, [8], 2000, seed=1)
    assert row["samples"] == 2000
    assert row["mean_deficit_bits"] < 0.01
    assert fs.rmt_mean_deficit(32, 8) == pytest.approx(2.0 ** (16 - 32) * math.log(2))


def test_tableau_and_dense_agree():
    prog = fs.build_random_all_to_all(6, 4, seed=3)
    t = fs.StabilizerTableau.polarized(6)
    t.execute(prog)
    psi = fs.DenseState(6)
    psi.execute(prog)
    for mask in range(1, 63):
        subset = [q for q in range(6) if mask >> q & 1]
        assert psi.renyi2_entropy_bits(subset) == pytest.approx(t.entropy_bits(subset), abs=1e-9)


def test_mutual_information_identity():
    cs = fs.channel_state(fs.build_scrambling_circuit(4))
    s = fs.mutual_info_sample(cs, [0, 1], [2, 5, 7])
    assert s["direct"] == s["complement"]
    assert s["direct"] + s["a_rbar"] == 4
    sat = fs.min_R_for_saturation(cs, 1, 500, seed=2, placement=fs.Placement.RANDOM)
    assert sat["saturated"] and sat["size_r"] <= 3


def test_decoder_noiseless_delta_is_one():
    stats = fs.run_decoder(fs.build_scrambling_circuit(2), 100, seed=4, crosstalk=False)
    assert len(stats) == 5
    for row in stats:
        assert row["delta"] == pytest.approx(1.0, abs=1e-12)


def test_area_law_weightings():
    linear = [float(r) for r in range(1, 6)]
    assert fs.area_law_mean_entropy(linear, 5, 64, fs.AreaLawWeighting.PARTITION_WEIGHTS) == pytest.approx(5.0)
    assert fs.area_law_mean_entropy(linear, 5, 64) < 5.0


def test_run_command_csv_and_json():
    text = fs.run_command("rmt", seed=7, n=16, samples=200)
    rows = list(csv.reader(line for line in io.StringIO(text) if not line.startswith("#")))
    assert rows[0][0] == "experiment"
    assert len(rows) > 1
    doc = json.loads(fs.run_command("rmt", seed=7, n=16, samples=200, format="json"))
    assert doc["config"]["seed"] == 7
    assert len(doc["rows"]) == len(rows) - 1
    with pytest.raises(ValueError):
        fs.run_command("decoder", seed=1, n=10)


def test_resource_limit():
    with pytest.raises(fs.ResourceLimitError):
        fs.DenseState(40)

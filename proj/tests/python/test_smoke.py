# Copyright 2026 The qdc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import qdc


def test_preset_readout():
    train = qdc.presets.training_set()
    out = qdc.classify(train, qdc.presets.x_tilde_prime())
    assert out.p_acc == pytest.approx(0.729, abs=1e-3)
    assert out.p_class_minus == pytest.approx(0.629, abs=1e-3)
    assert out.predicted == -1
    assert out.shots is None


def test_sampling_and_state():
    train = qdc.presets.training_set()
    state = qdc.prepare_state(train, qdc.presets.x_tilde_double_prime())
    assert state.n_qubits == 4
    assert sum(abs(a) ** 2 for a in state.amplitudes) == pytest.approx(1.0)
    out = qdc.interfere_and_sample(state, 8192, 7)
    assert out.shots == 8192
    assert abs(out.p_acc - 0.913) < 0.02


def test_classical_rule_and_kernel():
    train = qdc.TrainingSet([[0.0, 1.0], [0.0, -1.0]], [-1, 1])
    assert qdc.classical_classify(train, [1.0, 0.0]).label == 1
    assert qdc.kernel([1.0, 0.0], [-1.0, 0.0], 1) == pytest.approx(0.0)


def test_errors_map_to_python():
    with pytest.raises(qdc.NormalizationError):
        qdc.TrainingSet([[1.0, 1.0]], [1])
    with pytest.raises(qdc.QdcError):
        qdc.iris((1, 1))
    train = qdc.TrainingSet([[1.0, 0.0]], [-1])
    with pytest.raises(qdc.ImpossibleBranchError):
        qdc.classify(train, [-1.0, 0.0])


def test_circuit_and_qasm():
    c = qdc.experiment_circuit(qdc.presets.x_tilde_prime(), qdc.presets.x0(),
                               qdc.presets.x1())
    assert len(c) <= 80
    text = qdc.export_qasm(c)
    assert text.startswith("OPENQASM 2.0;")
    assert qdc.parse_qasm(text) == c


def test_stats():
    assert qdc.shots_for_error(0.01) == 16641
    assert qdc.wald(4096, 8192).worst_case == pytest.approx(
        2.58 / (2 * math.sqrt(8192)))
    assert qdc.wilson(0, 10).p_hat > 0


def test_benchmark_and_cli():
    report = qdc.run_benchmark(qdc.iris((1, 2)), 10, seed=3)
    assert report.mean_error <= 0.05
    assert len(report.errors) == 10
    code, out, _ = qdc.cli(["shots", "--eps", "0.01", "--format", "csv"])
    assert code == 0
    assert ",16641," in out

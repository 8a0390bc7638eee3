// Copyright 2026 The qdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qdc/circuit.hpp"
#include "qdc/classifier.hpp"
#include "qdc/cli.hpp"
#include "qdc/data.hpp"
#include "qdc/encoding.hpp"
#include "qdc/error.hpp"
#include "qdc/statevector.hpp"
#include "qdc/stats.hpp"

namespace py = pybind11;

namespace qdc {
namespace {

std::vector<Complex> amplitudes_of(const QuantumState& s) {
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

Circuit experiment_circuit(const FeatureVector& x_tilde, const FeatureVector& x0,
                           const FeatureVector& x1, bool interfere,
                           bool for_device) {
  Circuit c = build_experiment_circuit(x_tilde, x0, x1);
  if (interfere) c = with_interference(std::move(c));
  if (for_device) c = decompose(c, star_graph_ibm5(), experiment_assignment());
  return c;
}

py::tuple cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"qdc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace
}  // namespace qdc

PYBIND11_MODULE(_core, m) {
  using namespace qdc;
  m.doc() = "Distance-based quantum classifier core";
  m.attr("__version__") = version_string();

  auto base = py::register_exception<Error>(m, "QdcError", PyExc_RuntimeError);
  py::register_exception<CapacityError>(m, "CapacityError", base);
  py::register_exception<IndexError>(m, "QubitIndexError", base);
  py::register_exception<ArgumentError>(m, "ArgumentError", base);
  py::register_exception<NormalizationError>(m, "NormalizationError", base);
  py::register_exception<ZeroVectorError>(m, "ZeroVectorError", base);
  py::register_exception<DegenerateFeatureError>(m, "DegenerateFeatureError",
                                                 base);
  py::register_exception<ImpossibleBranchError>(m, "ImpossibleBranchError",
                                                base);
  py::register_exception<UnsupportedGateError>(m, "UnsupportedGateError", base);
  py::register_exception<AssignmentError>(m, "AssignmentError", base);
  py::register_exception<QasmParseError>(m, "QasmParseError", base);
  py::register_exception<EstimationFailedError>(m, "EstimationFailedError",
                                                base);

  py::class_<RegisterLayout>(m, "RegisterLayout")
      .def_readonly("m_bits", &RegisterLayout::m_bits)
      .def_readonly("i_bits", &RegisterLayout::i_bits)
      .def("total_qubits", &RegisterLayout::total_qubits)
      .def("ancilla_qubit", &RegisterLayout::ancilla_qubit);

  py::class_<QuantumState>(m, "QuantumState")
      .def_property_readonly("n_qubits", &QuantumState::n_qubits)
      .def_property_readonly("amplitudes", &amplitudes_of)
      .def_property_readonly("layout", &QuantumState::layout)
      .def("norm_squared", &QuantumState::norm_squared);

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("n_qubits", &Circuit::n_qubits)
      .def("__len__", &Circuit::size)
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; })
      .def("gate_names", [](const Circuit& c) {
        std::vector<std::string> names;
        for (const auto& op : c.ops()) names.emplace_back(gate_name(op.kind));
        return names;
      });

  py::class_<TrainingSet>(m, "TrainingSet")
      .def(py::init([](std::vector<FeatureVector> v, std::vector<int> y) {
             TrainingSet t{std::move(v), std::move(y)};
             t.validate();
             return t;
           }),
           py::arg("vectors"), py::arg("labels"))
      .def_readonly("vectors", &TrainingSet::vectors)
      .def_readonly("labels", &TrainingSet::labels);

  py::class_<ClassificationOutcome>(m, "ClassificationOutcome")
      .def_readonly("p_acc", &ClassificationOutcome::p_acc)
      .def_readonly("p_class_minus", &ClassificationOutcome::p_class_minus)
      .def_readonly("p_class_plus", &ClassificationOutcome::p_class_plus)
      .def_readonly("predicted", &ClassificationOutcome::predicted)
      .def_readonly("shots", &ClassificationOutcome::shots)
      .def_readonly("accepted", &ClassificationOutcome::accepted);

  py::class_<ClassicalResult>(m, "ClassicalResult")
      .def_readonly("score", &ClassicalResult::score)
      .def_readonly("label", &ClassicalResult::label);

  m.def("prepare_state",
        [](const TrainingSet& t, const FeatureVector& x) {
          return prepare_state(t, x);
        },
        py::arg("train"), py::arg("x_tilde"));
  m.def("interfere_and_read", &interfere_and_read, py::arg("state"));
  m.def("interfere_and_sample", &interfere_and_sample, py::arg("state"),
        py::arg("shots"), py::arg("seed"));
  m.def("classify",
        [](const TrainingSet& t, const FeatureVector& x) { return classify(t, x); },
        py::arg("train"), py::arg("x_tilde"));
  m.def("kernel",
        [](const FeatureVector& a, const FeatureVector& b, std::size_t m_count) {
          return kernel(a, b, m_count);
        },
        py::arg("x"), py::arg("x_prime"), py::arg("m"));
  m.def("classical_classify",
        [](const TrainingSet& t, const FeatureVector& x) {
          return classical_classify(t, x);
        },
        py::arg("train"), py::arg("x_tilde"));

  auto p = m.def_submodule("presets", "Iris vectors of the two-qubit experiment");
  p.def("x0", &presets::x0);
  p.def("x1", &presets::x1);
  p.def("x_tilde_prime", &presets::x_tilde_prime);
  p.def("x_tilde_double_prime", &presets::x_tilde_double_prime);
  p.def("training_set", &presets::experiment_training_set);

  m.def("experiment_circuit", &experiment_circuit, py::arg("x_tilde"),
        py::arg("x0"), py::arg("x1"), py::arg("interfere") = true,
        py::arg("for_device") = true);
  m.def("simulate", &simulate, py::arg("circuit"));
  m.def("export_qasm", &export_qasm, py::arg("circuit"));
  m.def("parse_qasm", [](const std::string& s) { return parse_qasm(s); },
        py::arg("text"));

  py::enum_<IntervalMethod>(m, "IntervalMethod")
      .value("Wald", IntervalMethod::Wald)
      .value("Wilson", IntervalMethod::Wilson);
  py::class_<IntervalEstimate>(m, "IntervalEstimate")
      .def_readonly("p_hat", &IntervalEstimate::p_hat)
      .def_readonly("max_error", &IntervalEstimate::max_error)
      .def_readonly("worst_case", &IntervalEstimate::worst_case)
      .def_readonly("degenerate", &IntervalEstimate::degenerate);
  m.def("wald", &wald, py::arg("successes"), py::arg("R"), py::arg("z") = kZ99);
  m.def("wilson", &wilson, py::arg("successes"), py::arg("R"),
        py::arg("z") = kZ99);
  m.def("shots_for_error", &shots_for_error, py::arg("epsilon"),
        py::arg("z") = kZ99, py::arg("method") = IntervalMethod::Wald);

  py::class_<LabeledDataset>(m, "LabeledDataset")
      .def_readonly("rows", &LabeledDataset::rows)
      .def_readonly("labels", &LabeledDataset::labels)
      .def_readonly("name", &LabeledDataset::name)
      .def("__len__", &LabeledDataset::size);
  py::class_<CirclesParams>(m, "CirclesParams")
      .def(py::init<>())
      .def_readwrite("n_per_class", &CirclesParams::n_per_class)
      .def_readwrite("radius_ratio", &CirclesParams::radius_ratio)
      .def_readwrite("noise_std", &CirclesParams::noise_std);
  py::class_<BenchmarkReport>(m, "BenchmarkReport")
      .def_readonly("name", &BenchmarkReport::name)
      .def_readonly("reps", &BenchmarkReport::reps)
      .def_readonly("mean_error", &BenchmarkReport::mean_error)
      .def_readonly("variance", &BenchmarkReport::variance)
      .def_readonly("mean_p_acc", &BenchmarkReport::mean_p_acc)
      .def_readonly("impossible_count", &BenchmarkReport::impossible_count)
      .def_readonly("errors", &BenchmarkReport::errors);

  m.def("iris", &iris, py::arg("classes"),
        py::arg("features") = std::vector<std::size_t>{0, 1, 2, 3});
  m.def("circles", &circles, py::arg("params") = CirclesParams{},
        py::arg("seed") = kDefaultSeed);
  m.def("split", &split, py::arg("dataset"), py::arg("train_fraction"),
        py::arg("seed"));
  m.def(
      "run_benchmark",
      [](const LabeledDataset& d, std::size_t reps, int copies,
         std::uint64_t seed, unsigned threads) {
        BenchmarkOptions o;
        o.feature_map_copies = copies;
        o.seed = seed;
        o.threads = threads;
        py::gil_scoped_release release;
        return run_benchmark(d, reps, o);
      },
      py::arg("dataset"), py::arg("reps"), py::arg("feature_map_copies") = 1,
      py::arg("seed") = kDefaultSeed, py::arg("threads") = 1);

  m.def("cli", &cli, py::arg("args"),
        "Runs the command-line tool in-process; returns (exit code, stdout, "
        "stderr).");
}

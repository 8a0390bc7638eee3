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

#include "qdc/classifier.hpp"

#include <array>
#include <cmath>
#include <string>

#include "qdc/encoding.hpp"
#include "qdc/error.hpp"

namespace qdc {
namespace {

constexpr double kUnitTolerance = 1e-10;

void require_unit(std::span<const double> v, const std::string& what) {
  const double norm = euclidean_norm(v);
  if (!(std::abs(norm - 1.0) <= kUnitTolerance)) {
    throw NormalizationError(what + " is not unit norm (|v| = " +
                             std::to_string(norm) + ")");
  }
}

void require_input(const TrainingSet& train, std::span<const double> x_tilde) {
  train.validate();
  if (x_tilde.size() != train.dimension()) {
    throw ArgumentError("input has dimension " +
                        std::to_string(x_tilde.size()) +
                        ", training vectors have " +
                        std::to_string(train.dimension()));
  }
  require_unit(x_tilde, "input vector");
}

FeatureVector unit(std::array<double, 2> v) {
  return normalize(std::span<const double>(v.data(), v.size()));
}

}  // namespace

void TrainingSet::validate() const {
  if (vectors.empty()) throw ArgumentError("training set is empty");
  if (vectors.size() != labels.size()) {
    throw ArgumentError("training set has " + std::to_string(vectors.size()) +
                        " vectors but " + std::to_string(labels.size()) +
                        " labels");
  }
  const std::size_t dim = dimension();
  if (dim == 0) throw ArgumentError("training vectors are empty");
  for (std::size_t m = 0; m < vectors.size(); ++m) {
    if (vectors[m].size() != dim) {
      throw ArgumentError("training vector " + std::to_string(m) +
                          " has dimension " +
                          std::to_string(vectors[m].size()) + ", expected " +
                          std::to_string(dim));
    }
    if (labels[m] != -1 && labels[m] != 1) {
      throw ArgumentError("label " + std::to_string(labels[m]) +
                          " of training vector " + std::to_string(m) +
                          " is not -1 or +1");
    }
    require_unit(vectors[m], "training vector " + std::to_string(m));
  }
}

TrainingSet TrainingSet::from_dataset(const LabeledDataset& dataset) {
  return TrainingSet{dataset.rows, dataset.labels};
}

int label_from_probability(double p_class_minus) {
  return p_class_minus > 0.5 ? -1 : 1;
}

QuantumState prepare_state(const TrainingSet& train,
                           std::span<const double> x_tilde) {
  require_input(train, x_tilde);
  const std::size_t m_count = train.size();
  const std::size_t dim = train.dimension();
  const auto layout = RegisterLayout::for_problem(m_count, dim);
  const std::size_t n = layout.total_qubits();
  if (n > kMaxQubits) {
    throw CapacityError("M = " + std::to_string(m_count) + ", N = " +
                        std::to_string(dim) + " needs " + std::to_string(n) +
                        " qubits, limit is " + std::to_string(kMaxQubits));
  }

  std::vector<Complex> amps(std::size_t{1} << n, Complex{0.0, 0.0});
  const double w = 1.0 / std::sqrt(2.0 * static_cast<double>(m_count));
  for (std::size_t m = 0; m < m_count; ++m) {
    const unsigned c = train.labels[m] == -1 ? 0U : 1U;
    for (std::size_t i = 0; i < dim; ++i) {
      amps[layout.basis_index(m, 0, i, c)] = w * x_tilde[i];
      amps[layout.basis_index(m, 1, i, c)] = w * train.vectors[m][i];
    }
  }
  auto state = QuantumState::from_amplitudes(std::move(amps));
  state.set_layout(layout);
  return state;
}

ClassificationOutcome interfere_and_read(const QuantumState& state) {
  if (!state.layout()) {
    throw ArgumentError("state has no classifier register layout");
  }
  const auto& layout = *state.layout();
  QuantumState work = state;
  apply_gate(work, gates::h(layout.ancilla_qubit()));
  const auto kept = postselect(work, layout.ancilla_qubit(), 0);
  const auto probs = qubit_probabilities(kept.state, layout.class_qubit());

  ClassificationOutcome out;
  out.p_acc = kept.accept_probability;
  out.p_class_minus = probs.p0;
  out.p_class_plus = probs.p1;
  out.predicted = label_from_probability(probs.p0);
  return out;
}

ClassificationOutcome interfere_and_sample(const QuantumState& state,
                                           std::uint64_t shots,
                                           std::uint64_t seed) {
  if (!state.layout()) {
    throw ArgumentError("state has no classifier register layout");
  }
  if (shots < 1) throw ArgumentError("shots must be >= 1");
  const auto& layout = *state.layout();
  QuantumState work = state;
  apply_gate(work, gates::h(layout.ancilla_qubit()));

  const std::array<std::size_t, 2> qubits{layout.class_qubit(),
                                          layout.ancilla_qubit()};
  const auto hist = sample_shots(work, qubits, shots, seed);
  auto count = [&](const char* key) -> std::uint64_t {
    auto it = hist.find(key);
    return it == hist.end() ? 0 : it->second;
  };
  // Keys read "<ancilla><class>".
  const std::uint64_t minus = count("00");
  const std::uint64_t plus = count("01");
  const std::uint64_t accepted = minus + plus;
  if (accepted == 0) {
    throw EstimationFailedError(
        "no shot accepted out of " + std::to_string(shots), accepted);
  }

  ClassificationOutcome out;
  out.p_acc = static_cast<double>(accepted) / static_cast<double>(shots);
  out.p_class_minus =
      static_cast<double>(minus) / static_cast<double>(accepted);
  out.p_class_plus = static_cast<double>(plus) / static_cast<double>(accepted);
  out.predicted = label_from_probability(out.p_class_minus);
  out.shots = shots;
  out.accepted = accepted;
  return out;
}

ClassificationOutcome classify(const TrainingSet& train,
                               std::span<const double> x_tilde) {
  return interfere_and_read(prepare_state(train, x_tilde));
}

double kernel(std::span<const double> x, std::span<const double> x_prime,
              std::size_t m_count) {
  if (x.size() != x_prime.size()) {
    throw ArgumentError("kernel arguments have dimensions " +
                        std::to_string(x.size()) + " and " +
                        std::to_string(x_prime.size()));
  }
  if (m_count < 1) throw ArgumentError("M must be >= 1");
  double d2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - x_prime[i];
    d2 += d * d;
  }
  return 1.0 - d2 / (4.0 * static_cast<double>(m_count));
}

ClassicalResult classical_classify(const TrainingSet& train,
                                   std::span<const double> x_tilde) {
  require_input(train, x_tilde);
  ClassicalResult out;
  for (std::size_t m = 0; m < train.size(); ++m) {
    out.score += train.labels[m] * kernel(x_tilde, train.vectors[m], train.size());
  }
  out.label = out.score < 0.0 ? -1 : 1;
  return out;
}

namespace presets {

FeatureVector x0() { return unit({0.0, 1.0}); }
FeatureVector x1() { return unit({0.789, 0.615}); }
FeatureVector x_tilde_prime() { return unit({-0.549, 0.836}); }
FeatureVector x_tilde_double_prime() { return unit({0.053, 0.999}); }

TrainingSet experiment_training_set() { return TrainingSet{{x0(), x1()}, {-1, 1}}; }

}  // namespace presets

}  // namespace qdc

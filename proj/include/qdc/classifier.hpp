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
/**
 * @file
 * Distance-based quantum classifier: state preparation, interference and
 * postselection readout, and the classical kernel rule it implements.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qdc/dataset.hpp"
#include "qdc/statevector.hpp"

namespace qdc {

/// M unit vectors of common dimension with labels in {-1, +1}.
struct TrainingSet {
  std::vector<FeatureVector> vectors;
  std::vector<int> labels;

  std::size_t size() const { return vectors.size(); }
  std::size_t dimension() const {
    return vectors.empty() ? 0 : vectors.front().size();
  }

  /**
   * Throws ArgumentError for an empty set, mismatched lengths or dimensions
   * and labels outside {-1, +1}; NormalizationError for any vector whose norm
   * differs from 1 by more than 1e-10.
   */
  void validate() const;

  /// Rows and labels of an already preprocessed dataset.
  static TrainingSet from_dataset(const LabeledDataset& dataset);

  bool operator==(const TrainingSet&) const = default;
};

struct ClassificationOutcome {
  double p_acc = 0.0;
  /// Probability of class qubit 0 (label -1) after postselection.
  double p_class_minus = 0.0;
  double p_class_plus = 0.0;
  int predicted = 1;
  /// Unset for analytic readout.
  std::optional<std::uint64_t> shots;
  std::uint64_t accepted = 0;
};

/// -1 iff p_class_minus > 0.5; an exact tie predicts +1.
int label_from_probability(double p_class_minus);

/**
 * Amplitude-encodes the training set and the new input in the register
 * |m>|a>|i>|c>.
 *
 * Branch a=0 holds x_tilde and a=1 holds x^m, each with weight 1/sqrt(2M);
 * the class qubit is 0 for label -1. Index branches m >= M carry zero
 * amplitude. The returned state carries its RegisterLayout.
 */
QuantumState prepare_state(const TrainingSet& train,
                           std::span<const double> x_tilde);

/**
 * Hadamard on the ancilla, postselect ancilla = 0, read the class qubit
 * exactly.
 *
 * Needs a state with a layout (ArgumentError otherwise); throws
 * ImpossibleBranchError when p_acc <= 1e-15.
 */
ClassificationOutcome interfere_and_read(const QuantumState& state);

/**
 * Shot-sampled version of interfere_and_read.
 *
 * Each shot measures the ancilla and, when it reads 0, the class qubit.
 * p_acc is accepted / shots and the class probabilities come from accepted
 * shots only. Throws EstimationFailedError when no shot is accepted.
 */
ClassificationOutcome interfere_and_sample(const QuantumState& state,
                                           std::uint64_t shots,
                                           std::uint64_t seed);

/// prepare_state followed by interfere_and_read.
ClassificationOutcome classify(const TrainingSet& train,
                               std::span<const double> x_tilde);

/// 1 - |x - x'|^2 / (4M).
double kernel(std::span<const double> x, std::span<const double> x_prime,
              std::size_t m_count);

struct ClassicalResult {
  double score = 0.0;
  int label = 1;
};

/// score = sum_m y^m kernel(x_tilde, x^m, M); label -1 iff score < 0.
ClassicalResult classical_classify(const TrainingSet& train,
                                   std::span<const double> x_tilde);

/// The two-feature Iris vectors of the hardware experiment, normalised.
namespace presets {

FeatureVector x0();
FeatureVector x1();
FeatureVector x_tilde_prime();
FeatureVector x_tilde_double_prime();

/// {(x0, -1), (x1, +1)}.
TrainingSet experiment_training_set();

}  // namespace presets

}  // namespace qdc

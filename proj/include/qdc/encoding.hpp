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

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "qdc/dataset.hpp"

namespace qdc {

double euclidean_norm(std::span<const double> v);

/// Fitted preprocessing parameters, reusable on held-out points.
struct PreprocessingReport {
  int feature_map_copies = 1;
  bool standardized = false;
  /// Per-feature statistics (after the feature map), population std.
  std::vector<double> means;
  std::vector<double> stds;
  bool normalized = false;
  std::size_t original_dimension = 0;
  std::size_t padded_dimension = 0;

  /// Applies the fitted pipeline to one row.
  FeatureVector transform(std::span<const double> row) const;

  bool operator==(const PreprocessingReport&) const = default;
};

/**
 * Standardises every column to zero mean and unit population variance.
 *
 * Needs at least two rows. A column whose standard deviation is below 1e-12
 * raises DegenerateFeatureError.
 */
std::pair<LabeledDataset, PreprocessingReport> standardize(
    const LabeledDataset& dataset);

/// v / |v|; ZeroVectorError when |v| <= 1e-12.
FeatureVector normalize(std::span<const double> v);

/// Zero-pads to the next power of two (a 1-vector stays as is).
FeatureVector pad_to_power_of_two(std::span<const double> v);

/// k-fold Kronecker power, no norm requirement. Entry (i1..ik) sits at
/// i1 N^(k-1) + ... + ik.
FeatureVector kronecker_power(std::span<const double> v, int copies);

/// Kronecker power of a unit vector (NormalizationError otherwise).
FeatureVector tensor_copy_map(std::span<const double> v, int copies);

struct PipelineOptions {
  int feature_map_copies = 1;
  bool standardize = true;
  bool normalize = true;
  bool pad = true;
};

/**
 * Feature map -> standardise -> normalise -> pad, fitted on `train`.
 *
 * The feature map is the raw Kronecker power of each row. Use
 * report.transform() on held-out rows.
 */
std::pair<LabeledDataset, PreprocessingReport> pipeline(
    const LabeledDataset& train, const PipelineOptions& options);

}  // namespace qdc

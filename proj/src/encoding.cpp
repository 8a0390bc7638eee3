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

#include "qdc/encoding.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qdc/error.hpp"

namespace qdc {
namespace {

constexpr double kZeroNorm = 1e-12;
constexpr double kDegenerateStd = 1e-12;
constexpr double kUnitTolerance = 1e-10;

std::vector<double> standardize_row(std::span<const double> row,
                                    const std::vector<double>& means,
                                    const std::vector<double>& stds) {
  if (row.size() != means.size()) {
    throw ArgumentError("row has " + std::to_string(row.size()) +
                        " features, fitted on " +
                        std::to_string(means.size()));
  }
  std::vector<double> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    out[j] = (row[j] - means[j]) / stds[j];
  }
  return out;
}

}  // namespace

double euclidean_norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

std::pair<LabeledDataset, PreprocessingReport> standardize(
    const LabeledDataset& dataset) {
  dataset.validate();
  const std::size_t n = dataset.size();
  if (n < 2) throw ArgumentError("standardisation needs at least 2 rows");
  const std::size_t dim = dataset.dimension();

  PreprocessingReport report;
  report.standardized = true;
  report.original_dimension = dim;
  report.padded_dimension = dim;
  report.means.assign(dim, 0.0);
  report.stds.assign(dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) {
    double mean = 0.0;
    for (const auto& row : dataset.rows) mean += row[j];
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (const auto& row : dataset.rows) {
      const double d = row[j] - mean;
      var += d * d;
    }
    const double sd = std::sqrt(var / static_cast<double>(n));
    if (!(sd > kDegenerateStd)) {
      throw DegenerateFeatureError("feature " + std::to_string(j) +
                                   " is constant (std = " +
                                   std::to_string(sd) + ")");
    }
    report.means[j] = mean;
    report.stds[j] = sd;
  }

  LabeledDataset out = dataset;
  for (auto& row : out.rows) row = standardize_row(row, report.means, report.stds);
  out.provenance.standardized = true;
  return {std::move(out), std::move(report)};
}

FeatureVector normalize(std::span<const double> v) {
  const double norm = euclidean_norm(v);
  if (!(norm > kZeroNorm)) {
    throw ZeroVectorError("cannot normalise a vector of norm " +
                          std::to_string(norm));
  }
  FeatureVector out(v.begin(), v.end());
  for (double& x : out) x /= norm;
  return out;
}

FeatureVector pad_to_power_of_two(std::span<const double> v) {
  if (v.empty()) throw ArgumentError("cannot pad an empty vector");
  FeatureVector out(v.begin(), v.end());
  out.resize(std::bit_ceil(v.size()), 0.0);
  return out;
}

FeatureVector kronecker_power(std::span<const double> v, int copies) {
  if (copies < 1) throw ArgumentError("copies must be >= 1");
  FeatureVector out(v.begin(), v.end());
  for (int k = 1; k < copies; ++k) {
    FeatureVector next;
    next.reserve(out.size() * v.size());
    for (double a : out) {
      for (double b : v) next.push_back(a * b);
    }
    out = std::move(next);
  }
  return out;
}

FeatureVector tensor_copy_map(std::span<const double> v, int copies) {
  const double norm = euclidean_norm(v);
  if (std::abs(norm - 1.0) > kUnitTolerance) {
    throw NormalizationError("tensor-copy map needs a unit vector (|v| = " +
                             std::to_string(norm) + ")");
  }
  return kronecker_power(v, copies);
}

FeatureVector PreprocessingReport::transform(std::span<const double> row) const {
  if (row.size() != original_dimension) {
    throw ArgumentError("row has " + std::to_string(row.size()) +
                        " features, pipeline fitted on " +
                        std::to_string(original_dimension));
  }
  FeatureVector out = kronecker_power(row, feature_map_copies);
  if (standardized) out = standardize_row(out, means, stds);
  if (normalized) out = normalize(out);
  if (padded_dimension > out.size()) out.resize(padded_dimension, 0.0);
  return out;
}

std::pair<LabeledDataset, PreprocessingReport> pipeline(
    const LabeledDataset& train, const PipelineOptions& options) {
  train.validate();
  if (options.feature_map_copies < 1) {
    throw ArgumentError("feature_map_copies must be >= 1");
  }
  LabeledDataset data = train;
  for (auto& row : data.rows) row = kronecker_power(row, options.feature_map_copies);
  data.provenance.feature_map_copies = options.feature_map_copies;

  PreprocessingReport report;
  if (options.standardize) {
    auto fitted = standardize(data);
    data = std::move(fitted.first);
    report = std::move(fitted.second);
  }
  report.feature_map_copies = options.feature_map_copies;
  report.original_dimension = train.dimension();
  report.padded_dimension = data.dimension();

  if (options.normalize) {
    for (auto& row : data.rows) row = normalize(row);
    data.provenance.normalized = true;
    report.normalized = true;
  }
  if (options.pad && data.dimension() > 0) {
    const std::size_t padded = std::bit_ceil(data.dimension());
    if (padded != data.dimension()) {
      for (auto& row : data.rows) row = pad_to_power_of_two(row);
      data.provenance.padded = true;
    }
    report.padded_dimension = padded;
  }
  return {std::move(data), std::move(report)};
}

}  // namespace qdc

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
 * Embedded Iris data, the circles generator, train/test splitting and the
 * repeated-split benchmark harness.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdc/dataset.hpp"

namespace qdc {

/// FNV-1a 64-bit hash.
std::uint64_t fnv1a64(std::string_view bytes);

inline constexpr std::uint64_t kIrisChecksum = 0xbe3db760dd5681aaULL;

/// The embedded CSV, byte for byte.
std::string_view iris_csv();

struct IrisSample {
  FeatureVector features;
  int species = 0;  // 1, 2 or 3
};

/// All 150 samples in file order. Throws Error if the checksum does not match.
const std::vector<IrisSample>& iris_samples();

/**
 * Two-class Iris subset, 50 rows per class in file order.
 *
 * The first listed class gets label -1 and the second +1. `features` selects
 * columns from {0: sepal length, 1: sepal width, 2: petal length,
 * 3: petal width}.
 */
LabeledDataset iris(std::pair<int, int> classes,
                    const std::vector<std::size_t>& features = {0, 1, 2, 3});

struct CirclesParams {
  std::size_t n_per_class = 50;
  double radius_ratio = 0.5;
  double noise_std = 0.05;
};

/**
 * Two concentric noisy circles in the plane: radius 1 is label -1 (first
 * n_per_class rows), radius `radius_ratio` is label +1.
 */
LabeledDataset circles(const CirclesParams& params, std::uint64_t seed);

/// Seeded shuffle, first floor(train_fraction * n) rows go to train.
std::pair<LabeledDataset, LabeledDataset> split(const LabeledDataset& dataset,
                                                double train_fraction,
                                                std::uint64_t seed);

struct BenchmarkOptions {
  int feature_map_copies = 1;
  double train_fraction = 0.8;
  std::uint64_t seed = 2017;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;

  bool operator==(const BenchmarkOptions&) const = default;
};

struct BenchmarkReport {
  std::string name;
  std::size_t reps = 0;
  double mean_error = 0.0;
  /// Population variance of the per-repetition errors.
  double variance = 0.0;
  double mean_p_acc = 0.0;
  BenchmarkOptions options;
  /// Test points whose postselection branch was empty (scored as errors).
  std::size_t impossible_count = 0;
  std::vector<double> errors;
  std::vector<double> p_acc;

  bool operator==(const BenchmarkReport&) const = default;
};

/**
 * Repeats: split with derive_seed(seed, r), fit the preprocessing pipeline on
 * the training part, classify every test point through the analytic quantum
 * readout. The thread count in `options` does not change the report.
 */
BenchmarkReport run_benchmark(const LabeledDataset& dataset, std::size_t reps,
                              const BenchmarkOptions& options);

}  // namespace qdc

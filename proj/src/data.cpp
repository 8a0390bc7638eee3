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

#include "qdc/data.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "qdc/classifier.hpp"
#include "qdc/encoding.hpp"
#include "qdc/error.hpp"
#include "qdc/rng.hpp"

namespace qdc {
namespace detail {
extern const char kIrisCsv[];
extern const std::size_t kIrisCsvSize;
}  // namespace detail

namespace {

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

std::vector<IrisSample> parse_iris(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  std::getline(in, line);  // header
  std::vector<IrisSample> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    IrisSample s;
    std::istringstream fields(line);
    std::string cell;
    for (int col = 0; col < 5; ++col) {
      if (!std::getline(fields, cell, ',')) {
        throw Error("iris.csv: short row '" + line + "'");
      }
      if (col < 4) {
        s.features.push_back(std::stod(cell));
      } else {
        s.species = std::stoi(cell);
      }
    }
    out.push_back(std::move(s));
  }
  if (out.size() != 150) {
    throw Error("iris.csv: expected 150 rows, found " +
                std::to_string(out.size()));
  }
  return out;
}

struct RepResult {
  double error = 0.0;
  double p_acc = 0.0;
  std::size_t impossible = 0;
};

RepResult run_repetition(const LabeledDataset& dataset, std::size_t rep,
                         const BenchmarkOptions& options) {
  auto [train_raw, test_raw] =
      split(dataset, options.train_fraction, derive_seed(options.seed, rep));
  PipelineOptions popts;
  popts.feature_map_copies = options.feature_map_copies;
  auto [train, report] = pipeline(train_raw, popts);
  const TrainingSet ts = TrainingSet::from_dataset(train);

  RepResult out;
  std::size_t wrong = 0;
  CompensatedSum p_acc;
  for (std::size_t k = 0; k < test_raw.size(); ++k) {
    const auto x = report.transform(test_raw.rows[k]);
    try {
      const auto outcome = classify(ts, x);
      if (outcome.predicted != test_raw.labels[k]) ++wrong;
      p_acc.add(outcome.p_acc);
    } catch (const ImpossibleBranchError&) {
      ++wrong;
      ++out.impossible;
    }
  }
  const auto n = static_cast<double>(test_raw.size());
  out.error = static_cast<double>(wrong) / n;
  out.p_acc = p_acc.value() / n;
  return out;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string_view iris_csv() {
  return std::string_view(detail::kIrisCsv, detail::kIrisCsvSize);
}

const std::vector<IrisSample>& iris_samples() {
  static const std::vector<IrisSample> samples = [] {
    const auto csv = iris_csv();
    if (fnv1a64(csv) != kIrisChecksum) {
      throw Error("embedded iris.csv fails its checksum");
    }
    return parse_iris(csv);
  }();
  return samples;
}

LabeledDataset iris(std::pair<int, int> classes,
                    const std::vector<std::size_t>& features) {
  auto valid = [](int c) { return c >= 1 && c <= 3; };
  if (!valid(classes.first) || !valid(classes.second)) {
    throw ArgumentError("iris classes must be 1, 2 or 3");
  }
  if (classes.first == classes.second) {
    throw ArgumentError("iris classes must differ");
  }
  if (features.empty()) throw ArgumentError("feature subset is empty");
  for (std::size_t j = 0; j < features.size(); ++j) {
    if (features[j] > 3) {
      throw ArgumentError("iris feature index " + std::to_string(features[j]) +
                          " outside 0..3");
    }
    for (std::size_t k = 0; k < j; ++k) {
      if (features[k] == features[j]) {
        throw ArgumentError("iris feature " + std::to_string(features[j]) +
                            " selected twice");
      }
    }
  }

  LabeledDataset out;
  out.name = "iris " + std::to_string(classes.first) + "&" +
             std::to_string(classes.second);
  out.class_map = {{std::to_string(classes.first), -1},
                   {std::to_string(classes.second), 1}};
  for (int c : {classes.first, classes.second}) {
    for (const auto& s : iris_samples()) {
      if (s.species != c) continue;
      FeatureVector row;
      for (std::size_t j : features) row.push_back(s.features[j]);
      out.rows.push_back(std::move(row));
      out.labels.push_back(c == classes.first ? -1 : 1);
    }
  }
  return out;
}

LabeledDataset circles(const CirclesParams& params, std::uint64_t seed) {
  if (params.n_per_class < 2) throw ArgumentError("n_per_class must be >= 2");
  if (!(params.radius_ratio > 0.0 && params.radius_ratio < 1.0)) {
    throw ArgumentError("radius_ratio must lie in (0, 1)");
  }
  if (!(params.noise_std >= 0.0) || !std::isfinite(params.noise_std)) {
    throw ArgumentError("noise_std must be >= 0");
  }
  Rng rng(seed);
  LabeledDataset out;
  out.name = "circles";
  out.class_map = {{"outer", -1}, {"inner", 1}};
  for (const auto& [radius, label] :
       {std::pair{1.0, -1}, std::pair{params.radius_ratio, 1}}) {
    for (std::size_t k = 0; k < params.n_per_class; ++k) {
      const double angle = 2.0 * std::numbers::pi * rng.uniform();
      double x = radius * std::cos(angle);
      double y = radius * std::sin(angle);
      if (params.noise_std > 0.0) {
        x += params.noise_std * rng.normal();
        y += params.noise_std * rng.normal();
      }
      out.rows.push_back({x, y});
      out.labels.push_back(label);
    }
  }
  return out;
}

std::pair<LabeledDataset, LabeledDataset> split(const LabeledDataset& dataset,
                                                double train_fraction,
                                                std::uint64_t seed) {
  dataset.validate();
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ArgumentError("train fraction must lie in (0, 1)");
  }
  const std::size_t n = dataset.size();
  const auto n_train = static_cast<std::size_t>(
      std::floor(train_fraction * static_cast<double>(n)));
  if (n_train == 0) throw ArgumentError("split leaves the training set empty");
  if (n_train == n) throw ArgumentError("split leaves the test set empty");

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(seed);
  rng.shuffle(order);

  LabeledDataset train, test;
  for (auto* part : {&train, &test}) {
    part->name = dataset.name;
    part->class_map = dataset.class_map;
    part->provenance = dataset.provenance;
  }
  for (std::size_t k = 0; k < n; ++k) {
    auto& part = k < n_train ? train : test;
    part.rows.push_back(dataset.rows[order[k]]);
    part.labels.push_back(dataset.labels[order[k]]);
  }
  return {std::move(train), std::move(test)};
}

BenchmarkReport run_benchmark(const LabeledDataset& dataset, std::size_t reps,
                              const BenchmarkOptions& options) {
  if (reps < 1) throw ArgumentError("repetitions must be >= 1");
  dataset.validate();

  std::vector<RepResult> results(reps);
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, reps));

  if (threads <= 1) {
    for (std::size_t r = 0; r < reps; ++r) {
      results[r] = run_repetition(dataset, r, options);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t r = next++; r < reps && !failed; r = next++) {
          try {
            results[r] = run_repetition(dataset, r, options);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  BenchmarkReport out;
  out.name = dataset.name;
  out.reps = reps;
  out.options = options;
  CompensatedSum err_sum, pacc_sum;
  for (const auto& r : results) {
    out.errors.push_back(r.error);
    out.p_acc.push_back(r.p_acc);
    err_sum.add(r.error);
    pacc_sum.add(r.p_acc);
    out.impossible_count += r.impossible;
  }
  const auto n = static_cast<double>(reps);
  out.mean_error = err_sum.value() / n;
  out.mean_p_acc = pacc_sum.value() / n;
  CompensatedSum sq;
  for (double e : out.errors) sq.add((e - out.mean_error) * (e - out.mean_error));
  out.variance = sq.value() / n;
  return out;
}

}  // namespace qdc

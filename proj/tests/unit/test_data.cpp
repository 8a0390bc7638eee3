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

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "catch2/catch_amalgamated.hpp"
#include "qdc/data.hpp"
#include "qdc/encoding.hpp"
#include "qdc/error.hpp"

namespace qdc {
namespace {

using Catch::Approx;

}  // namespace

TEST_CASE("Embedded Iris resource", "[data]") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64(iris_csv()) == kIrisChecksum);
  const auto& all = iris_samples();
  REQUIRE(all.size() == 150);
  CHECK(all[0].features == FeatureVector{5.1, 3.5, 1.4, 0.2});
  CHECK(all[0].species == 1);
  CHECK(all[149].species == 3);
  std::array<int, 4> counts{};
  for (const auto& s : all) ++counts[s.species];
  CHECK(counts[1] == 50);
  CHECK(counts[2] == 50);
  CHECK(counts[3] == 50);
}

TEST_CASE("Iris subsets", "[data]") {
  const auto d = iris({1, 2});
  CHECK(d.size() == 100);
  CHECK(d.dimension() == 4);
  CHECK(d.labels.front() == -1);
  CHECK(d.labels.back() == 1);
  CHECK(d.class_map.at("1") == -1);
  const auto r = iris({3, 1}, {2});
  CHECK(r.dimension() == 1);
  CHECK(r.labels.front() == -1);
  CHECK(r.rows.front()[0] == Approx(6.0));
  CHECK_THROWS_AS(iris({1, 1}), ArgumentError);
  CHECK_THROWS_AS(iris({0, 1}), ArgumentError);
  CHECK_THROWS_AS(iris({1, 2}, {4}), ArgumentError);
  CHECK_THROWS_AS(iris({1, 2}, {1, 1}), ArgumentError);
  CHECK_THROWS_AS(iris({1, 2}, {}), ArgumentError);
}

TEST_CASE("Hardware-experiment samples after preprocessing", "[data]") {
  const auto [d, report] = pipeline(iris({1, 2}, {0, 1}), PipelineOptions{});
  // Reference values are the rounded two-feature vectors of samples 33, 85,
  // 28 and 36.
  CHECK(d.rows[33][0] == Approx(0.0).margin(0.025));
  CHECK(d.rows[33][1] == Approx(1.0).margin(0.025));
  CHECK(d.labels[33] == -1);
  CHECK(d.rows[85][0] == Approx(0.789).margin(0.025));
  CHECK(d.rows[85][1] == Approx(0.615).margin(0.025));
  CHECK(d.labels[85] == 1);
  CHECK(d.rows[28][0] == Approx(-0.549).margin(0.025));
  CHECK(d.rows[36][1] == Approx(0.999).margin(0.025));
}

TEST_CASE("Circles generator", "[data]") {
  CirclesParams p;
  const auto d = circles(p, 5);
  CHECK(d.size() == 100);
  CHECK(d.labels[0] == -1);
  CHECK(d.labels[99] == 1);
  CHECK(d == circles(p, 5));
  CHECK_FALSE(d == circles(p, 6));

  p.noise_std = 0.0;
  const auto clean = circles(p, 1);
  for (std::size_t k = 0; k < clean.size(); ++k) {
    const double r = std::hypot(clean.rows[k][0], clean.rows[k][1]);
    CHECK(r == Approx(k < 50 ? 1.0 : 0.5).margin(1e-12));
  }

  CHECK_THROWS_AS(circles({1, 0.5, 0.0}, 1), ArgumentError);
  CHECK_THROWS_AS(circles({5, 1.0, 0.0}, 1), ArgumentError);
  CHECK_THROWS_AS(circles({5, 0.5, -0.1}, 1), ArgumentError);
}

TEST_CASE("Circles overlap once each point is normalised", "[data]") {
  const auto [d, report] = pipeline(circles({}, 2017), PipelineOptions{});
  // Both classes land on the unit circle; the nearest opposite-class
  // neighbour is usually closer than the nearest same-class one.
  std::size_t closer_to_other = 0;
  for (std::size_t a = 0; a < d.size(); ++a) {
    double same = 1e9, other = 1e9;
    for (std::size_t b = 0; b < d.size(); ++b) {
      if (a == b) continue;
      const double dx = d.rows[a][0] - d.rows[b][0];
      const double dy = d.rows[a][1] - d.rows[b][1];
      double& slot = d.labels[a] == d.labels[b] ? same : other;
      slot = std::min(slot, dx * dx + dy * dy);
    }
    closer_to_other += other < same;
  }
  CHECK(closer_to_other > 30);
}

TEST_CASE("Train/test split", "[data]") {
  const auto d = iris({1, 2});
  const auto [train, test] = split(d, 0.8, 3);
  CHECK(train.size() == 80);
  CHECK(test.size() == 20);
  std::multiset<std::vector<double>> all(d.rows.begin(), d.rows.end());
  std::multiset<std::vector<double>> parts(train.rows.begin(), train.rows.end());
  parts.insert(test.rows.begin(), test.rows.end());
  CHECK(all == parts);
  const auto again = split(d, 0.8, 3);
  CHECK(again.first == train);
  CHECK(split(d, 0.8, 4).first != train);

  LabeledDataset ten;
  for (int k = 0; k < 10; ++k) {
    ten.rows.push_back({static_cast<double>(k)});
    ten.labels.push_back(k % 2 ? 1 : -1);
  }
  const auto [nine, one] = split(ten, 0.999, 1);
  CHECK(nine.size() == 9);
  CHECK(one.size() == 1);
  CHECK_THROWS_AS(split(ten, 0.05, 1), ArgumentError);
  CHECK_THROWS_AS(split(ten, 1.0, 1), ArgumentError);
}

TEST_CASE("Benchmark harness", "[data]") {
  BenchmarkOptions opts;
  opts.seed = 99;
  const auto a = run_benchmark(iris({1, 2}), 25, opts);
  CHECK(a.reps == 25);
  CHECK(a.errors.size() == 25);
  CHECK(a.mean_error == Approx(0.0).margin(0.01));
  CHECK(a.mean_p_acc == Approx(0.5).margin(0.05));

  SECTION("deterministic and independent of the thread count") {
    const auto b = run_benchmark(iris({1, 2}), 25, opts);
    CHECK(a == b);
    auto threaded = opts;
    threaded.threads = 4;
    const auto c = run_benchmark(iris({1, 2}), 25, threaded);
    CHECK(c.errors == a.errors);
    CHECK(c.p_acc == a.p_acc);
    CHECK(c.mean_error == a.mean_error);
    CHECK(c.variance == a.variance);
  }
  SECTION("variance is the population variance of the repetitions") {
    const auto r = run_benchmark(iris({2, 3}), 40, opts);
    double mean = 0.0;
    for (double e : r.errors) mean += e;
    mean /= 40.0;
    double var = 0.0;
    for (double e : r.errors) var += (e - mean) * (e - mean);
    CHECK(r.mean_error == Approx(mean).margin(1e-12));
    CHECK(r.variance == Approx(var / 40.0).margin(1e-12));
    for (double e : r.errors) {
      CHECK(e >= 0.0);
      CHECK(e <= 1.0);
    }
  }
  CHECK_THROWS_AS(run_benchmark(iris({1, 2}), 0, opts), ArgumentError);
}

}  // namespace qdc

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
#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "oracles.hpp"
#include "qdc/encoding.hpp"
#include "qdc/error.hpp"

namespace qdc {
namespace {

using Catch::Approx;

LabeledDataset small_set() {
  LabeledDataset d;
  d.name = "toy";
  d.rows = {{1.0, 10.0}, {2.0, 20.0}, {3.0, 60.0}, {6.0, 30.0}};
  d.labels = {-1, -1, 1, 1};
  return d;
}

}  // namespace

TEST_CASE("Dataset validation", "[encoding]") {
  auto d = small_set();
  CHECK_NOTHROW(d.validate());
  d.labels[0] = 0;
  CHECK_THROWS_AS(d.validate(), ArgumentError);
  d = small_set();
  d.rows[1].push_back(1.0);
  CHECK_THROWS_AS(d.validate(), ArgumentError);
  d = small_set();
  d.labels.pop_back();
  CHECK_THROWS_AS(d.validate(), ArgumentError);
  d = small_set();
  d.rows[2][0] = std::nan("");
  CHECK_THROWS_AS(d.validate(), ArgumentError);
}

TEST_CASE("Standardisation uses population statistics", "[encoding]") {
  const auto [out, report] = standardize(small_set());
  CHECK(report.means[0] == Approx(3.0));
  CHECK(report.stds[0] == Approx(std::sqrt((4.0 + 1.0 + 0.0 + 9.0) / 4.0)));
  for (std::size_t j = 0; j < 2; ++j) {
    double mean = 0.0, var = 0.0;
    for (const auto& r : out.rows) mean += r[j];
    mean /= 4.0;
    for (const auto& r : out.rows) var += (r[j] - mean) * (r[j] - mean);
    CHECK(mean == Approx(0.0).margin(1e-12));
    CHECK(var / 4.0 == Approx(1.0));
  }
  CHECK(out.provenance.standardized);

  auto flat = small_set();
  for (auto& r : flat.rows) r[1] = 5.0;
  CHECK_THROWS_AS(standardize(flat), DegenerateFeatureError);
  LabeledDataset one;
  one.rows = {{1.0}};
  one.labels = {1};
  CHECK_THROWS_AS(standardize(one), ArgumentError);
}

TEST_CASE("Normalisation and padding", "[encoding]") {
  const std::vector<double> v{3.0, 4.0, 0.0};
  const auto n = normalize(v);
  CHECK(n[0] == Approx(0.6));
  CHECK(euclidean_norm(n) == Approx(1.0));
  CHECK_THROWS_AS(normalize(std::vector<double>{0.0, 0.0}), ZeroVectorError);

  CHECK(pad_to_power_of_two(v).size() == 4);
  CHECK(pad_to_power_of_two(v)[3] == 0.0);
  CHECK(pad_to_power_of_two(std::vector<double>{1.0}).size() == 1);
  CHECK(pad_to_power_of_two(std::vector<double>(5, 1.0)).size() == 8);
  CHECK_THROWS_AS(pad_to_power_of_two(std::vector<double>{}), ArgumentError);
}

TEST_CASE("Tensor-copy feature map", "[encoding][property]") {
  const std::vector<double> v{0.6, 0.8};
  const auto k2 = tensor_copy_map(v, 2);
  REQUIRE(k2.size() == 4);
  CHECK(k2[0] == Approx(0.36));
  CHECK(k2[1] == Approx(0.48));
  CHECK(k2[2] == Approx(0.48));
  CHECK(k2[3] == Approx(0.64));
  CHECK(tensor_copy_map(v, 3).size() == 8);
  CHECK_THROWS_AS(tensor_copy_map(std::vector<double>{1.0, 1.0}, 2),
                  NormalizationError);
  CHECK_THROWS_AS(kronecker_power(v, 0), ArgumentError);

  // <phi(a), phi(b)> = <a, b>^k and the image stays on the unit sphere.
  std::mt19937_64 g(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = oracle::random_unit(g, 3);
    const auto b = oracle::random_unit(g, 3);
    double ab = 0.0;
    for (int i = 0; i < 3; ++i) ab += a[i] * b[i];
    for (int k = 1; k <= 3; ++k) {
      const auto fa = tensor_copy_map(a, k), fb = tensor_copy_map(b, k);
      double f = 0.0;
      for (std::size_t i = 0; i < fa.size(); ++i) f += fa[i] * fb[i];
      CHECK(f == Approx(std::pow(ab, k)).margin(1e-12));
      CHECK(euclidean_norm(fa) == Approx(1.0).margin(1e-12));
    }
  }
}

TEST_CASE("Pipeline fits on train and transforms held-out rows", "[encoding]") {
  auto train = small_set();
  PipelineOptions opts;
  const auto [out, report] = pipeline(train, opts);
  CHECK(out.provenance.standardized);
  CHECK(out.provenance.normalized);
  CHECK_FALSE(out.provenance.padded);
  for (std::size_t r = 0; r < out.size(); ++r) {
    CHECK(euclidean_norm(out.rows[r]) == Approx(1.0));
    const auto again = report.transform(train.rows[r]);
    for (std::size_t j = 0; j < again.size(); ++j) {
      CHECK(again[j] == Approx(out.rows[r][j]).margin(1e-14));
    }
  }
  CHECK_THROWS_AS(report.transform(std::vector<double>{1.0}), ArgumentError);

  SECTION("three features pad to four") {
    LabeledDataset d;
    d.rows = {{1, 2, 3}, {2, 1, 0}, {0, 5, 1}};
    d.labels = {1, -1, 1};
    const auto [p, rep] = pipeline(d, opts);
    CHECK(p.dimension() == 4);
    CHECK(rep.padded_dimension == 4);
    CHECK(p.provenance.padded);
    CHECK(rep.transform(std::vector<double>{1, 1, 1}).size() == 4);
  }
  SECTION("two copies square the dimension before standardising") {
    PipelineOptions two;
    two.feature_map_copies = 2;
    const auto [p, rep] = pipeline(train, two);
    CHECK(p.dimension() == 4);
    CHECK(rep.means.size() == 4);
    CHECK(rep.means[0] == Approx((1.0 + 4.0 + 9.0 + 36.0) / 4.0));
    CHECK(p.provenance.feature_map_copies == 2);
  }
}

}  // namespace qdc

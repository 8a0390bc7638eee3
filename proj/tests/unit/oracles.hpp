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

// Reference constructions written independently of the simulator kernels.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace qdc::oracle {

using C = std::complex<double>;

inline Eigen::Matrix2cd hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd m;
  m << r, r, r, -r;
  return m;
}

inline Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

inline Eigen::Matrix2cd phase(double phi) {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, std::polar(1.0, phi);
  return m;
}

inline Eigen::Matrix2cd ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return m;
}

/// `u` on `target`, applied only when every wire in `controls` is 1.
inline Eigen::MatrixXcd controlled(std::size_t n, std::vector<std::size_t> controls,
                                   std::size_t target, const Eigen::Matrix2cd& u) {
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    bool on = true;
    for (auto c : controls) on = on && ((col >> c) & 1U);
    if (!on) {
      m(col, col) = 1.0;
      continue;
    }
    const std::size_t bit = (col >> target) & 1U;
    const std::size_t base = col & ~(std::size_t{1} << target);
    m(base, col) = u(0, bit);
    m(base | (std::size_t{1} << target), col) = u(1, bit);
  }
  return m;
}

inline Eigen::MatrixXcd single(std::size_t n, std::size_t q,
                               const Eigen::Matrix2cd& u) {
  return controlled(n, {}, q, u);
}

inline Eigen::MatrixXcd swap(std::size_t n, std::size_t a, std::size_t b) {
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t ba = (col >> a) & 1U, bb = (col >> b) & 1U;
    std::size_t row = col & ~((std::size_t{1} << a) | (std::size_t{1} << b));
    row |= (bb << a) | (ba << b);
    m(row, col) = 1.0;
  }
  return m;
}

inline Eigen::MatrixXcd toffoli(std::size_t n, std::size_t c1, std::size_t c2,
                                std::size_t t) {
  return controlled(n, {c1, c2}, t, pauli_x());
}

/// Unit vector with iid normal entries.
inline std::vector<double> random_unit(std::mt19937_64& g, std::size_t dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> v(dim);
  double s = 0.0;
  do {
    s = 0.0;
    for (auto& x : v) {
      x = n(g);
      s += x * x;
    }
  } while (s < 1e-6);
  for (auto& x : v) x /= std::sqrt(s);
  return v;
}

}  // namespace qdc::oracle

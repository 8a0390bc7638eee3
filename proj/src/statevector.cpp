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

#include "qdc/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "qdc/error.hpp"
#include "qdc/rng.hpp"

namespace qdc {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::uint64_t bit(std::size_t q) { return std::uint64_t{1} << q; }

// Applies a 2x2 matrix to `target` on every basis pair whose control bits are
// all set.
void apply_controlled(std::span<Complex> amp, std::uint64_t control_mask,
                      std::size_t target, const Eigen::Matrix2cd& m) {
  const std::uint64_t tb = bit(target);
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  const std::uint64_t dim = amp.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & tb) != 0 || (i & control_mask) != control_mask) continue;
    const std::uint64_t j = i | tb;
    const Complex a = amp[i];
    const Complex b = amp[j];
    amp[i] = m00 * a + m01 * b;
    amp[j] = m10 * a + m11 * b;
  }
}

void apply_controlled_x(std::span<Complex> amp, std::uint64_t control_mask,
                        std::size_t target) {
  const std::uint64_t tb = bit(target);
  const std::uint64_t dim = amp.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & tb) == 0 && (i & control_mask) == control_mask) {
      std::swap(amp[i], amp[i | tb]);
    }
  }
}

void apply_phase(std::span<Complex> amp, std::size_t target, Complex phase) {
  const std::uint64_t tb = bit(target);
  const std::uint64_t dim = amp.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & tb) amp[i] *= phase;
  }
}

void apply_swap(std::span<Complex> amp, std::size_t a, std::size_t b) {
  const std::uint64_t ab = bit(a), bb = bit(b);
  const std::uint64_t dim = amp.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & ab) != 0 && (i & bb) == 0) std::swap(amp[i], amp[(i & ~ab) | bb]);
  }
}

Eigen::Matrix2cd ry_matrix(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return m;
}

void check_qubit(const QuantumState& state, std::size_t qubit) {
  if (qubit >= state.n_qubits()) {
    throw IndexError("qubit " + std::to_string(qubit) +
                     " out of range for " + std::to_string(state.n_qubits()) +
                     " qubits");
  }
}

}  // namespace

RegisterLayout RegisterLayout::for_problem(std::size_t m_count,
                                           std::size_t dim) {
  return RegisterLayout{bits_for(m_count), bits_for(dim)};
}

std::size_t bits_for(std::size_t count) {
  if (count <= 1) return 0;
  return static_cast<std::size_t>(std::bit_width(count - 1));
}

QuantumState::QuantumState(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw CapacityError("register of " + std::to_string(n_qubits) +
                        " qubits outside supported range [1, " +
                        std::to_string(kMaxQubits) + "]");
  }
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

QuantumState::QuantumState(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

QuantumState QuantumState::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw ArgumentError("amplitude vector length " + std::to_string(dim) +
                        " is not a power of two >= 2");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(dim));
  if (n > kMaxQubits) {
    throw CapacityError("register of " + std::to_string(n) +
                        " qubits exceeds supported maximum");
  }
  double norm = 0.0;
  for (const auto& a : amplitudes) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-10) {
    throw NormalizationError("amplitudes are not normalised (norm^2 = " +
                             std::to_string(norm) + ")");
  }
  return QuantumState(n, std::move(amplitudes));
}

double QuantumState::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

void QuantumState::set_layout(std::optional<RegisterLayout> layout) {
  if (layout && layout->total_qubits() != n_qubits_) {
    throw ArgumentError("register layout needs " +
                        std::to_string(layout->total_qubits()) +
                        " qubits, state has " + std::to_string(n_qubits_));
  }
  layout_ = layout;
}

QuantumState zero_state(std::size_t n_qubits) { return QuantumState(n_qubits); }

Eigen::Matrix2cd target_matrix(const GateOp& op) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  switch (op.kind) {
    case GateKind::H:
      m << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
      return m;
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::Toffoli:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::T:
      m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4);
      return m;
    case GateKind::Tdg:
      m << 1, 0, 0, std::polar(1.0, -std::numbers::pi / 4);
      return m;
    case GateKind::S:
      m << 1, 0, 0, 1i;
      return m;
    case GateKind::Ry:
    case GateKind::CRy:
    case GateKind::CCRy:
      return ry_matrix(op.theta);
    case GateKind::SWAP:
      break;
  }
  throw UnsupportedGateError("SWAP has no single-target matrix");
}

void apply_gate(QuantumState& state, const GateOp& op) {
  validate_op(op, state.n_qubits());
  auto amp = state.amplitudes();
  const auto& q = op.qubits;
  switch (op.kind) {
    case GateKind::X:
      apply_controlled_x(amp, 0, q[0]);
      return;
    case GateKind::CNOT:
      apply_controlled_x(amp, bit(q[0]), q[1]);
      return;
    case GateKind::Toffoli:
      apply_controlled_x(amp, bit(q[0]) | bit(q[1]), q[2]);
      return;
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::S:
      apply_phase(amp, q[0], target_matrix(op)(1, 1));
      return;
    case GateKind::H:
    case GateKind::Ry:
      apply_controlled(amp, 0, q[0], target_matrix(op));
      return;
    case GateKind::CRy:
      apply_controlled(amp, bit(q[0]), q[1], target_matrix(op));
      return;
    case GateKind::CCRy:
      apply_controlled(amp, bit(q[0]) | bit(q[1]), q[2], target_matrix(op));
      return;
    case GateKind::SWAP:
      apply_swap(amp, q[0], q[1]);
      return;
  }
}

void run(QuantumState& state, const Circuit& circuit) {
  if (circuit.n_qubits() > state.n_qubits()) {
    throw IndexError("circuit on " + std::to_string(circuit.n_qubits()) +
                     " qubits applied to a " +
                     std::to_string(state.n_qubits()) + "-qubit state");
  }
  for (const auto& op : circuit.ops()) apply_gate(state, op);
}

QuantumState simulate(const Circuit& circuit) {
  QuantumState state(circuit.n_qubits());
  run(state, circuit);
  return state;
}

QubitProbabilities qubit_probabilities(const QuantumState& state,
                                       std::size_t qubit) {
  check_qubit(state, qubit);
  const std::uint64_t qb = bit(qubit);
  double p0 = 0.0, p1 = 0.0;
  const auto amp = state.amplitudes();
  for (std::uint64_t i = 0; i < amp.size(); ++i) {
    (i & qb ? p1 : p0) += std::norm(amp[i]);
  }
  const double total = p0 + p1;
  return {p0 / total, p1 / total};
}

Postselected postselect(const QuantumState& state, std::size_t qubit,
                        unsigned outcome) {
  check_qubit(state, qubit);
  if (outcome > 1) throw ArgumentError("measurement outcome must be 0 or 1");
  const std::uint64_t qb = bit(qubit);
  const std::uint64_t want = outcome ? qb : 0;
  QuantumState out = state;
  auto amp = out.amplitudes();
  double kept = 0.0;
  for (std::uint64_t i = 0; i < amp.size(); ++i) {
    if ((i & qb) == want) {
      kept += std::norm(amp[i]);
    } else {
      amp[i] = 0.0;
    }
  }
  if (kept <= kImpossibleBranch) {
    throw ImpossibleBranchError("postselecting qubit " + std::to_string(qubit) +
                                " on " + std::to_string(outcome) +
                                ": outcome has probability " +
                                std::to_string(kept));
  }
  const double scale = 1.0 / std::sqrt(kept);
  for (auto& a : amp) a *= scale;
  return {std::move(out), kept};
}

std::vector<double> marginal(const QuantumState& state,
                             std::span<const std::size_t> qubits) {
  if (qubits.empty()) throw ArgumentError("empty qubit list");
  for (std::size_t j = 0; j < qubits.size(); ++j) {
    check_qubit(state, qubits[j]);
    for (std::size_t k = 0; k < j; ++k) {
      if (qubits[j] == qubits[k]) {
        throw IndexError("repeated qubit " + std::to_string(qubits[j]));
      }
    }
  }
  std::vector<double> dist(std::size_t{1} << qubits.size(), 0.0);
  const auto amp = state.amplitudes();
  for (std::uint64_t i = 0; i < amp.size(); ++i) {
    std::uint64_t outcome = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j) {
      outcome |= ((i >> qubits[j]) & 1U) << j;
    }
    dist[outcome] += std::norm(amp[i]);
  }
  return dist;
}

std::map<std::string, std::uint64_t> sample_shots(
    const QuantumState& state, std::span<const std::size_t> qubits,
    std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw ArgumentError("shots must be >= 1");
  const auto dist = marginal(state, qubits);
  std::vector<double> cumulative(dist.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    acc += dist[k];
    cumulative[k] = acc;
  }
  std::vector<std::uint64_t> counts(dist.size(), 0);
  Rng rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    auto k = static_cast<std::size_t>(it - cumulative.begin());
    // Never land on a zero-probability tail outcome through rounding.
    while (k > 0 && (k >= dist.size() || dist[k] == 0.0)) --k;
    ++counts[k];
  }
  std::map<std::string, std::uint64_t> hist;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    std::string key(qubits.size(), '0');
    for (std::size_t j = 0; j < qubits.size(); ++j) {
      if ((k >> j) & 1U) key[qubits.size() - 1 - j] = '1';
    }
    hist.emplace(std::move(key), counts[k]);
  }
  return hist;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit) {
  const std::size_t n = circuit.n_qubits();
  if (n < 1 || n > kMaxUnitaryQubits) {
    throw CapacityError("unitary extraction supports 1.." +
                        std::to_string(kMaxUnitaryQubits) + " qubits, got " +
                        std::to_string(n));
  }
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd u(dim, dim);
  std::vector<Complex> basis(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::fill(basis.begin(), basis.end(), Complex{0.0, 0.0});
    basis[col] = 1.0;
    QuantumState state = QuantumState::from_amplitudes(basis);
    run(state, circuit);
    const auto amp = state.amplitudes();
    for (std::size_t row = 0; row < dim; ++row) u(row, col) = amp[row];
  }
  return u;
}

double phase_insensitive_distance(std::span<const Complex> a,
                                  std::span<const Complex> b) {
  if (a.size() != b.size()) throw ArgumentError("lengths differ");
  Complex phase{1.0, 0.0};
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (std::abs(b[k]) > 1e-6) {
      const Complex ratio = a[k] / b[k];
      if (std::abs(ratio) > 0.0) phase = ratio / std::abs(ratio);
      break;
    }
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, std::abs(a[k] - phase * b[k]));
  }
  return worst;
}

double phase_insensitive_distance(const Eigen::MatrixXcd& a,
                                  const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ArgumentError("matrix shapes differ");
  }
  return phase_insensitive_distance(
      std::span<const Complex>(a.data(), static_cast<std::size_t>(a.size())),
      std::span<const Complex>(b.data(), static_cast<std::size_t>(b.size())));
}

}  // namespace qdc

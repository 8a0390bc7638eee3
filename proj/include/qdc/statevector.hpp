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
 * Dense statevector simulation.
 *
 * Bit ordering: qubit k is bit k of the basis index, so qubit 0 is the least
 * significant bit. Ry(theta)|0> = cos(theta/2)|0> + sin(theta/2)|1>.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qdc/gate.hpp"

namespace qdc {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 24;
inline constexpr std::size_t kMaxUnitaryQubits = 10;

/**
 * Qubit positions of the classifier register |m>|a>|i>|c>.
 *
 * The class qubit is least significant, followed by the data register, the
 * ancilla and the index register.
 */
struct RegisterLayout {
  std::size_t m_bits = 0;
  std::size_t i_bits = 0;

  /// Smallest layout holding M training points of dimension N.
  static RegisterLayout for_problem(std::size_t m_count, std::size_t dim);

  std::size_t total_qubits() const { return m_bits + i_bits + 2; }
  std::size_t class_qubit() const { return 0; }
  std::size_t data_qubit(std::size_t k) const { return 1 + k; }
  std::size_t ancilla_qubit() const { return 1 + i_bits; }
  std::size_t index_qubit(std::size_t k) const { return 2 + i_bits + k; }

  std::uint64_t basis_index(std::uint64_t m, unsigned ancilla, std::uint64_t i,
                            unsigned class_bit) const {
    return class_bit | (i << 1) |
           (static_cast<std::uint64_t>(ancilla) << (1 + i_bits)) |
           (m << (2 + i_bits));
  }

  bool operator==(const RegisterLayout&) const = default;
};

/// Number of bits needed to index `count` items (0 for count <= 1).
std::size_t bits_for(std::size_t count);

class QuantumState {
 public:
  /// |0...0> on `n_qubits` qubits; throws CapacityError outside [1, 24].
  explicit QuantumState(std::size_t n_qubits);

  /// Takes ownership of `amplitudes`; length must be a power of two and the
  /// vector must be normalised within 1e-10.
  static QuantumState from_amplitudes(std::vector<Complex> amplitudes);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_squared() const;

  const std::optional<RegisterLayout>& layout() const { return layout_; }
  void set_layout(std::optional<RegisterLayout> layout);

 private:
  QuantumState(std::size_t n_qubits, std::vector<Complex> amplitudes);

  std::size_t n_qubits_;
  std::vector<Complex> amplitudes_;
  std::optional<RegisterLayout> layout_;
};

QuantumState zero_state(std::size_t n_qubits);

/// Applies `op` in place; throws IndexError for wires outside the register.
void apply_gate(QuantumState& state, const GateOp& op);

/// Applies every op of `circuit` in order.
void run(QuantumState& state, const Circuit& circuit);

/// Simulates `circuit` from |0...0>.
QuantumState simulate(const Circuit& circuit);

struct QubitProbabilities {
  double p0 = 0.0;
  double p1 = 0.0;
};

QubitProbabilities qubit_probabilities(const QuantumState& state,
                                       std::size_t qubit);

struct Postselected {
  QuantumState state;
  double accept_probability;
};

/// Probability mass below which an outcome counts as impossible.
inline constexpr double kImpossibleBranch = 1e-15;

/**
 * Projects `qubit` onto `outcome` and renormalises.
 *
 * accept_probability is the mass of the kept branch before renormalisation.
 * Throws ImpossibleBranchError when that mass is <= 1e-15.
 */
Postselected postselect(const QuantumState& state, std::size_t qubit,
                        unsigned outcome);

/// Exact marginal distribution over `qubits`; outcome bit j is qubits[j].
std::vector<double> marginal(const QuantumState& state,
                             std::span<const std::size_t> qubits);

/**
 * Draws `shots` measurements of `qubits`.
 *
 * Keys are bitstrings with qubits[0] as the rightmost character. The result
 * depends only on the state, the qubit list, `shots` and `seed`.
 */
std::map<std::string, std::uint64_t> sample_shots(
    const QuantumState& state, std::span<const std::size_t> qubits,
    std::uint64_t shots, std::uint64_t seed);

/// Full unitary of `circuit`; column j is the circuit applied to |j>.
Eigen::MatrixXcd circuit_unitary(const Circuit& circuit);

/// 2x2 matrix of a single-qubit kind (for controlled kinds, of the target).
Eigen::Matrix2cd target_matrix(const GateOp& op);

/**
 * Largest entrywise deviation between `a` and `b` after removing a global
 * phase. The phase is fixed by the first entry (column-major) of `b` with
 * magnitude above 1e-6.
 */
double phase_insensitive_distance(const Eigen::MatrixXcd& a,
                                  const Eigen::MatrixXcd& b);

/// Same comparison for statevectors.
double phase_insensitive_distance(std::span<const Complex> a,
                                  std::span<const Complex> b);

}  // namespace qdc

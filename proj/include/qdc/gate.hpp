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
 * Gate operations and the circuit container shared by the simulator and the
 * compiler passes.
 */

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qdc {

enum class GateKind {
  H,
  X,
  T,
  Tdg,
  S,
  Ry,
  CNOT,
  SWAP,
  Toffoli,
  CRy,
  CCRy,
};

std::string_view gate_name(GateKind kind);

/// Number of qubits the gate acts on (controls included).
std::size_t gate_arity(GateKind kind);

bool is_parametric(GateKind kind);

/// True for the restricted hardware set {H, X, T, Tdg, S, Ry, CNOT}.
bool is_native(GateKind kind);

/**
 * One gate application.
 *
 * Wire order inside `qubits` is controls first, target last. SWAP has no
 * control; both wires are targets. Unused slots stay zero so that defaulted
 * equality compares ops structurally.
 */
struct GateOp {
  GateKind kind = GateKind::H;
  std::array<std::size_t, 3> qubits{};
  double theta = 0.0;

  std::span<const std::size_t> wires() const {
    return {qubits.data(), gate_arity(kind)};
  }
  std::size_t target() const { return qubits[gate_arity(kind) - 1]; }

  bool operator==(const GateOp&) const = default;
};

namespace gates {
GateOp h(std::size_t q);
GateOp x(std::size_t q);
GateOp t(std::size_t q);
GateOp tdg(std::size_t q);
GateOp s(std::size_t q);
GateOp ry(std::size_t q, double theta);
GateOp cnot(std::size_t control, std::size_t target);
GateOp swap(std::size_t a, std::size_t b);
GateOp toffoli(std::size_t c1, std::size_t c2, std::size_t target);
GateOp cry(std::size_t control, std::size_t target, double theta);
GateOp ccry(std::size_t c1, std::size_t c2, std::size_t target, double theta);
}  // namespace gates

/// Step annotation: `label` starts at op index `first_op`.
struct StepMarker {
  std::string label;
  std::size_t first_op = 0;

  bool operator==(const StepMarker&) const = default;
};

/**
 * Ordered gate list over `n_qubits` wires.
 *
 * Every appended op is checked against the register size; a circuit that
 * exists is always valid.
 */
class Circuit {
 public:
  explicit Circuit(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<GateOp>& ops() const { return ops_; }
  const std::vector<StepMarker>& steps() const { return steps_; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }

  Circuit& append(const GateOp& op);
  Circuit& append(const Circuit& other);

  /// Opens a labelled step at the current end of the op list.
  Circuit& begin_step(std::string label);

  /// Label of the step containing op `index`, empty if none.
  std::string step_of(std::size_t index) const;

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t n_qubits_;
  std::vector<GateOp> ops_;
  std::vector<StepMarker> steps_;
};

/// Throws IndexError / ArgumentError if `op` is not valid on `n_qubits`.
void validate_op(const GateOp& op, std::size_t n_qubits);

}  // namespace qdc

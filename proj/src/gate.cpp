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

#include "qdc/gate.hpp"

#include <cmath>
#include <utility>

#include "qdc/error.hpp"

namespace qdc {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "Tdg";
    case GateKind::S: return "S";
    case GateKind::Ry: return "Ry";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
    case GateKind::Toffoli: return "Toffoli";
    case GateKind::CRy: return "CRy";
    case GateKind::CCRy: return "CCRy";
  }
  return "?";
}

std::size_t gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::SWAP:
    case GateKind::CRy:
      return 2;
    case GateKind::Toffoli:
    case GateKind::CCRy:
      return 3;
    default:
      return 1;
  }
}

bool is_parametric(GateKind kind) {
  return kind == GateKind::Ry || kind == GateKind::CRy ||
         kind == GateKind::CCRy;
}

bool is_native(GateKind kind) {
  switch (kind) {
    case GateKind::SWAP:
    case GateKind::Toffoli:
    case GateKind::CRy:
    case GateKind::CCRy:
      return false;
    default:
      return true;
  }
}

namespace gates {
namespace {
GateOp make(GateKind kind, std::array<std::size_t, 3> q, double theta = 0.0) {
  return GateOp{kind, q, theta};
}
}  // namespace

GateOp h(std::size_t q) { return make(GateKind::H, {q, 0, 0}); }
GateOp x(std::size_t q) { return make(GateKind::X, {q, 0, 0}); }
GateOp t(std::size_t q) { return make(GateKind::T, {q, 0, 0}); }
GateOp tdg(std::size_t q) { return make(GateKind::Tdg, {q, 0, 0}); }
GateOp s(std::size_t q) { return make(GateKind::S, {q, 0, 0}); }
GateOp ry(std::size_t q, double theta) {
  return make(GateKind::Ry, {q, 0, 0}, theta);
}
GateOp cnot(std::size_t control, std::size_t target) {
  return make(GateKind::CNOT, {control, target, 0});
}
GateOp swap(std::size_t a, std::size_t b) {
  return make(GateKind::SWAP, {a, b, 0});
}
GateOp toffoli(std::size_t c1, std::size_t c2, std::size_t target) {
  return make(GateKind::Toffoli, {c1, c2, target});
}
GateOp cry(std::size_t control, std::size_t target, double theta) {
  return make(GateKind::CRy, {control, target, 0}, theta);
}
GateOp ccry(std::size_t c1, std::size_t c2, std::size_t target, double theta) {
  return make(GateKind::CCRy, {c1, c2, target}, theta);
}
}  // namespace gates

void validate_op(const GateOp& op, std::size_t n_qubits) {
  const auto wires = op.wires();
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] >= n_qubits) {
      throw IndexError(std::string(gate_name(op.kind)) + ": qubit " +
                       std::to_string(wires[i]) + " out of range for " +
                       std::to_string(n_qubits) + " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (wires[i] == wires[j]) {
        throw IndexError(std::string(gate_name(op.kind)) +
                         ": repeated qubit " + std::to_string(wires[i]));
      }
    }
  }
  if (!std::isfinite(op.theta)) {
    throw ArgumentError(std::string(gate_name(op.kind)) +
                        ": rotation angle is not finite");
  }
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {}

Circuit& Circuit::append(const GateOp& op) {
  validate_op(op, n_qubits_);
  ops_.push_back(op);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ > n_qubits_) {
    throw IndexError("appended circuit is wider than the target circuit");
  }
  const std::size_t offset = ops_.size();
  for (const auto& m : other.steps_) {
    steps_.push_back({m.label, m.first_op + offset});
  }
  ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
  return *this;
}

Circuit& Circuit::begin_step(std::string label) {
  if (!steps_.empty() && steps_.back().first_op == ops_.size()) {
    steps_.back().label = std::move(label);
  } else {
    steps_.push_back({std::move(label), ops_.size()});
  }
  return *this;
}

std::string Circuit::step_of(std::size_t index) const {
  std::string label;
  for (const auto& m : steps_) {
    if (m.first_op > index) break;
    label = m.label;
  }
  return label;
}

}  // namespace qdc

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
 * Experiment circuit construction, decomposition to the hardware gate set,
 * connectivity validation and OpenQASM 2.0 interchange.
 */

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdc/gate.hpp"

namespace qdc {

/**
 * Wires of the four-qubit experiment circuit, named by their role at circuit
 * input.
 *
 * Step E swaps the contents of the data and class wires, so at readout wire 0
 * holds the class qubit and wire 1 the data qubit. That matches the classifier
 * register layout (class least significant, then data, ancilla, index).
 */
struct ExperimentWires {
  static constexpr std::size_t kData = 0;
  static constexpr std::size_t kClass = 1;
  static constexpr std::size_t kAncilla = 2;
  static constexpr std::size_t kIndex = 3;
  static constexpr std::size_t kCount = 4;
};

/// Ry angle that loads the unit 2-vector `v` from |0>: 2 atan2(v1, v0).
double loading_angle(std::span<const double> v);

/**
 * Builds steps A-E of the two-point, two-feature classifier circuit.
 *
 * Inputs must be unit 2-vectors (NormalizationError otherwise). Step C uses a
 * Toffoli when `x0` is the basis state (0, 1) and a CCRy otherwise. Simulating
 * the result from |0000> gives the classifier's initial state for training
 * points (x0, -1), (x1, +1).
 */
Circuit build_experiment_circuit(std::span<const double> x_tilde,
                                 std::span<const double> x0,
                                 std::span<const double> x1);

/// Appends step F (Hadamard on the ancilla).
Circuit with_interference(Circuit circuit);

class ConnectivityGraph {
 public:
  explicit ConnectivityGraph(std::size_t n_physical) : n_(n_physical) {}

  void add_edge(std::size_t a, std::size_t b);
  bool adjacent(std::size_t a, std::size_t b) const;
  std::size_t degree(std::size_t q) const;
  std::size_t n_physical() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }

 private:
  std::size_t n_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
};

/// Five qubits, Q2 adjacent to every other qubit, no leaf-leaf edges.
ConnectivityGraph star_graph_ibm5();

/// Injective map from circuit wires to physical qubits.
class QubitAssignment {
 public:
  QubitAssignment() = default;

  /// Throws AssignmentError if `physical` is already taken by another wire.
  QubitAssignment& assign(std::size_t wire, std::size_t physical);

  std::optional<std::size_t> physical(std::size_t wire) const;
  const std::map<std::size_t, std::size_t>& map() const { return map_; }

 private:
  std::map<std::size_t, std::size_t> map_;
};

/// Data wire on the hub Q2; ancilla, index and class on leaves Q0, Q1, Q3.
QubitAssignment experiment_assignment();

// Building blocks, each over the listed wires of an n-qubit register.
Circuit swap_decomposition(std::size_t n, std::size_t a, std::size_t b);
/// 16 gates: 10 single-qubit (T-depth 4) and 6 CNOTs, one of them c1 -> c2.
Circuit toffoli_decomposition(std::size_t n, std::size_t c1, std::size_t c2,
                              std::size_t target);
/// 17 gates, 8 CNOTs, every CNOT between the target and one control.
Circuit toffoli_target_centred(std::size_t n, std::size_t c1, std::size_t c2,
                               std::size_t target);
Circuit cry_decomposition(std::size_t n, std::size_t control,
                          std::size_t target, double theta);
/// Gray-code ladder with Ry(+-theta/4); CNOTs only touch the target.
Circuit ccry_decomposition(std::size_t n, std::size_t c1, std::size_t c2,
                           std::size_t target, double theta);

/// Rewrites `circuit` over {H, X, T, Tdg, S, Ry, CNOT}. Step markers follow
/// the ops they annotate.
Circuit decompose(const Circuit& circuit);

/**
 * Hardware-aware variant: a Toffoli whose controls are not adjacent under
 * `assignment` uses the target-centred expansion when both control-target
 * pairs are edges. Everything else expands as in decompose(circuit).
 */
Circuit decompose(const Circuit& circuit, const ConnectivityGraph& graph,
                  const QubitAssignment& assignment);

struct ConnectivityViolation {
  std::size_t op_index = 0;
  std::size_t control = 0;
  std::size_t target = 0;
  std::size_t physical_control = 0;
  std::size_t physical_target = 0;

  bool operator==(const ConnectivityViolation&) const = default;
};

/**
 * Lists every CNOT whose physical endpoints are not adjacent.
 *
 * The circuit must already be decomposed (UnsupportedGateError otherwise).
 * Throws AssignmentError when a wire used by the circuit is unassigned or
 * mapped outside the graph.
 */
std::vector<ConnectivityViolation> validate_connectivity(
    const Circuit& circuit, const ConnectivityGraph& graph,
    const QubitAssignment& assignment);

/// OpenQASM 2.0 text; the circuit must be decomposed.
std::string export_qasm(const Circuit& circuit);

/// Parses the subset emitted by export_qasm (step comments included).
Circuit parse_qasm(std::string_view text);

}  // namespace qdc

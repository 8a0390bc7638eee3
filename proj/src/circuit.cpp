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

#include "qdc/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "qdc/error.hpp"

namespace qdc {
namespace {

constexpr double kUnitTolerance = 1e-10;

void require_unit_2vector(std::span<const double> v, const char* name) {
  if (v.size() != 2) {
    throw ArgumentError(std::string(name) + " must have 2 entries, has " +
                        std::to_string(v.size()));
  }
  const double norm = std::hypot(v[0], v[1]);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kUnitTolerance) {
    throw NormalizationError(std::string(name) + " is not unit norm (|v| = " +
                             std::to_string(norm) + ")");
  }
}

bool is_basis_one(std::span<const double> v) {
  return std::abs(v[0]) < 1e-12 && v[1] > 0.0;
}

}  // namespace

double loading_angle(std::span<const double> v) {
  if (v.size() != 2) throw ArgumentError("loading angle needs a 2-vector");
  return 2.0 * std::atan2(v[1], v[0]);
}

Circuit build_experiment_circuit(std::span<const double> x_tilde,
                                 std::span<const double> x0,
                                 std::span<const double> x1) {
  require_unit_2vector(x_tilde, "x_tilde");
  require_unit_2vector(x0, "x0");
  require_unit_2vector(x1, "x1");

  using W = ExperimentWires;
  Circuit c(W::kCount);

  c.begin_step("A");
  c.append(gates::h(W::kAncilla));
  c.append(gates::h(W::kIndex));

  // Load the input on ancilla = 1, then flip so it sits in the a = 0 branch.
  c.begin_step("B");
  c.append(gates::cry(W::kAncilla, W::kData, loading_angle(x_tilde)));
  c.append(gates::x(W::kAncilla));

  // x0 goes into the (a = 1, m = 1) branch; the X relabels that branch m = 0.
  c.begin_step("C");
  if (is_basis_one(x0)) {
    c.append(gates::toffoli(W::kAncilla, W::kIndex, W::kData));
  } else {
    c.append(gates::ccry(W::kAncilla, W::kIndex, W::kData, loading_angle(x0)));
  }
  c.append(gates::x(W::kIndex));

  c.begin_step("D");
  c.append(gates::ccry(W::kAncilla, W::kIndex, W::kData, loading_angle(x1)));

  // After the swap the class qubit lives on the data wire; set it to m.
  c.begin_step("E");
  c.append(gates::swap(W::kData, W::kClass));
  c.append(gates::cnot(W::kIndex, W::kData));
  return c;
}

Circuit with_interference(Circuit circuit) {
  if (circuit.n_qubits() < ExperimentWires::kCount) {
    throw ArgumentError("interference step needs the 4-qubit experiment circuit");
  }
  circuit.begin_step("F");
  circuit.append(gates::h(ExperimentWires::kAncilla));
  return circuit;
}

void ConnectivityGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= n_ || b >= n_) {
    throw IndexError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                     ") outside " + std::to_string(n_) + " physical qubits");
  }
  if (a == b) throw ArgumentError("self-loop edge");
  edges_.emplace(std::min(a, b), std::max(a, b));
}

bool ConnectivityGraph::adjacent(std::size_t a, std::size_t b) const {
  return edges_.count({std::min(a, b), std::max(a, b)}) != 0;
}

std::size_t ConnectivityGraph::degree(std::size_t q) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(),
                    [q](const auto& e) { return e.first == q || e.second == q; }));
}

ConnectivityGraph star_graph_ibm5() {
  ConnectivityGraph g(5);
  for (std::size_t leaf : {0, 1, 3, 4}) g.add_edge(2, leaf);
  return g;
}

QubitAssignment& QubitAssignment::assign(std::size_t wire,
                                         std::size_t physical) {
  for (const auto& [w, p] : map_) {
    if (p == physical && w != wire) {
      throw AssignmentError("physical qubit " + std::to_string(physical) +
                            " already holds wire " + std::to_string(w));
    }
  }
  map_[wire] = physical;
  return *this;
}

std::optional<std::size_t> QubitAssignment::physical(std::size_t wire) const {
  auto it = map_.find(wire);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

QubitAssignment experiment_assignment() {
  using W = ExperimentWires;
  QubitAssignment a;
  a.assign(W::kData, 2).assign(W::kAncilla, 0).assign(W::kIndex, 1).assign(
      W::kClass, 3);
  return a;
}

Circuit swap_decomposition(std::size_t n, std::size_t a, std::size_t b) {
  Circuit c(n);
  c.append(gates::cnot(a, b));
  c.append(gates::h(a)).append(gates::h(b));
  c.append(gates::cnot(a, b));
  c.append(gates::h(a)).append(gates::h(b));
  c.append(gates::cnot(a, b));
  return c;
}

Circuit toffoli_decomposition(std::size_t n, std::size_t c1, std::size_t c2,
                              std::size_t target) {
  Circuit c(n);
  c.append(gates::h(target));
  c.append(gates::cnot(c2, target));
  c.append(gates::tdg(target));
  c.append(gates::cnot(c1, target));
  c.append(gates::t(target));
  c.append(gates::cnot(c2, target));
  c.append(gates::tdg(c2));
  c.append(gates::tdg(target));
  c.append(gates::cnot(c1, target));
  c.append(gates::cnot(c1, c2));
  c.append(gates::t(c1));
  c.append(gates::tdg(c2));
  c.append(gates::t(target));
  c.append(gates::cnot(c1, c2));
  c.append(gates::s(c2));
  c.append(gates::h(target));
  return c;
}

Circuit toffoli_target_centred(std::size_t n, std::size_t c1, std::size_t c2,
                               std::size_t target) {
  // CCZ as a phase polynomial. Parities reached on the wires, in order:
  // target = c1^t, c2 = c1^c2^t, c2 = c1^c2, c2 = c2^t.
  Circuit c(n);
  c.append(gates::h(target));
  c.append(gates::t(c1)).append(gates::t(c2)).append(gates::t(target));
  c.append(gates::cnot(c1, target));
  c.append(gates::tdg(target));
  c.append(gates::cnot(target, c2));
  c.append(gates::t(c2));
  c.append(gates::cnot(c1, target));
  c.append(gates::cnot(target, c2));
  c.append(gates::tdg(c2));
  c.append(gates::cnot(c1, target));
  c.append(gates::cnot(target, c2));
  c.append(gates::tdg(c2));
  c.append(gates::cnot(c1, target));
  c.append(gates::cnot(target, c2));
  c.append(gates::h(target));
  return c;
}

Circuit cry_decomposition(std::size_t n, std::size_t control,
                          std::size_t target, double theta) {
  Circuit c(n);
  c.append(gates::cnot(control, target));
  c.append(gates::ry(target, -theta / 2));
  c.append(gates::cnot(control, target));
  c.append(gates::ry(target, theta / 2));
  return c;
}

Circuit ccry_decomposition(std::size_t n, std::size_t c1, std::size_t c2,
                           std::size_t target, double theta) {
  const double q = theta / 4;
  Circuit c(n);
  c.append(gates::ry(target, q));
  c.append(gates::cnot(c1, target));
  c.append(gates::ry(target, -q));
  c.append(gates::cnot(c2, target));
  c.append(gates::ry(target, q));
  c.append(gates::cnot(c1, target));
  c.append(gates::ry(target, -q));
  c.append(gates::cnot(c2, target));
  return c;
}

namespace {

using ToffoliExpander = std::function<Circuit(const GateOp&, std::size_t)>;

Circuit expand_all(const Circuit& circuit, const ToffoliExpander& toffoli) {
  const std::size_t n = circuit.n_qubits();
  Circuit out(n);
  const auto& steps = circuit.steps();
  std::size_t next_step = 0;
  const auto& ops = circuit.ops();
  for (std::size_t k = 0; k < ops.size(); ++k) {
    while (next_step < steps.size() && steps[next_step].first_op == k) {
      out.begin_step(steps[next_step++].label);
    }
    const GateOp& op = ops[k];
    const auto& q = op.qubits;
    switch (op.kind) {
      case GateKind::H:
      case GateKind::X:
      case GateKind::T:
      case GateKind::Tdg:
      case GateKind::S:
      case GateKind::Ry:
      case GateKind::CNOT:
        out.append(op);
        break;
      case GateKind::SWAP:
        out.append(swap_decomposition(n, q[0], q[1]));
        break;
      case GateKind::Toffoli:
        out.append(toffoli(op, n));
        break;
      case GateKind::CRy:
        out.append(cry_decomposition(n, q[0], q[1], op.theta));
        break;
      case GateKind::CCRy:
        out.append(ccry_decomposition(n, q[0], q[1], q[2], op.theta));
        break;
      default:
        throw UnsupportedGateError("cannot decompose gate kind " +
                                   std::to_string(static_cast<int>(op.kind)));
    }
  }
  while (next_step < steps.size()) out.begin_step(steps[next_step++].label);
  return out;
}

}  // namespace

Circuit decompose(const Circuit& circuit) {
  return expand_all(circuit, [](const GateOp& op, std::size_t n) {
    return toffoli_decomposition(n, op.qubits[0], op.qubits[1], op.qubits[2]);
  });
}

Circuit decompose(const Circuit& circuit, const ConnectivityGraph& graph,
                  const QubitAssignment& assignment) {
  auto linked = [&](std::size_t a, std::size_t b) {
    const auto pa = assignment.physical(a);
    const auto pb = assignment.physical(b);
    return pa && pb && graph.adjacent(*pa, *pb);
  };
  return expand_all(circuit, [&](const GateOp& op, std::size_t n) {
    const auto& q = op.qubits;
    if (!linked(q[0], q[1]) && linked(q[0], q[2]) && linked(q[1], q[2])) {
      return toffoli_target_centred(n, q[0], q[1], q[2]);
    }
    return toffoli_decomposition(n, q[0], q[1], q[2]);
  });
}

std::vector<ConnectivityViolation> validate_connectivity(
    const Circuit& circuit, const ConnectivityGraph& graph,
    const QubitAssignment& assignment) {
  auto physical_of = [&](std::size_t wire) {
    const auto p = assignment.physical(wire);
    if (!p) {
      throw AssignmentError("wire " + std::to_string(wire) +
                            " is used but has no physical qubit");
    }
    if (*p >= graph.n_physical()) {
      throw AssignmentError("wire " + std::to_string(wire) +
                            " assigned to missing physical qubit " +
                            std::to_string(*p));
    }
    return *p;
  };
  std::vector<ConnectivityViolation> violations;
  const auto& ops = circuit.ops();
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const GateOp& op = ops[k];
    if (!is_native(op.kind)) {
      throw UnsupportedGateError(std::string(gate_name(op.kind)) +
                                 " must be decomposed before validation");
    }
    for (std::size_t w : op.wires()) physical_of(w);
    if (op.kind != GateKind::CNOT) continue;
    const std::size_t pc = physical_of(op.qubits[0]);
    const std::size_t pt = physical_of(op.qubits[1]);
    if (!graph.adjacent(pc, pt)) {
      violations.push_back({k, op.qubits[0], op.qubits[1], pc, pt});
    }
  }
  return violations;
}

namespace {

std::string_view qasm_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::S: return "s";
    case GateKind::Ry: return "ry";
    case GateKind::CNOT: return "cx";
    default:
      throw UnsupportedGateError(std::string(gate_name(kind)) +
                                 " has no OpenQASM mapping; decompose first");
  }
}

std::string format_angle(double theta) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", theta);
  return buf;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

constexpr std::string_view kStepPrefix = "// step ";

}  // namespace

std::string export_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.n_qubits() << "];\n";
  const auto& steps = circuit.steps();
  std::size_t next_step = 0;
  const auto& ops = circuit.ops();
  for (std::size_t k = 0; k < ops.size(); ++k) {
    while (next_step < steps.size() && steps[next_step].first_op == k) {
      out << kStepPrefix << steps[next_step++].label << "\n";
    }
    const GateOp& op = ops[k];
    out << qasm_name(op.kind);
    if (op.kind == GateKind::Ry) out << "(" << format_angle(op.theta) << ")";
    const auto wires = op.wires();
    for (std::size_t j = 0; j < wires.size(); ++j) {
      out << (j == 0 ? " " : ",") << "q[" << wires[j] << "]";
    }
    out << ";\n";
  }
  while (next_step < steps.size()) {
    out << kStepPrefix << steps[next_step++].label << "\n";
  }
  return out.str();
}

namespace {

std::size_t parse_index(std::string_view s, std::size_t line) {
  s = trim(s);
  if (s.size() < 4 || s.substr(0, 2) != "q[" || s.back() != ']') {
    throw QasmParseError("expected q[<index>], got '" + std::string(s) + "'",
                         line);
  }
  const std::string digits(s.substr(2, s.size() - 3));
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char ch) { return std::isdigit(ch); })) {
    throw QasmParseError("bad qubit index '" + digits + "'", line);
  }
  return static_cast<std::size_t>(std::stoull(digits));
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  std::optional<Circuit> circuit;
  std::vector<std::string> pending_steps;
  bool saw_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.starts_with("//")) {
      if (line.starts_with(kStepPrefix)) {
        std::string label(trim(line.substr(kStepPrefix.size())));
        if (circuit) {
          circuit->begin_step(std::move(label));
        } else {
          pending_steps.push_back(std::move(label));
        }
      }
      continue;
    }
    if (line.back() != ';') throw QasmParseError("missing ';'", line_no);
    line = trim(line.substr(0, line.size() - 1));

    if (!saw_header) {
      if (line != "OPENQASM 2.0") {
        throw QasmParseError("expected 'OPENQASM 2.0;' header", line_no);
      }
      saw_header = true;
      continue;
    }
    if (line.starts_with("include")) {
      if (line != "include \"qelib1.inc\"") {
        throw QasmParseError("only qelib1.inc may be included", line_no);
      }
      continue;
    }
    if (line.starts_with("qreg")) {
      if (circuit) throw QasmParseError("only one qreg is supported", line_no);
      const std::string_view decl = trim(line.substr(4));
      circuit.emplace(parse_index(decl, line_no));
      for (auto& label : pending_steps) circuit->begin_step(std::move(label));
      pending_steps.clear();
      continue;
    }
    if (!circuit) throw QasmParseError("gate before qreg declaration", line_no);

    const std::size_t name_end = line.find_first_of(" (");
    if (name_end == std::string_view::npos) {
      throw QasmParseError("malformed statement", line_no);
    }
    const std::string_view name = line.substr(0, name_end);
    std::string_view rest = line.substr(name_end);
    double theta = 0.0;
    const bool has_param = rest.starts_with("(");
    if (has_param) {
      const std::size_t close = rest.find(')');
      if (close == std::string_view::npos) {
        throw QasmParseError("unbalanced parenthesis", line_no);
      }
      const std::string arg(trim(rest.substr(1, close - 1)));
      char* end = nullptr;
      theta = std::strtod(arg.c_str(), &end);
      if (arg.empty() || end != arg.c_str() + arg.size()) {
        throw QasmParseError("bad angle '" + arg + "'", line_no);
      }
      rest = rest.substr(close + 1);
    }
    std::vector<std::size_t> wires;
    rest = trim(rest);
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      wires.push_back(parse_index(rest.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }

    auto want = [&](std::size_t count, bool parametric) {
      if (wires.size() != count) {
        throw QasmParseError(std::string(name) + " takes " +
                                 std::to_string(count) + " qubit(s)",
                             line_no);
      }
      if (parametric != has_param) {
        throw QasmParseError(parametric ? "missing angle" : "unexpected angle",
                             line_no);
      }
    };
    GateOp op;
    if (name == "h") { want(1, false); op = gates::h(wires[0]); }
    else if (name == "x") { want(1, false); op = gates::x(wires[0]); }
    else if (name == "t") { want(1, false); op = gates::t(wires[0]); }
    else if (name == "tdg") { want(1, false); op = gates::tdg(wires[0]); }
    else if (name == "s") { want(1, false); op = gates::s(wires[0]); }
    else if (name == "ry") { want(1, true); op = gates::ry(wires[0], theta); }
    else if (name == "cx") { want(2, false); op = gates::cnot(wires[0], wires[1]); }
    else {
      throw QasmParseError("unsupported gate '" + std::string(name) + "'",
                           line_no);
    }
    try {
      circuit->append(op);
    } catch (const Error& e) {
      throw QasmParseError(e.what(), line_no);
    }
  }
  if (!circuit) throw QasmParseError("no qreg declaration", line_no);
  return *std::move(circuit);
}

}  // namespace qdc

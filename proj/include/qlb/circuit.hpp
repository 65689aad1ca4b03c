// Copyright 2026 The qlb authors
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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlb/problem.hpp"

namespace qlb {

enum class GateKind { H, RX, RZ, CNOT, SWAP };

std::string gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);

/// q0 is the sole operand of one-qubit gates, the control of CNOT, and the
/// first operand of SWAP. theta is meaningful for RX/RZ only.
struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 0;
  int q1 = -1;
  double theta = 0.0;

  static Gate h(int q) { return {GateKind::H, q, -1, 0.0}; }
  static Gate rx(int q, double theta) { return {GateKind::RX, q, -1, theta}; }
  static Gate rz(int q, double theta) { return {GateKind::RZ, q, -1, theta}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, control, target, 0.0}; }
  static Gate swap(int a, int b) { return {GateKind::SWAP, a, b, 0.0}; }

  bool is_two_qubit() const { return kind == GateKind::CNOT || kind == GateKind::SWAP; }
};

/// All qubits are measured implicitly at the end.
struct Circuit {
  int qubit_count = 0;
  std::vector<Gate> gates;
};

/// Throws std::invalid_argument on out-of-range operands or a two-qubit gate
/// with equal operands.
void validate_circuit(const Circuit& c);

struct QaoaParams {
  std::vector<double> gammas;
  std::vector<double> betas;

  int depth() const { return static_cast<int>(gammas.size()); }
};

/// Builds the layered ansatz: a Hadamard on every qubit, then per layer k one
/// cost block per edge in stored order (control = max endpoint, target = min,
/// CNOT / RZ(target, -w*gamma_k) / CNOT) followed by RX(q, 2*beta_k) on every
/// qubit.
Circuit build_qaoa_circuit(const WeightedGraph& g, const QaoaParams& params);

struct CircuitStats {
  int depth = 0;
  int two_qubit_count = 0;
  int gate_count = 0;
};

/// depth uses as-soon-as-possible layering: a gate lands one past the busiest
/// of its operand qubits.
CircuitStats circuit_stats(const Circuit& c);

/// Circuit schema: {"qubits": n, "gates": [{"g": "CNOT", "q": [1, 0]},
/// {"g": "RZ", "q": [0], "theta": -1.88}, ...]}.
nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

}  // namespace qlb

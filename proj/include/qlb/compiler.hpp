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
#include <utility>
#include <vector>

#include "qlb/circuit.hpp"

namespace qlb {

struct CouplingMap {
  int qubit_count = 0;
  std::vector<std::pair<int, int>> pairs;  // normalized to u < v, sorted

  static CouplingMap full(int qubit_count);
  static CouplingMap linear_chain(int qubit_count);

  bool coupled(int a, int b) const;
};

/// Throws std::invalid_argument on invalid pair endpoints or a disconnected
/// coupling graph (routing needs connectivity).
void validate_coupling(const CouplingMap& m);

/// extended: H/RX/RZ/CNOT/SWAP. restricted: RX/RZ/CNOT.
enum class NativeSet { extended, restricted };

bool is_native(GateKind k, NativeSet set);
std::string native_set_name(NativeSet set);
NativeSet native_set_from_name(const std::string& name);

struct DeviceSpec {
  CouplingMap coupling;
  NativeSet native_set = NativeSet::extended;
  std::string label;
};

struct CompiledCircuit {
  Circuit circuit;
  std::vector<int> final_layout;  // logical qubit -> physical qubit
  CircuitStats stats;
};

/// Rewrites non-native gates: H -> RX(pi/2) RZ(pi/2) RX(pi/2), SWAP ->
/// CNOT(a,b) CNOT(b,a) CNOT(a,b). Equivalent up to global phase.
Circuit decompose(const Circuit& c, const DeviceSpec& spec);

/// Greedy SWAP insertion with an identity initial layout: for a two-qubit
/// gate on uncoupled physical qubits the operand at the lower physical index
/// walks a BFS shortest path (ties toward lower indices) until adjacent.
/// Returns the routed circuit and the logical -> physical layout at
/// measurement time.
std::pair<Circuit, std::vector<int>> route(const Circuit& c, const CouplingMap& coupling);

/// route then decompose; stats describe the final circuit. Deterministic.
CompiledCircuit compile_circuit(const Circuit& c, const DeviceSpec& spec);

/// Maps a physical-qubit basis index to the logical index it measures:
/// logical bit q is physical bit layout[q].
std::uint64_t relabel_index(std::uint64_t physical, const std::vector<int>& layout);

/// JSON form: circuit schema plus {"layout": [...], "stats": {"depth": d,
/// "two_qubit_count": t, "gate_count": n}}.
nlohmann::json compiled_to_json(const CompiledCircuit& c);

}  // namespace qlb

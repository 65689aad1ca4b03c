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

#include "qlb/circuit.hpp"

#include <algorithm>
#include <stdexcept>

#include "qlb/errors.hpp"

namespace qlb {

std::string gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::RX: return "RX";
    case GateKind::RZ: return "RZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
  }
  throw std::logic_error("unreachable gate kind");
}

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "H") return GateKind::H;
  if (name == "RX") return GateKind::RX;
  if (name == "RZ") return GateKind::RZ;
  if (name == "CNOT") return GateKind::CNOT;
  if (name == "SWAP") return GateKind::SWAP;
  throw data_error("unknown gate kind \"" + name + "\"");
}

void validate_circuit(const Circuit& c) {
  if (c.qubit_count < 1) throw std::invalid_argument("circuit: qubit_count must be positive");
  for (const Gate& g : c.gates) {
    if (g.q0 < 0 || g.q0 >= c.qubit_count)
      throw std::invalid_argument("circuit: gate operand out of range");
    if (g.is_two_qubit()) {
      if (g.q1 < 0 || g.q1 >= c.qubit_count)
        throw std::invalid_argument("circuit: gate operand out of range");
      if (g.q0 == g.q1)
        throw std::invalid_argument("circuit: two-qubit gate needs distinct operands");
    }
  }
}

Circuit build_qaoa_circuit(const WeightedGraph& g, const QaoaParams& params) {
  validate_graph(g);
  if (params.gammas.empty() || params.gammas.size() != params.betas.size())
    throw std::invalid_argument("qaoa params: gammas and betas must have equal positive length");
  Circuit c;
  c.qubit_count = g.node_count;
  for (int q = 0; q < g.node_count; ++q) c.gates.push_back(Gate::h(q));
  for (std::size_t k = 0; k < params.gammas.size(); ++k) {
    double gamma = params.gammas[k];
    double beta = params.betas[k];
    for (const Edge& e : g.edges) {
      int control = std::max(e.u, e.v);
      int target = std::min(e.u, e.v);
      c.gates.push_back(Gate::cnot(control, target));
      c.gates.push_back(Gate::rz(target, -e.w * gamma));
      c.gates.push_back(Gate::cnot(control, target));
    }
    for (int q = 0; q < g.node_count; ++q) c.gates.push_back(Gate::rx(q, 2.0 * beta));
  }
  return c;
}

CircuitStats circuit_stats(const Circuit& c) {
  CircuitStats stats;
  stats.gate_count = static_cast<int>(c.gates.size());
  std::vector<int> qubit_depth(static_cast<std::size_t>(c.qubit_count), 0);
  for (const Gate& g : c.gates) {
    if (g.is_two_qubit()) {
      ++stats.two_qubit_count;
      int layer = std::max(qubit_depth[g.q0], qubit_depth[g.q1]) + 1;
      qubit_depth[g.q0] = layer;
      qubit_depth[g.q1] = layer;
    } else {
      ++qubit_depth[g.q0];
    }
  }
  for (int d : qubit_depth) stats.depth = std::max(stats.depth, d);
  return stats;
}

nlohmann::json circuit_to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates) {
    nlohmann::json rec;
    rec["g"] = gate_kind_name(g.kind);
    if (g.is_two_qubit())
      rec["q"] = {g.q0, g.q1};
    else
      rec["q"] = {g.q0};
    if (g.kind == GateKind::RX || g.kind == GateKind::RZ) rec["theta"] = g.theta;
    gates.push_back(rec);
  }
  return {{"qubits", c.qubit_count}, {"gates", gates}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("qubits") || !j.contains("gates"))
    throw data_error("circuit json: expected object with \"qubits\" and \"gates\"");
  Circuit c;
  if (!j["qubits"].is_number_integer())
    throw data_error("circuit json: \"qubits\" must be an integer");
  c.qubit_count = j["qubits"].get<int>();
  if (!j["gates"].is_array()) throw data_error("circuit json: \"gates\" must be an array");
  for (const auto& rec : j["gates"]) {
    if (!rec.is_object() || !rec.contains("g") || !rec.contains("q") || !rec["q"].is_array())
      throw data_error("circuit json: each gate needs \"g\" and \"q\"");
    Gate g;
    g.kind = gate_kind_from_name(rec["g"].get<std::string>());
    const auto& q = rec["q"];
    bool two = (g.kind == GateKind::CNOT || g.kind == GateKind::SWAP);
    if (q.size() != (two ? 2u : 1u))
      throw data_error("circuit json: wrong operand count for " + rec["g"].get<std::string>());
    g.q0 = q[0].get<int>();
    if (two) g.q1 = q[1].get<int>();
    if (g.kind == GateKind::RX || g.kind == GateKind::RZ) {
      if (!rec.contains("theta") || !rec["theta"].is_number())
        throw data_error("circuit json: rotation gate needs a numeric \"theta\"");
      g.theta = rec["theta"].get<double>();
    }
    c.gates.push_back(g);
  }
  try {
    validate_circuit(c);
  } catch (const std::invalid_argument& e) {
    throw data_error(std::string("circuit json: ") + e.what());
  }
  return c;
}

}  // namespace qlb

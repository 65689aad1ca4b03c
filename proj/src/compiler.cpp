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

#include "qlb/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>

#include "qlb/errors.hpp"

namespace qlb {

namespace {

std::vector<std::vector<int>> adjacency(const CouplingMap& m) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m.qubit_count));
  for (auto [u, v] : m.pairs) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

// BFS shortest path from `from` to `to`. Neighbors are scanned in ascending
// index order, so ties resolve toward lower physical indices.
std::vector<int> shortest_path(const std::vector<std::vector<int>>& adj, int from, int to) {
  std::vector<int> parent(adj.size(), -1);
  std::queue<int> frontier;
  parent[from] = from;
  frontier.push(from);
  while (!frontier.empty()) {
    int node = frontier.front();
    frontier.pop();
    if (node == to) break;
    for (int next : adj[node]) {
      if (parent[next] == -1) {
        parent[next] = node;
        frontier.push(next);
      }
    }
  }
  if (parent[to] == -1) throw std::invalid_argument("route: coupling graph is disconnected");
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

CouplingMap CouplingMap::full(int qubit_count) {
  CouplingMap m;
  m.qubit_count = qubit_count;
  for (int u = 0; u < qubit_count; ++u)
    for (int v = u + 1; v < qubit_count; ++v) m.pairs.emplace_back(u, v);
  return m;
}

CouplingMap CouplingMap::linear_chain(int qubit_count) {
  CouplingMap m;
  m.qubit_count = qubit_count;
  for (int u = 0; u + 1 < qubit_count; ++u) m.pairs.emplace_back(u, u + 1);
  return m;
}

bool CouplingMap::coupled(int a, int b) const {
  auto key = std::minmax(a, b);
  return std::find(pairs.begin(), pairs.end(), std::pair<int, int>(key.first, key.second)) !=
         pairs.end();
}

void validate_coupling(const CouplingMap& m) {
  if (m.qubit_count < 1) throw std::invalid_argument("coupling: qubit_count must be positive");
  for (auto [u, v] : m.pairs)
    if (u < 0 || v < 0 || u >= m.qubit_count || v >= m.qubit_count || u == v)
      throw std::invalid_argument("coupling: invalid pair");
  if (m.qubit_count == 1) return;
  auto adj = adjacency(m);
  std::vector<char> seen(static_cast<std::size_t>(m.qubit_count), 0);
  std::queue<int> frontier;
  seen[0] = 1;
  frontier.push(0);
  int reached = 1;
  while (!frontier.empty()) {
    int node = frontier.front();
    frontier.pop();
    for (int next : adj[node])
      if (!seen[next]) {
        seen[next] = 1;
        ++reached;
        frontier.push(next);
      }
  }
  if (reached != m.qubit_count)
    throw std::invalid_argument("coupling: graph must be connected for routing");
}

bool is_native(GateKind k, NativeSet set) {
  switch (set) {
    case NativeSet::extended:
      return true;
    case NativeSet::restricted:
      return k == GateKind::RX || k == GateKind::RZ || k == GateKind::CNOT;
  }
  return false;
}

std::string native_set_name(NativeSet set) {
  return set == NativeSet::extended ? "extended" : "restricted";
}

NativeSet native_set_from_name(const std::string& name) {
  if (name == "extended") return NativeSet::extended;
  if (name == "restricted") return NativeSet::restricted;
  throw data_error("unknown native set \"" + name + "\"");
}

Circuit decompose(const Circuit& c, const DeviceSpec& spec) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  Circuit out;
  out.qubit_count = c.qubit_count;
  for (const Gate& g : c.gates) {
    if (is_native(g.kind, spec.native_set)) {
      out.gates.push_back(g);
      continue;
    }
    switch (g.kind) {
      case GateKind::H:
        out.gates.push_back(Gate::rx(g.q0, half_pi));
        out.gates.push_back(Gate::rz(g.q0, half_pi));
        out.gates.push_back(Gate::rx(g.q0, half_pi));
        break;
      case GateKind::SWAP:
        out.gates.push_back(Gate::cnot(g.q0, g.q1));
        out.gates.push_back(Gate::cnot(g.q1, g.q0));
        out.gates.push_back(Gate::cnot(g.q0, g.q1));
        break;
      default:
        throw std::invalid_argument("decompose: no rule for gate " + gate_kind_name(g.kind));
    }
  }
  return out;
}

std::pair<Circuit, std::vector<int>> route(const Circuit& c, const CouplingMap& coupling) {
  validate_circuit(c);
  validate_coupling(coupling);
  if (c.qubit_count != coupling.qubit_count)
    throw std::invalid_argument("route: circuit and coupling qubit counts differ");
  auto adj = adjacency(coupling);

  std::vector<int> l2p(static_cast<std::size_t>(c.qubit_count));
  std::vector<int> p2l(static_cast<std::size_t>(c.qubit_count));
  for (int q = 0; q < c.qubit_count; ++q) l2p[q] = p2l[q] = q;

  Circuit out;
  out.qubit_count = c.qubit_count;
  auto emit_swap = [&](int pa, int pb) {
    out.gates.push_back(Gate::swap(pa, pb));
    std::swap(p2l[pa], p2l[pb]);
    l2p[p2l[pa]] = pa;
    l2p[p2l[pb]] = pb;
  };

  for (const Gate& g : c.gates) {
    if (!g.is_two_qubit()) {
      Gate placed = g;
      placed.q0 = l2p[g.q0];
      out.gates.push_back(placed);
      continue;
    }
    int pa = l2p[g.q0];
    int pb = l2p[g.q1];
    if (!coupling.coupled(pa, pb)) {
      int mover = std::min(pa, pb);
      int stayer = std::max(pa, pb);
      std::vector<int> path = shortest_path(adj, mover, stayer);
      // Walk the mover along the path until adjacent to the stayer.
      for (std::size_t step = 1; step + 1 < path.size(); ++step)
        emit_swap(path[step - 1], path[step]);
      pa = l2p[g.q0];
      pb = l2p[g.q1];
    }
    Gate placed = g;
    placed.q0 = pa;
    placed.q1 = pb;
    out.gates.push_back(placed);
  }
  return {std::move(out), std::move(l2p)};
}

CompiledCircuit compile_circuit(const Circuit& c, const DeviceSpec& spec) {
  auto [routed, layout] = route(c, spec.coupling);
  CompiledCircuit result;
  result.circuit = decompose(routed, spec);
  result.final_layout = std::move(layout);
  result.stats = circuit_stats(result.circuit);
  return result;
}

std::uint64_t relabel_index(std::uint64_t physical, const std::vector<int>& layout) {
  std::uint64_t logical = 0;
  for (std::size_t q = 0; q < layout.size(); ++q)
    if ((physical >> layout[q]) & 1u) logical |= (std::uint64_t{1} << q);
  return logical;
}

nlohmann::json compiled_to_json(const CompiledCircuit& c) {
  nlohmann::json j = circuit_to_json(c.circuit);
  j["layout"] = c.final_layout;
  j["stats"] = {{"depth", c.stats.depth},
                {"two_qubit_count", c.stats.two_qubit_count},
                {"gate_count", c.stats.gate_count}};
  return j;
}

}  // namespace qlb

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

#include <cmath>
#include <set>

#include <doctest.h>

#include "dense_reference.hpp"
#include "qlb/compiler.hpp"
#include "qlb/simulator.hpp"

using namespace qlb;

namespace {

bool respects_device(const Circuit& c, const DeviceSpec& spec) {
  for (const Gate& g : c.gates) {
    if (!is_native(g.kind, spec.native_set)) return false;
    if (g.is_two_qubit() && !spec.coupling.coupled(g.q0, g.q1)) return false;
  }
  return true;
}

/// Distribution over logical assignments after compiling: physical outcome
/// probabilities folded back through the final layout.
std::vector<double> compiled_logical_distribution(const Circuit& c, const DeviceSpec& spec) {
  CompiledCircuit compiled = compile_circuit(c, spec);
  std::vector<double> physical = simulate_exact(compiled.circuit);
  std::vector<double> logical(physical.size(), 0.0);
  for (std::size_t x = 0; x < physical.size(); ++x)
    logical[relabel_index(x, compiled.final_layout)] += physical[x];
  return logical;
}

}  // namespace

TEST_SUITE("compiler") {

TEST_CASE("coupling map constructors") {
  CouplingMap full = CouplingMap::full(4);
  CHECK(full.pairs.size() == 6);
  CHECK(full.coupled(0, 3));
  CHECK(full.coupled(3, 0));
  CouplingMap chain = CouplingMap::linear_chain(4);
  CHECK(chain.pairs.size() == 3);
  CHECK(chain.coupled(1, 2));
  CHECK_FALSE(chain.coupled(0, 2));
  CHECK_FALSE(chain.coupled(1, 1));
  validate_coupling(full);
  validate_coupling(chain);
}

TEST_CASE("coupling validation rejects broken maps") {
  CHECK_THROWS_AS(validate_coupling(CouplingMap{3, {{0, 3}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_coupling(CouplingMap{3, {{1, 1}}}), std::invalid_argument);
  // 0-1 coupled, 2 isolated: connected routing is impossible.
  CHECK_THROWS_AS(validate_coupling(CouplingMap{3, {{0, 1}}}), std::invalid_argument);
  validate_coupling(CouplingMap{1, {}});
}

TEST_CASE("native set membership") {
  CHECK(is_native(GateKind::H, NativeSet::extended));
  CHECK(is_native(GateKind::SWAP, NativeSet::extended));
  CHECK_FALSE(is_native(GateKind::H, NativeSet::restricted));
  CHECK_FALSE(is_native(GateKind::SWAP, NativeSet::restricted));
  CHECK(is_native(GateKind::RX, NativeSet::restricted));
  CHECK(is_native(GateKind::RZ, NativeSet::restricted));
  CHECK(is_native(GateKind::CNOT, NativeSet::restricted));
  CHECK(native_set_from_name("restricted") == NativeSet::restricted);
  CHECK(native_set_name(NativeSet::extended) == "extended");
}

TEST_CASE("hadamard decomposition is exact up to global phase") {
  DeviceSpec spec{CouplingMap::full(1), NativeSet::restricted, ""};
  Circuit h{1, {Gate::h(0)}};
  Circuit lowered = decompose(h, spec);
  REQUIRE(lowered.gates.size() == 3);
  CHECK(lowered.gates[0].kind == GateKind::RX);
  CHECK(lowered.gates[1].kind == GateKind::RZ);
  CHECK(lowered.gates[2].kind == GateKind::RX);
  CHECK(qlb::testing::unitaries_equal_up_to_phase(qlb::testing::dense_unitary(h),
                                                  qlb::testing::dense_unitary(lowered), 1e-12));
}

TEST_CASE("swap decomposition is exactly three cnots") {
  DeviceSpec spec{CouplingMap::full(2), NativeSet::restricted, ""};
  Circuit s{2, {Gate::swap(0, 1)}};
  Circuit lowered = decompose(s, spec);
  REQUIRE(lowered.gates.size() == 3);
  for (const Gate& g : lowered.gates) CHECK(g.kind == GateKind::CNOT);
  CHECK(qlb::testing::unitaries_equal_up_to_phase(qlb::testing::dense_unitary(s),
                                                  qlb::testing::dense_unitary(lowered), 1e-12));
}

TEST_CASE("native gates pass through decomposition unchanged") {
  DeviceSpec spec{CouplingMap::full(5), NativeSet::extended, ""};
  Circuit c = build_qaoa_circuit(builtin_instance(), {{0.3}, {0.2}});
  Circuit lowered = decompose(c, spec);
  CHECK(lowered.gates.size() == c.gates.size());
}

TEST_CASE("routing on full coupling is the identity") {
  Circuit c = build_qaoa_circuit(builtin_instance(), {{0.3}, {0.2}});
  auto [routed, layout] = route(c, CouplingMap::full(5));
  CHECK(routed.gates.size() == c.gates.size());
  CHECK(layout == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("routing a distant cnot on a chain inserts swaps") {
  // Physical distance 3 between qubits 1 and 4: at least two swaps before
  // the pair is adjacent.
  Circuit c{5, {Gate::h(4), Gate::cnot(4, 1)}};
  auto [routed, layout] = route(c, CouplingMap::linear_chain(5));
  int swaps = 0;
  for (const Gate& g : routed.gates)
    if (g.kind == GateKind::SWAP) ++swaps;
  CHECK(swaps >= 2);
  for (const Gate& g : routed.gates)
    if (g.is_two_qubit()) CHECK(CouplingMap::linear_chain(5).coupled(g.q0, g.q1));
  // Layout is a permutation.
  std::set<int> seen(layout.begin(), layout.end());
  CHECK(seen.size() == 5);

  // The logical distribution survives the relabeling.
  std::vector<double> direct = simulate_exact(c);
  DeviceSpec spec{CouplingMap::linear_chain(5), NativeSet::extended, ""};
  std::vector<double> folded = compiled_logical_distribution(c, spec);
  for (std::size_t x = 0; x < direct.size(); ++x)
    CHECK(std::abs(folded[x] - (direct[x])) <= 1e-12);
}

TEST_CASE("compilation preserves semantics on random circuits") {
  DeviceSpec chain_restricted{CouplingMap::linear_chain(5), NativeSet::restricted, ""};
  DeviceSpec chain_extended{CouplingMap::linear_chain(5), NativeSet::extended, ""};
  for (std::uint64_t seed = 300; seed < 320; ++seed) {
    Circuit c = qlb::testing::random_circuit(seed);
    std::vector<double> direct = qlb::testing::dense_probabilities(c);
    for (const DeviceSpec& base : {chain_restricted, chain_extended}) {
      DeviceSpec spec = base;
      spec.coupling = c.qubit_count == 1 ? CouplingMap::full(1)
                                         : CouplingMap::linear_chain(c.qubit_count);
      CompiledCircuit compiled = compile_circuit(c, spec);
      CHECK(respects_device(compiled.circuit, spec));
      std::vector<double> folded = compiled_logical_distribution(c, spec);
      for (std::size_t x = 0; x < direct.size(); ++x)
        CHECK(std::abs(folded[x] - (direct[x])) <= 1e-11);
    }
  }
}

TEST_CASE("compilation is deterministic") {
  DeviceSpec spec{CouplingMap::linear_chain(5), NativeSet::restricted, ""};
  Circuit c = build_qaoa_circuit(builtin_instance(), {{0.7}, {0.4}});
  CompiledCircuit a = compile_circuit(c, spec);
  CompiledCircuit b = compile_circuit(c, spec);
  CHECK(a.final_layout == b.final_layout);
  REQUIRE(a.circuit.gates.size() == b.circuit.gates.size());
  for (std::size_t i = 0; i < a.circuit.gates.size(); ++i) {
    CHECK(a.circuit.gates[i].kind == b.circuit.gates[i].kind);
    CHECK(a.circuit.gates[i].q0 == b.circuit.gates[i].q0);
    CHECK(a.circuit.gates[i].q1 == b.circuit.gates[i].q1);
    CHECK(a.circuit.gates[i].theta == b.circuit.gates[i].theta);
  }
}

TEST_CASE("restricted chain compilation costs more than the logical circuit") {
  Circuit c = build_qaoa_circuit(builtin_instance(), {{0.7}, {0.4}});
  CircuitStats logical = circuit_stats(c);
  DeviceSpec spec{CouplingMap::linear_chain(5), NativeSet::restricted, "chain"};
  CompiledCircuit compiled = compile_circuit(c, spec);
  CHECK(compiled.stats.gate_count == compiled.circuit.gates.size());
  CHECK(compiled.stats.two_qubit_count > logical.two_qubit_count);
  CHECK(compiled.stats.gate_count > logical.gate_count);
  CHECK(compiled.stats.depth >= logical.depth);
  // Frozen regression values for the greedy router on the builtin instance:
  // three chain-distant edges cost two swaps each, three cnots per swap.
  CHECK(logical.two_qubit_count == 10);
  CHECK(compiled.stats.two_qubit_count == 10 + 6 * 3);
}

TEST_CASE("full-coupling extended compilation is a no-op") {
  Circuit c = build_qaoa_circuit(builtin_instance(), {{0.7}, {0.4}});
  DeviceSpec spec{CouplingMap::full(5), NativeSet::extended, ""};
  CompiledCircuit compiled = compile_circuit(c, spec);
  CHECK(compiled.circuit.gates.size() == c.gates.size());
  CHECK(compiled.final_layout == std::vector<int>{0, 1, 2, 3, 4});
  CircuitStats direct = circuit_stats(c);
  CHECK(compiled.stats.depth == direct.depth);
  CHECK(compiled.stats.two_qubit_count == direct.two_qubit_count);
  CHECK(compiled.stats.gate_count == direct.gate_count);
}

TEST_CASE("relabel_index moves bits through the layout") {
  // layout[logical] = physical; logical bit q reads physical bit layout[q].
  std::vector<int> layout{2, 0, 1};
  CHECK(relabel_index(0b001, layout) == 0b010);  // physical 0 set -> logical 1
  CHECK(relabel_index(0b100, layout) == 0b001);  // physical 2 set -> logical 0
  CHECK(relabel_index(0b111, layout) == 0b111);
  std::vector<int> identity{0, 1, 2, 3, 4};
  for (std::uint64_t x = 0; x < 32; ++x) CHECK(relabel_index(x, identity) == x);
}

TEST_CASE("empty circuit compiles to an empty circuit") {
  DeviceSpec spec{CouplingMap::linear_chain(3), NativeSet::restricted, ""};
  CompiledCircuit compiled = compile_circuit(Circuit{3, {}}, spec);
  CHECK(compiled.circuit.gates.empty());
  CHECK(compiled.final_layout == std::vector<int>{0, 1, 2});
  CHECK(compiled.stats.gate_count == 0);
  CHECK(compiled.stats.depth == 0);
}

TEST_CASE("compiled json carries layout and stats") {
  DeviceSpec spec{CouplingMap::linear_chain(5), NativeSet::restricted, ""};
  Circuit c = build_qaoa_circuit(builtin_instance(), {{0.7}, {0.4}});
  CompiledCircuit compiled = compile_circuit(c, spec);
  nlohmann::json j = compiled_to_json(compiled);
  CHECK(j.at("qubits").get<int>() == 5);
  CHECK(j.at("layout").get<std::vector<int>>() == compiled.final_layout);
  CHECK(j.at("stats").at("two_qubit_count").get<std::size_t>() ==
        compiled.stats.two_qubit_count);
  Circuit back = circuit_from_json(j);
  CHECK(back.gates.size() == compiled.circuit.gates.size());
}

TEST_CASE("compile rejects circuits wider than the device") {
  DeviceSpec spec{CouplingMap::linear_chain(3), NativeSet::extended, ""};
  CHECK_THROWS_AS(compile_circuit(Circuit{4, {Gate::h(0)}}, spec), std::invalid_argument);
}

}  // TEST_SUITE

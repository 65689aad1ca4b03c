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

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlb/circuit.hpp"
#include "qlb/problem.hpp"

namespace qlb {

constexpr int kMaxQubits = kMaxNodes;

/// Basis index convention: bit q of the amplitude index is qubit q, matching
/// Assignment rendering (character q = bit q).
struct Statevector {
  int qubit_count = 0;
  std::vector<std::complex<double>> amps;

  static Statevector zero_state(int qubit_count);
  double norm_sq() const;
};

/// In-place unitary action. RX(theta) = cos(theta/2) I - i sin(theta/2) X,
/// RZ(theta) = diag(e^{-i theta/2}, e^{+i theta/2}), CNOT flips the target
/// where the control bit is 1.
void apply_gate(Statevector& s, const Gate& g);

/// Applies Pauli X, Y or Z (pauli = 0, 1, 2) to one qubit. Used by the noisy
/// trajectory sampler.
void apply_pauli(Statevector& s, int qubit, int pauli);

/// |amplitude|^2 of the final state from |0...0>. Throws std::invalid_argument
/// above kMaxQubits.
std::vector<double> simulate_exact(const Circuit& c);

/// Sum_x p(x) * energy(g, x) over the exact distribution.
double expectation_exact(const WeightedGraph& g, const Circuit& c);

struct NoiseProfile {
  double p1 = 0.0;         // depolarizing probability per one-qubit gate
  double p2 = 0.0;         // depolarizing probability per two-qubit gate
  double p_readout = 0.0;  // per-qubit bit-flip probability at measurement
  std::string label;

  bool is_zero() const { return p1 == 0.0 && p2 == 0.0 && p_readout == 0.0; }
};

void validate_noise(const NoiseProfile& noise);

struct Counts {
  std::map<Assignment, std::uint64_t> histogram;
  std::uint64_t shots = 0;
};

/// Shot-ordered measurement outcomes as basis indices (readout flips already
/// applied). Shot s draws from SplitMix64 seeded with mix64(seed, s), so the
/// outcome list is independent of evaluation order. Gate noise, when enabled,
/// follows each gate with an independent depolarizing event per operand qubit
/// (uniform X/Y/Z). A random draw is consumed only where the corresponding
/// probability is positive, so the zero-gate-noise path reproduces the full
/// trajectory bit for bit.
std::vector<std::uint64_t> sample_shots(const Circuit& c, std::uint64_t shots,
                                        const NoiseProfile& noise, std::uint64_t seed);

/// Aggregation of sample_shots into a histogram.
Counts sample_counts(const Circuit& c, std::uint64_t shots, const NoiseProfile& noise,
                     std::uint64_t seed);

/// Sum_x (count(x)/shots) * energy(g, x). Throws std::invalid_argument on
/// empty counts or assignment length mismatch.
double energy_from_counts(const WeightedGraph& g, const Counts& counts);

/// Counts schema: {"shots": 1000, "counts": {"01001": 137, ...}}.
nlohmann::json counts_to_json(const Counts& counts);
Counts counts_from_json(const nlohmann::json& j);

namespace detail {

/// The general per-shot trajectory path regardless of noise level. Exposed so
/// tests can pin sample_counts' zero-noise fast path against it.
std::vector<std::uint64_t> sample_shots_trajectory(const Circuit& c, std::uint64_t shots,
                                                   const NoiseProfile& noise, std::uint64_t seed);

}  // namespace detail

}  // namespace qlb

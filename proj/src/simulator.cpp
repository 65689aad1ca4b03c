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

#include "qlb/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qlb/errors.hpp"
#include "qlb/rng.hpp"

namespace qlb {

namespace {

using cd = std::complex<double>;

void check_capacity(int qubit_count) {
  if (qubit_count < 1) throw std::invalid_argument("simulator: qubit_count must be positive");
  if (qubit_count > kMaxQubits)
    throw std::invalid_argument("simulator: " + std::to_string(qubit_count) +
                                " qubits exceed the capacity of " + std::to_string(kMaxQubits));
}

// Visits every basis pair (i, i | bit) with the qubit's bit clear in i.
template <typename F>
void for_each_pair(std::vector<cd>& amps, int qubit, F&& f) {
  const std::size_t bit = std::size_t{1} << qubit;
  const std::size_t dim = amps.size();
  for (std::size_t i = 0; i < dim; ++i)
    if (!(i & bit)) f(amps[i], amps[i | bit]);
}

std::vector<double> probabilities(const Statevector& s) {
  std::vector<double> p(s.amps.size());
  for (std::size_t i = 0; i < s.amps.size(); ++i) p[i] = std::norm(s.amps[i]);
  return p;
}

// cumulative[i] = p(0) + ... + p(i); the last entry is forced to 1 so a draw
// of u -> first i with u < cumulative[i] always lands.
std::vector<double> cumulative_of(const std::vector<double>& p) {
  std::vector<double> cumulative(p.size());
  double run = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    run += p[i];
    cumulative[i] = run;
  }
  cumulative.back() = 1.0;
  return cumulative;
}

std::uint64_t draw_index(const std::vector<double>& cumulative, double u) {
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  if (it == cumulative.end()) --it;
  return static_cast<std::uint64_t>(it - cumulative.begin());
}

std::uint64_t apply_readout_flips(std::uint64_t x, int qubit_count, double p_readout,
                                  SplitMix64& rng) {
  if (p_readout <= 0.0) return x;
  for (int q = 0; q < qubit_count; ++q)
    if (rng.u01() < p_readout) x ^= (std::uint64_t{1} << q);
  return x;
}

void maybe_depolarize(Statevector& s, int qubit, double p, SplitMix64& rng) {
  if (p <= 0.0) return;
  if (rng.u01() < p) apply_pauli(s, qubit, static_cast<int>(rng.next() % 3));
}

}  // namespace

Statevector Statevector::zero_state(int qubit_count) {
  check_capacity(qubit_count);
  Statevector s;
  s.qubit_count = qubit_count;
  s.amps.assign(std::size_t{1} << qubit_count, cd{0.0, 0.0});
  s.amps[0] = cd{1.0, 0.0};
  return s;
}

double Statevector::norm_sq() const {
  double sum = 0.0;
  for (const cd& a : amps) sum += std::norm(a);
  return sum;
}

void apply_gate(Statevector& s, const Gate& g) {
  if (g.q0 < 0 || g.q0 >= s.qubit_count || (g.is_two_qubit() && (g.q1 < 0 || g.q1 >= s.qubit_count)))
    throw std::invalid_argument("apply_gate: operand out of range");
  static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::H:
      for_each_pair(s.amps, g.q0, [](cd& a0, cd& a1) {
        cd t0 = (a0 + a1) * inv_sqrt2;
        cd t1 = (a0 - a1) * inv_sqrt2;
        a0 = t0;
        a1 = t1;
      });
      break;
    case GateKind::RX: {
      double c = std::cos(g.theta / 2.0);
      double sn = std::sin(g.theta / 2.0);
      cd misn{0.0, -sn};
      for_each_pair(s.amps, g.q0, [&](cd& a0, cd& a1) {
        cd t0 = c * a0 + misn * a1;
        cd t1 = misn * a0 + c * a1;
        a0 = t0;
        a1 = t1;
      });
      break;
    }
    case GateKind::RZ: {
      cd phase0 = std::polar(1.0, -g.theta / 2.0);
      cd phase1 = std::polar(1.0, g.theta / 2.0);
      for_each_pair(s.amps, g.q0, [&](cd& a0, cd& a1) {
        a0 *= phase0;
        a1 *= phase1;
      });
      break;
    }
    case GateKind::CNOT: {
      const std::size_t cbit = std::size_t{1} << g.q0;
      const std::size_t tbit = std::size_t{1} << g.q1;
      for (std::size_t i = 0; i < s.amps.size(); ++i)
        if ((i & cbit) && !(i & tbit)) std::swap(s.amps[i], s.amps[i | tbit]);
      break;
    }
    case GateKind::SWAP: {
      const std::size_t abit = std::size_t{1} << g.q0;
      const std::size_t bbit = std::size_t{1} << g.q1;
      for (std::size_t i = 0; i < s.amps.size(); ++i)
        if ((i & abit) && !(i & bbit)) std::swap(s.amps[i], s.amps[(i ^ abit) | bbit]);
      break;
    }
  }
}

void apply_pauli(Statevector& s, int qubit, int pauli) {
  if (qubit < 0 || qubit >= s.qubit_count)
    throw std::invalid_argument("apply_pauli: qubit out of range");
  switch (pauli) {
    case 0:  // X
      for_each_pair(s.amps, qubit, [](cd& a0, cd& a1) { std::swap(a0, a1); });
      break;
    case 1:  // Y
      for_each_pair(s.amps, qubit, [](cd& a0, cd& a1) {
        cd t0 = cd{0.0, -1.0} * a1;
        cd t1 = cd{0.0, 1.0} * a0;
        a0 = t0;
        a1 = t1;
      });
      break;
    case 2:  // Z
      for_each_pair(s.amps, qubit, [](cd&, cd& a1) { a1 = -a1; });
      break;
    default:
      throw std::invalid_argument("apply_pauli: pauli must be 0, 1 or 2");
  }
}

std::vector<double> simulate_exact(const Circuit& c) {
  validate_circuit(c);
  check_capacity(c.qubit_count);
  Statevector s = Statevector::zero_state(c.qubit_count);
  for (const Gate& g : c.gates) apply_gate(s, g);
  return probabilities(s);
}

double expectation_exact(const WeightedGraph& g, const Circuit& c) {
  if (g.node_count != c.qubit_count)
    throw std::invalid_argument("expectation_exact: graph and circuit sizes differ");
  std::vector<double> p = simulate_exact(c);
  double e = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) e += p[x] * energy_index(g, x);
  return e;
}

void validate_noise(const NoiseProfile& noise) {
  auto ok = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!ok(noise.p1) || !ok(noise.p2) || !ok(noise.p_readout))
    throw data_error("noise profile: probabilities must lie in [0, 1]");
}

namespace detail {

std::vector<std::uint64_t> sample_shots_trajectory(const Circuit& c, std::uint64_t shots,
                                                   const NoiseProfile& noise, std::uint64_t seed) {
  validate_circuit(c);
  check_capacity(c.qubit_count);
  validate_noise(noise);
  if (shots == 0) throw std::invalid_argument("sample: shots must be positive");
  std::vector<std::uint64_t> outcomes(shots);
  Statevector s = Statevector::zero_state(c.qubit_count);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    SplitMix64 rng(mix64(seed, shot));
    std::fill(s.amps.begin(), s.amps.end(), cd{0.0, 0.0});
    s.amps[0] = cd{1.0, 0.0};
    for (const Gate& g : c.gates) {
      apply_gate(s, g);
      if (g.is_two_qubit()) {
        maybe_depolarize(s, g.q0, noise.p2, rng);
        maybe_depolarize(s, g.q1, noise.p2, rng);
      } else {
        maybe_depolarize(s, g.q0, noise.p1, rng);
      }
    }
    std::uint64_t x = draw_index(cumulative_of(probabilities(s)), rng.u01());
    outcomes[shot] = apply_readout_flips(x, c.qubit_count, noise.p_readout, rng);
  }
  return outcomes;
}

}  // namespace detail

std::vector<std::uint64_t> sample_shots(const Circuit& c, std::uint64_t shots,
                                        const NoiseProfile& noise, std::uint64_t seed) {
  if (noise.p1 > 0.0 || noise.p2 > 0.0)
    return detail::sample_shots_trajectory(c, shots, noise, seed);
  // Gate-noise-free fast path: the pre-measurement state is shot-independent,
  // so the statevector is evolved once. Per-shot draws match the trajectory
  // path exactly because zero-probability events consume no draws there.
  validate_noise(noise);
  if (shots == 0) throw std::invalid_argument("sample: shots must be positive");
  std::vector<double> cumulative = cumulative_of(simulate_exact(c));
  std::vector<std::uint64_t> outcomes(shots);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    SplitMix64 rng(mix64(seed, shot));
    std::uint64_t x = draw_index(cumulative, rng.u01());
    outcomes[shot] = apply_readout_flips(x, c.qubit_count, noise.p_readout, rng);
  }
  return outcomes;
}

Counts sample_counts(const Circuit& c, std::uint64_t shots, const NoiseProfile& noise,
                     std::uint64_t seed) {
  Counts counts;
  counts.shots = shots;
  for (std::uint64_t x : sample_shots(c, shots, noise, seed))
    ++counts.histogram[assignment_from_index(x, c.qubit_count)];
  return counts;
}

double energy_from_counts(const WeightedGraph& g, const Counts& counts) {
  if (counts.histogram.empty() || counts.shots == 0)
    throw std::invalid_argument("energy_from_counts: empty counts");
  double sum = 0.0;
  std::uint64_t total = 0;
  for (const auto& [assignment, count] : counts.histogram) {
    sum += static_cast<double>(count) * energy(g, assignment);
    total += count;
  }
  if (total != counts.shots)
    throw std::invalid_argument("energy_from_counts: histogram does not sum to shots");
  return sum / static_cast<double>(counts.shots);
}

nlohmann::json counts_to_json(const Counts& counts) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [assignment, count] : counts.histogram) hist[assignment] = count;
  return {{"shots", counts.shots}, {"counts", hist}};
}

Counts counts_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("shots") || !j.contains("counts") ||
      !j["shots"].is_number_unsigned() || !j["counts"].is_object())
    throw data_error("counts json: expected {\"shots\": n, \"counts\": {...}}");
  Counts counts;
  counts.shots = j["shots"].get<std::uint64_t>();
  std::uint64_t total = 0;
  for (const auto& [key, value] : j["counts"].items()) {
    if (!value.is_number_unsigned()) throw data_error("counts json: counts must be nonnegative");
    counts.histogram[key] = value.get<std::uint64_t>();
    total += counts.histogram[key];
  }
  if (total != counts.shots || counts.shots == 0)
    throw data_error("counts json: histogram must sum to a positive shot count");
  return counts;
}

}  // namespace qlb

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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlb/backends.hpp"
#include "qlb/problem.hpp"

namespace qlb {

struct GridSpec {
  std::vector<double> gamma_values;
  std::vector<double> beta_values;

  /// 21 gamma values spanning [0, pi] and 11 beta values spanning [0, pi/2],
  /// spaced pi/20 apart.
  static GridSpec default_grid();
};

/// Throws data_error unless both axes are nonempty and strictly ascending.
void validate_grid(const GridSpec& grid);

/// Shot budget per grid point, or the exact-expectation mode.
struct ShotSpec {
  bool exact = false;
  std::uint64_t count = 0;

  static ShotSpec exact_mode() { return {true, 0}; }
  static ShotSpec sampled(std::uint64_t shots) { return {false, shots}; }
  std::string to_string() const { return exact ? "exact" : std::to_string(count); }
};

inline constexpr std::uint64_t kDefaultShots = 1000;

struct LandscapeMeta {
  std::string backend;
  ShotSpec shots;
  int depth = 1;
  std::optional<std::array<double, 2>> fixed_layer1;  // depth 2 only
  std::uint64_t master_seed = 0;
  std::string created_at;
};

/// energies[gamma_index][beta_index]
struct Landscape {
  GridSpec grid;
  std::vector<std::vector<double>> energies;
  LandscapeMeta meta;
};

struct LandscapeRunOptions {
  ShotSpec shots = ShotSpec::sampled(kDefaultShots);
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string checkpoint_path;  // empty disables checkpointing
};

/// Evaluates the energy at every grid point through the backend adapter, one
/// batch per gamma row. The point at (gamma_index i, beta_index j) samples
/// with seed mix64(mix64(seed, i), j) whatever the batching capability or
/// worker count, and completed rows are checkpointed so interrupted runs
/// resume without resampling. depth 2 requires fixed_layer1 and evaluates
/// layer-2 angles over the grid.
Landscape sample_landscape(Backend& backend, const WeightedGraph& g, int depth,
                           std::optional<std::array<double, 2>> fixed_layer1,
                           const GridSpec& grid, const LandscapeRunOptions& opts);

struct MinPoint {
  std::size_t gamma_index = 0;
  std::size_t beta_index = 0;
  double gamma = 0.0;
  double beta = 0.0;
  double energy = 0.0;
};

/// Grid point with minimal energy; ties break toward the smallest gamma
/// index, then the smallest beta index.
MinPoint find_minimum(const Landscape& l);

/// depth-1 sweep, then a depth-2 sweep with layer 1 pinned to the depth-1
/// minimum. Both landscapes share the master seed and backend.
std::pair<Landscape, Landscape> warm_start_chain(Backend& backend, const WeightedGraph& g,
                                                 const GridSpec& grid,
                                                 const LandscapeRunOptions& opts);

/// Landscape file: {"grid": {...}, "energies": [[...]], "meta": {...}}.
nlohmann::json landscape_to_json(const Landscape& l);
Landscape landscape_from_json(const nlohmann::json& j);

/// CSV with header gamma,beta,energy, one row per point, gamma-major.
std::string landscape_to_csv(const Landscape& l);

nlohmann::json grid_to_json(const GridSpec& grid);
GridSpec grid_from_json(const nlohmann::json& j);

}  // namespace qlb

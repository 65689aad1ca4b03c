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

#include "qlb/landscape.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "qlb/circuit.hpp"
#include "qlb/errors.hpp"
#include "qlb/rng.hpp"
#include "qlb/util.hpp"

namespace qlb {

namespace {

nlohmann::json checkpoint_header(const Landscape& l) {
  return {{"backend", l.meta.backend},
          {"depth", l.meta.depth},
          {"shots", l.meta.shots.to_string()},
          {"seed", l.meta.master_seed},
          {"gammas", l.grid.gamma_values.size()},
          {"betas", l.grid.beta_values.size()},
          {"fixed_layer1", l.meta.fixed_layer1
                               ? nlohmann::json({(*l.meta.fixed_layer1)[0], (*l.meta.fixed_layer1)[1]})
                               : nlohmann::json(nullptr)}};
}

// Returns per-row energies recovered from a checkpoint file whose header
// matches, empty otherwise.
std::vector<std::optional<std::vector<double>>> load_checkpoint(const std::string& path,
                                                                const Landscape& l) {
  std::vector<std::optional<std::vector<double>>> rows(l.grid.gamma_values.size());
  if (path.empty()) return rows;
  std::ifstream in(path);
  if (!in.is_open()) return rows;
  std::string line;
  if (!std::getline(in, line)) return rows;
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception&) {
    return rows;
  }
  if (header != checkpoint_header(l)) return rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      break;  // torn tail write; everything before it still counts
    }
    if (!rec.contains("row") || !rec.contains("energies")) break;
    std::size_t row = rec["row"].get<std::size_t>();
    auto energies = rec["energies"].get<std::vector<double>>();
    if (row >= rows.size() || energies.size() != l.grid.beta_values.size()) break;
    rows[row] = std::move(energies);
  }
  return rows;
}

}  // namespace

GridSpec GridSpec::default_grid() {
  GridSpec grid;
  const double step = std::numbers::pi / 20.0;
  for (int i = 0; i <= 20; ++i) grid.gamma_values.push_back(i * step);
  for (int j = 0; j <= 10; ++j) grid.beta_values.push_back(j * step);
  return grid;
}

void validate_grid(const GridSpec& grid) {
  auto check_axis = [](const std::vector<double>& values, const char* axis) {
    if (values.empty()) throw data_error(std::string("grid: empty ") + axis + " axis");
    for (std::size_t i = 1; i < values.size(); ++i)
      if (!(values[i] > values[i - 1]))
        throw data_error(std::string("grid: ") + axis + " values must be strictly ascending");
  };
  check_axis(grid.gamma_values, "gamma");
  check_axis(grid.beta_values, "beta");
}

Landscape sample_landscape(Backend& backend, const WeightedGraph& g, int depth,
                           std::optional<std::array<double, 2>> fixed_layer1,
                           const GridSpec& grid, const LandscapeRunOptions& opts) {
  validate_graph(g);
  validate_grid(grid);
  if (depth != 1 && depth != 2) throw std::invalid_argument("landscape: depth must be 1 or 2");
  if ((depth == 2) != fixed_layer1.has_value())
    throw std::invalid_argument("landscape: fixed_layer1 is required exactly when depth is 2");
  if (!opts.shots.exact && opts.shots.count == 0)
    throw std::invalid_argument("landscape: shots must be positive");

  Landscape l;
  l.grid = grid;
  l.meta.backend = backend.descriptor().name;
  l.meta.shots = opts.shots;
  l.meta.depth = depth;
  l.meta.fixed_layer1 = fixed_layer1;
  l.meta.master_seed = opts.seed;
  l.meta.created_at = iso8601_now();
  l.energies.assign(grid.gamma_values.size(),
                    std::vector<double>(grid.beta_values.size(), 0.0));

  auto resumed = load_checkpoint(opts.checkpoint_path, l);
  std::ofstream checkpoint;
  if (!opts.checkpoint_path.empty()) {
    bool fresh = std::none_of(resumed.begin(), resumed.end(),
                              [](const auto& row) { return row.has_value(); });
    checkpoint.open(opts.checkpoint_path, fresh ? std::ios::trunc : std::ios::app);
    if (!checkpoint.is_open())
      throw data_error("landscape: cannot open checkpoint file " + opts.checkpoint_path);
    if (fresh) checkpoint << checkpoint_header(l).dump() << "\n";
  }

  for (std::size_t i = 0; i < grid.gamma_values.size(); ++i) {
    if (resumed[i]) {
      l.energies[i] = *resumed[i];
      continue;
    }
    double gamma = grid.gamma_values[i];
    std::vector<Circuit> row;
    row.reserve(grid.beta_values.size());
    for (double beta : grid.beta_values) {
      QaoaParams params;
      if (depth == 1) {
        params.gammas = {gamma};
        params.betas = {beta};
      } else {
        params.gammas = {(*fixed_layer1)[0], gamma};
        params.betas = {(*fixed_layer1)[1], beta};
      }
      row.push_back(build_qaoa_circuit(g, params));
    }
    std::uint64_t row_seed = mix64(opts.seed, i);
    try {
      if (opts.shots.exact) {
        l.energies[i] = run_exact(backend, g, row, opts.workers);
      } else {
        auto results = run_circuits(backend, row, opts.shots.count, row_seed, opts.workers);
        for (std::size_t j = 0; j < results.size(); ++j)
          l.energies[i][j] = energy_from_counts(g, results[j].counts);
      }
    } catch (const capability_error& e) {
      throw capability_error(std::string(e.what()) + " (at gamma index " + std::to_string(i) +
                             ", gamma = " + format_double(gamma) + ")");
    }
    if (checkpoint.is_open()) {
      checkpoint << nlohmann::json({{"row", i}, {"energies", l.energies[i]}}).dump() << "\n";
      checkpoint.flush();
    }
  }

  if (!opts.checkpoint_path.empty()) {
    checkpoint.close();
    std::error_code ec;
    std::filesystem::remove(opts.checkpoint_path, ec);
  }
  return l;
}

MinPoint find_minimum(const Landscape& l) {
  if (l.energies.empty() || l.energies[0].empty())
    throw std::invalid_argument("find_minimum: empty landscape");
  MinPoint best;
  best.energy = l.energies[0][0];
  for (std::size_t i = 0; i < l.energies.size(); ++i)
    for (std::size_t j = 0; j < l.energies[i].size(); ++j)
      if (l.energies[i][j] < best.energy) {
        best.energy = l.energies[i][j];
        best.gamma_index = i;
        best.beta_index = j;
      }
  best.gamma = l.grid.gamma_values[best.gamma_index];
  best.beta = l.grid.beta_values[best.beta_index];
  return best;
}

std::pair<Landscape, Landscape> warm_start_chain(Backend& backend, const WeightedGraph& g,
                                                 const GridSpec& grid,
                                                 const LandscapeRunOptions& opts) {
  LandscapeRunOptions opts1 = opts;
  LandscapeRunOptions opts2 = opts;
  if (!opts.checkpoint_path.empty()) {
    opts1.checkpoint_path = opts.checkpoint_path + "_depth1.jsonl";
    opts2.checkpoint_path = opts.checkpoint_path + "_depth2.jsonl";
  }
  Landscape depth1 = sample_landscape(backend, g, 1, std::nullopt, grid, opts1);
  MinPoint m = find_minimum(depth1);
  Landscape depth2 =
      sample_landscape(backend, g, 2, std::array<double, 2>{m.gamma, m.beta}, grid, opts2);
  return {std::move(depth1), std::move(depth2)};
}

nlohmann::json grid_to_json(const GridSpec& grid) {
  return {{"gamma_values", grid.gamma_values}, {"beta_values", grid.beta_values}};
}

GridSpec grid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("gamma_values") || !j.contains("beta_values"))
    throw data_error("grid json: expected \"gamma_values\" and \"beta_values\"");
  GridSpec grid;
  try {
    grid.gamma_values = j["gamma_values"].get<std::vector<double>>();
    grid.beta_values = j["beta_values"].get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw data_error(std::string("grid json: ") + e.what());
  }
  validate_grid(grid);
  return grid;
}

nlohmann::json landscape_to_json(const Landscape& l) {
  nlohmann::json meta;
  meta["backend"] = l.meta.backend;
  if (l.meta.shots.exact)
    meta["shots"] = "exact";
  else
    meta["shots"] = l.meta.shots.count;
  meta["depth"] = l.meta.depth;
  meta["fixed_layer1"] =
      l.meta.fixed_layer1
          ? nlohmann::json({(*l.meta.fixed_layer1)[0], (*l.meta.fixed_layer1)[1]})
          : nlohmann::json(nullptr);
  meta["master_seed"] = l.meta.master_seed;
  meta["created_at"] = l.meta.created_at;
  return {{"grid", grid_to_json(l.grid)}, {"energies", l.energies}, {"meta", meta}};
}

Landscape landscape_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("grid") || !j.contains("energies") || !j.contains("meta"))
    throw data_error("landscape json: expected \"grid\", \"energies\" and \"meta\"");
  Landscape l;
  l.grid = grid_from_json(j["grid"]);
  try {
    l.energies = j["energies"].get<std::vector<std::vector<double>>>();
    const auto& meta = j["meta"];
    l.meta.backend = meta.at("backend").get<std::string>();
    if (meta.at("shots").is_string()) {
      if (meta["shots"].get<std::string>() != "exact")
        throw data_error("landscape json: shots must be a number or \"exact\"");
      l.meta.shots = ShotSpec::exact_mode();
    } else {
      l.meta.shots = ShotSpec::sampled(meta["shots"].get<std::uint64_t>());
    }
    l.meta.depth = meta.at("depth").get<int>();
    if (!meta.at("fixed_layer1").is_null()) {
      auto fixed = meta["fixed_layer1"].get<std::vector<double>>();
      if (fixed.size() != 2) throw data_error("landscape json: fixed_layer1 needs two angles");
      l.meta.fixed_layer1 = std::array<double, 2>{fixed[0], fixed[1]};
    }
    l.meta.master_seed = meta.at("master_seed").get<std::uint64_t>();
    l.meta.created_at = meta.at("created_at").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw data_error(std::string("landscape json: ") + e.what());
  }
  if (l.energies.size() != l.grid.gamma_values.size())
    throw data_error("landscape json: energy matrix does not match the grid");
  for (const auto& row : l.energies)
    if (row.size() != l.grid.beta_values.size())
      throw data_error("landscape json: energy matrix does not match the grid");
  return l;
}

std::string landscape_to_csv(const Landscape& l) {
  std::string csv = "gamma,beta,energy\n";
  for (std::size_t i = 0; i < l.grid.gamma_values.size(); ++i)
    for (std::size_t j = 0; j < l.grid.beta_values.size(); ++j) {
      csv += format_double(l.grid.gamma_values[i]);
      csv += ',';
      csv += format_double(l.grid.beta_values[j]);
      csv += ',';
      csv += format_double(l.energies[i][j]);
      csv += '\n';
    }
  return csv;
}

}  // namespace qlb

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

#include "qlb/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qlb/errors.hpp"
#include "qlb/util.hpp"

namespace qlb {

namespace {

bool same_grid(const GridSpec& a, const GridSpec& b) {
  return a.gamma_values == b.gamma_values && a.beta_values == b.beta_values;
}

bool same_fixed_layer(const Landscape& a, const Landscape& b) {
  if (a.meta.fixed_layer1.has_value() != b.meta.fixed_layer1.has_value()) return false;
  if (!a.meta.fixed_layer1) return true;
  return (*a.meta.fixed_layer1)[0] == (*b.meta.fixed_layer1)[0] &&
         (*a.meta.fixed_layer1)[1] == (*b.meta.fixed_layer1)[1];
}

}  // namespace

double mad(const Landscape& a, const Landscape& b) {
  if (!same_grid(a.grid, b.grid)) throw data_error("mad: landscapes use different grids");
  double sum = 0.0;
  std::size_t points = 0;
  for (std::size_t i = 0; i < a.energies.size(); ++i)
    for (std::size_t j = 0; j < a.energies[i].size(); ++j) {
      sum += std::abs(a.energies[i][j] - b.energies[i][j]);
      ++points;
    }
  return sum / static_cast<double>(points);
}

Landscape mms_landscape(const WeightedGraph& g, const GridSpec& grid) {
  validate_graph(g);
  validate_grid(grid);
  Landscape l;
  l.grid = grid;
  l.meta.backend = "mms";
  l.meta.shots = ShotSpec::exact_mode();
  l.energies.assign(grid.gamma_values.size(),
                    std::vector<double>(grid.beta_values.size(), -total_weight(g) / 2.0));
  return l;
}

double mad_sim(const Landscape& l, const Landscape& reference) {
  if (!reference.meta.shots.exact)
    throw data_error("mad_sim: reference landscape was not produced in exact mode");
  if (l.meta.depth != reference.meta.depth)
    throw data_error("mad_sim: depth differs from the reference");
  if (!same_fixed_layer(l, reference))
    throw data_error("mad_sim: fixed layer-1 angles differ from the reference");
  return mad(l, reference);
}

double mad_mms(const Landscape& l, const WeightedGraph& g) {
  return mad(l, mms_landscape(g, l.grid));
}

MadReport report(const std::vector<Landscape>& landscapes,
                 const std::vector<Landscape>& references, const WeightedGraph& g) {
  MadReport rows;
  std::map<std::pair<std::string, int>, int> replication_counter;
  for (const Landscape& l : landscapes) {
    const Landscape* ref = nullptr;
    for (const Landscape& candidate : references) {
      if (candidate.meta.depth == l.meta.depth && same_grid(candidate.grid, l.grid) &&
          same_fixed_layer(candidate, l)) {
        ref = &candidate;
        break;
      }
    }
    if (ref == nullptr)
      throw data_error("report: no exact reference matches the landscape from '" +
                       l.meta.backend + "' at depth " + std::to_string(l.meta.depth));
    MadRow row;
    row.backend = l.meta.backend;
    row.depth = l.meta.depth;
    row.replication =
        std::to_string(++replication_counter[{l.meta.backend, l.meta.depth}]);
    row.mad_sim = mad_sim(l, *ref);
    row.mad_mms = mad_mms(l, g);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string report_to_csv(const MadReport& rows) {
  std::string csv = "backend,depth,replication,mad_sim,mad_mms\n";
  for (const MadRow& row : rows) {
    csv += row.backend;
    csv += ',';
    csv += std::to_string(row.depth);
    csv += ',';
    csv += row.replication;
    csv += ',';
    csv += format_double(row.mad_sim);
    csv += ',';
    csv += format_double(row.mad_mms);
    csv += '\n';
  }
  return csv;
}

std::string report_to_text(const MadReport& rows) {
  std::size_t name_width = 7;
  for (const MadRow& row : rows) name_width = std::max(name_width, row.backend.size());
  char line[256];
  std::snprintf(line, sizeof(line), "%-*s  %5s  %11s  %12s  %12s\n",
                static_cast<int>(name_width), "backend", "depth", "replication", "mad_sim",
                "mad_mms");
  std::string text = line;
  for (const MadRow& row : rows) {
    std::snprintf(line, sizeof(line), "%-*s  %5d  %11s  %12.6f  %12.6f\n",
                  static_cast<int>(name_width), row.backend.c_str(), row.depth,
                  row.replication.c_str(), row.mad_sim, row.mad_mms);
    text += line;
  }
  return text;
}

}  // namespace qlb

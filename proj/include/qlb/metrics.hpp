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

#include "qlb/landscape.hpp"
#include "qlb/problem.hpp"

namespace qlb {

/// Mean absolute difference over the grid. Throws data_error unless both
/// landscapes share the same grid.
double mad(const Landscape& a, const Landscape& b);

/// Constant landscape at the maximally mixed state's mean energy,
/// -(total weight)/2.
Landscape mms_landscape(const WeightedGraph& g, const GridSpec& grid);

/// mad against a noise-free reference. The reference must be exact-mode and
/// match depth, fixed layer and grid; mismatched provenance throws
/// data_error.
double mad_sim(const Landscape& l, const Landscape& reference);

/// mad against the analytic maximally-mixed constant.
double mad_mms(const Landscape& l, const WeightedGraph& g);

struct MadRow {
  std::string backend;
  int depth = 1;
  std::string replication;
  double mad_sim = 0.0;
  double mad_mms = 0.0;
};

using MadReport = std::vector<MadRow>;

/// One row per landscape, in input order. Each landscape is paired with the
/// reference of matching depth, grid and fixed layer; the replication label
/// counts repeats of the same (backend, depth).
MadReport report(const std::vector<Landscape>& landscapes,
                 const std::vector<Landscape>& references, const WeightedGraph& g);

/// CSV with header backend,depth,replication,mad_sim,mad_mms.
std::string report_to_csv(const MadReport& rows);

/// Aligned-column text rendering.
std::string report_to_text(const MadReport& rows);

}  // namespace qlb

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

#include <cstdint>
#include <string>
#include <vector>

#include "qlb/landscape.hpp"

namespace qlb {

/// Binary PGM (P5) rendering, one pixel per grid point. Byte layout:
/// "P5\n<width> <height>\n255\n" followed by height rows of width bytes,
/// where pixel (row r, column c) is the point (gamma_index c, beta_index r);
/// gamma runs left to right, beta top to bottom. Energies map linearly with
/// min -> 0 and max -> 255, and the cells surrounding the minimum are forced
/// to 255 as a marker ring. A constant landscape renders as all 128 with no
/// marker.
std::vector<std::uint8_t> render_pgm(const Landscape& l);

void write_pgm(const Landscape& l, const std::string& path);

}  // namespace qlb

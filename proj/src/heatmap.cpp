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

#include "qlb/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "qlb/errors.hpp"

namespace qlb {

std::vector<std::uint8_t> render_pgm(const Landscape& l) {
  const std::size_t width = l.grid.gamma_values.size();
  const std::size_t height = l.grid.beta_values.size();
  if (l.energies.size() != width || width == 0 || height == 0 || l.energies[0].size() != height)
    throw std::invalid_argument("render_pgm: landscape matrix does not match its grid");

  double lo = l.energies[0][0];
  double hi = l.energies[0][0];
  for (const auto& row : l.energies)
    for (double e : row) {
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }

  std::string header = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  std::size_t pixel_base = bytes.size();
  bytes.resize(pixel_base + width * height);

  auto at = [&](std::size_t row, std::size_t col) -> std::uint8_t& {
    return bytes[pixel_base + row * width + col];
  };

  if (hi == lo) {
    for (std::size_t r = 0; r < height; ++r)
      for (std::size_t c = 0; c < width; ++c) at(r, c) = 128;
    return bytes;
  }

  for (std::size_t r = 0; r < height; ++r)
    for (std::size_t c = 0; c < width; ++c)
      at(r, c) =
          static_cast<std::uint8_t>(std::lround((l.energies[c][r] - lo) / (hi - lo) * 255.0));

  // White ring around the minimum; the minimum cell itself stays darkest so
  // the marker never hides the extremum.
  MinPoint m = find_minimum(l);
  for (int dr = -1; dr <= 1; ++dr)
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      std::int64_t r = static_cast<std::int64_t>(m.beta_index) + dr;
      std::int64_t c = static_cast<std::int64_t>(m.gamma_index) + dc;
      if (r < 0 || c < 0 || r >= static_cast<std::int64_t>(height) ||
          c >= static_cast<std::int64_t>(width))
        continue;
      at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = 255;
    }
  return bytes;
}

void write_pgm(const Landscape& l, const std::string& path) {
  std::vector<std::uint8_t> bytes = render_pgm(l);
  std::ofstream out(path, std::ios::binary);
  if (!out.is_open()) throw data_error("heatmap: cannot open " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

}  // namespace qlb

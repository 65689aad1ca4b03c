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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "qlb/errors.hpp"
#include "qlb/heatmap.hpp"

using namespace qlb;

namespace {

Landscape synthetic(std::vector<double> gammas, std::vector<double> betas,
                    std::vector<std::vector<double>> energies) {
  Landscape l;
  l.grid.gamma_values = std::move(gammas);
  l.grid.beta_values = std::move(betas);
  l.energies = std::move(energies);
  l.meta.backend = "synthetic";
  l.meta.shots = ShotSpec::exact_mode();
  return l;
}

struct Pgm {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;
};

Pgm parse_pgm(const std::vector<std::uint8_t>& bytes) {
  // The header is exactly three newline-terminated lines; pixel bytes follow.
  std::string text(bytes.begin(), bytes.end());
  std::size_t first = text.find('\n');
  std::size_t second = text.find('\n', first + 1);
  std::size_t third = text.find('\n', second + 1);
  REQUIRE(third != std::string::npos);
  CHECK(text.substr(0, first) == "P5");
  CHECK(text.substr(second + 1, third - second - 1) == "255");
  Pgm p;
  REQUIRE(std::sscanf(text.substr(first + 1, second - first - 1).c_str(), "%zu %zu", &p.width,
                      &p.height) == 2);
  REQUIRE(bytes.size() == third + 1 + p.width * p.height);
  p.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(third + 1), bytes.end());
  return p;
}

}  // namespace

TEST_SUITE("heatmap") {

TEST_CASE("header carries the grid dimensions") {
  // 3 gamma values wide, 2 beta values tall.
  Landscape l = synthetic({0.0, 0.5, 1.0}, {0.0, 0.25},
                          {{-1.0, -2.0}, {-3.0, -4.0}, {-5.0, -6.0}});
  Pgm p = parse_pgm(render_pgm(l));
  CHECK(p.width == 3);
  CHECK(p.height == 2);
}

TEST_CASE("pixels map energies linearly with beta running down the rows") {
  Landscape l = synthetic({0.0, 0.5, 1.0}, {0.0, 0.25},
                          {{-8.0, 0.0}, {-4.0, -8.0}, {0.0, -4.0}});
  Pgm p = parse_pgm(render_pgm(l));
  // Row r, column c shows energies[c][r]; -8 -> 0, -4 -> 128, 0 -> 255.
  // The ring around the minimum at (gamma 0, beta 0) whites out its
  // neighbors, leaving the untouched cells to check the scale.
  CHECK(p.pixels[0 * 3 + 0] == 0);    // energies[0][0] = -8, the minimum
  CHECK(p.pixels[0 * 3 + 1] == 255);  // ring
  CHECK(p.pixels[1 * 3 + 0] == 255);  // ring
  CHECK(p.pixels[1 * 3 + 1] == 255);  // ring
  CHECK(p.pixels[0 * 3 + 2] == 255);  // energies[2][0] = 0 -> 255 anyway
  CHECK(p.pixels[1 * 3 + 2] == 128);  // energies[2][1] = -4 -> 128
}

TEST_CASE("minimum stays darkest inside its white ring") {
  Landscape l = synthetic({0.0, 0.5, 1.0, 1.5}, {0.0, 0.25, 0.5},
                          {{-1.0, -2.0, -1.5}, {-2.5, -9.0, -3.0},
                           {-1.0, -4.0, -2.0}, {-0.5, -1.0, -1.5}});
  MinPoint m = find_minimum(l);
  CHECK(m.gamma_index == 1);
  CHECK(m.beta_index == 1);
  Pgm p = parse_pgm(render_pgm(l));
  std::size_t min_at = m.beta_index * p.width + m.gamma_index;
  CHECK(p.pixels[min_at] == 0);
  for (std::size_t i = 0; i < p.pixels.size(); ++i)
    if (i != min_at) CHECK(p.pixels[i] > 0);
  // All eight neighbors are in range here, so the full ring shows.
  for (int dr = -1; dr <= 1; ++dr)
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      std::size_t at = (m.beta_index + dr) * p.width + (m.gamma_index + dc);
      CHECK(p.pixels[at] == 255);
    }
}

TEST_CASE("constant landscape renders mid-gray with no marker") {
  Landscape l = synthetic({0.0, 0.5}, {0.0, 0.25, 0.5},
                          {{-4.5, -4.5, -4.5}, {-4.5, -4.5, -4.5}});
  Pgm p = parse_pgm(render_pgm(l));
  for (std::uint8_t px : p.pixels) CHECK(px == 128);
}

TEST_CASE("corner minimum clips its ring at the border") {
  Landscape l = synthetic({0.0, 0.5}, {0.0, 0.25},
                          {{-9.0, -1.0}, {-2.0, -3.0}});
  Pgm p = parse_pgm(render_pgm(l));
  CHECK(p.pixels[0] == 0);    // the minimum, top-left
  CHECK(p.pixels[1] == 255);  // right neighbor
  CHECK(p.pixels[2] == 255);  // below
  CHECK(p.pixels[3] == 255);  // diagonal
}

TEST_CASE("write_pgm puts the rendered bytes on disk") {
  Landscape l = synthetic({0.0, 0.5, 1.0}, {0.0, 0.25},
                          {{-8.0, 0.0}, {-4.0, -8.0}, {0.0, -4.0}});
  std::string path = (std::filesystem::temp_directory_path() / "qlb_heatmap_test.pgm").string();
  std::remove(path.c_str());
  write_pgm(l, path);
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.is_open());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  CHECK(bytes == render_pgm(l));
  std::remove(path.c_str());
  CHECK_THROWS_AS(write_pgm(l, "/nonexistent-dir/x.pgm"), data_error);
}

TEST_CASE("ragged landscapes are rejected") {
  Landscape l = synthetic({0.0, 0.5}, {0.0}, {{-1.0}});
  CHECK_THROWS_AS(render_pgm(l), std::invalid_argument);
}

}  // TEST_SUITE

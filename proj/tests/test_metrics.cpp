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

#include <doctest.h>

#include "qlb/errors.hpp"
#include "qlb/metrics.hpp"
#include "qlb/rng.hpp"

using namespace qlb;

namespace {

Landscape constant_landscape(const GridSpec& grid, double value) {
  Landscape l;
  l.grid = grid;
  l.meta.backend = "constant";
  l.meta.shots = ShotSpec::exact_mode();
  l.energies.assign(grid.gamma_values.size(),
                    std::vector<double>(grid.beta_values.size(), value));
  return l;
}

Landscape random_landscape(const GridSpec& grid, std::uint64_t seed) {
  Landscape l = constant_landscape(grid, 0.0);
  l.meta.backend = "random";
  SplitMix64 rng(seed);
  for (auto& row : l.energies)
    for (double& e : row) e = -9.0 + 9.0 * rng.u01();
  return l;
}

Landscape exact_builtin_depth1() {
  Backend b(find_descriptor("local-exact"), std::make_shared<JobStore>());
  LandscapeRunOptions opts;
  opts.shots = ShotSpec::exact_mode();
  return sample_landscape(b, builtin_instance(), 1, std::nullopt, GridSpec::default_grid(),
                          opts);
}

const GridSpec kSmallGrid{{0.0, 0.5, 1.0}, {0.0, 0.25}};

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("mad of a landscape with itself is zero") {
  Landscape l = random_landscape(kSmallGrid, 3);
  CHECK(mad(l, l) == 0.0);
}

TEST_CASE("mad between constants is their gap") {
  Landscape a = constant_landscape(kSmallGrid, -4.5);
  Landscape b = constant_landscape(kSmallGrid, -6.0);
  CHECK(mad(a, b) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(mad(b, a) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("mad satisfies the metric axioms on samples") {
  Landscape x = random_landscape(kSmallGrid, 11);
  Landscape y = random_landscape(kSmallGrid, 22);
  Landscape z = random_landscape(kSmallGrid, 33);
  CHECK(mad(x, y) > 0.0);
  CHECK(mad(x, y) == doctest::Approx(mad(y, x)).epsilon(1e-15));
  CHECK(mad(x, z) <= mad(x, y) + mad(y, z) + 1e-12);
}

TEST_CASE("mad rejects mismatched grids") {
  Landscape a = constant_landscape(kSmallGrid, 0.0);
  Landscape b = constant_landscape(GridSpec{{0.0, 0.5}, {0.0, 0.25}}, 0.0);
  CHECK_THROWS_AS(mad(a, b), data_error);
}

TEST_CASE("mms landscape is the constant mixed-state energy") {
  WeightedGraph g = builtin_instance();
  Landscape l = mms_landscape(g, kSmallGrid);
  CHECK(l.meta.backend == "mms");
  CHECK(l.meta.shots.exact);
  for (const auto& row : l.energies)
    for (double e : row) CHECK(e == -4.5);

  WeightedGraph edgeless{3, {}};
  for (const auto& row : mms_landscape(edgeless, kSmallGrid).energies)
    for (double e : row) CHECK(e == 0.0);

  WeightedGraph single{2, {{0, 1, 3.0}}};
  for (const auto& row : mms_landscape(single, kSmallGrid).energies)
    for (double e : row) CHECK(e == -1.5);
}

TEST_CASE("mad_sim demands a faithful reference") {
  Landscape exact = constant_landscape(kSmallGrid, -4.0);
  Landscape sampled = constant_landscape(kSmallGrid, -3.0);
  sampled.meta.shots = ShotSpec::sampled(100);
  CHECK(mad_sim(sampled, exact) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mad_sim(exact, exact) == 0.0);

  CHECK_THROWS_AS(mad_sim(exact, sampled), data_error);  // reference not exact

  Landscape deeper = exact;
  deeper.meta.depth = 2;
  deeper.meta.fixed_layer1 = std::array<double, 2>{0.1, 0.2};
  CHECK_THROWS_AS(mad_sim(deeper, exact), data_error);

  Landscape other_fixed = deeper;
  other_fixed.meta.shots = ShotSpec::sampled(100);
  other_fixed.meta.fixed_layer1 = std::array<double, 2>{0.1, 0.3};
  CHECK_THROWS_AS(mad_sim(other_fixed, deeper), data_error);
}

TEST_CASE("mad_mms of the exact depth-1 landscape") {
  Landscape exact = exact_builtin_depth1();
  CHECK(std::abs(mad_mms(exact, builtin_instance()) - (0.6549239410214783)) <= 1e-9);
}

TEST_CASE("report pairs landscapes with matching references") {
  WeightedGraph g = builtin_instance();
  Landscape exact = constant_landscape(kSmallGrid, -4.5);
  exact.meta.backend = "local-exact";

  Landscape a = constant_landscape(kSmallGrid, -4.0);
  a.meta.backend = "mock-iontrap";
  a.meta.shots = ShotSpec::sampled(100);
  Landscape b = constant_landscape(kSmallGrid, -3.5);
  b.meta.backend = "mock-iontrap";
  b.meta.shots = ShotSpec::sampled(100);
  Landscape c = constant_landscape(kSmallGrid, -2.5);
  c.meta.backend = "mock-superconducting";
  c.meta.shots = ShotSpec::sampled(100);

  MadReport rows = report({a, b, c, exact}, {exact}, g);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].backend == "mock-iontrap");
  CHECK(rows[0].replication == "1");
  CHECK(rows[0].mad_sim == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rows[0].mad_mms == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rows[1].backend == "mock-iontrap");
  CHECK(rows[1].replication == "2");
  CHECK(rows[1].mad_sim == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[2].backend == "mock-superconducting");
  CHECK(rows[2].replication == "1");
  CHECK(rows[3].backend == "local-exact");
  CHECK(rows[3].mad_sim == 0.0);

  // No reference at depth 2: pairing must fail loudly.
  Landscape deep = a;
  deep.meta.depth = 2;
  deep.meta.fixed_layer1 = std::array<double, 2>{0.1, 0.2};
  CHECK_THROWS_AS(report({deep}, {exact}, g), data_error);
}

TEST_CASE("report csv rendering") {
  MadReport rows;
  rows.push_back({"alpha", 1, "1", 0.25, 0.5});
  rows.push_back({"alpha", 1, "2", 0.125, 1.0});
  CHECK(report_to_csv(rows) ==
        "backend,depth,replication,mad_sim,mad_mms\n"
        "alpha,1,1,0.25,0.5\n"
        "alpha,1,2,0.125,1\n");
}

TEST_CASE("report text rendering lines up") {
  MadReport rows;
  rows.push_back({"mock-iontrap", 1, "1", 0.158577, 0.49879});
  std::string text = report_to_text(rows);
  CHECK(text.find("backend") != std::string::npos);
  CHECK(text.find("mock-iontrap") != std::string::npos);
  CHECK(text.find("0.158577") != std::string::npos);
  CHECK(text.find("0.498790") != std::string::npos);
}

}  // TEST_SUITE

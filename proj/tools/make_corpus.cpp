// Copyright 2026 The region_rrt Authors. All Rights Reserved.
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

// Writes synthetic corpus bundles for the planner and benchmark harness.
//
//   make_corpus --kind benchmark --out DIR          five wall-and-gap maps
//   make_corpus --kind random --count N --size S    random block maps
//   make_corpus --kind empty --count N --size S     obstacle-free maps
//
// Every bundle carries a ground-truth region (<name>.gt.pgm): for benchmark
// maps a band around a feasible route, otherwise a band around the straight
// start-goal segment.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "region_rrt.hpp"

using namespace region_rrt;

int main(int argc, char** argv) {
  CLI::App app{"Synthetic corpus generator"};
  std::string out, kind = "benchmark";
  std::size_t count = 10, size = 64, blocks = 12, max_side = 10;
  std::uint64_t seed = 0;
  double goal_radius = 5.0, band = 6.0;
  app.add_option("--out", out, "Output directory")->required();
  app.add_option("--kind", kind, "benchmark | random | empty")
      ->capture_default_str()->check(CLI::IsMember({"benchmark", "random", "empty"}));
  app.add_option("--count", count, "Number of maps (random/empty)")->capture_default_str();
  app.add_option("--size", size, "Map side in cells (random/empty)")
      ->capture_default_str()->check(CLI::Range(2, 4096));
  app.add_option("--blocks", blocks, "Obstacle blocks per random map")->capture_default_str();
  app.add_option("--max-side", max_side, "Largest block side")->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--goal-radius", goal_radius, "Goal radius used when placing queries")->capture_default_str();
  app.add_option("--band", band, "Ground-truth band half-width (random/empty)")
      ->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (kind == "benchmark") {
      for (const auto& b : benchmark_maps(goal_radius)) save_bundle(out, b);
      return 0;
    }
    RandomSource rng(seed);
    std::size_t written = 0;
    for (std::size_t attempt = 0; written < count && attempt < 100 * count + 100; ++attempt) {
      const GridMap map = kind == "empty" ? GridMap::all_free(size, size)
                                          : random_block_map(size, size, blocks, max_side, rng);
      const auto q = random_query(map, goal_radius, static_cast<double>(size) / 3.0, rng);
      if (!q) continue;
      char name[32];
      std::snprintf(name, sizeof name, "%s_%03zu", kind.c_str(), written);
      HeuristicMap gt = band_region(map, {q->start, q->goal}, band);
      if (!(gt.total() > 0.0)) continue;
      save_bundle(out, Bundle{name, map, *q, std::nullopt, std::move(gt)});
      ++written;
    }
    if (written < count) {
      std::cerr << "make_corpus: only " << written << " of " << count << " maps had a feasible query\n";
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

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

// On-disk corpus bundles and synthetic map generators.
//
// A bundle named <name> lives in one directory as
//   <name>.map.pgm     occupancy (required)
//   <name>.query.ppm   red start / blue goal pixels (required)
//   <name>.heur.pgm    predicted promising region (optional)
//   <name>.gt.pgm      ground-truth promising region (optional)

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "region_rrt/error.hpp"
#include "region_rrt/map_model.hpp"
#include "region_rrt/netpbm.hpp"
#include "region_rrt/random.hpp"

namespace region_rrt {

struct Bundle {
  std::string name;
  GridMap map;
  PlanningQuery query;
  std::optional<HeuristicMap> heuristic;
  std::optional<HeuristicMap> ground_truth;
};

inline constexpr const char* kMapSuffix = ".map.pgm";
inline constexpr const char* kQuerySuffix = ".query.ppm";
inline constexpr const char* kHeuristicSuffix = ".heur.pgm";
inline constexpr const char* kGroundTruthSuffix = ".gt.pgm";

inline void save_bundle(const std::filesystem::path& dir, const Bundle& b) {
  std::filesystem::create_directories(dir);
  const auto base = (dir / b.name).string();
  write_file(base + kMapSuffix, save_grid_map(b.map));
  write_file(base + kQuerySuffix, encode_ppm(encode_query(b.map, b.query)));
  if (b.heuristic) write_file(base + kHeuristicSuffix, save_heuristic(*b.heuristic));
  if (b.ground_truth) write_file(base + kGroundTruthSuffix, save_heuristic(*b.ground_truth));
}

inline Bundle load_bundle(const std::filesystem::path& dir, const std::string& name,
                          double goal_radius, int color_tolerance = 0) {
  const auto base = (dir / name).string();
  auto context = [&](const std::string& file, const std::exception& e) {
    return file + ": " + e.what();
  };
  try {
    GridMap map = load_grid_map(read_file(base + kMapSuffix));
    PlanningQuery query =
        decode_query(parse_ppm(read_file(base + kQuerySuffix)), map, goal_radius, color_tolerance);
    Bundle b{name, std::move(map), query, std::nullopt, std::nullopt};
    if (std::filesystem::exists(base + kHeuristicSuffix)) {
      b.heuristic = load_heuristic(read_file(base + kHeuristicSuffix), b.map);
    }
    if (std::filesystem::exists(base + kGroundTruthSuffix)) {
      b.ground_truth = load_heuristic(read_file(base + kGroundTruthSuffix), b.map);
    }
    return b;
  } catch (const Error& e) {
    throw Error(context(base, e));
  }
}

// Every bundle in dir, ordered by name.
inline std::vector<Bundle> load_corpus(const std::filesystem::path& dir, double goal_radius,
                                       int color_tolerance = 0) {
  if (!std::filesystem::is_directory(dir)) throw Error("corpus directory not found: " + dir.string());
  const std::string suffix = kMapSuffix;
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string file = entry.path().filename().string();
    if (file.size() > suffix.size() &&
        file.compare(file.size() - suffix.size(), suffix.size(), suffix) == 0) {
      names.push_back(file.substr(0, file.size() - suffix.size()));
    }
  }
  std::sort(names.begin(), names.end());
  std::vector<Bundle> bundles;
  for (const auto& n : names) bundles.push_back(load_bundle(dir, n, goal_radius, color_tolerance));
  return bundles;
}

// ---------------------------------------------------------------------------
// Synthetic maps.

struct Rect {
  std::size_t col0, row0, col1, row1;  // half-open [col0, col1) x [row0, row1)
};

inline GridMap with_obstacles(std::size_t w, std::size_t h, const std::vector<Rect>& rects) {
  std::vector<std::uint8_t> occ(w * h, 0);
  for (const auto& r : rects) {
    for (std::size_t row = r.row0; row < std::min(r.row1, h); ++row) {
      for (std::size_t col = r.col0; col < std::min(r.col1, w); ++col) occ[row * w + col] = 1;
    }
  }
  return GridMap(w, h, std::move(occ));
}

inline GridMap random_block_map(std::size_t w, std::size_t h, std::size_t blocks,
                                std::size_t max_side, RandomSource& rng) {
  std::vector<Rect> rects;
  for (std::size_t i = 0; i < blocks; ++i) {
    const std::size_t bw = 1 + rng.uniform_index(max_side);
    const std::size_t bh = 1 + rng.uniform_index(max_side);
    const std::size_t c = rng.uniform_index(w);
    const std::size_t r = rng.uniform_index(h);
    rects.push_back({c, r, c + bw, r + bh});
  }
  return with_obstacles(w, h, rects);
}

// Start and goal on free cell corners, at least min_separation apart.
inline std::optional<PlanningQuery> random_query(const GridMap& map, double goal_radius,
                                                 double min_separation, RandomSource& rng) {
  auto draw = [&]() -> std::optional<State> {
    for (int i = 0; i < 1000; ++i) {
      const State s{static_cast<double>(rng.uniform_index(map.width())),
                    static_cast<double>(rng.uniform_index(map.height()))};
      if (map.is_free(s)) return s;
    }
    return std::nullopt;
  };
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto start = draw();
    auto goal = draw();
    if (!start || !goal) return std::nullopt;
    if (distance(*start, *goal) >= min_separation) return PlanningQuery{*start, *goal, goal_radius};
  }
  return std::nullopt;
}

inline double distance_to_segment(const State& p, const State& a, const State& b) {
  const double vx = b.x - a.x, vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = len2 == 0.0 ? 0.0 : ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, {a.x + t * vx, a.y + t * vy});
}

// Weight 1 on free cells whose centre lies within half_width of the polyline.
inline HeuristicMap band_region(const GridMap& map, const std::vector<State>& route,
                                double half_width) {
  std::vector<double> weights(map.cell_count(), 0.0);
  for (std::size_t row = 0; row < map.height(); ++row) {
    for (std::size_t col = 0; col < map.width(); ++col) {
      if (map.obstacle(col, row)) continue;
      const State centre{col + 0.5, row + 0.5};
      for (std::size_t i = 1; i < route.size(); ++i) {
        if (distance_to_segment(centre, route[i - 1], route[i]) <= half_width) {
          weights[row * map.width() + col] = 1.0;
          break;
        }
      }
    }
  }
  return HeuristicMap(map.width(), map.height(), std::move(weights));
}

// Five 256x256 wall-and-gap maps whose only routes pass through narrow gaps,
// each with a ground-truth band around a feasible route.
inline std::vector<Bundle> benchmark_maps(double goal_radius = 5.0, double band_half_width = 12.0) {
  constexpr std::size_t n = 256;
  struct Spec {
    const char* name;
    std::vector<Rect> walls;
    std::vector<State> route;
  };
  const std::vector<Spec> specs = {
      {"gap_top",
       {{124, 40, 132, 256}},
       {{32, 224}, {128, 28}, {224, 224}}},
      {"s_turn",
       {{80, 36, 88, 256}, {168, 0, 176, 220}},
       {{32, 128}, {84, 22}, {172, 234}, {224, 128}}},
      {"side_gap",
       {{0, 124, 216, 132}, {240, 124, 256, 132}},
       {{40, 40}, {228, 128}, {40, 216}}},
      {"zigzag",
       {{0, 60, 220, 68}, {244, 60, 256, 68}, {36, 124, 256, 132}, {0, 188, 220, 196},
        {244, 188, 256, 196}},
       {{24, 24}, {232, 64}, {24, 128}, {232, 192}, {232, 232}}},
      {"narrow_passage",
       {{124, 0, 132, 124}, {124, 134, 132, 256}},
       {{32, 40}, {128, 129}, {224, 216}}},
  };
  std::vector<Bundle> out;
  for (const auto& s : specs) {
    GridMap map = with_obstacles(n, n, s.walls);
    PlanningQuery q{s.route.front(), s.route.back(), goal_radius};
    validate_query(q, map);
    HeuristicMap gt = band_region(map, s.route, band_half_width);
    out.push_back(Bundle{s.name, std::move(map), q, std::nullopt, std::move(gt)});
  }
  return out;
}

}  // namespace region_rrt

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

// Joint augmentation of (map, region, query) samples.
//
// Geometry (integer shifts, quarter turns) moves occupancy, region and query
// together. Shear resamples the region channel only and brightness shifts the
// grayscale rendering only; neither touches the occupancy used for planning.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "region_rrt/error.hpp"
#include "region_rrt/map_model.hpp"
#include "region_rrt/netpbm.hpp"
#include "region_rrt/random.hpp"

namespace region_rrt {

struct AugmentParams {
  int height_shift = 2;
  int width_shift = 2;
  int shift_step = 1;
  double rotation_probability = 0.5;
  std::size_t maps_to_generate = 10;
  double shear_min_degrees = 0.0;
  double shear_max_degrees = 0.0;
  // Additive shift of the rendered gray level, as a fraction of full scale.
  double brightness_min = 0.0;
  double brightness_max = 0.0;

  static constexpr int kMaxAttempts = 100;

  void validate() const {
    detail::require(height_shift >= 0 && width_shift >= 0 && shift_step >= 0,
                    "augment: shifts must be non-negative");
    detail::require(rotation_probability >= 0.0 && rotation_probability <= 1.0,
                    "augment: rotation probability must lie in [0,1]");
    detail::require(shear_min_degrees <= shear_max_degrees, "augment: empty shear range");
    detail::require(shear_min_degrees > -90.0 && shear_max_degrees < 90.0,
                    "augment: shear must lie in (-90, 90) degrees");
    detail::require(brightness_min <= brightness_max, "augment: empty brightness range");
  }
};

struct Sample {
  GridMap map;
  HeuristicMap region;
  PlanningQuery query;
};

inline void validate_sample(const Sample& s) {
  detail::require(same_dims(s.map, s.region), "sample: region dimensions do not match map");
  validate_query(s.query, s.map);
}

struct Transform {
  int dx = 0;
  int dy = 0;
  int quarter_turns = 0;  // clockwise as displayed (y down)
  double shear_degrees = 0.0;
  double brightness = 0.0;
};

struct AugmentedSample {
  Sample sample;
  GrayImage rendering;
  Transform transform;
};

namespace detail {

// Fractional offset inside a cell after a reflection; keeps corners on corners.
inline double reflect_offset(double f) { return f == 0.0 ? 0.0 : 1.0 - f; }

template <typename T>
std::vector<T> shift_cells(const std::vector<T>& cells, std::size_t w, std::size_t h, int dx,
                           int dy, T fill) {
  std::vector<T> out(cells.size(), fill);
  for (std::size_t row = 0; row < h; ++row) {
    for (std::size_t col = 0; col < w; ++col) {
      const long src_col = static_cast<long>(col) - dx;
      const long src_row = static_cast<long>(row) - dy;
      if (src_col < 0 || src_row < 0 || src_col >= static_cast<long>(w) ||
          src_row >= static_cast<long>(h)) {
        continue;
      }
      out[row * w + col] = cells[static_cast<std::size_t>(src_row) * w +
                                 static_cast<std::size_t>(src_col)];
    }
  }
  return out;
}

// One clockwise quarter turn: (col, row) -> (h-1-row, col); result is h wide.
template <typename T>
std::vector<T> rotate_cells_once(const std::vector<T>& cells, std::size_t w, std::size_t h) {
  std::vector<T> out(cells.size());
  for (std::size_t row = 0; row < h; ++row) {
    for (std::size_t col = 0; col < w; ++col) {
      out[col * h + (h - 1 - row)] = cells[row * w + col];
    }
  }
  return out;
}

template <typename T>
std::vector<T> rotate_cells(std::vector<T> cells, std::size_t w, std::size_t h, int turns) {
  for (int t = 0; t < turns; ++t) {
    cells = rotate_cells_once(cells, w, h);
    std::swap(w, h);
  }
  return cells;
}

inline State rotate_state_once(const State& s, std::size_t h) {
  const double col = std::floor(s.x), row = std::floor(s.y);
  const double fx = s.x - col, fy = s.y - row;
  return {static_cast<double>(h) - 1.0 - row + reflect_offset(fy), col + fx};
}

inline State transform_state(State s, const Transform& t, std::size_t w, std::size_t h) {
  s.x += t.dx;
  s.y += t.dy;
  for (int k = 0; k < t.quarter_turns; ++k) {
    s = rotate_state_once(s, h);
    std::swap(w, h);
  }
  return s;
}

// Horizontal shear about the map centre, nearest-neighbour resampling.
inline std::vector<double> shear_weights(const std::vector<double>& weights, std::size_t w,
                                         std::size_t h, double degrees) {
  if (degrees == 0.0) return weights;
  const double slope = std::tan(degrees * std::numbers::pi / 180.0);
  const double centre = static_cast<double>(h) / 2.0;
  std::vector<double> out(weights.size(), 0.0);
  for (std::size_t row = 0; row < h; ++row) {
    const double offset = slope * (static_cast<double>(row) + 0.5 - centre);
    for (std::size_t col = 0; col < w; ++col) {
      const double src = std::floor(static_cast<double>(col) + 0.5 - offset);
      if (src < 0.0 || src >= static_cast<double>(w)) continue;
      out[row * w + col] = weights[row * w + static_cast<std::size_t>(src)];
    }
  }
  return out;
}

}  // namespace detail

inline GrayImage render_gray(const GridMap& map, double brightness) {
  GrayImage image = gray_from_grid(map);
  if (brightness == 0.0) return image;
  const double delta = brightness * 255.0;
  for (auto& px : image.pixels) {
    px = static_cast<std::uint8_t>(std::clamp(std::round(px + delta), 0.0, 255.0));
  }
  return image;
}

// Applies t to s. Returns nullopt when the transformed start or goal leaves
// free space. Odd quarter turns require a square map.
inline std::optional<AugmentedSample> apply_transform(const Sample& s, const Transform& t) {
  const std::size_t w = s.map.width(), h = s.map.height();
  detail::require(t.quarter_turns >= 0 && t.quarter_turns < 4, "quarter_turns must be 0..3");
  detail::require(t.quarter_turns % 2 == 0 || w == h,
                  "odd quarter turns need a square map to keep dimensions");

  auto occupancy = detail::shift_cells<std::uint8_t>(s.map.occupancy(), w, h, t.dx, t.dy, 0);
  occupancy = detail::rotate_cells(std::move(occupancy), w, h, t.quarter_turns);
  auto weights = detail::shift_cells<double>(s.region.weights(), w, h, t.dx, t.dy, 0.0);
  weights = detail::rotate_cells(std::move(weights), w, h, t.quarter_turns);
  weights = detail::shear_weights(weights, w, h, t.shear_degrees);

  GridMap map(w, h, std::move(occupancy));
  HeuristicMap region = mask_heuristic(HeuristicMap(w, h, std::move(weights)), map);
  PlanningQuery query{detail::transform_state(s.query.start, t, w, h),
                      detail::transform_state(s.query.goal, t, w, h), s.query.goal_radius};
  if (!map.is_free(query.start) || !map.is_free(query.goal)) return std::nullopt;

  GrayImage rendering = render_gray(map, t.brightness);
  return AugmentedSample{Sample{std::move(map), std::move(region), query}, std::move(rendering),
                         t};
}

namespace detail {

inline int draw_shift(int range, int step, RandomSource& rng) {
  if (range == 0 || step == 0) return 0;
  const int steps = range / step;
  const auto k = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(2 * steps + 1)));
  return (k - steps) * step;
}

inline Transform draw_transform(const AugmentParams& p, bool square, RandomSource& rng) {
  Transform t;
  t.dx = draw_shift(p.width_shift, p.shift_step, rng);
  t.dy = draw_shift(p.height_shift, p.shift_step, rng);
  if (rng.bernoulli(p.rotation_probability)) {
    t.quarter_turns = square ? 1 + static_cast<int>(rng.uniform_index(3)) : 2;
  }
  t.shear_degrees = rng.uniform(p.shear_min_degrees, p.shear_max_degrees);
  t.brightness = rng.uniform(p.brightness_min, p.brightness_max);
  return t;
}

}  // namespace detail

// Draws p.maps_to_generate independent transforms of s. A draw whose query
// lands in an obstacle is redrawn, up to kMaxAttempts times per output.
inline std::vector<AugmentedSample> augment_sample(const Sample& s, const AugmentParams& p,
                                                   RandomSource& rng) {
  p.validate();
  validate_sample(s);
  const bool square = s.map.width() == s.map.height();
  std::vector<AugmentedSample> out;
  out.reserve(p.maps_to_generate);
  for (std::size_t slot = 0; slot < p.maps_to_generate; ++slot) {
    std::optional<AugmentedSample> produced;
    for (int attempt = 0; attempt < AugmentParams::kMaxAttempts && !produced; ++attempt) {
      produced = apply_transform(s, detail::draw_transform(p, square, rng));
    }
    if (!produced) {
      throw AugmentError("no feasible transform for output " + std::to_string(slot) + " after " +
                         std::to_string(AugmentParams::kMaxAttempts) + " attempts");
    }
    out.push_back(std::move(*produced));
  }
  return out;
}

inline std::vector<double> rescale_pixels(const GrayImage& image) {
  std::vector<double> out(image.pixels.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = image.pixels[i] / 255.0;
  return out;
}

}  // namespace region_rrt

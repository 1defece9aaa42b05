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

// Occupancy grids, planning queries and heuristic maps, plus their netpbm
// encodings.
//
// Coordinates: x is the column, y the row, origin at the top-left corner.
// Cell (i, j) covers [i, i+1) x [j, j+1).

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "region_rrt/error.hpp"
#include "region_rrt/netpbm.hpp"

namespace region_rrt {

struct State {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const State&, const State&) = default;
};

inline double distance(const State& a, const State& b) { return std::hypot(b.x - a.x, b.y - a.y); }

struct Cell {
  std::size_t col = 0;
  std::size_t row = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

class GridMap {
 public:
  static constexpr std::size_t kMinSide = 2;

  GridMap(std::size_t width, std::size_t height, std::vector<std::uint8_t> occupancy)
      : width_(width), height_(height), occupancy_(std::move(occupancy)) {
    detail::require(width_ >= kMinSide && height_ >= kMinSide,
                    "GridMap: width and height must be at least 2");
    detail::require(occupancy_.size() == width_ * height_,
                    "GridMap: occupancy size must equal width * height");
    for (auto& v : occupancy_) v = v ? 1 : 0;
    free_count_ = 0;
    for (auto v : occupancy_) free_count_ += v ? 0 : 1;
  }

  static GridMap all_free(std::size_t width, std::size_t height) {
    return GridMap(width, height, std::vector<std::uint8_t>(width * height, 0));
  }

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t cell_count() const { return occupancy_.size(); }
  std::size_t free_count() const { return free_count_; }

  std::size_t index(std::size_t col, std::size_t row) const { return row * width_ + col; }
  bool obstacle(std::size_t col, std::size_t row) const { return occupancy_[index(col, row)] != 0; }
  bool obstacle_at(std::size_t cell_index) const { return occupancy_[cell_index] != 0; }
  const std::vector<std::uint8_t>& occupancy() const { return occupancy_; }

  bool contains(const State& s) const {
    return s.x >= 0.0 && s.y >= 0.0 && s.x < static_cast<double>(width_) &&
           s.y < static_cast<double>(height_);
  }

  // Caller guarantees contains(s).
  Cell cell_of(const State& s) const {
    return {static_cast<std::size_t>(s.x), static_cast<std::size_t>(s.y)};
  }

  // In bounds and in a free cell.
  bool is_free(const State& s) const {
    if (!contains(s)) return false;
    const Cell c = cell_of(s);
    return !obstacle(c.col, c.row);
  }

  friend bool operator==(const GridMap&, const GridMap&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> occupancy_;  // 1 = obstacle
  std::size_t free_count_ = 0;
};

struct PlanningQuery {
  State start;
  State goal;
  double goal_radius = 5.0;
};

// Throws QueryError unless start and goal lie in free cells and the radius is
// positive.
inline void validate_query(const PlanningQuery& q, const GridMap& map) {
  if (!(q.goal_radius > 0.0) || !std::isfinite(q.goal_radius)) {
    throw QueryError("goal radius must be positive");
  }
  if (!map.is_free(q.start)) throw QueryError("start is outside free space");
  if (!map.is_free(q.goal)) throw QueryError("goal is outside free space");
}

class HeuristicMap {
 public:
  HeuristicMap(std::size_t width, std::size_t height, std::vector<double> weights)
      : width_(width), height_(height), weights_(std::move(weights)) {
    detail::require(width_ > 0 && height_ > 0, "HeuristicMap: empty dimensions");
    detail::require(weights_.size() == width_ * height_,
                    "HeuristicMap: weight count must equal width * height");
    for (double w : weights_) {
      detail::require(w >= 0.0 && w <= 1.0, "HeuristicMap: weights must lie in [0,1]");
    }
  }

  static HeuristicMap constant(std::size_t width, std::size_t height, double value) {
    return HeuristicMap(width, height, std::vector<double>(width * height, value));
  }

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  double weight(std::size_t col, std::size_t row) const { return weights_[row * width_ + col]; }
  const std::vector<double>& weights() const { return weights_; }

  double total() const {
    double sum = 0.0;
    for (double w : weights_) sum += w;
    return sum;
  }

  friend bool operator==(const HeuristicMap&, const HeuristicMap&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<double> weights_;
};

inline bool same_dims(const GridMap& map, const HeuristicMap& h) {
  return map.width() == h.width() && map.height() == h.height();
}

// Zeroes weights on obstacle cells.
inline HeuristicMap mask_heuristic(const HeuristicMap& h, const GridMap& map) {
  detail::require(same_dims(map, h), "heuristic dimensions do not match map");
  std::vector<double> weights = h.weights();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (map.obstacle_at(i)) weights[i] = 0.0;
  }
  return HeuristicMap(h.width(), h.height(), std::move(weights));
}

// ---------------------------------------------------------------------------
// Grid maps: P5, gray < 128 is an obstacle.

inline constexpr std::uint8_t kOccupancyThreshold = 128;

inline GridMap grid_from_gray(const GrayImage& image) {
  if (image.width < GridMap::kMinSide || image.height < GridMap::kMinSide) {
    throw FormatError("map must be at least 2x2 cells");
  }
  std::vector<std::uint8_t> occupancy(image.pixels.size());
  for (std::size_t i = 0; i < occupancy.size(); ++i) {
    occupancy[i] = image.pixels[i] < kOccupancyThreshold ? 1 : 0;
  }
  return GridMap(image.width, image.height, std::move(occupancy));
}

inline GrayImage gray_from_grid(const GridMap& map) {
  GrayImage image{map.width(), map.height(), std::vector<std::uint8_t>(map.cell_count())};
  for (std::size_t i = 0; i < image.pixels.size(); ++i) {
    image.pixels[i] = map.obstacle_at(i) ? 0 : 255;
  }
  return image;
}

inline GridMap load_grid_map(std::span<const std::uint8_t> bytes) {
  return grid_from_gray(parse_pgm(bytes));
}

inline Bytes save_grid_map(const GridMap& map) { return encode_pgm(gray_from_grid(map)); }

// ---------------------------------------------------------------------------
// Heuristic maps: P5, weight = gray / 255.

inline HeuristicMap heuristic_from_gray(const GrayImage& image) {
  std::vector<double> weights(image.pixels.size());
  for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = image.pixels[i] / 255.0;
  return HeuristicMap(image.width, image.height, std::move(weights));
}

// Unmasked weights, no degeneracy check. Used for scoring predictions.
inline HeuristicMap read_weight_image(std::span<const std::uint8_t> bytes) {
  return heuristic_from_gray(parse_pgm(bytes));
}

inline HeuristicMap load_heuristic(std::span<const std::uint8_t> bytes, const GridMap& map) {
  const GrayImage image = parse_pgm(bytes);
  if (image.width != map.width() || image.height != map.height()) {
    throw ContractError("heuristic is " + std::to_string(image.width) + "x" +
                        std::to_string(image.height) + " but map is " +
                        std::to_string(map.width()) + "x" + std::to_string(map.height()));
  }
  HeuristicMap h = mask_heuristic(heuristic_from_gray(image), map);
  if (!(h.total() > 0.0)) {
    throw DegenerateError("heuristic has no mass on free cells");
  }
  return h;
}

inline std::uint8_t weight_to_gray(double w) {
  // Round half up: 0.5 -> 128.
  return static_cast<std::uint8_t>(std::floor(w * 255.0 + 0.5));
}

inline GrayImage gray_from_heuristic(const HeuristicMap& h) {
  GrayImage image{h.width(), h.height(), std::vector<std::uint8_t>(h.weights().size())};
  for (std::size_t i = 0; i < image.pixels.size(); ++i) {
    image.pixels[i] = weight_to_gray(h.weights()[i]);
  }
  return image;
}

inline Bytes save_heuristic(const HeuristicMap& h) { return encode_pgm(gray_from_heuristic(h)); }

// ---------------------------------------------------------------------------
// Query images: start is the centroid of pure red pixels, goal of pure blue.

inline constexpr Rgb kRed{255, 0, 0};
inline constexpr Rgb kGreen{0, 255, 0};
inline constexpr Rgb kBlue{0, 0, 255};
inline constexpr Rgb kWhite{255, 255, 255};
inline constexpr Rgb kBlack{0, 0, 0};

inline bool color_matches(const Rgb& px, const Rgb& target, int tolerance) {
  auto close = [tolerance](std::uint8_t a, std::uint8_t b) {
    return std::abs(static_cast<int>(a) - static_cast<int>(b)) <= tolerance;
  };
  return close(px.r, target.r) && close(px.g, target.g) && close(px.b, target.b);
}

namespace detail {

inline State centroid_of(const RgbImage& image, const Rgb& color, int tolerance,
                         const char* what) {
  double sx = 0.0, sy = 0.0;
  std::size_t n = 0;
  for (std::size_t row = 0; row < image.height; ++row) {
    for (std::size_t col = 0; col < image.width; ++col) {
      if (color_matches(image.at(col, row), color, tolerance)) {
        sx += static_cast<double>(col);
        sy += static_cast<double>(row);
        ++n;
      }
    }
  }
  if (n == 0) throw QueryError(std::string("query image has no ") + what + " pixel");
  return {sx / static_cast<double>(n), sy / static_cast<double>(n)};
}

}  // namespace detail

inline PlanningQuery decode_query(const RgbImage& image, const GridMap& map, double goal_radius,
                                  int color_tolerance = 0) {
  if (image.width != map.width() || image.height != map.height()) {
    throw ContractError("query image dimensions do not match map");
  }
  PlanningQuery q{detail::centroid_of(image, kRed, color_tolerance, "red (start)"),
                  detail::centroid_of(image, kBlue, color_tolerance, "blue (goal)"),
                  goal_radius};
  validate_query(q, map);
  return q;
}

inline RgbImage render_map(const GridMap& map) {
  RgbImage image{map.width(), map.height(), std::vector<Rgb>(map.cell_count(), kWhite)};
  for (std::size_t i = 0; i < image.pixels.size(); ++i) {
    if (map.obstacle_at(i)) image.pixels[i] = kBlack;
  }
  return image;
}

inline void paint_state(RgbImage& image, const State& s, const Rgb& color) {
  if (s.x < 0.0 || s.y < 0.0) return;
  const auto col = static_cast<std::size_t>(s.x);
  const auto row = static_cast<std::size_t>(s.y);
  if (col < image.width && row < image.height) image.at(col, row) = color;
}

// Map rendering with a single red start pixel and a single blue goal pixel.
// decode_query of the result recovers the start/goal cells' corners.
inline RgbImage encode_query(const GridMap& map, const PlanningQuery& q) {
  RgbImage image = render_map(map);
  paint_state(image, q.start, kRed);
  paint_state(image, q.goal, kBlue);
  return image;
}

inline RgbImage render_overlay(const GridMap& map, const HeuristicMap& h, const PlanningQuery& q) {
  detail::require(same_dims(map, h), "overlay: heuristic dimensions do not match map");
  RgbImage image = render_map(map);
  for (std::size_t i = 0; i < image.pixels.size(); ++i) {
    if (!map.obstacle_at(i) && h.weights()[i] > 0.5) image.pixels[i] = kGreen;
  }
  paint_state(image, q.start, kRed);
  paint_state(image, q.goal, kBlue);
  return image;
}

inline Bytes save_overlay(const GridMap& map, const HeuristicMap& h, const PlanningQuery& q) {
  return encode_ppm(render_overlay(map, h, q));
}

}  // namespace region_rrt

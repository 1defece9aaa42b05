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

// Sampling distributions over grid cells.
//
// A distribution mixes the normalized heuristic with the uniform distribution
// over free cells:
//
//   mass(c) = lambda * h(c) / sum(h) + (1 - lambda) / |free|   for free c
//   mass(c) = 0                                                for obstacle c
//
// States are drawn by inverting the cumulative table to pick a cell, then
// jittering uniformly inside that cell's unit square.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "region_rrt/error.hpp"
#include "region_rrt/map_model.hpp"
#include "region_rrt/random.hpp"

namespace region_rrt {

class SamplingDistribution {
 public:
  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  double lambda() const { return lambda_; }
  const std::vector<double>& mass() const { return mass_; }
  const std::vector<double>& cumulative() const { return cumulative_; }

  double mass_at(std::size_t col, std::size_t row) const { return mass_[row * width_ + col]; }

  // Index of the cell holding the u-quantile, u in [0, 1).
  std::size_t cell_for(double u) const {
    const double target = u * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    if (it == cumulative_.end()) return last_positive_;
    return static_cast<std::size_t>(it - cumulative_.begin());
  }

 private:
  SamplingDistribution(std::size_t width, std::size_t height, double lambda,
                       std::vector<double> mass)
      : width_(width), height_(height), lambda_(lambda), mass_(std::move(mass)) {
    cumulative_.resize(mass_.size());
    double running = 0.0;
    for (std::size_t i = 0; i < mass_.size(); ++i) {
      running += mass_[i];
      cumulative_[i] = running;
      if (mass_[i] > 0.0) last_positive_ = i;
    }
  }

  friend SamplingDistribution build_distribution(const HeuristicMap&, const GridMap&, double);
  friend SamplingDistribution uniform_distribution(const GridMap&);

  std::size_t width_;
  std::size_t height_;
  double lambda_;
  std::vector<double> mass_;
  std::vector<double> cumulative_;
  std::size_t last_positive_ = 0;
};

inline SamplingDistribution uniform_distribution(const GridMap& map) {
  if (map.free_count() == 0) throw DegenerateError("map has no free cells");
  const double share = 1.0 / static_cast<double>(map.free_count());
  std::vector<double> mass(map.cell_count(), 0.0);
  for (std::size_t i = 0; i < mass.size(); ++i) {
    if (!map.obstacle_at(i)) mass[i] = share;
  }
  return SamplingDistribution(map.width(), map.height(), 0.0, std::move(mass));
}

// lambda = 0 ignores h entirely. For lambda > 0 the heuristic must carry
// mass on free cells; weights on obstacle cells are ignored.
inline SamplingDistribution build_distribution(const HeuristicMap& h, const GridMap& map,
                                               double lambda) {
  detail::require(lambda >= 0.0 && lambda <= 1.0, "lambda must lie in [0,1]");
  detail::require(same_dims(map, h), "heuristic dimensions do not match map");
  if (map.free_count() == 0) throw DegenerateError("map has no free cells");
  if (lambda == 0.0) return uniform_distribution(map);

  double heuristic_total = 0.0;
  for (std::size_t i = 0; i < map.cell_count(); ++i) {
    if (!map.obstacle_at(i)) heuristic_total += h.weights()[i];
  }
  if (!(heuristic_total > 0.0)) {
    throw DegenerateError("heuristic has no mass on free cells (lambda > 0)");
  }

  const double uniform_share = (1.0 - lambda) / static_cast<double>(map.free_count());
  std::vector<double> mass(map.cell_count(), 0.0);
  for (std::size_t i = 0; i < mass.size(); ++i) {
    if (map.obstacle_at(i)) continue;
    mass[i] = lambda * (h.weights()[i] / heuristic_total) + uniform_share;
  }
  return SamplingDistribution(map.width(), map.height(), lambda, std::move(mass));
}

namespace detail {

// cell + u with u in [0,1), kept strictly below cell + 1 after rounding.
inline double jitter(std::size_t cell, double u) {
  const double base = static_cast<double>(cell);
  const double v = base + u;
  return v < base + 1.0 ? v : std::nextafter(base + 1.0, base);
}

}  // namespace detail

inline State sample_state(const SamplingDistribution& d, RandomSource& rng) {
  const std::size_t cell = d.cell_for(rng.uniform01());
  const std::size_t col = cell % d.width();
  const std::size_t row = cell / d.width();
  const double jx = rng.uniform01();
  const double jy = rng.uniform01();
  return {detail::jitter(col, jx), detail::jitter(row, jy)};
}

// Same law as sample_state over uniform_distribution(map), without building
// the table.
inline State sample_uniform(const GridMap& map, RandomSource& rng) {
  if (map.free_count() == 0) throw DegenerateError("map has no free cells");
  std::uint64_t k = rng.uniform_index(map.free_count());
  std::size_t cell = 0;
  for (; cell < map.cell_count(); ++cell) {
    if (map.obstacle_at(cell)) continue;
    if (k == 0) break;
    --k;
  }
  const double jx = rng.uniform01();
  const double jy = rng.uniform01();
  return {detail::jitter(cell % map.width(), jx), detail::jitter(cell / map.width(), jy)};
}

}  // namespace region_rrt

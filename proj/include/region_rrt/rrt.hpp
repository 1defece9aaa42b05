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

// Rapidly-exploring random tree over a 2-D occupancy grid.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "region_rrt/error.hpp"
#include "region_rrt/map_model.hpp"
#include "region_rrt/random.hpp"
#include "region_rrt/sampling.hpp"

namespace region_rrt {

// Vertices are appended after their parents, so parent[i] < i for i >= 1.
// parent[0] is a sentinel 0 for the root.
struct Tree {
  std::vector<State> vertices;
  std::vector<std::size_t> parent;

  std::size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }

  void add_root(const State& s) {
    vertices = {s};
    parent = {0};
  }

  std::size_t add(const State& s, std::size_t parent_index) {
    vertices.push_back(s);
    parent.push_back(parent_index);
    return vertices.size() - 1;
  }
};

struct PlannerParams {
  double step_length = 10.0;
  std::size_t max_iterations = 5000;
  double collision_resolution = 1.0;
  double goal_radius = 5.0;

  void validate() const {
    detail::require(step_length > 0.0, "step_length must be positive");
    detail::require(max_iterations >= 1, "max_iterations must be at least 1");
    detail::require(collision_resolution > 0.0, "collision_resolution must be positive");
    detail::require(goal_radius > 0.0, "goal_radius must be positive");
  }
};

struct PlanResult {
  Tree tree;
  std::vector<State> path;  // empty on failure
  std::size_t node_count = 0;
  std::size_t iterations_used = 0;
  double time_cost = 0.0;  // seconds, planning loop only
  double path_cost = 0.0;

  bool success() const { return !path.empty(); }
};

// Exact linear scan; ties go to the lowest index.
inline std::size_t nearest(const Tree& tree, const State& q) {
  detail::require(!tree.empty(), "nearest: tree is empty");
  std::size_t best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
    const double dx = tree.vertices[i].x - q.x;
    const double dy = tree.vertices[i].y - q.y;
    const double d2 = dx * dx + dy * dy;
    if (d2 < best_d2) {
      best_d2 = d2;
      best = i;
    }
  }
  return best;
}

inline State steer(const State& from, const State& toward, double step_length) {
  detail::require(step_length > 0.0, "steer: step_length must be positive");
  const double d = distance(from, toward);
  if (d <= step_length) return toward;
  const double scale = step_length / d;
  return {from.x + scale * (toward.x - from.x), from.y + scale * (toward.y - from.y)};
}

namespace detail {

// One sample strictly inside every cell the open segment passes through, found by
// walking the integer grid-line crossings in order.
inline bool traversed_cells_free(const State& a, const State& b, const GridMap& map) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double inf = std::numeric_limits<double>::infinity();
  double line_x = dx > 0 ? std::floor(a.x) + 1 : std::ceil(a.x) - 1;
  double line_y = dy > 0 ? std::floor(a.y) + 1 : std::ceil(a.y) - 1;
  double prev = 0.0;
  for (;;) {
    const double tx = dx == 0 ? inf : (line_x - a.x) / dx;
    const double ty = dy == 0 ? inf : (line_y - a.y) / dy;
    const double t = std::min({tx, ty, 1.0});
    if (t > prev) {
      const double mid = 0.5 * (prev + t);
      if (!map.is_free({a.x + mid * dx, a.y + mid * dy})) return false;
    }
    if (t >= 1.0) return true;
    prev = t;
    if (tx == t) line_x += dx > 0 ? 1 : -1;
    if (ty == t) line_y += dy > 0 ? 1 : -1;
  }
}

}  // namespace detail

// Checks n+1 evenly spaced points from a to b inclusive, n = ceil(|ab| / resolution),
// plus one point inside each grid cell the segment crosses.
inline bool collision_free(const State& a, const State& b, const GridMap& map,
                           double resolution) {
  detail::require(resolution > 0.0, "collision_free: resolution must be positive");
  const double length = distance(a, b);
  const auto steps = static_cast<std::size_t>(std::ceil(length / resolution));
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = steps == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(steps);
    const State p{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    if (!map.is_free(p)) return false;
  }
  return detail::traversed_cells_free(a, b, map);
}

inline double path_cost(const std::vector<State>& path) {
  detail::require(!path.empty(), "path_cost: empty path");
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) total += distance(path[i - 1], path[i]);
  return total;
}

namespace detail {

inline std::vector<State> extract_path(const Tree& tree, std::size_t leaf, const State& goal) {
  std::vector<State> reversed;
  std::size_t v = leaf;
  while (true) {
    reversed.push_back(tree.vertices[v]);
    if (v == 0) break;
    v = tree.parent[v];
  }
  std::vector<State> path(reversed.rbegin(), reversed.rend());
  path.push_back(goal);
  return path;
}

}  // namespace detail

// Grows a tree from query.start with samples drawn from dist until a new
// vertex lands within params.goal_radius of the goal with a collision-free line to
// it. The returned path ends at the exact goal. On exhaustion the path is
// empty and the partial tree is kept.
inline PlanResult plan(const GridMap& map, const PlanningQuery& query,
                       const SamplingDistribution& dist, const PlannerParams& params,
                       RandomSource& rng) {
  params.validate();
  validate_query(query, map);
  detail::require(dist.width() == map.width() && dist.height() == map.height(),
                  "plan: distribution dimensions do not match map");

  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();

  PlanResult result;
  Tree& tree = result.tree;
  tree.add_root(query.start);

  auto reaches_goal = [&](const State& s) {
    return distance(s, query.goal) <= params.goal_radius &&
           collision_free(s, query.goal, map, params.collision_resolution);
  };

  std::size_t goal_leaf = 0;
  bool found = reaches_goal(query.start);
  std::size_t iteration = 0;
  while (!found && iteration < params.max_iterations) {
    ++iteration;
    const State q_rand = sample_state(dist, rng);
    const std::size_t near_index = nearest(tree, q_rand);
    const State q_near = tree.vertices[near_index];
    const State q_new = steer(q_near, q_rand, params.step_length);
    if (q_new == q_near) continue;
    if (!collision_free(q_near, q_new, map, params.collision_resolution)) continue;
    const std::size_t added = tree.add(q_new, near_index);
    if (reaches_goal(q_new)) {
      goal_leaf = added;
      found = true;
    }
  }

  result.iterations_used = iteration;
  result.node_count = tree.size();
  if (found) {
    result.path = detail::extract_path(tree, goal_leaf, query.goal);
    result.path_cost = path_cost(result.path);
  }
  result.time_cost = std::chrono::duration<double>(Clock::now() - started).count();
  return result;
}

}  // namespace region_rrt

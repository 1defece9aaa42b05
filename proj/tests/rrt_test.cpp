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

#include "region_rrt/rrt.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "region_rrt/corpus.hpp"

namespace region_rrt {
namespace {

// Independent of collision_free: dense 0.01-spaced walk along the segment.
bool supersampled_free(const State& a, const State& b, const GridMap& map) {
  const double len = std::hypot(b.x - a.x, b.y - a.y);
  const auto n = static_cast<long>(std::ceil(len / 0.01));
  for (long k = 0; k <= n; ++k) {
    const double t = n == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(n);
    const double x = a.x + t * (b.x - a.x), y = a.y + t * (b.y - a.y);
    if (x < 0 || y < 0 || x >= static_cast<double>(map.width()) ||
        y >= static_cast<double>(map.height())) {
      return false;
    }
    if (map.obstacle(static_cast<std::size_t>(x), static_cast<std::size_t>(y))) return false;
  }
  return true;
}

void expect_valid_result(const PlanResult& r, const GridMap& map, const PlanningQuery& q,
                         const PlannerParams& p) {
  const Tree& t = r.tree;
  ASSERT_EQ(r.node_count, t.size());
  ASSERT_LE(r.node_count, r.iterations_used + 1);
  ASSERT_EQ(t.vertices.front(), q.start);
  for (std::size_t i = 1; i < t.size(); ++i) {
    ASSERT_LT(t.parent[i], i);
    ASSERT_TRUE(map.is_free(t.vertices[i]));
    ASSERT_TRUE(collision_free(t.vertices[t.parent[i]], t.vertices[i], map,
                               p.collision_resolution));
  }
  if (r.path.empty()) return;
  ASSERT_EQ(r.path.front(), q.start);
  ASSERT_LE(distance(r.path.back(), q.goal), p.goal_radius);
  double sum = 0.0;
  for (std::size_t i = 1; i < r.path.size(); ++i) {
    ASSERT_TRUE(collision_free(r.path[i - 1], r.path[i], map, p.collision_resolution));
    sum += distance(r.path[i - 1], r.path[i]);
  }
  EXPECT_NEAR(r.path_cost, sum, 1e-9);
}

TEST(NearestTest, Examples) {
  Tree t;
  t.add_root({0, 0});
  t.add({5, 5}, 0);
  EXPECT_EQ(nearest(t, {1, 1}), 0u);
  Tree tie;
  tie.add_root({0, 0});
  tie.add({2, 0}, 0);
  EXPECT_EQ(nearest(tie, {1, 0}), 0u);
  EXPECT_THROW(nearest(Tree{}, {0, 0}), ContractError);
}

TEST(NearestTest, MatchesLinearScanOracle) {
  RandomSource rng(100);
  for (int trial = 0; trial < 50; ++trial) {
    Tree t;
    t.add_root({rng.uniform(0, 50), rng.uniform(0, 50)});
    for (int i = 1; i < 100; ++i) {
      // Integer lattice points make exact ties common.
      t.add({static_cast<double>(rng.uniform_index(20)), static_cast<double>(rng.uniform_index(20))},
            0);
    }
    const State q{static_cast<double>(rng.uniform_index(40)) / 2.0,
                  static_cast<double>(rng.uniform_index(40)) / 2.0};
    std::size_t oracle = 0;
    long double best = std::numeric_limits<long double>::infinity();
    for (std::size_t i = 0; i < t.size(); ++i) {
      const long double dx = t.vertices[i].x - q.x, dy = t.vertices[i].y - q.y;
      const long double d = std::sqrt(dx * dx + dy * dy);
      if (d < best) {
        best = d;
        oracle = i;
      }
    }
    EXPECT_EQ(nearest(t, q), oracle);
  }
}

TEST(SteerTest, Examples) {
  EXPECT_EQ(steer({0, 0}, {10, 0}, 4), (State{4, 0}));
  EXPECT_EQ(steer({0, 0}, {1, 0}, 4), (State{1, 0}));
  EXPECT_EQ(steer({2, 2}, {2, 2}, 4), (State{2, 2}));
  EXPECT_THROW(steer({0, 0}, {1, 0}, 0.0), ContractError);
  EXPECT_THROW(steer({0, 0}, {1, 0}, -1.0), ContractError);
}

TEST(SteerTest, ThreeFourFiveAgainstExtendedPrecision) {
  const State s = steer({0, 0}, {3, 4}, 2.5);
  const long double len = std::sqrt(3.0L * 3.0L + 4.0L * 4.0L);
  const long double ox = 2.5L * 3.0L / len, oy = 2.5L * 4.0L / len;
  EXPECT_NEAR(s.x, static_cast<double>(ox), 1e-15);
  EXPECT_NEAR(s.y, static_cast<double>(oy), 1e-15);
  EXPECT_NEAR(s.x, 1.5, 1e-15);
  EXPECT_NEAR(s.y, 2.0, 1e-15);
}

TEST(CollisionFreeTest, Examples) {
  const GridMap empty = GridMap::all_free(10, 10);
  EXPECT_TRUE(collision_free({0.2, 0.3}, {9.9, 9.1}, empty, 1.0));
  EXPECT_TRUE(collision_free({4.5, 4.5}, {4.5, 4.5}, empty, 1.0));

  std::vector<std::uint8_t> occ(16, 0);
  for (std::size_t row = 0; row < 4; ++row) occ[row * 4 + 2] = 1;
  const GridMap wall(4, 4, occ);
  const State a{0.5, 1.5}, b{3.5, 1.5};
  ASSERT_FALSE(supersampled_free(a, b, wall));
  EXPECT_FALSE(collision_free(a, b, wall, 1.0));
  EXPECT_THROW(collision_free(a, b, wall, 0.0), ContractError);
}

TEST(CollisionFreeTest, EndpointsAreChecked) {
  const GridMap map(3, 3, {0, 0, 0, 0, 0, 0, 0, 0, 1});
  EXPECT_FALSE(collision_free({0.5, 0.5}, {2.5, 2.5}, map, 10.0));
  EXPECT_FALSE(collision_free({0.5, 0.5}, {3.0, 0.5}, map, 1.0));
}

TEST(CollisionFreeTest, CornerClipBetweenSamplesIsCaught) {
  // Evenly spaced samples land in cells (0,1) and (1,0); the segment still cuts cell (1,1).
  const GridMap map(3, 3, {0, 0, 0, 0, 1, 0, 0, 0, 0});
  const State a{0.3, 1.8}, b{1.9, 0.3};
  ASSERT_FALSE(supersampled_free(a, b, map));
  EXPECT_FALSE(collision_free(a, b, map, 1.0));
}

TEST(CollisionFreeTest, DiagonalThroughCornersStaysOnItsCells) {
  const GridMap map(4, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  ASSERT_TRUE(supersampled_free({0.0, 0.0}, {3.0, 3.0}, map));
  EXPECT_TRUE(collision_free({0.0, 0.0}, {3.0, 3.0}, map, 1.0));
  EXPECT_TRUE(collision_free({3.0, 3.0}, {0.0, 0.0}, map, 1.0));
}

TEST(CollisionFreeTest, OracleFreeSegmentsAreFree) {
  RandomSource rng(9);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::uint8_t> occ(16 * 16, 0);
    for (int k = 0; k < 6; ++k) {
      const std::size_t c = rng.uniform_index(14), r = rng.uniform_index(14);
      for (std::size_t dr = 0; dr < 3; ++dr)
        for (std::size_t dc = 0; dc < 3; ++dc) occ[(r + dr) * 16 + c + dc] = 1;
    }
    const GridMap map(16, 16, occ);
    const State a{rng.uniform(0, 16), rng.uniform(0, 16)};
    const State b{rng.uniform(0, 16), rng.uniform(0, 16)};
    if (supersampled_free(a, b, map)) {
      EXPECT_TRUE(collision_free(a, b, map, 1.0));
    }
  }
}

TEST(PathCostTest, Examples) {
  EXPECT_EQ(path_cost({{0, 0}, {3, 4}}), 5.0);
  EXPECT_EQ(path_cost({{1, 1}}), 0.0);
  EXPECT_THROW(path_cost({}), ContractError);
}

TEST(PathCostTest, MatchesCompensatedSum) {
  RandomSource rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<State> path;
    for (int i = 0; i < 10; ++i) path.push_back({rng.uniform(0, 256), rng.uniform(0, 256)});
    long double sum = 0.0L, c = 0.0L;
    for (std::size_t i = 1; i < path.size(); ++i) {
      const long double dx = path[i].x - path[i - 1].x, dy = path[i].y - path[i - 1].y;
      const long double y = std::sqrt(dx * dx + dy * dy) - c;
      const long double t = sum + y;
      c = (t - sum) - y;
      sum = t;
    }
    EXPECT_NEAR(path_cost(path), static_cast<double>(sum), 1e-9);
  }
}

// ---------------------------------------------------------------------------

TEST(PlanTest, EmptyMapFindsPath) {
  const GridMap map = GridMap::all_free(64, 64);
  const PlanningQuery q{{5, 5}, {60, 60}, 5.0};
  PlannerParams p;
  p.max_iterations = 5000;
  RandomSource rng(1);
  const PlanResult r = plan(map, q, uniform_distribution(map), p, rng);
  ASSERT_TRUE(r.success());
  EXPECT_EQ(r.path.front(), (State{5, 5}));
  EXPECT_EQ(r.path.back(), q.goal);
  expect_valid_result(r, map, q, p);
  EXPECT_GE(r.time_cost, 0.0);
}

TEST(PlanTest, WalledMapExhaustsIterations) {
  const GridMap map = with_obstacles(64, 64, {{30, 0, 34, 64}});
  const PlanningQuery q{{5, 5}, {60, 60}, 5.0};
  PlannerParams p;
  p.max_iterations = 800;
  RandomSource rng(2);
  const PlanResult r = plan(map, q, uniform_distribution(map), p, rng);
  EXPECT_FALSE(r.success());
  EXPECT_EQ(r.iterations_used, 800u);
  EXPECT_GT(r.node_count, 1u);
  expect_valid_result(r, map, q, p);
}

TEST(PlanTest, GoalWithinRadiusOfStartConnectsImmediately) {
  const GridMap map = GridMap::all_free(32, 32);
  const PlanningQuery q{{10, 10}, {12, 11}, 5.0};
  PlannerParams p;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RandomSource rng(seed);
    const PlanResult r = plan(map, q, uniform_distribution(map), p, rng);
    ASSERT_EQ(r.path.size(), 2u);
    EXPECT_EQ(r.path[0], q.start);
    EXPECT_EQ(r.path[1], q.goal);
    EXPECT_EQ(r.iterations_used, 0u);
    EXPECT_EQ(r.node_count, 1u);
    EXPECT_DOUBLE_EQ(r.path_cost, distance(q.start, q.goal));
  }
}

TEST(PlanTest, InfeasibleQueryFailsBeforeIterating) {
  const GridMap map = with_obstacles(16, 16, {{0, 0, 4, 4}});
  PlannerParams p;
  RandomSource rng(0);
  EXPECT_THROW(plan(map, {{1, 1}, {10, 10}, 5.0}, uniform_distribution(map), p, rng), QueryError);
  EXPECT_THROW(plan(map, {{10, 10}, {2, 2}, 5.0}, uniform_distribution(map), p, rng), QueryError);
  EXPECT_THROW(plan(map, {{10, 10}, {20, 2}, 5.0}, uniform_distribution(map), p, rng), QueryError);
  p.step_length = 0;
  EXPECT_THROW(plan(map, {{10, 10}, {12, 12}, 5.0}, uniform_distribution(map), p, rng),
               ContractError);
}

TEST(PlanTest, DistributionMustMatchMap) {
  const GridMap map = GridMap::all_free(16, 16);
  RandomSource rng(0);
  EXPECT_THROW(plan(map, {{1, 1}, {14, 14}, 1.0}, uniform_distribution(GridMap::all_free(8, 8)),
                    PlannerParams{}, rng),
               ContractError);
}

TEST(PlanTest, DeterministicApartFromTime) {
  const auto maps = benchmark_maps();
  const Bundle& b = maps[1];
  const auto dist = build_distribution(*b.ground_truth, b.map, 0.5);
  PlannerParams p;
  RandomSource r1(17), r2(17);
  const PlanResult a = plan(b.map, b.query, dist, p, r1);
  const PlanResult c = plan(b.map, b.query, dist, p, r2);
  EXPECT_EQ(a.tree.vertices, c.tree.vertices);
  EXPECT_EQ(a.tree.parent, c.tree.parent);
  EXPECT_EQ(a.path, c.path);
  EXPECT_EQ(a.iterations_used, c.iterations_used);
  EXPECT_EQ(a.path_cost, c.path_cost);
}

TEST(PlanTest, RandomMapsProduceValidResults) {
  RandomSource gen(55);
  PlannerParams p;
  p.step_length = 4.0;
  p.max_iterations = 2000;
  p.goal_radius = 2.0;
  int solved = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const GridMap map = random_block_map(48, 48, 12, 8, gen);
    const auto q = random_query(map, p.goal_radius, 20.0, gen);
    if (!q) continue;
    RandomSource rng(static_cast<std::uint64_t>(trial));
    const PlanResult r = plan(map, *q, uniform_distribution(map), p, rng);
    expect_valid_result(r, map, *q, p);
    solved += r.success() ? 1 : 0;
  }
  EXPECT_GT(solved, 0);
}

}  // namespace
}  // namespace region_rrt

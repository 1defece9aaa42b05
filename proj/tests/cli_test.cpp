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

// Drives the region_rrt and make_corpus binaries end to end.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "region_rrt.hpp"

namespace region_rrt {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status;
  std::string err;
};

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("region_rrt_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliRun run(const std::string& args, const fs::path& dir) {
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = std::string(REGION_RRT_CLI) + " " + args + " 2> " + err.string();
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(err)};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

void write_bundle(const fs::path& dir, const std::string& name, const GridMap& map,
                  const PlanningQuery& q, std::optional<HeuristicMap> gt = std::nullopt) {
  save_bundle(dir, Bundle{name, map, q, std::nullopt, std::move(gt)});
}

// ---------------------------------------------------------------------------

TEST(CliPlanTest, StraightShotSucceeds) {
  const fs::path dir = scratch("plan_ok");
  const GridMap map = GridMap::all_free(64, 64);
  write_bundle(dir, "open", map, {{5, 5}, {60, 60}, 5.0});
  const CliRun r = run("plan --map " + (dir / "open.map.pgm").string() + " --query " +
                        (dir / "open.query.ppm").string() + " --seed 3 --out " +
                        (dir / "out.csv").string() + " --path-out " + (dir / "path.csv").string() +
                        " --overlay " + (dir / "tree.ppm").string(),
                    dir);
  ASSERT_EQ(r.status, 0) << r.err;
  const auto rows = lines(slurp(dir / "out.csv"));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], kTrialCsvHeader);
  const auto f = fields(rows[1]);
  EXPECT_EQ(f[0], "open");
  EXPECT_EQ(f[1], "uniform");
  EXPECT_EQ(f[3], "true");

  // Path validity oracle on the written states.
  std::vector<State> path;
  const auto path_rows = lines(slurp(dir / "path.csv"));
  for (std::size_t i = 1; i < path_rows.size(); ++i) {
    const auto xy = fields(path_rows[i]);
    path.push_back({std::stod(xy[0]), std::stod(xy[1])});
  }
  ASSERT_GE(path.size(), 2u);
  EXPECT_EQ(path.front(), (State{5, 5}));
  EXPECT_EQ(path.back(), (State{60, 60}));
  for (std::size_t i = 1; i < path.size(); ++i) {
    EXPECT_TRUE(collision_free(path[i - 1], path[i], map, 1.0));
  }
  EXPECT_NEAR(path_cost(path), std::stod(f[7]), 1e-6);

  const RgbImage overlay = parse_ppm(read_file((dir / "tree.ppm").string()));
  EXPECT_EQ(overlay.at(5, 5), kRed);
  EXPECT_EQ(overlay.at(60, 60), kBlue);
}

TEST(CliPlanTest, ExplicitStatesAndHeuristic) {
  const fs::path dir = scratch("plan_heur");
  const GridMap map = GridMap::all_free(32, 32);
  write_file((dir / "m.pgm").string(), save_grid_map(map));
  write_file((dir / "h.pgm").string(),
             save_heuristic(band_region(map, {{2, 2}, {29, 29}}, 3.0)));
  const CliRun r = run("plan --map " + (dir / "m.pgm").string() + " --start 2,2 --goal 29,29 " +
                        "--heuristic " + (dir / "h.pgm").string() + " --step 4 --out " +
                        (dir / "o.csv").string(),
                    dir);
  ASSERT_EQ(r.status, 0) << r.err;
  const auto f = fields(lines(slurp(dir / "o.csv"))[1]);
  EXPECT_EQ(f[1], "heuristic");
}

TEST(CliPlanTest, WalledMapExitsTwo) {
  const fs::path dir = scratch("plan_wall");
  write_bundle(dir, "wall", with_obstacles(32, 32, {{14, 0, 18, 32}}), {{2, 2}, {28, 28}, 5.0});
  const CliRun r = run("plan --map " + (dir / "wall.map.pgm").string() + " --query " +
                        (dir / "wall.query.ppm").string() + " --max-iters 300 --out " +
                        (dir / "out.csv").string(),
                    dir);
  EXPECT_EQ(r.status, 2);
  const auto f = fields(lines(slurp(dir / "out.csv"))[1]);
  EXPECT_EQ(f[3], "false");
  EXPECT_EQ(f[6], "300");
}

TEST(CliPlanTest, InputErrorsExitOne) {
  const fs::path dir = scratch("plan_err");
  CliRun r = run("plan --start 1,1 --goal 3,3", dir);
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("--map"), std::string::npos);

  r = run("plan --map " + (dir / "nope.pgm").string() + " --start 1,1 --goal 3,3", dir);
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("--map"), std::string::npos);

  write_file((dir / "m.pgm").string(), save_grid_map(GridMap::all_free(8, 8)));
  write_file((dir / "h.pgm").string(), save_heuristic(HeuristicMap::constant(4, 4, 1.0)));
  r = run("plan --map " + (dir / "m.pgm").string() + " --start 1,1 --goal 6,6 --heuristic " +
              (dir / "h.pgm").string(),
          dir);
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("--heuristic"), std::string::npos);

  r = run("plan --map " + (dir / "m.pgm").string() + " --start '1;1' --goal 6,6", dir);
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("--start"), std::string::npos);

  r = run("plan --map " + (dir / "m.pgm").string() + " --start 1,1", dir);
  EXPECT_EQ(r.status, 1);

  r = run("plan --map " + (dir / "m.pgm").string() + " --start 1,1 --goal 9,9", dir);
  EXPECT_EQ(r.status, 1);
}

// ---------------------------------------------------------------------------

TEST(CliBenchTest, RawRowsSummaryAndDeterminism) {
  const fs::path dir = scratch("bench");
  const fs::path corpus = dir / "corpus";
  const GridMap map = with_obstacles(40, 40, {{18, 0, 22, 30}});
  write_bundle(corpus, "m1", map, {{4, 4}, {36, 4}, 3.0},
               band_region(map, {{4, 4}, {20, 35}, {36, 4}}, 4.0));
  const std::string common = "bench --corpus " + corpus.string() +
                             " --trials 3 --seed 11 --step 4 --goal-radius 3 --max-iters 4000";
  ASSERT_EQ(run(common + " --algorithms uniform --raw " + (dir / "raw1.csv").string() +
                    " --out " + (dir / "sum1.csv").string(),
                dir)
                .status,
            0);
  EXPECT_EQ(lines(slurp(dir / "raw1.csv")).size(), 4u);

  ASSERT_EQ(run(common + " --raw " + (dir / "a.csv").string() + " --out " +
                    (dir / "sa.csv").string(),
                dir)
                .status,
            0);
  ASSERT_EQ(run(common + " --raw " + (dir / "b.csv").string() + " --out " +
                    (dir / "sb.csv").string(),
                dir)
                .status,
            0);
  auto strip_time = [](const std::string& text) {
    std::string out;
    for (const auto& l : lines(text)) {
      auto f = fields(l);
      f[4] = "";
      for (const auto& x : f) out += x + ",";
      out += "\n";
    }
    return out;
  };
  EXPECT_EQ(strip_time(slurp(dir / "a.csv")), strip_time(slurp(dir / "b.csv")));
  const auto summary = lines(slurp(dir / "sa.csv"));
  ASSERT_EQ(summary.size(), 3u);
  EXPECT_EQ(summary[0], kSummaryCsvHeader);
  EXPECT_EQ(fields(summary[1])[1], "heuristic");
  EXPECT_EQ(fields(summary[2])[1], "uniform");
}

TEST(CliBenchTest, EmptyCorpusExitsOne) {
  const fs::path dir = scratch("bench_empty");
  fs::create_directories(dir / "corpus");
  EXPECT_EQ(run("bench --corpus " + (dir / "corpus").string(), dir).status, 1);
  EXPECT_EQ(run("bench --corpus " + (dir / "missing").string(), dir).status, 1);
}

TEST(CliBenchTest, MakeCorpusFeedsBench) {
  const fs::path dir = scratch("bench_made");
  const std::string make = std::string(MAKE_CORPUS) + " --kind random --count 2 --size 32 --seed 4 --out " +
                           (dir / "c").string();
  ASSERT_EQ(std::system(make.c_str()), 0);
  const CliRun r = run("bench --corpus " + (dir / "c").string() + " --trials 2 --step 4 --out " +
                        (dir / "s.csv").string(),
                    dir);
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(lines(slurp(dir / "s.csv")).size(), 5u);
}

// ---------------------------------------------------------------------------

TEST(CliScoreTest, Cases) {
  const fs::path dir = scratch("score");
  auto put = [&](const std::string& name, std::vector<std::uint8_t> px, std::size_t w = 2) {
    write_file((dir / name).string(), encode_pgm(GrayImage{w, px.size() / w, px}));
    return (dir / name).string();
  };
  const auto gt = put("gt.pgm", {0, 0, 255, 255});
  const auto pred = put("pred.pgm", {255, 0, 255, 0});
  const auto zero = put("zero.pgm", {0, 0, 0, 0});
  const auto wide = put("wide.pgm", {0, 0, 0, 0, 0, 0}, 3);

  ASSERT_EQ(run("score --pred " + gt + " --gt " + gt + " --out " + (dir / "a.csv").string(), dir)
                .status,
            0);
  EXPECT_EQ(lines(slurp(dir / "a.csv"))[1], "1,1,0.5");
  ASSERT_EQ(run("score --pred " + zero + " --gt " + gt + " --out " + (dir / "b.csv").string(), dir)
                .status,
            0);
  EXPECT_EQ(lines(slurp(dir / "b.csv"))[1], "0,0,0.5");
  ASSERT_EQ(run("score --pred " + pred + " --gt " + gt + " --out " + (dir / "c.csv").string(), dir)
                .status,
            0);
  const auto f = fields(lines(slurp(dir / "c.csv"))[1]);
  EXPECT_NEAR(std::stod(f[0]), 1.0 / 3.0, 1e-12);
  EXPECT_EQ(std::stod(f[1]), 0.5);

  const CliRun mismatch = run("score --pred " + wide + " --gt " + gt, dir);
  EXPECT_EQ(mismatch.status, 1);
  EXPECT_NE(mismatch.err.find("--pred"), std::string::npos);
}

// ---------------------------------------------------------------------------

TEST(CliAugmentTest, DefaultsWriteTenBundles) {
  const fs::path dir = scratch("augment");
  const auto maps = benchmark_maps();
  save_bundle(dir / "in", maps[2]);
  const CliRun r = run("augment --input-dir " + (dir / "in").string() + " --name side_gap --out-dir " +
                        (dir / "out").string() + " --seed 5",
                    dir);
  ASSERT_EQ(r.status, 0) << r.err;
  const auto produced = load_corpus(dir / "out", 5.0);
  ASSERT_EQ(produced.size(), 10u);
  for (const auto& b : produced) EXPECT_TRUE(b.ground_truth);
  EXPECT_EQ(lines(slurp(dir / "out" / "manifest.csv")).size(), 11u);
}

TEST(CliAugmentTest, ZeroCountAndIdentity) {
  const fs::path dir = scratch("augment_id");
  const GridMap map = with_obstacles(16, 16, {{4, 4, 8, 8}});
  write_bundle(dir / "in", "b", map, {{1, 1}, {14, 14}, 2.0});
  ASSERT_EQ(run("augment --input-dir " + (dir / "in").string() + " --name b --count 0 --out-dir " +
                    (dir / "zero").string(),
                dir)
                .status,
            0);
  EXPECT_TRUE(load_corpus(dir / "zero", 2.0).empty());

  ASSERT_EQ(run("augment --input-dir " + (dir / "in").string() +
                    " --name b --count 2 --height-shift 0 --width-shift 0 "
                    "--rotation-probability 0 --out-dir " +
                    (dir / "id").string(),
                dir)
                .status,
            0);
  const std::string original = slurp(dir / "in" / "b.map.pgm");
  EXPECT_EQ(slurp(dir / "id" / "b_aug000.map.pgm"), original);
  EXPECT_EQ(slurp(dir / "id" / "b_aug001.map.pgm"), original);
  EXPECT_EQ(slurp(dir / "id" / "b_aug000.query.ppm"), slurp(dir / "in" / "b.query.ppm"));
}

TEST(CliAugmentTest, InfeasibleExitsTwoAndMissingBundleExitsOne) {
  const fs::path dir = scratch("augment_bad");
  // Shifts of up to 1000 cells push a 2x2 map's query out of frame on
  // essentially every draw.
  write_bundle(dir / "in", "tiny", GridMap::all_free(2, 2), {{0, 0}, {1, 1}, 1.0});
  CliRun r = run("augment --input-dir " + (dir / "in").string() +
                  " --name tiny --count 1 --width-shift 1000 --height-shift 1000 --out-dir " +
                  (dir / "out").string(),
              dir);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("attempts"), std::string::npos);
  r = run("augment --input-dir " + (dir / "in").string() + " --name missing --out-dir " +
              (dir / "out").string(),
          dir);
  EXPECT_EQ(r.status, 1);
}

}  // namespace
}  // namespace region_rrt

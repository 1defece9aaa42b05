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

// region_rrt command-line entry point.
//
//   region_rrt plan     plan one query, optionally biased by a heuristic map
//   region_rrt bench    seeded uniform-vs-heuristic trials over a corpus
//   region_rrt score    IoU / Dice of a predicted region against ground truth
//   region_rrt augment  write augmented copies of one corpus bundle
//
// Exit status: 0 success, 1 input error, 2 planning failure (plan) or
// infeasible augmentation (augment).

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "region_rrt.hpp"

namespace fs = std::filesystem;
using namespace region_rrt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFailure = 2;

// Input problems reported with exit status 1; the message names the flag.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
auto with_flag(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError(flag + ": " + e.what());
  }
}

State parse_state(const std::string& flag, const std::string& text) {
  std::istringstream in(text);
  State s;
  char comma = 0;
  std::string rest;
  if (!(in >> s.x >> comma >> s.y) || comma != ',' || (in >> rest)) {
    throw InputError(flag + ": expected x,y but got '" + text + "'");
  }
  return s;
}

void add_planner_options(CLI::App* cmd, PlannerParams& p) {
  cmd->add_option("--step", p.step_length, "Steering step length in cells")
      ->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--max-iters", p.max_iterations, "Iteration budget per plan")
      ->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--resolution", p.collision_resolution, "Collision-check spacing in cells")
      ->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--goal-radius", p.goal_radius, "Goal region radius in cells")
      ->capture_default_str()->check(CLI::PositiveNumber);
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  return file;
}

void draw_segment(RgbImage& img, const State& a, const State& b, const Rgb& color) {
  const double len = distance(a, b);
  const auto steps = static_cast<std::size_t>(std::ceil(len / 0.25));
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = steps == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(steps);
    paint_state(img, {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}, color);
  }
}

// Tree edges in gray, the path in red, start/goal dots on top.
RgbImage render_plan(const GridMap& map, const std::optional<HeuristicMap>& h,
                     const PlanningQuery& q, const PlanResult& r) {
  RgbImage img = h ? render_overlay(map, *h, q) : encode_query(map, q);
  constexpr Rgb kTree{150, 150, 150};
  for (std::size_t i = 1; i < r.tree.size(); ++i) {
    draw_segment(img, r.tree.vertices[r.tree.parent[i]], r.tree.vertices[i], kTree);
  }
  for (std::size_t i = 1; i < r.path.size(); ++i) draw_segment(img, r.path[i - 1], r.path[i], kRed);
  paint_state(img, q.start, kRed);
  paint_state(img, q.goal, kBlue);
  return img;
}

// ---------------------------------------------------------------------------

struct PlanOptions {
  std::string map_path, query_path, heuristic_path, start, goal;
  std::string out, overlay, path_out, map_id;
  double lambda = 0.5;
  std::uint64_t seed = 0;
  int color_tolerance = 0;
  PlannerParams params;
};

int cmd_plan(const PlanOptions& o) {
  const GridMap map = with_flag("--map", [&] { return load_grid_map(read_file(o.map_path)); });

  PlanningQuery query;
  if (!o.query_path.empty()) {
    if (!o.start.empty() || !o.goal.empty()) {
      throw InputError("--query: cannot be combined with --start/--goal");
    }
    query = with_flag("--query", [&] {
      return decode_query(parse_ppm(read_file(o.query_path)), map, o.params.goal_radius,
                          o.color_tolerance);
    });
  } else {
    if (o.start.empty() || o.goal.empty()) {
      throw InputError("--query: required unless both --start and --goal are given");
    }
    query = PlanningQuery{parse_state("--start", o.start), parse_state("--goal", o.goal),
                          o.params.goal_radius};
    with_flag("--start/--goal", [&] { validate_query(query, map); return 0; });
  }

  std::optional<HeuristicMap> heuristic;
  if (!o.heuristic_path.empty()) {
    heuristic = with_flag("--heuristic", [&] { return load_heuristic(read_file(o.heuristic_path), map); });
  }
  const SamplingDistribution dist = with_flag("--lambda", [&] {
    return heuristic ? build_distribution(*heuristic, map, o.lambda) : uniform_distribution(map);
  });

  RandomSource rng(o.seed);
  const PlanResult result = plan(map, query, dist, o.params, rng);

  std::string map_id = o.map_id;
  if (map_id.empty()) {
    map_id = fs::path(o.map_path).filename().string();
    const std::string suffix = ".map.pgm";
    if (map_id.size() > suffix.size() && map_id.ends_with(suffix)) {
      map_id.resize(map_id.size() - suffix.size());
    }
  }
  const TrialRecord rec{map_id,
                        heuristic ? kHeuristicAlgorithm : kUniformAlgorithm,
                        o.seed,
                        result.success(),
                        result.time_cost,
                        result.node_count,
                        result.iterations_used,
                        result.path_cost};
  std::ofstream file;
  write_trial_csv(open_output(o.out, file), {rec});

  if (!o.overlay.empty()) {
    with_flag("--overlay", [&] {
      write_file(o.overlay, encode_ppm(render_plan(map, heuristic, query, result)));
      return 0;
    });
  }
  if (!o.path_out.empty()) {
    std::ofstream path_file(o.path_out, std::ios::binary);
    if (!path_file) throw InputError("--path-out: cannot write " + o.path_out);
    path_file << "x,y\n";
    for (const auto& s : result.path) path_file << format_real(s.x, 17) << ',' << format_real(s.y, 17) << '\n';
  }
  if (!result.success()) {
    std::cerr << "plan: no path within " << o.params.max_iterations << " iterations\n";
    return kExitFailure;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct BenchOptions {
  std::string corpus, algorithms = "uniform,heuristic", out, raw;
  int color_tolerance = 0;
  BenchConfig config;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

int cmd_bench(BenchOptions o) {
  o.config.algorithms = split_list(o.algorithms);
  with_flag("--algorithms", [&] { o.config.validate(); return 0; });
  const auto corpus = with_flag("--corpus", [&] {
    return load_corpus(o.corpus, o.config.params.goal_radius, o.color_tolerance);
  });
  if (corpus.empty()) throw InputError("--corpus: no bundles (*.map.pgm) in " + o.corpus);

  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  o.config.threads = std::min(hw, threads_from_env(hw));
  const auto records = with_flag("--corpus", [&] { return run_bench(corpus, o.config); });

  if (!o.raw.empty()) {
    std::ofstream raw(o.raw, std::ios::binary);
    if (!raw) throw InputError("--raw: cannot write " + o.raw);
    write_trial_csv(raw, records);
  }
  std::ofstream file;
  write_summary_csv(open_output(o.out, file), aggregate(records));
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ScoreOptions {
  std::string pred, gt, out;
  double threshold = 0.5;
};

int cmd_score(const ScoreOptions& o) {
  const HeuristicMap pred = with_flag("--pred", [&] { return read_weight_image(read_file(o.pred)); });
  const HeuristicMap gt = with_flag("--gt", [&] { return read_weight_image(read_file(o.gt)); });
  if (pred.width() != gt.width() || pred.height() != gt.height()) {
    throw InputError("--pred: dimensions " + std::to_string(pred.width()) + "x" +
                     std::to_string(pred.height()) + " do not match --gt " +
                     std::to_string(gt.width()) + "x" + std::to_string(gt.height()));
  }
  const BinaryMask p = with_flag("--threshold", [&] { return binarize(pred, o.threshold); });
  const BinaryMask g = binarize(gt, o.threshold);
  std::ofstream file;
  std::ostream& out = open_output(o.out, file);
  out << "iou,dice,threshold\n"
      << format_real(iou(p, g), 12) << ',' << format_real(dice(p, g), 12) << ','
      << format_real(o.threshold) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct AugmentOptions {
  std::string input_dir, name, out_dir;
  std::uint64_t seed = 0;
  double goal_radius = 5.0;
  int color_tolerance = 0;
  AugmentParams params;
};

int cmd_augment(const AugmentOptions& o) {
  with_flag("--count", [&] { o.params.validate(); return 0; });
  const Bundle b = with_flag("--name", [&] {
    return load_bundle(o.input_dir, o.name, o.goal_radius, o.color_tolerance);
  });
  const bool has_region = b.ground_truth.has_value();
  const Sample sample{b.map,
                      has_region ? *b.ground_truth : HeuristicMap::constant(b.map.width(), b.map.height(), 0.0),
                      b.query};
  const bool photometric = o.params.brightness_min != 0.0 || o.params.brightness_max != 0.0;

  RandomSource rng(o.seed);
  std::vector<AugmentedSample> outputs;
  try {
    outputs = augment_sample(sample, o.params, rng);
  } catch (const AugmentError& e) {
    std::cerr << "augment: " << e.what() << '\n';
    return kExitFailure;
  }

  with_flag("--out-dir", [&] {
    fs::create_directories(o.out_dir);
    std::ofstream manifest(fs::path(o.out_dir) / "manifest.csv", std::ios::binary);
    if (!manifest) throw Error("cannot write manifest.csv");
    manifest << "name,source,dx,dy,quarter_turns,shear_degrees,brightness\n";
    for (std::size_t i = 0; i < outputs.size(); ++i) {
      const auto& a = outputs[i];
      char suffix[32];
      std::snprintf(suffix, sizeof suffix, "_aug%03zu", i);
      const std::string name = o.name + suffix;
      Bundle out{name, a.sample.map, a.sample.query, std::nullopt, std::nullopt};
      if (has_region) out.ground_truth = a.sample.region;
      save_bundle(o.out_dir, out);
      if (photometric) {
        write_file((fs::path(o.out_dir) / (name + ".render.pgm")).string(), encode_pgm(a.rendering));
      }
      manifest << name << ',' << o.name << ',' << a.transform.dx << ',' << a.transform.dy << ','
               << a.transform.quarter_turns << ',' << format_real(a.transform.shear_degrees) << ','
               << format_real(a.transform.brightness) << '\n';
    }
    return 0;
  });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heuristic-biased RRT planning on occupancy grids"};
  app.require_subcommand(1);

  PlanOptions plan_opts;
  auto* plan_cmd = app.add_subcommand("plan", "Plan a single query");
  plan_cmd->add_option("--map", plan_opts.map_path, "Occupancy map (P5)")->required();
  plan_cmd->add_option("--query", plan_opts.query_path, "Query image (P6, red start, blue goal)");
  plan_cmd->add_option("--start", plan_opts.start, "Start state x,y");
  plan_cmd->add_option("--goal", plan_opts.goal, "Goal state x,y");
  plan_cmd->add_option("--heuristic", plan_opts.heuristic_path, "Promising-region map (P5)");
  plan_cmd->add_option("--lambda", plan_opts.lambda, "Heuristic mixing weight")
      ->capture_default_str()->check(CLI::Range(0.0, 1.0));
  plan_cmd->add_option("--seed", plan_opts.seed, "Random seed")->capture_default_str();
  plan_cmd->add_option("--color-tolerance", plan_opts.color_tolerance,
                       "Per-channel tolerance when matching dot colours")
      ->capture_default_str()->check(CLI::Range(0, 255));
  plan_cmd->add_option("--out", plan_opts.out, "Result CSV (default stdout)");
  plan_cmd->add_option("--overlay", plan_opts.overlay, "Write tree and path overlay (P6)");
  plan_cmd->add_option("--path-out", plan_opts.path_out, "Write path states as CSV");
  plan_cmd->add_option("--map-id", plan_opts.map_id, "Label for the CSV map_id column");
  add_planner_options(plan_cmd, plan_opts.params);

  BenchOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "Run seeded trials over a corpus directory");
  bench_cmd->add_option("--corpus", bench_opts.corpus, "Corpus directory")->required();
  bench_cmd->add_option("--algorithms", bench_opts.algorithms, "Comma list of uniform,heuristic")
      ->capture_default_str();
  bench_cmd->add_option("--lambda", bench_opts.config.lambda, "Heuristic mixing weight")
      ->capture_default_str()->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--trials", bench_opts.config.trials, "Trials per map and algorithm")
      ->capture_default_str()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_opts.config.seed_base, "Seed of trial 0")
      ->capture_default_str();
  bench_cmd->add_option("--color-tolerance", bench_opts.color_tolerance,
                        "Per-channel tolerance when matching dot colours")
      ->capture_default_str()->check(CLI::Range(0, 255));
  bench_cmd->add_option("--out", bench_opts.out, "Summary CSV (default stdout)");
  bench_cmd->add_option("--raw", bench_opts.raw, "Per-trial CSV");
  add_planner_options(bench_cmd, bench_opts.config.params);

  ScoreOptions score_opts;
  auto* score_cmd = app.add_subcommand("score", "IoU and Dice of a predicted region");
  score_cmd->add_option("--pred", score_opts.pred, "Predicted region (P5)")->required();
  score_cmd->add_option("--gt", score_opts.gt, "Ground-truth region (P5)")->required();
  score_cmd->add_option("--threshold", score_opts.threshold, "Binarization threshold")
      ->capture_default_str();
  score_cmd->add_option("--out", score_opts.out, "Metrics CSV (default stdout)");

  AugmentOptions aug_opts;
  auto* aug_cmd = app.add_subcommand("augment", "Write augmented copies of a corpus bundle");
  aug_cmd->add_option("--input-dir", aug_opts.input_dir, "Directory holding the bundle")->required();
  aug_cmd->add_option("--name", aug_opts.name, "Bundle name")->required();
  aug_cmd->add_option("--out-dir", aug_opts.out_dir, "Output directory")->required();
  aug_cmd->add_option("--seed", aug_opts.seed, "Random seed")->capture_default_str();
  aug_cmd->add_option("--goal-radius", aug_opts.goal_radius, "Goal radius for the decoded query")
      ->capture_default_str()->check(CLI::PositiveNumber);
  aug_cmd->add_option("--color-tolerance", aug_opts.color_tolerance,
                      "Per-channel tolerance when matching dot colours")
      ->capture_default_str()->check(CLI::Range(0, 255));
  aug_cmd->add_option("--height-shift", aug_opts.params.height_shift)->capture_default_str();
  aug_cmd->add_option("--width-shift", aug_opts.params.width_shift)->capture_default_str();
  aug_cmd->add_option("--shift-step", aug_opts.params.shift_step)->capture_default_str();
  aug_cmd->add_option("--rotation-probability", aug_opts.params.rotation_probability)
      ->capture_default_str();
  aug_cmd->add_option("--count", aug_opts.params.maps_to_generate, "Maps to generate")
      ->capture_default_str();
  aug_cmd->add_option("--shear-min", aug_opts.params.shear_min_degrees)->capture_default_str();
  aug_cmd->add_option("--shear-max", aug_opts.params.shear_max_degrees)->capture_default_str();
  aug_cmd->add_option("--brightness-min", aug_opts.params.brightness_min)->capture_default_str();
  aug_cmd->add_option("--brightness-max", aug_opts.params.brightness_max)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*plan_cmd) return cmd_plan(plan_opts);
    if (*bench_cmd) return cmd_bench(bench_opts);
    if (*score_cmd) return cmd_score(score_opts);
    if (*aug_cmd) return cmd_augment(aug_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

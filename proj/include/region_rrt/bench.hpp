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

// Seeded benchmark runs over a corpus: every map x algorithm x trial.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "region_rrt/corpus.hpp"
#include "region_rrt/error.hpp"
#include "region_rrt/metrics.hpp"
#include "region_rrt/rrt.hpp"
#include "region_rrt/sampling.hpp"

namespace region_rrt {

inline constexpr const char* kUniformAlgorithm = "uniform";
inline constexpr const char* kHeuristicAlgorithm = "heuristic";

struct BenchConfig {
  std::vector<std::string> algorithms{kUniformAlgorithm, kHeuristicAlgorithm};
  double lambda = 0.5;
  std::size_t trials = 10;
  std::uint64_t seed_base = 0;
  PlannerParams params;
  std::size_t threads = 1;

  void validate() const {
    detail::require(trials >= 1, "bench: trials must be at least 1");
    detail::require(!algorithms.empty(), "bench: no algorithms selected");
    for (const auto& a : algorithms) {
      detail::require(a == kUniformAlgorithm || a == kHeuristicAlgorithm,
                      "bench: unknown algorithm '" + a + "'");
    }
    params.validate();
  }
};

// Thread cap from REGION_RRT_THREADS, or fallback when unset/invalid.
inline std::size_t threads_from_env(std::size_t fallback = 1) {
  const char* raw = std::getenv("REGION_RRT_THREADS");
  if (raw == nullptr) return fallback;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return fallback;
  return static_cast<std::size_t>(v);
}

// The heuristic arm samples from the bundle's heuristic, or its ground truth
// when no prediction is present.
inline SamplingDistribution distribution_for(const Bundle& b, const std::string& algorithm,
                                             double lambda) {
  if (algorithm == kUniformAlgorithm) return uniform_distribution(b.map);
  const HeuristicMap* h = b.heuristic ? &*b.heuristic : (b.ground_truth ? &*b.ground_truth : nullptr);
  if (h == nullptr) throw Error("bundle '" + b.name + "' has no heuristic or ground-truth region");
  return build_distribution(*h, b.map, lambda);
}

// Records are ordered (bundle, algorithm, trial) as given; trial t uses seed
// seed_base + t for every algorithm.
inline std::vector<TrialRecord> run_bench(const std::vector<Bundle>& corpus,
                                          const BenchConfig& config) {
  config.validate();
  if (corpus.empty()) throw Error("bench: corpus is empty");

  struct Arm {
    const Bundle* bundle;
    std::string algorithm;
    SamplingDistribution dist;
  };
  std::vector<Arm> arms;
  for (const auto& b : corpus) {
    for (const auto& a : config.algorithms) {
      arms.push_back({&b, a, distribution_for(b, a, config.lambda)});
    }
  }

  const std::size_t jobs = arms.size() * config.trials;
  std::vector<TrialRecord> records(jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (std::size_t job = next++; job < jobs; job = next++) {
      try {
        const Arm& arm = arms[job / config.trials];
        const std::size_t trial = job % config.trials;
        const std::uint64_t seed = config.seed_base + trial;
        RandomSource rng(seed);
        const PlanResult r = plan(arm.bundle->map, arm.bundle->query, arm.dist, config.params, rng);
        records[job] = TrialRecord{arm.bundle->name, arm.algorithm, seed,     r.success(),
                                   r.time_cost,      r.node_count,  r.iterations_used,
                                   r.path_cost};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(config.threads, 1, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

}  // namespace region_rrt

// Copyright 2026 The supercolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERCOLOR_BATCH_HPP_
#define SUPERCOLOR_BATCH_HPP_

// Batch verification over generated instances: the pi construction, the
// list coloring bound, and the minimum number of colors, with every failure
// serialized for replay.

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "supercolor/core.hpp"
#include "supercolor/error.hpp"
#include "supercolor/gen.hpp"
#include "supercolor/io.hpp"
#include "supercolor/oracle.hpp"
#include "supercolor/pi.hpp"

namespace supercolor {

struct BatchConfig {
  std::uint64_t seed = 7;
  int instances = 200;
  int max_n = 6;
  int list_trials = 5;
  int threads = 1;
  SearchCaps caps;
};

struct CheckOutcome {
  std::vector<std::string> failures;  // "<check>: <message>"
  std::vector<std::string> skipped;   // checks skipped by a search cap
};

// All per-instance checks. Deterministic in (instance, list_seed).
inline CheckOutcome check_instance(const Instance& inst, std::uint64_t list_seed, int list_trials,
                                   const SearchCaps& caps) {
  CheckOutcome out;
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const ResourceError&) {
      out.skipped.push_back(name);
    } catch (const std::exception& e) {
      out.failures.push_back(name + ": " + e.what());
    }
  };

  guarded("pi_conditions", [&] {
    const PiResult r = construct_pi(inst.g1, inst.g2, PiOptions{false});
    const ConditionReport c = verify_conditions(inst.g1, inst.g2, r.pair);
    if (!c.ok()) out.failures.push_back("pi_conditions: condition " + c.witnesses.front().kind);
  });
  guarded("main_theorem", [&] {
    const Report r = verify_main_theorem(inst.g1, inst.g2, list_trials, 0, list_seed, caps);
    for (const auto& v : r.violations) out.failures.push_back("main_theorem: lists " + v.detail);
  });
  guarded("min_k", [&] {
    const Value d = delta(inst.g1, inst.g2);
    const int k = min_k(inst.g1, inst.g2, caps);
    if (k != d) {
      out.failures.push_back("min_k: found " + std::to_string(k) + ", Delta is " + std::to_string(d));
    }
    if (d >= 2 && find_k_coloring(inst.g1, inst.g2, static_cast<int>(d - 1), caps)) {
      out.failures.push_back("min_k: a (Delta-1)-coloring exists");
    }
  });
  return out;
}

struct InstanceOutcome {
  std::string digest;
  GenConfig config;
  std::uint64_t list_seed = 0;
  Instance instance;
  CheckOutcome checks;
};

struct BatchSummary {
  int instances = 0;
  int passed = 0;
  int failed = 0;
  int skipped_checks = 0;
  std::vector<InstanceOutcome> failures;  // sorted by digest

  bool ok() const { return failed == 0; }
};

inline BatchSummary batch_verify(const BatchConfig& cfg) {
  if (cfg.instances < 0) throw InputError("batch: instance count must be nonnegative");
  if (cfg.max_n < 1 || cfg.max_n > kMaxElements) throw InputError("batch: max_n must be in 1..64");
  std::vector<std::optional<InstanceOutcome>> outcomes(static_cast<size_t>(cfg.instances));

  auto work = [&](int first, int stride) {
    for (int i = first; i < cfg.instances; i += stride) {
      const GenConfig gc = mixed_config(cfg.seed, static_cast<std::uint64_t>(i), cfg.max_n);
      Instance inst = generate(gc);
      const std::uint64_t list_seed = mix_seed(gc.seed, 0x6c697374);
      CheckOutcome checks = check_instance(inst, list_seed, cfg.list_trials, cfg.caps);
      outcomes[static_cast<size_t>(i)] =
          InstanceOutcome{digest(inst), gc, list_seed, std::move(inst), std::move(checks)};
    }
  };
  const int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }

  BatchSummary s;
  s.instances = cfg.instances;
  for (auto& o : outcomes) {
    s.skipped_checks += static_cast<int>(o->checks.skipped.size());
    if (o->checks.failures.empty()) {
      ++s.passed;
    } else {
      ++s.failed;
      s.failures.push_back(std::move(*o));
    }
  }
  std::sort(s.failures.begin(), s.failures.end(),
            [](const InstanceOutcome& a, const InstanceOutcome& b) { return a.digest < b.digest; });
  return s;
}

// A failure record carries the instance itself, so it replays without the
// generator: {"digest", "strategy", "seed", "list_seed", "list_trials",
// "checks", "instance"}.
inline Json failure_to_json(const InstanceOutcome& o, int list_trials) {
  return {{"digest", o.digest},
          {"strategy", strategy_name(o.config.strategy)},
          {"seed", o.config.seed},
          {"list_seed", o.list_seed},
          {"list_trials", list_trials},
          {"checks", o.checks.failures},
          {"instance", instance_to_json(o.instance)}};
}

inline Json summary_to_json(const BatchSummary& s, const BatchConfig& cfg) {
  Json failures = Json::array();
  for (const auto& f : s.failures) failures.push_back(failure_to_json(f, cfg.list_trials));
  return {{"instances", s.instances},    {"passed", s.passed},
          {"failed", s.failed},          {"skipped_checks", s.skipped_checks},
          {"max_n", cfg.max_n},          {"list_trials", cfg.list_trials},
          {"failures", failures}};
}

// Re-runs the checks of one failure record.
inline CheckOutcome replay_failure(const Json& record, const SearchCaps& caps) {
  if (!record.contains("instance") || !record.contains("list_seed")) {
    throw ParseError("replay record needs \"instance\" and \"list_seed\"");
  }
  const Instance inst = instance_from_json(record["instance"]);
  const int trials = record.value("list_trials", 5);
  return check_instance(inst, record["list_seed"].get<std::uint64_t>(), trials, caps);
}

}  // namespace supercolor

#endif  // SUPERCOLOR_BATCH_HPP_

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

#ifndef SUPERCOLOR_CLI_HPP_
#define SUPERCOLOR_CLI_HPP_

// Command-line front end. JSON goes to `out`, diagnostics to `err`.
// Exit codes: 0 success, 1 property violated or no coloring,
// 2 input/parse error, 3 search cap or budget exceeded.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "supercolor/batch.hpp"
#include "supercolor/bunch.hpp"
#include "supercolor/core.hpp"
#include "supercolor/encode.hpp"
#include "supercolor/error.hpp"
#include "supercolor/gen.hpp"
#include "supercolor/io.hpp"
#include "supercolor/matching.hpp"
#include "supercolor/oracle.hpp"
#include "supercolor/pi.hpp"

namespace supercolor {

enum ExitCode : int { kOk = 0, kViolated = 1, kInputError = 2, kResourceError = 3 };

namespace detail {

inline std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline Json check_fn(const SetFn& g, bool& ok) {
  const Report family = check_intersecting_family(g);
  const Report capacity = check_capacity(g);
  Json out = {{"intersecting_family", report_to_json(g.ground(), family)},
              {"capacity", report_to_json(g.ground(), capacity)}};
  if (family.ok()) {
    const Report sm = check_supermodular(g);
    out["supermodular"] = report_to_json(g.ground(), sm);
    ok = ok && sm.ok();
  } else {
    out["supermodular"] = nullptr;
  }
  ok = ok && family.ok() && capacity.ok();
  return out;
}

inline Json reduction_attainers(const ReductionResult& r, const GroundSet& original) {
  Json out = Json::array();
  for (const auto& a : r.attainers) {
    out.push_back({{"set", set_to_json(r.reduced.ground(), a.reduced_set)},
                   {"source", set_to_json(original, a.source)}});
  }
  return out;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for list supermodular coloring", "supercolor"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Add timing_ms to JSON envelopes (breaks byte-identity)");

  std::string file, lists_file, k_csv, method = "keylemma", strategy = "closure", out_path,
                                      replay_path;
  int side = 0, trials = 100, sigma = 0, n = 6;
  std::uint64_t seed = 0;
  BatchConfig batch;

  auto* check = app.add_subcommand("check", "Validate both functions of an instance");
  check->add_option("FILE", file, "Instance file")->required();

  auto* analyze = app.add_subcommand("analyze", "Effective family, bunch partition and d-map");
  analyze->add_option("FILE", file, "Instance file")->required();
  analyze->add_option("--side", side, "Only g1 (1) or g2 (2)")->check(CLI::Range(1, 2));

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce both functions by a set K");
  reduce_cmd->add_option("FILE", file, "Instance file")->required();
  reduce_cmd->add_option("--k", k_csv, "Comma-separated elements of K")->required();

  auto* transversal = app.add_subcommand("transversal", "Common partial transversal and case");
  transversal->add_option("FILE", file, "Instance file")->required();

  auto* pi_cmd = app.add_subcommand("pi", "Construct the pair pi1, pi2");
  pi_cmd->add_option("FILE", file, "Instance file")->required();
  pi_cmd->add_option("--method", method, "keylemma or schrijver")
      ->check(CLI::IsMember({"keylemma", "schrijver"}));

  auto* color = app.add_subcommand("color", "Search a list supermodular coloring");
  color->add_option("FILE", file, "Instance file")->required();
  color->add_option("--lists", lists_file, "Lists file")->required();

  auto* verify = app.add_subcommand("verify", "Random lists of length max{d1, d2}");
  verify->add_option("FILE", file, "Instance file")->required();
  verify->add_option("--trials", trials, "Number of random list assignments")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--sigma", sigma, "Color pool size (default Delta + 2)");
  verify->add_option("--seed", seed, "Random seed");

  auto* encode = app.add_subcommand("encode-bipartite", "Bipartite multigraph to instance");
  encode->add_option("GRAPH", file, "Graph file")->required();

  auto* gen = app.add_subcommand("gen", "Generate a random valid instance");
  gen->add_option("--strategy", strategy, "laminar, closure, rank_complement or bipartite");
  gen->add_option("--n", n, "Number of elements (edges for bipartite)");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("-o,--output", out_path, "Write the instance here instead of stdout");

  auto* batch_cmd = app.add_subcommand("batch", "Batch verification over generated instances");
  batch_cmd->add_option("--instances", batch.instances, "Number of instances")
      ->check(CLI::NonNegativeNumber);
  batch_cmd->add_option("--seed", batch.seed, "Random seed");
  batch_cmd->add_option("--max-n", batch.max_n, "Largest ground set")->check(CLI::Range(1, 64));
  batch_cmd->add_option("--list-trials", batch.list_trials, "Random list assignments per instance");
  batch_cmd->add_option("--threads", batch.threads, "Worker threads");
  batch_cmd->add_option("--replay", replay_path, "Re-run one failure record");
  batch_cmd->add_option("-o,--output", out_path, "Also write the summary here");

  std::vector<const char*> argv{"supercolor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  auto emit = [&](const std::string& command, const std::optional<Instance>& inst, Json results,
                  std::optional<std::uint64_t> used_seed) {
    Json env = {{"command", command}, {"results", std::move(results)}};
    env["digest"] = inst ? Json(digest(*inst)) : Json(nullptr);
    env["seed"] = used_seed ? Json(*used_seed) : Json(nullptr);
    if (timing) {
      env["timing_ms"] = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    }
    out << env.dump(2) << "\n";
  };

  try {
    const SearchCaps caps = SearchCaps::from_env();

    if (*check) {
      const Instance inst = load_instance(file);
      bool ok = true;
      Json results = {{"g1", detail::check_fn(inst.g1, ok)}, {"g2", detail::check_fn(inst.g2, ok)}};
      results["ok"] = ok;
      emit("check", inst, results, std::nullopt);
      return ok ? kOk : kViolated;
    }

    if (*analyze) {
      const Instance inst = load_instance(file);
      Json results = Json::object();
      if (side != 2) results["g1"] = analysis_to_json(inst.g1, supercolor::analyze(inst.g1));
      if (side != 1) results["g2"] = analysis_to_json(inst.g2, supercolor::analyze(inst.g2));
      emit("analyze", inst, results, std::nullopt);
      return kOk;
    }

    if (*reduce_cmd) {
      const Instance inst = load_instance(file);
      const Bits k = inst.ground().bits_of(detail::split_names(k_csv));
      const ReductionResult r1 = reduce(inst.g1, k);
      const ReductionResult r2 = reduce(inst.g2, k);
      Json j = instance_to_json(Instance{r1.reduced, r2.reduced});
      j["removed"] = set_to_json(inst.ground(), k);
      j["attainers"] = {{"g1", detail::reduction_attainers(r1, inst.ground())},
                        {"g2", detail::reduction_attainers(r2, inst.ground())}};
      out << j.dump(2) << "\n";
      return kOk;
    }

    if (*transversal) {
      const Instance inst = load_instance(file);
      const TransversalResult t = common_transversal(inst.g1, inst.g2);
      emit("transversal", inst,
           {{"k", set_to_json(inst.ground(), t.k)}, {"case", std::string(1, case_letter(t.case_tag))}},
           std::nullopt);
      return kOk;
    }

    if (*pi_cmd) {
      const Instance inst = load_instance(file);
      PiPair pair;
      Json trace = Json::array();
      std::vector<Value> f;
      if (method == "keylemma") {
        const PiResult r = construct_pi(inst.g1, inst.g2);
        pair = r.pair;
        for (const auto& level : r.trace) {
          trace.push_back({{"k", level.k}, {"case", std::string(1, case_letter(level.case_tag))}});
        }
        f = lemma_bound(inst.g1, inst.g2);
      } else {
        pair = schrijver_pi(inst.g1, inst.g2, caps);
        f.assign(static_cast<size_t>(inst.ground().size()), delta(inst.g1, inst.g2));
      }
      const ConditionReport c = verify_conditions_with_bound(inst.g1, inst.g2, pair, f);
      Json witnesses = Json::array();
      for (const auto& w : c.witnesses) witnesses.push_back(violation_to_json(inst.ground(), w));
      const bool ok = method == "keylemma" ? c.ok() : (c.i_ok && c.ii_ok);
      emit("pi", inst,
           {{"method", method},
            {"pi1", element_map(inst.ground(), pair.pi1)},
            {"pi2", element_map(inst.ground(), pair.pi2)},
            {"f", element_map(inst.ground(), f)},
            {"conditions", {{"i", c.i_ok}, {"ii", c.ii_ok}, {"iii", c.iii_ok}, {"witnesses", witnesses}}},
            {"trace", trace},
            {"ok", ok}},
           std::nullopt);
      return ok ? kOk : kViolated;
    }

    if (*color) {
      const Instance inst = load_instance(file);
      const NamedLists lists = parse_lists(read_file(lists_file), inst.ground());
      const auto phi = find_list_coloring(inst.g1, inst.g2, lists.lists, caps);
      Json coloring = nullptr;
      if (phi) {
        coloring = Json::object();
        for (int u = 0; u < inst.ground().size(); ++u) {
          coloring[inst.ground().name(u)] = lists.palette[static_cast<size_t>((*phi)[static_cast<size_t>(u)] - 1)];
        }
      }
      emit("color", inst, {{"coloring", coloring}}, std::nullopt);
      return phi ? kOk : kViolated;
    }

    if (*verify) {
      const Instance inst = load_instance(file);
      const int pool = sigma > 0 ? sigma : static_cast<int>(delta(inst.g1, inst.g2)) + 2;
      const Report r = verify_main_theorem(inst.g1, inst.g2, trials, pool, seed, caps);
      Json results = report_to_json(inst.ground(), r);
      results["trials"] = trials;
      results["sigma"] = pool;
      results["f"] = element_map(inst.ground(), lemma_bound(inst.g1, inst.g2));
      emit("verify", inst, results, seed);
      return r.ok() ? kOk : kViolated;
    }

    if (*encode) {
      const Instance inst = encode_bipartite(parse_graph(read_file(file)));
      out << instance_to_json(inst).dump(2) << "\n";
      return kOk;
    }

    if (*gen) {
      GenConfig cfg;
      cfg.strategy = parse_strategy(strategy);
      cfg.n_elements = n;
      cfg.seed = seed;
      const std::string text = instance_to_json(generate(cfg)).dump(2) + "\n";
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!(f << text)) throw InputError("cannot write '" + out_path + "'");
        err << "wrote " << out_path << "\n";
      }
      return kOk;
    }

    if (*batch_cmd) {
      batch.caps = caps;
      if (!replay_path.empty()) {
        const Json record = parse_json(read_file(replay_path));
        const CheckOutcome o = replay_failure(record, caps);
        const Instance inst = instance_from_json(record["instance"]);
        emit("batch", inst, {{"replay", true}, {"checks", o.failures}, {"skipped", o.skipped}},
             record["list_seed"].get<std::uint64_t>());
        return o.failures.empty() ? kOk : kViolated;
      }
      const BatchSummary s = batch_verify(batch);
      Json results = summary_to_json(s, batch);
      if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!(f << results.dump(2) << "\n")) throw InputError("cannot write '" + out_path + "'");
      }
      for (const auto& fail : s.failures) {
        err << "failure " << fail.digest << ":";
        for (const auto& c : fail.checks.failures) err << " [" << c << "]";
        err << "\n";
      }
      emit("batch", std::nullopt, results, batch.seed);
      return s.ok() ? kOk : kViolated;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResourceError;
  } catch (const GenerationError& e) {
    err << "generation: " << e.what() << "\n";
    return kResourceError;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kViolated;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kViolated;
  }
  return kInputError;
}

}  // namespace supercolor

#endif  // SUPERCOLOR_CLI_HPP_

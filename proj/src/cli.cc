// Copyright 2026 The SMRA Simulator Authors
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

#include "smra/cli.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "smra/errors.h"
#include "smra/io.h"
#include "smra/mechanism.h"
#include "smra/oracle.h"
#include "smra/scenario.h"
#include "smra/submodularity.h"

namespace smra {
namespace {

struct RunConfig {
  std::string subcommand;
  std::string builtin;
  std::string scenario_path;
  std::string valuation_path;
  std::optional<Value> pair_value;  // --M
  std::optional<int> k;
  std::optional<int> n;
  std::optional<int> alpha;
  std::optional<Value> high;  // --H
  std::optional<int> copies;  // --L
  int trials = 1;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string trace_path;
  std::string out_path;
  int max_rounds = 0;
  std::string local_start;
  std::string secure_variant;
};

int ExitFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOracleTooLarge:
      return kExitOracleBudget;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kUniverseMismatch:
    case ErrorCode::kNotMonotone:
    case ErrorCode::kGenerationFailed:
    case ErrorCode::kInvalidPartition:
    case ErrorCode::kParseError:
      return kExitConfig;
    default:
      return kExitInvariant;
  }
}

Scenario BuildBuiltin(const RunConfig& cfg) {
  const std::string& b = cfg.builtin;
  if (b == "bad_pair") return BuildBadPair(cfg.pair_value.value_or(100));
  if (b == "truthful_tight") {
    return BuildTruthfulTight(cfg.k.value_or(4), cfg.alpha.value_or(3),
                              cfg.copies.value_or(60));
  }
  if (b == "local_tight") {
    return BuildLocalTight(cfg.k.value_or(2), cfg.n.value_or(2),
                           cfg.alpha.value_or(2), cfg.high.value_or(3),
                           cfg.copies.value_or(5));
  }
  if (b == "superadditive_pair") return BuildSuperadditivePair(cfg.pair_value.value_or(50));
  if (b == "nonsecure_punishment") return BuildNonsecurePunishment();
  throw Error(ErrorCode::kInvalidArgument, "unknown builtin '" + b + "'");
}

Scenario LoadConfiguredScenario(const RunConfig& cfg) {
  if (cfg.builtin.empty() == cfg.scenario_path.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "give exactly one of --builtin and --scenario");
  }
  Scenario s = cfg.builtin.empty() ? LoadScenario(cfg.scenario_path)
                                   : BuildBuiltin(cfg);
  for (Strategy& st : s.strategies) {
    if (!cfg.local_start.empty()) {
      st.set_local_start(cfg.local_start == "empty" ? LocalStart::kEmpty
                                                    : LocalStart::kPrevious);
    }
    if (!cfg.secure_variant.empty()) {
      st.set_secure_variant(cfg.secure_variant == "plain"
                                ? SecureVariant::kPlain
                                : SecureVariant::kIncremented);
    }
  }
  s.Validate();
  return s;
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream os(path);
  if (!os) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  }
  return os;
}

int CmdRun(const RunConfig& cfg, std::ostream& out) {
  const Scenario s = LoadConfiguredScenario(cfg);
  TrialOptions options;
  options.jobs = cfg.jobs;
  options.max_rounds = cfg.max_rounds;
  std::vector<RoundRecord> first_trace;
  if (!cfg.trace_path.empty()) {
    options.observer = [&](const TrialRow& row, const AuctionOutcome& o) {
      if (row.trial == 0) first_trace = o.trace;
    };
  }
  const TrialStats stats = RunTrials(s, cfg.trials, cfg.seed, options);
  if (!cfg.out_path.empty()) {
    std::ofstream csv = OpenOutput(cfg.out_path);
    WriteTrialsCsv(csv, stats);
  }
  if (!cfg.trace_path.empty()) {
    std::ofstream trace = OpenOutput(cfg.trace_path);
    WriteTrace(trace, first_trace);
  }
  out << SummaryToJson(stats, cfg.seed).dump(2) << '\n';
  return kExitOk;
}

int CmdOracle(const RunConfig& cfg, std::ostream& out) {
  const Scenario s = LoadConfiguredScenario(cfg);
  out << OptimalAllocationToJson(OptimalWelfare(s.valuations)).dump(2) << '\n';
  return kExitOk;
}

int CmdAnalyze(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.valuation_path.empty()) {
    std::ifstream in(cfg.valuation_path);
    if (!in) {
      throw Error(ErrorCode::kParseError,
                  "cannot open valuation file '" + cfg.valuation_path + "'");
    }
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kParseError, e.what());
    }
    out << ReportToJson(DegreeOfSubmodularity(ValuationFromJson(j))).dump(2)
        << '\n';
    return kExitOk;
  }
  const Scenario s = LoadConfiguredScenario(cfg);
  Json reports = Json::array();
  for (const Valuation& v : s.valuations) {
    reports.push_back(ReportToJson(DegreeOfSubmodularity(v)));
  }
  out << Json{{"scenario", s.name}, {"bidders", reports}}.dump(2) << '\n';
  return kExitOk;
}

int CmdReplay(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.trace_path.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "replay needs --trace");
  }
  std::ifstream in(cfg.trace_path);
  if (!in) {
    throw Error(ErrorCode::kParseError,
                "cannot open trace '" + cfg.trace_path + "'");
  }
  const std::vector<RoundRecord> trace = ReadTrace(in);
  Json result;
  result["rounds"] = trace.size();
  if (trace.empty()) {
    result["consistent"] = true;
    out << result.dump(2) << '\n';
    return kExitOk;
  }
  const int m = static_cast<int>(trace.front().prices_before.size());
  const int n = static_cast<int>(trace.front().bids.size());
  const auto sequence = ReplayTrace(trace, m, n);
  for (std::size_t r = 0; r < trace.size(); ++r) {
    if (sequence[r] != trace[r].provisional_after) {
      err << "replay diverges from the recorded state at round " << r << '\n';
      return kExitInvariant;
    }
  }
  Json allocation = Json::array();
  for (ItemSet s : sequence.back()) allocation.push_back(ItemSetToJson(s));
  result["consistent"] = true;
  result["allocation"] = allocation;
  result["prices"] = trace.back().prices_after;
  out << result.dump(2) << '\n';
  return kExitOk;
}

void AddScenarioFlags(CLI::App* app, RunConfig& cfg) {
  app->add_option("--builtin", cfg.builtin, "Built-in scenario name")
      ->check(CLI::IsMember({"bad_pair", "truthful_tight", "local_tight",
                             "superadditive_pair", "nonsecure_punishment"}));
  app->add_option("--scenario", cfg.scenario_path, "Scenario JSON file");
  app->add_option("--M", cfg.pair_value, "Pair value");
  app->add_option("--k", cfg.k, "Items per block");
  app->add_option("--n", cfg.n, "Number of blocks");
  app->add_option("--alpha", cfg.alpha, "Near-submodularity parameter");
  app->add_option("--H", cfg.high, "High value of the second bidder type");
  app->add_option("--L", cfg.copies, "Bidder copies");
  app->add_option("--local-start", cfg.local_start,
                  "Local search start: previous or empty")
      ->check(CLI::IsMember({"previous", "empty"}));
  app->add_option("--secure-variant", cfg.secure_variant,
                  "Security check: incremented or plain")
      ->check(CLI::IsMember({"incremented", "plain"}));
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Simultaneous multiple-round auction simulator", "smra"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "Run repeated auction trials");
  AddScenarioFlags(run, cfg);
  run->add_option("--trials", cfg.trials, "Number of trials")
      ->check(CLI::PositiveNumber);
  run->add_option("--seed", cfg.seed, "Master seed");
  run->add_option("--jobs", cfg.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  run->add_option("--trace", cfg.trace_path, "JSONL trace of trial 0");
  run->add_option("--out", cfg.out_path, "Per-trial CSV output");
  run->add_option("--max-rounds", cfg.max_rounds,
                  "Round cap; 0 picks the default bound")
      ->check(CLI::NonNegativeNumber);

  CLI::App* oracle = app.add_subcommand("oracle", "Optimal welfare");
  AddScenarioFlags(oracle, cfg);

  CLI::App* analyze =
      app.add_subcommand("analyze", "Degree of submodularity per valuation");
  AddScenarioFlags(analyze, cfg);
  analyze->add_option("--valuation", cfg.valuation_path, "Valuation JSON file");

  CLI::App* replay = app.add_subcommand("replay", "Re-apply a JSONL trace");
  replay->add_option("--trace", cfg.trace_path, "JSONL trace")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (run->parsed()) return CmdRun(cfg, out);
    if (oracle->parsed()) return CmdOracle(cfg, out);
    if (analyze->parsed()) return CmdAnalyze(cfg, out);
    if (replay->parsed()) return CmdReplay(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitFor(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitConfig;
}

}  // namespace smra

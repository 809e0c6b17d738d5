// Copyright 2026 The Authors.
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

// submod_cli: command-line front end over the submod C API.
//
//   submod_cli solve  --input M.csv --k 5 --algorithm lazy [--with-oracle]
//   submod_cli check  --input M.csv --property all --mode exhaustive
//   submod_cli oracle --input M.csv --k 3
//   submod_cli bench  --input M.csv --k 5 --trials 100 --epsilon 0.1
//
// Exit codes: 0 success, 1 a checked property fails, 2 bad arguments,
// 3 parse/domain errors, 4 enumeration limit exceeded.

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "submod/c_api.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitCapability = 4;
constexpr int kSchemaVersion = 1;

struct CliFailure {
  int exit_code;
  std::string message;
};

int ExitCodeFor(submod_status_t status) {
  switch (status) {
    case SUBMOD_OK:
      return kExitOk;
    case SUBMOD_ERR_ARGUMENT:
      return kExitUsage;
    case SUBMOD_ERR_CAPABILITY:
      return kExitCapability;
    case SUBMOD_ERR_DOMAIN:
    case SUBMOD_ERR_PARSE:
    case SUBMOD_ERR_INTERNAL:
      return kExitInput;
  }
  return kExitInput;
}

void Check(submod_status_t status) {
  if (status != SUBMOD_OK) {
    throw CliFailure{ExitCodeFor(status),
                     std::string(submod_status_string(status)) + ": " +
                         submod_last_error()};
  }
}

struct FunctionDeleter {
  void operator()(submod_function* f) const { submod_function_destroy(f); }
};
struct ResultDeleter {
  void operator()(submod_result* r) const { submod_result_destroy(r); }
};
struct OracleDeleter {
  void operator()(submod_oracle* o) const { submod_oracle_destroy(o); }
};
struct ReportDeleter {
  void operator()(submod_report* r) const { submod_report_destroy(r); }
};
using FunctionPtr = std::unique_ptr<submod_function, FunctionDeleter>;
using ResultPtr = std::unique_ptr<submod_result, ResultDeleter>;
using OraclePtr = std::unique_ptr<submod_oracle, OracleDeleter>;
using ReportPtr = std::unique_ptr<submod_report, ReportDeleter>;

class Stopwatch {
 public:
  double ElapsedMs() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// Flags shared by every subcommand that reads an instance.
struct InputOptions {
  std::string path;
  std::string kind = "infer";
  bool header = false;
};

void AddInputOptions(CLI::App* cmd, InputOptions& input) {
  cmd->add_option("--input", input.path,
                  "Instance file (.csv, .weights, .sqweights)")
      ->required();
  cmd->add_option("--kind", input.kind, "Instance kind override")
      ->check(CLI::IsMember({"infer", "facility", "modular", "squared"}));
  cmd->add_flag("--header", input.header,
                "First CSV row holds element labels");
}

FunctionPtr LoadFunction(const InputOptions& input) {
  submod_kind_t kind = SUBMOD_KIND_INFER;
  if (input.kind == "facility") kind = SUBMOD_KIND_FACILITY;
  if (input.kind == "modular") kind = SUBMOD_KIND_MODULAR;
  if (input.kind == "squared") kind = SUBMOD_KIND_SQUARED;
  submod_function_t raw = nullptr;
  Check(submod_function_load(input.path.c_str(), kind, input.header ? 1 : 0,
                             &raw));
  return FunctionPtr(raw);
}

std::string KindName(submod_kind_t kind) {
  switch (kind) {
    case SUBMOD_KIND_FACILITY:
      return "facility";
    case SUBMOD_KIND_MODULAR:
      return "modular";
    case SUBMOD_KIND_SQUARED:
      return "squared";
    case SUBMOD_KIND_INFER:
      break;
  }
  return "unknown";
}

submod_instance_info_t Info(submod_function_t f) {
  submod_instance_info_t info{};
  Check(submod_function_info(f, &info));
  return info;
}

Json InstanceJson(submod_function_t f) {
  const auto info = Info(f);
  char checksum[17];
  std::snprintf(checksum, sizeof checksum, "%016" PRIx64, info.checksum);
  Json j;
  j["kind"] = KindName(info.kind);
  j["rows"] = info.rows;
  j["cols"] = info.cols;
  j["checksum"] = checksum;
  return j;
}

// Labels for `elements`, or nullopt when the instance has none.
std::optional<Json> LabelsJson(submod_function_t f,
                               const std::vector<size_t>& elements) {
  Json labels = Json::array();
  for (size_t e : elements) {
    const char* label = nullptr;
    int has_labels = 0;
    Check(submod_function_label(f, e, &label, &has_labels));
    if (!has_labels) return std::nullopt;
    labels.push_back(label);
  }
  return labels;
}

// The same shortest round-trip rendering JSON uses, for CSV cells.
std::string Num(double value) { return Json(value).dump(); }

struct StochasticFlags {
  std::optional<double> epsilon;
  std::optional<size_t> sample_size;
  uint64_t seed = 0;
};

void AddStochasticOptions(CLI::App* cmd, StochasticFlags& flags) {
  auto* eps = cmd->add_option("--epsilon", flags.epsilon,
                              "Stochastic greedy accuracy in (0,1) "
                              "(default 0.1)");
  auto* size = cmd->add_option("--sample-size", flags.sample_size,
                               "Explicit stochastic sample size");
  eps->excludes(size);
  cmd->add_option("--seed", flags.seed, "Random seed (default 0)");
}

submod_solve_options_t StochasticOptions(const StochasticFlags& flags,
                                         size_t k, uint64_t stream) {
  submod_solve_options_t options{};
  options.algorithm = SUBMOD_ALGO_STOCHASTIC;
  options.k = k;
  options.seed = flags.seed;
  options.stream = stream;
  if (flags.sample_size) {
    options.sample_size = *flags.sample_size;
  } else {
    options.epsilon = flags.epsilon.value_or(0.1);
  }
  return options;
}

ResultPtr Solve(submod_function_t f, const submod_solve_options_t& options) {
  submod_result_t raw = nullptr;
  Check(submod_solve(f, &options, &raw));
  return ResultPtr(raw);
}

std::vector<submod_step_t> Steps(submod_result_t r) {
  std::vector<submod_step_t> steps(submod_result_k(r));
  for (size_t i = 0; i < steps.size(); ++i) {
    Check(submod_result_step(r, i, &steps[i]));
  }
  return steps;
}

OraclePtr RunOracle(submod_function_t f, size_t k, uint64_t cap) {
  submod_oracle_t raw = nullptr;
  Check(submod_oracle_run(f, k, cap, &raw));
  return OraclePtr(raw);
}

std::vector<size_t> BestSet(submod_oracle_t o, size_t k) {
  std::vector<size_t> members(k);
  Check(submod_oracle_best_set(o, members.data(), members.size()));
  return members;
}

std::optional<double> Ratio(double objective, double optimum) {
  if (optimum == 0.0) return std::nullopt;
  return objective / optimum;
}

Json OptionalNumber(std::optional<double> v) {
  return v ? Json(*v) : Json(nullptr);
}

// ---------------------------------------------------------------- solve

struct SolveFlags {
  InputOptions input;
  size_t k = 0;
  std::string algorithm = "greedy";
  StochasticFlags stochastic;
  bool with_oracle = false;
  uint64_t oracle_cap = 10'000'000;
  std::string output = "json";
};

int RunSolve(const SolveFlags& flags) {
  const bool stochastic = flags.algorithm == "stochastic";
  if (!stochastic &&
      (flags.stochastic.epsilon || flags.stochastic.sample_size)) {
    throw CliFailure{kExitUsage,
                     "--epsilon/--sample-size require --algorithm stochastic"};
  }
  FunctionPtr f = LoadFunction(flags.input);
  Stopwatch clock;

  submod_solve_options_t options{};
  if (stochastic) {
    options = StochasticOptions(flags.stochastic, flags.k, 0);
  } else {
    options.algorithm =
        flags.algorithm == "lazy" ? SUBMOD_ALGO_LAZY : SUBMOD_ALGO_GREEDY;
    options.k = flags.k;
  }
  ResultPtr result = Solve(f.get(), options);
  const auto steps = Steps(result.get());
  const double objective = submod_result_objective(result.get());

  Json report;
  report["report"] = "solve";
  report["schema_version"] = kSchemaVersion;
  report["instance"] = InstanceJson(f.get());
  report["algorithm"] = flags.algorithm;
  report["k"] = flags.k;
  report["seed"] = stochastic ? Json(flags.stochastic.seed) : Json(nullptr);
  if (stochastic) {
    report["epsilon"] = flags.stochastic.sample_size
                            ? Json(nullptr)
                            : Json(options.epsilon);
    report["sample_size"] = submod_result_sample_size(result.get());
  }
  report["objective"] = objective;
  std::vector<size_t> picks;
  for (const auto& s : steps) picks.push_back(s.element);
  report["selected"] = picks;
  if (auto labels = LabelsJson(f.get(), picks)) {
    report["selected_labels"] = *labels;
  }
  Json trace = Json::array();
  for (const auto& s : steps) {
    trace.push_back({{"step", s.step},
                     {"element", s.element},
                     {"gain", s.gain},
                     {"objective", s.objective}});
  }
  report["trace"] = trace;
  report["evaluations"] = submod_result_evaluations(result.get());

  if (flags.with_oracle) {
    OraclePtr oracle = RunOracle(f.get(), flags.k, flags.oracle_cap);
    const double optimum = submod_oracle_value(oracle.get());
    std::vector<double> deltas(flags.k + 1);
    std::vector<double> ratios(flags.k);
    std::vector<int> defined(flags.k);
    int contraction_holds = 0;
    Check(submod_gap_diagnostic(result.get(), oracle.get(), deltas.data(),
                                ratios.data(), defined.data(),
                                &contraction_holds));
    Json ratio_json = Json::array();
    for (size_t l = 0; l < flags.k; ++l) {
      ratio_json.push_back(defined[l] ? Json(ratios[l]) : Json(nullptr));
    }
    Json o;
    o["value"] = optimum;
    o["best_set"] = BestSet(oracle.get(), flags.k);
    o["sets_evaluated"] = submod_oracle_sets_evaluated(oracle.get());
    o["ratio"] = OptionalNumber(Ratio(objective, optimum));
    o["gap"] = {{"deltas", deltas},
                {"ratios", ratio_json},
                {"contraction_holds", contraction_holds != 0}};
    report["oracle"] = o;
  }
  report["metadata"] = {{"wall_time_ms", clock.ElapsedMs()}};

  if (flags.output == "csv") {
    std::cout << "algorithm,k,seed,sample_size,step,element,gain,objective,"
                 "evaluations\n";
    const std::string seed =
        stochastic ? std::to_string(flags.stochastic.seed) : "";
    const std::string sample =
        stochastic ? std::to_string(submod_result_sample_size(result.get()))
                   : "";
    for (const auto& s : steps) {
      std::cout << flags.algorithm << ',' << flags.k << ',' << seed << ','
                << sample << ',' << s.step << ',' << s.element << ','
                << Num(s.gain) << ',' << Num(s.objective) << ','
                << submod_result_evaluations(result.get()) << '\n';
    }
  } else {
    std::cout << report.dump(2) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- check

struct CheckFlags {
  InputOptions input;
  std::string property = "all";
  std::string mode = "exhaustive";
  uint64_t budget = 100000;
  uint64_t seed = 0;
};

Json WitnessJson(submod_report_t rep, submod_function_t f) {
  submod_witness_info_t info{};
  Check(submod_report_witness(rep, &info));
  std::vector<size_t> a(info.a_size);
  Check(submod_report_witness_set(rep, 0, a.data(), a.size()));
  Json w;
  w["a"] = a;
  if (info.has_b) {
    std::vector<size_t> b(info.b_size);
    Check(submod_report_witness_set(rep, 1, b.data(), b.size()));
    w["b"] = b;
  }
  if (info.has_element) w["element"] = info.element;
  w["lhs"] = info.lhs;
  w["rhs"] = info.rhs;
  w["magnitude"] = info.magnitude;
  int reproduces = 0;
  Check(submod_report_reproduces(rep, f, &reproduces));
  w["reproduces"] = reproduces != 0;
  return w;
}

int RunCheck(const CheckFlags& flags) {
  FunctionPtr f = LoadFunction(flags.input);
  Stopwatch clock;
  std::vector<std::pair<std::string, submod_property_t>> wanted;
  if (flags.property == "monotone" || flags.property == "all") {
    wanted.emplace_back("monotone", SUBMOD_PROP_MONOTONE);
  }
  if (flags.property == "submodular-derivative" || flags.property == "all") {
    wanted.emplace_back("submodular-derivative",
                        SUBMOD_PROP_SUBMODULAR_DERIVATIVE);
  }
  if (flags.property == "submodular-intersection" || flags.property == "all") {
    wanted.emplace_back("submodular-intersection",
                        SUBMOD_PROP_SUBMODULAR_INTERSECTION);
  }
  const submod_mode_t mode = flags.mode == "sampled" ? SUBMOD_MODE_SAMPLED
                                                     : SUBMOD_MODE_EXHAUSTIVE;

  Json report;
  report["report"] = "check";
  report["schema_version"] = kSchemaVersion;
  report["instance"] = InstanceJson(f.get());
  report["mode"] = flags.mode;
  if (mode == SUBMOD_MODE_SAMPLED) {
    report["budget"] = flags.budget;
    report["seed"] = flags.seed;
  }
  Json properties = Json::array();
  bool all_hold = true;
  for (const auto& [name, property] : wanted) {
    submod_report_t raw = nullptr;
    Check(submod_check(f.get(), property, mode, flags.budget, flags.seed,
                       &raw));
    ReportPtr rep(raw);
    const bool holds = submod_report_holds(rep.get()) != 0;
    all_hold = all_hold && holds;
    Json p;
    p["property"] = name;
    p["holds"] = holds;
    p["pairs_checked"] = submod_report_pairs_checked(rep.get());
    p["witness"] = submod_report_has_witness(rep.get())
                       ? WitnessJson(rep.get(), f.get())
                       : Json(nullptr);
    properties.push_back(p);
  }
  report["properties"] = properties;
  report["all_hold"] = all_hold;
  report["metadata"] = {{"wall_time_ms", clock.ElapsedMs()}};
  std::cout << report.dump(2) << '\n';
  return all_hold ? kExitOk : kExitPropertyFails;
}

// ---------------------------------------------------------------- oracle

struct OracleFlags {
  InputOptions input;
  size_t k = 0;
  uint64_t oracle_cap = 10'000'000;
};

int RunOracleCommand(const OracleFlags& flags) {
  FunctionPtr f = LoadFunction(flags.input);
  Stopwatch clock;
  OraclePtr oracle = RunOracle(f.get(), flags.k, flags.oracle_cap);
  const auto best = BestSet(oracle.get(), flags.k);
  Json report;
  report["report"] = "oracle";
  report["schema_version"] = kSchemaVersion;
  report["instance"] = InstanceJson(f.get());
  report["k"] = flags.k;
  report["best_set"] = best;
  if (auto labels = LabelsJson(f.get(), best)) {
    report["best_labels"] = *labels;
  }
  report["best_value"] = submod_oracle_value(oracle.get());
  report["sets_evaluated"] = submod_oracle_sets_evaluated(oracle.get());
  report["metadata"] = {{"wall_time_ms", clock.ElapsedMs()}};
  std::cout << report.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchFlags {
  InputOptions input;
  size_t k = 0;
  size_t trials = 100;
  StochasticFlags stochastic;
  bool with_oracle = false;
  uint64_t oracle_cap = 10'000'000;
  std::string output = "json";
};

struct Stats {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  // Standard error of the mean; 0 for a single sample.
  double stderr_mean = 0.0;
};

Stats Summarize(const std::vector<double>& values) {
  Stats s;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    const double var = sq / static_cast<double>(values.size() - 1);
    s.stderr_mean = std::sqrt(var / static_cast<double>(values.size()));
  }
  return s;
}

Json StatsJson(const Stats& s) {
  return {{"mean", s.mean},
          {"min", s.min},
          {"max", s.max},
          {"stderr", s.stderr_mean}};
}

struct BenchRow {
  std::string algorithm;
  size_t trials = 0;
  std::optional<size_t> sample_size;
  Stats objective;
  Stats evaluations;
  std::optional<Stats> ratio;
  double wall_time_ms = 0.0;
};

int RunBench(const BenchFlags& flags) {
  if (flags.trials == 0) throw CliFailure{kExitUsage, "--trials must be >= 1"};
  FunctionPtr f = LoadFunction(flags.input);

  std::optional<double> optimum;
  if (flags.with_oracle) {
    OraclePtr oracle = RunOracle(f.get(), flags.k, flags.oracle_cap);
    optimum = submod_oracle_value(oracle.get());
  }

  std::vector<BenchRow> rows;
  auto run = [&](const std::string& name,
                 const std::vector<submod_solve_options_t>& trials) {
    Stopwatch clock;
    std::vector<double> objectives;
    std::vector<double> evaluations;
    std::vector<double> ratios;
    BenchRow row;
    row.algorithm = name;
    row.trials = trials.size();
    for (const auto& options : trials) {
      ResultPtr r = Solve(f.get(), options);
      objectives.push_back(submod_result_objective(r.get()));
      evaluations.push_back(
          static_cast<double>(submod_result_evaluations(r.get())));
      if (options.algorithm == SUBMOD_ALGO_STOCHASTIC) {
        row.sample_size = submod_result_sample_size(r.get());
      }
      if (optimum) {
        if (auto ratio = Ratio(objectives.back(), *optimum)) {
          ratios.push_back(*ratio);
        }
      }
    }
    row.objective = Summarize(objectives);
    row.evaluations = Summarize(evaluations);
    if (!ratios.empty()) row.ratio = Summarize(ratios);
    row.wall_time_ms = clock.ElapsedMs();
    rows.push_back(row);
  };

  submod_solve_options_t greedy{};
  greedy.algorithm = SUBMOD_ALGO_GREEDY;
  greedy.k = flags.k;
  run("greedy", {greedy});
  submod_solve_options_t lazy = greedy;
  lazy.algorithm = SUBMOD_ALGO_LAZY;
  run("lazy", {lazy});
  std::vector<submod_solve_options_t> stochastic;
  for (size_t t = 0; t < flags.trials; ++t) {
    stochastic.push_back(StochasticOptions(flags.stochastic, flags.k, t));
  }
  run("stochastic", stochastic);

  if (flags.output == "csv") {
    std::cout << "algorithm,trials,sample_size,objective_mean,objective_min,"
                 "objective_max,objective_stderr,evaluations_mean,"
                 "evaluations_min,evaluations_max,ratio_mean,ratio_min,"
                 "ratio_max,wall_time_ms\n";
    for (const auto& row : rows) {
      std::cout << row.algorithm << ',' << row.trials << ','
                << (row.sample_size ? std::to_string(*row.sample_size) : "")
                << ',' << Num(row.objective.mean) << ','
                << Num(row.objective.min) << ',' << Num(row.objective.max)
                << ',' << Num(row.objective.stderr_mean) << ','
                << Num(row.evaluations.mean) << ','
                << Num(row.evaluations.min) << ','
                << Num(row.evaluations.max) << ','
                << (row.ratio ? Num(row.ratio->mean) : "") << ','
                << (row.ratio ? Num(row.ratio->min) : "") << ','
                << (row.ratio ? Num(row.ratio->max) : "") << ','
                << Num(row.wall_time_ms) << '\n';
    }
    return kExitOk;
  }

  const Json instance = InstanceJson(f.get());
  for (const auto& row : rows) {
    Json j;
    j["report"] = "bench";
    j["schema_version"] = kSchemaVersion;
    j["instance"] = instance;
    j["algorithm"] = row.algorithm;
    j["k"] = flags.k;
    j["trials"] = row.trials;
    if (row.sample_size) {
      j["seed"] = flags.stochastic.seed;
      j["sample_size"] = *row.sample_size;
    }
    j["objective"] = StatsJson(row.objective);
    j["evaluations"] = StatsJson(row.evaluations);
    if (optimum) {
      j["oracle_value"] = *optimum;
      j["ratio"] = row.ratio ? StatsJson(*row.ratio) : Json(nullptr);
    }
    j["metadata"] = {{"wall_time_ms", row.wall_time_ms}};
    std::cout << j.dump() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cardinality-constrained submodular maximization toolkit"};
  app.require_subcommand(1);

  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run one solver");
  AddInputOptions(solve_cmd, solve.input);
  solve_cmd->add_option("--k", solve.k, "Cardinality budget")->required();
  solve_cmd->add_option("--algorithm", solve.algorithm)
      ->check(CLI::IsMember({"greedy", "lazy", "stochastic"}));
  AddStochasticOptions(solve_cmd, solve.stochastic);
  solve_cmd->add_flag("--with-oracle", solve.with_oracle,
                      "Also run the brute-force oracle");
  solve_cmd->add_option("--oracle-cap", solve.oracle_cap,
                        "Largest C(n,k) the oracle will enumerate");
  solve_cmd->add_option("--output", solve.output)
      ->check(CLI::IsMember({"json", "csv"}));

  CheckFlags check;
  auto* check_cmd = app.add_subcommand("check", "Verify set-function properties");
  AddInputOptions(check_cmd, check.input);
  check_cmd->add_option("--property", check.property)
      ->check(CLI::IsMember({"monotone", "submodular-derivative",
                             "submodular-intersection", "all"}));
  check_cmd->add_option("--mode", check.mode)
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  check_cmd->add_option("--budget", check.budget, "Samples in sampled mode");
  check_cmd->add_option("--seed", check.seed);

  OracleFlags oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive optimum");
  AddInputOptions(oracle_cmd, oracle.input);
  oracle_cmd->add_option("--k", oracle.k)->required();
  oracle_cmd->add_option("--oracle-cap", oracle.oracle_cap);

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Compare all three solvers");
  AddInputOptions(bench_cmd, bench.input);
  bench_cmd->add_option("--k", bench.k)->required();
  bench_cmd->add_option("--trials", bench.trials,
                        "Stochastic trials (default 100)");
  AddStochasticOptions(bench_cmd, bench.stochastic);
  bench_cmd->add_flag("--with-oracle", bench.with_oracle);
  bench_cmd->add_option("--oracle-cap", bench.oracle_cap);
  bench_cmd->add_option("--output", bench.output)
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*check_cmd) return RunCheck(check);
    if (*oracle_cmd) return RunOracleCommand(oracle);
    if (*bench_cmd) return RunBench(bench);
  } catch (const CliFailure& failure) {
    std::cerr << "error: " << failure.message << '\n';
    return failure.exit_code;
  }
  return kExitUsage;
}

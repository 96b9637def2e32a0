// Copyright (c) 2026 runmax contributors
// SPDX-License-Identifier: MIT
//
// runmax: tables, samplers and verification suites for the exceedance-time
// law of a Brownian running maximum. All runs are deterministic in (command
// line, seed); CSV/JSON outputs are byte-stable across reruns and worker
// counts.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "runmax/analytic.hpp"
#include "runmax/format.hpp"
#include "runmax/level.hpp"
#include "runmax/manifest.hpp"
#include "runmax/passage.hpp"
#include "runmax/rng.hpp"
#include "runmax/simulate.hpp"
#include "runmax/verify.hpp"
#include "runmax/version.hpp"

namespace {

struct GridSpec {
  bool log_spaced = false;
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec spec;
  std::istringstream in(text);
  std::string kind, min_s, max_s, count_s;
  if (!std::getline(in, kind, ':') || !std::getline(in, min_s, ':') ||
      !std::getline(in, max_s, ':') || !std::getline(in, count_s))
    throw CLI::ValidationError("--grid", "expected <lin|log>:<min>:<max>:<count>");
  if (kind == "lin")
    spec.log_spaced = false;
  else if (kind == "log")
    spec.log_spaced = true;
  else
    throw CLI::ValidationError("--grid", "grid kind must be lin or log");
  try {
    spec.min = std::stod(min_s);
    spec.max = std::stod(max_s);
    spec.count = std::stoul(count_s);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--grid", "malformed grid numbers");
  }
  if (spec.count < 1) throw CLI::ValidationError("--grid", "count must be >= 1");
  if (!(std::isfinite(spec.min) && std::isfinite(spec.max)) || spec.min > spec.max)
    throw CLI::ValidationError("--grid", "need finite min <= max");
  if (spec.log_spaced && spec.min <= 0.0)
    throw CLI::ValidationError("--grid", "log grid needs min > 0");
  if (spec.count == 1 && spec.min != spec.max)
    throw CLI::ValidationError("--grid", "count 1 needs min == max");
  return spec;
}

std::vector<double> grid_points(const GridSpec& spec) {
  std::vector<double> points(spec.count);
  if (spec.count == 1) {
    points[0] = spec.min;
    return points;
  }
  const double n1 = static_cast<double>(spec.count - 1);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const double f = static_cast<double>(i) / n1;
    points[i] = spec.log_spaced
                    ? std::exp(std::log(spec.min) + f * (std::log(spec.max) - std::log(spec.min)))
                    : spec.min + f * (spec.max - spec.min);
  }
  return points;
}

// worker count: flag wins, then RUNMAX_WORKERS, then 1
unsigned resolve_workers(unsigned flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("RUNMAX_WORKERS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) return static_cast<unsigned>(parsed);
  }
  return 1;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_tabulate(double r, const std::string& grid_text, const std::string& out_path) {
  const auto start = std::chrono::steady_clock::now();
  const GridSpec spec = parse_grid(grid_text);
  const runmax::LawParams params(r);

  std::string csv = "s,cdf,density,survival\n";
  for (double s : grid_points(spec)) {
    csv += runmax::format_double(s);
    csv += ',';
    csv += runmax::format_double(runmax::arctan_cdf(s, params));
    csv += ',';
    // the density's singularity at 0 is integrable: no number is honest there
    if (s > 0.0) csv += runmax::format_double(runmax::arctan_density(s, params));
    csv += ',';
    csv += runmax::format_double(runmax::arctan_survival(s, params));
    csv += '\n';
  }
  runmax::write_text_file(out_path, csv);

  runmax::RunManifest manifest;
  manifest.command = "tabulate";
  manifest.parameters = {{"r", r}, {"grid", grid_text}, {"out", out_path}};
  manifest.duration_seconds = seconds_since(start);
  runmax::write_manifest(out_path, manifest);
  std::cout << "wrote " << out_path << " (" << spec.count << " rows) in "
            << manifest.duration_seconds << " s\n";
  return 0;
}

int cmd_sample(const std::string& mechanism, double r, std::optional<double> r1,
               std::optional<double> r2, long long n, std::uint64_t seed,
               double horizon_multiple, unsigned steps_per_unit, unsigned workers_flag,
               const std::string& out_path) {
  const auto start = std::chrono::steady_clock::now();
  if (n <= 0) throw CLI::ValidationError("--n", "need n >= 1");
  const auto count = static_cast<std::size_t>(n);
  const unsigned workers = resolve_workers(workers_flag);

  std::string csv;
  if (mechanism == "exact") {
    const runmax::LawParams params(r);
    runmax::RandomStream rng(seed);
    csv = "s\n";
    for (std::size_t i = 0; i < count; ++i) {
      csv += runmax::format_double(runmax::sample_exceedance_exact(params, rng));
      csv += '\n';
    }
  } else if (mechanism == "lemma") {
    const runmax::HalfNormalLevel level(r);
    runmax::RandomStream rng(seed);
    csv = "s\n";
    for (std::size_t i = 0; i < count; ++i) {
      csv += runmax::format_double(runmax::sample_passage_time(level, rng));
      csv += '\n';
    }
  } else if (mechanism == "path") {
    runmax::PathConfig config;
    config.r = r;
    config.steps_per_unit_time = steps_per_unit;
    config.horizon_multiple = horizon_multiple;
    config.seed = seed;
    config.workers = workers;
    std::vector<runmax::PathOutcome> outcomes;
    if (r1 || r2) {
      if (!(r1 && r2))
        throw CLI::ValidationError("--r1/--r2", "both window ends are required");
      outcomes = runmax::simulate_interval_exceedance(
          runmax::IntervalParams(*r1, *r2), config, count);
    } else {
      outcomes = runmax::simulate_exceedance(config, count);
    }
    csv = "s,censored\n";
    for (const auto& o : outcomes) {
      if (o.s) {
        csv += runmax::format_double(*o.s);
        csv += ",0\n";
      } else {
        csv += ",1\n";
      }
    }
  } else {
    throw CLI::ValidationError("--mechanism", "must be exact, lemma or path");
  }
  runmax::write_text_file(out_path, csv);

  runmax::RunManifest manifest;
  manifest.command = "sample";
  manifest.seed = seed;
  manifest.workers = workers;
  manifest.parameters = {{"mechanism", mechanism},
                         {"r", r},
                         {"n", n},
                         {"horizon_multiple", horizon_multiple},
                         {"steps_per_unit", steps_per_unit},
                         {"out", out_path}};
  if (r1) manifest.parameters["r1"] = *r1;
  if (r2) manifest.parameters["r2"] = *r2;
  manifest.duration_seconds = seconds_since(start);
  runmax::write_manifest(out_path, manifest);
  std::cout << "wrote " << out_path << " (" << count << " draws) in "
            << manifest.duration_seconds << " s\n";
  return 0;
}

int cmd_verify(const std::string& suite_text, std::uint64_t seed, unsigned workers_flag,
               const std::string& out_path) {
  const auto start = std::chrono::steady_clock::now();
  const auto suite = runmax::parse_suite(suite_text);
  if (!suite)
    throw CLI::ValidationError("--suite",
                               "must be analytic, lemma, path, interval, levy or all");
  const unsigned workers = resolve_workers(workers_flag);
  const runmax::SuiteReport report = runmax::run_suite(*suite, seed, workers);

  runmax::RunManifest manifest;
  manifest.command = "verify";
  manifest.seed = seed;
  manifest.workers = workers;
  manifest.parameters = {{"suite", suite_text}, {"out", out_path}};

  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"metric", c.metric}, {"bound", c.bound},
                      {"pass", c.pass}});
  const nlohmann::json doc = {{"suite", report.suite},
                              {"checks", checks},
                              {"overall_pass", report.overall_pass},
                              {"manifest", manifest.to_json()}};
  runmax::write_text_file(out_path, doc.dump(2) + "\n");

  for (const auto& c : report.checks)
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << report.suite << "/" << c.name
              << "  metric=" << c.metric << "  bound=" << c.bound << "\n";
  std::cout << (report.overall_pass ? "overall: PASS" : "overall: FAIL") << " ("
            << report.checks.size() << " checks, " << seconds_since(start) << " s), report: "
            << out_path << "\n";
  return report.overall_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exceedance-time laws of the Brownian running maximum"};
  app.set_version_flag("--version", std::string(runmax::kVersion));
  app.require_subcommand(1);

  // tabulate
  double tab_r = 1.0;
  std::string tab_grid, tab_out;
  auto* tabulate = app.add_subcommand("tabulate", "write cdf/density/survival over a grid");
  tabulate->add_option("--r", tab_r, "law horizon r > 0")->required();
  tabulate->add_option("--grid", tab_grid, "<lin|log>:<min>:<max>:<count>")->required();
  tabulate->add_option("--out", tab_out, "output CSV path")->required();

  // sample
  std::string sam_mechanism, sam_out;
  double sam_r = 1.0, sam_horizon = 10.0;
  std::optional<double> sam_r1, sam_r2;
  long long sam_n = 0;
  std::uint64_t sam_seed = 0;
  unsigned sam_steps = 1000, sam_workers = 0;
  auto* sample = app.add_subcommand("sample", "draw exceedance times");
  sample->add_option("--mechanism", sam_mechanism, "exact | lemma | path")->required();
  sample->add_option("--r", sam_r, "law horizon r > 0")->required();
  sample->add_option("--r1", sam_r1, "window start (path mechanism)");
  sample->add_option("--r2", sam_r2, "window end (path mechanism)");
  sample->add_option("--n", sam_n, "number of draws")->required();
  sample->add_option("--seed", sam_seed, "root seed")->required();
  sample->add_option("--horizon-multiple", sam_horizon, "censor S at this multiple of r");
  sample->add_option("--steps-per-unit", sam_steps, "grid cells per unit time");
  sample->add_option("--workers", sam_workers, "worker threads (0 = env/1)");
  sample->add_option("--out", sam_out, "output CSV path")->required();

  // verify
  std::string ver_suite, ver_out;
  std::uint64_t ver_seed = 0;
  unsigned ver_workers = 0;
  auto* verify = app.add_subcommand("verify", "run a verification suite, write JSON report");
  verify->add_option("--suite", ver_suite, "analytic|lemma|path|interval|levy|all")
      ->required();
  verify->add_option("--seed", ver_seed, "root seed")->required();
  verify->add_option("--out", ver_out, "output JSON path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (tabulate->parsed()) return cmd_tabulate(tab_r, tab_grid, tab_out);
    if (sample->parsed())
      return cmd_sample(sam_mechanism, sam_r, sam_r1, sam_r2, sam_n, sam_seed, sam_horizon,
                        sam_steps, sam_workers, sam_out);
    if (verify->parsed()) return cmd_verify(ver_suite, ver_seed, ver_workers, ver_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

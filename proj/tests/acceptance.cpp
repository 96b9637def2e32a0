// Copyright (c) 2026 runmax contributors
// SPDX-License-Identifier: MIT
//
// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every tolerance is pinned here; nothing is deferred to calibration.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "runmax/analytic.hpp"
#include "runmax/level.hpp"
#include "runmax/passage.hpp"
#include "runmax/quadrature.hpp"
#include "runmax/rng.hpp"
#include "runmax/simulate.hpp"
#include "runmax/stats.hpp"
#include "runmax/verify.hpp"

using namespace runmax;

namespace {

struct Runner {
  int failures = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void report(int index, const std::string& label, bool pass, const std::string& detail) {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    start = std::chrono::steady_clock::now();
    std::printf("[%s] criterion %2d: %s  (%s; %.1f s)\n", pass ? "PASS" : "FAIL", index,
                label.c_str(), detail.c_str(), elapsed);
    std::fflush(stdout);
    if (!pass) ++failures;
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

unsigned workers_from_env() {
  if (const char* env = std::getenv("RUNMAX_WORKERS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) return static_cast<unsigned>(parsed);
  }
  return 2;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  std::vector<double> grid(count);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (std::size_t i = 0; i < count; ++i)
    grid[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                 static_cast<double>(count - 1));
  return grid;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

int main() {
  Runner runner;
  const unsigned workers = workers_from_env();

  {  // 1. exact analytic points at s/r in {1/3, 1, 3}
    double worst = 0.0;
    for (double r : {0.5, 1.0, 7.0}) {
      const LawParams p(r);
      worst = std::max({worst, std::abs(arctan_cdf(r / 3.0, p) - 1.0 / 3.0),
                        std::abs(arctan_cdf(r, p) - 0.5),
                        std::abs(arctan_cdf(3.0 * r, p) - 2.0 / 3.0)});
    }
    runner.report(1, "exact analytic points", worst < 1e-15,
                  "max dev " + fmt(worst) + " < 1e-15");
  }

  {  // 2. quadrature passage density == closed form (half-normal level)
    double worst = 0.0;
    for (double r : {0.5, 1.0, 7.0}) {
      const LawParams p(r);
      const HalfNormalLevel level(r);
      for (double s : log_grid(0.01 * r, 100.0 * r, 200))
        worst = std::max(worst,
                         std::abs(passage_density(s, level) / arctan_density(s, p) - 1.0));
    }
    runner.report(2, "lemma/theorem density equivalence", worst < 1e-8,
                  "rel sup " + fmt(worst) + " < 1e-8");
  }

  {  // 3. Tonelli-form CDF (half-normal and point-mass routes)
    double worst_hn = 0.0, worst_pm = 0.0;
    for (double r : {0.5, 1.0, 7.0}) {
      const LawParams p(r);
      const HalfNormalLevel level(r);
      for (double s : log_grid(0.01 * r, 100.0 * r, 200))
        worst_hn = std::max(worst_hn,
                            std::abs(passage_cdf(s, level) - arctan_cdf(s, p)));
    }
    for (double x : {0.5, 1.0, 3.0}) {
      const PointMassLevel level(x);
      for (double t : log_grid(0.01, 100.0, 50))
        worst_pm = std::max(worst_pm,
                            std::abs(passage_cdf(t, level) - reflection_cdf(x, t)));
    }
    runner.report(3, "Tonelli-form passage CDF", worst_hn < 1e-8 && worst_pm < 1e-9,
                  "half-normal " + fmt(worst_hn) + " < 1e-8, point-mass " + fmt(worst_pm) +
                      " < 1e-9");
  }

  {  // 4. exact inverse-CDF sampler law at n = 1e6
    const LawParams p(1.0);
    RandomStream rng(0xACC4);
    std::vector<double> draws(1000000);
    for (auto& d : draws) d = sample_exceedance_exact(p, rng);
    const auto ks = ks_one_sample(EmpiricalCdf(std::move(draws)),
                                  [&](double s) { return arctan_cdf(s, p).value(); }, 0.01);
    runner.report(4, "exact sampler KS at n=1e6", ks.pass,
                  "D " + fmt(ks.distance) + " < DKW " + fmt(ks.bound));
  }

  {  // 5. compositional sampler (level draw + x^2/Z^2) at n = 1e5
    const LawParams p(1.0);
    const HalfNormalLevel level(1.0);
    RandomStream rng(0xACC5);
    std::vector<double> draws(100000);
    for (auto& d : draws) d = sample_passage_time(level, rng);
    const auto ks = ks_one_sample(EmpiricalCdf(std::move(draws)),
                                  [&](double s) { return arctan_cdf(s, p).value(); }, 0.01);
    runner.report(5, "compositional sampler KS at n=1e5", ks.pass,
                  "D " + fmt(ks.distance) + " < DKW " + fmt(ks.bound));
  }

  {  // 6. path simulation, bridge-corrected, spt=1000, horizon 10r, n=1e5
    PathConfig cfg;
    cfg.r = 1.0;
    cfg.steps_per_unit_time = 1000;
    cfg.horizon_multiple = 10.0;
    cfg.seed = 0xACC6;
    cfg.workers = workers;
    const PathGrid grid = make_grid(cfg);
    const std::size_t n = 100000;
    const auto outcomes = simulate_exceedance(cfg, n);
    const auto censored = CensoredSample::from_outcomes(outcomes, grid.horizon);
    const LawParams p(1.0);
    const auto ks = censored_compare(
        censored, [&](double s) { return arctan_cdf(s, p).value(); }, 0.01);
    const double frac =
        static_cast<double>(censored.censored_count()) / static_cast<double>(n);
    const bool pass = ks.distance < 0.01 && std::abs(frac - 0.195) < 0.004;
    runner.report(6, "path simulation censored KS + censor fraction", pass,
                  "D " + fmt(ks.distance) + " < 0.01, |frac-0.195| = " +
                      fmt(std::abs(frac - 0.195)) + " < 0.004");
  }

  {  // 7. Levy identity: gap vs |B_r - B_0| (two-sample) and gap vs half-normal
    PathConfig cfg;
    cfg.r = 1.0;
    cfg.steps_per_unit_time = 1000;
    cfg.horizon_multiple = 1.0;
    cfg.seed = 0xACC73;
    cfg.workers = workers;
    const auto samples = levy_identity_samples(cfg, 100000);
    const EmpiricalCdf gap_ecdf(samples.gap);
    const auto two = ks_two_sample(gap_ecdf, EmpiricalCdf(samples.displacement), 0.01);
    const HalfNormalLevel half(1.0);
    const auto one = ks_one_sample(gap_ecdf, [&](double x) { return half.cdf(x); }, 0.01);
    const bool pass = two.distance < 0.00728 && one.pass;
    runner.report(7, "Levy identity (two-sample + half-normal gap law)", pass,
                  "two-sample D " + fmt(two.distance) + " < 0.00728, one-sample D " +
                      fmt(one.distance) + " < DKW " + fmt(one.bound));
  }

  {  // 8. window invariance: (2,5) vs (7,10), and (2,5) vs exact draws at r = 3
    PathConfig base;
    base.steps_per_unit_time = 250;
    base.horizon_multiple = 10.0;
    base.workers = workers;
    const std::size_t n = 10000;

    PathConfig cfg_a = base;
    cfg_a.seed = 0xACC8;
    const IntervalParams wa(2.0, 5.0);
    const PathGrid ga = make_interval_grid(wa, cfg_a);
    const auto sa = CensoredSample::from_outcomes(
        simulate_interval_exceedance(wa, cfg_a, n), ga.horizon);

    PathConfig cfg_b = base;
    cfg_b.seed = 0xACC9;
    const IntervalParams wb(7.0, 10.0);
    const PathGrid gb = make_interval_grid(wb, cfg_b);
    const auto sb = CensoredSample::from_outcomes(
        simulate_interval_exceedance(wb, cfg_b, n), gb.horizon);

    const auto windows = ks_two_sample_censored(sa, sb, 0.01);

    RandomStream rng(0xACCA);
    const LawParams law3(3.0);
    std::vector<double> exact(n);
    for (auto& d : exact) d = sample_exceedance_exact(law3, rng);
    const auto vs_exact =
        ks_two_sample_censored(sa, CensoredSample::censor(exact, ga.horizon), 0.01);

    const bool pass = windows.pass && vs_exact.pass;
    runner.report(8, "window translation invariance", pass,
                  "windows D " + fmt(windows.distance) + " < " + fmt(windows.bound) +
                      ", vs exact D " + fmt(vs_exact.distance) + " < " +
                      fmt(vs_exact.bound));
  }

  {  // 9. initial value arbitrariness: b0 = 0, 100, Gaussian
    auto run = [&](InitialValue b0, std::uint64_t seed) {
      PathConfig cfg;
      cfg.r = 1.0;
      cfg.steps_per_unit_time = 250;
      cfg.horizon_multiple = 10.0;
      cfg.b0 = b0;
      cfg.seed = seed;
      cfg.workers = workers;
      const PathGrid grid = make_grid(cfg);
      return CensoredSample::from_outcomes(simulate_exceedance(cfg, 20000), grid.horizon);
    };
    const auto s0 = run(0.0, 0xACCB);
    const auto s100 = run(100.0, 0xACCC);
    const auto sg = run(GaussianInit{5.0, 3.0}, 0xACCD);
    const auto d01 = ks_two_sample_censored(s0, s100, 0.01);
    const auto d02 = ks_two_sample_censored(s0, sg, 0.01);
    const auto d12 = ks_two_sample_censored(s100, sg, 0.01);
    const bool pass = d01.pass && d02.pass && d12.pass;
    runner.report(9, "initial-value arbitrariness", pass,
                  "pairwise D " + fmt(d01.distance) + "/" + fmt(d02.distance) + "/" +
                      fmt(d12.distance) + " < " + fmt(d01.bound));
  }

  {  // 10. quantile round-trip and density normalizations
    double worst_rt = 0.0;
    for (double r : {0.5, 1.0, 7.0}) {
      const LawParams p(r);
      for (int i = 0; i <= 999; ++i) {
        const double u = static_cast<double>(i) / 1000.0;
        worst_rt = std::max(worst_rt, std::abs(arctan_cdf(arctan_quantile(u, p), p) - u));
      }
    }

    const LawParams p1(1.0);
    auto arctan_integrand = [&](double theta) {
      const double tn = std::tan(theta);
      const double sec = 1.0 / std::cos(theta);
      const double s = tn * tn;
      if (s <= 0.0) return 2.0 / std::numbers::pi;
      return arctan_density(s, p1) * 2.0 * tn * sec * sec;
    };
    const double mass_arctan =
        integrate(arctan_integrand, 0.0, 0.5 * std::numbers::pi, 1e-11, 3e-11);

    const HalfNormalLevel level2(2.0);
    auto passage_integrand = [&](double theta) {
      const double tn = std::tan(theta);
      const double sec = 1.0 / std::cos(theta);
      const double t = 2.0 * tn * tn;
      if (t <= 0.0) return 2.0 / std::numbers::pi;
      return passage_density(t, level2) * 4.0 * tn * sec * sec;
    };
    const double mass_passage =
        integrate(passage_integrand, 0.0, 0.5 * std::numbers::pi, 1e-11, 3e-11);

    const bool pass = worst_rt < 1e-12 && std::abs(mass_arctan - 1.0) < 1e-10 &&
                      std::abs(mass_passage - 1.0) < 1e-10;
    runner.report(10, "quantile round-trip + normalizations", pass,
                  "roundtrip " + fmt(worst_rt) + " < 1e-12, masses off by " +
                      fmt(std::abs(mass_arctan - 1.0)) + "/" +
                      fmt(std::abs(mass_passage - 1.0)) + " < 1e-10");
  }

  {  // 11. byte-determinism of `verify --suite all --seed 42`: reruns of the
     //     identical command line are byte-identical at workers 1 and at
     //     workers 8, and the check results themselves agree across worker
     //     counts (the manifest records the differing worker field)
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "runmax_acceptance";
    fs::create_directories(dir);
    const auto out = dir / "verify_all.json";
    auto run_verify = [&](unsigned w) {
      fs::remove(out);
      const std::string cmd = "RUNMAX_WORKERS=" + std::to_string(w) + " " + RUNMAX_CLI_BIN +
                              " verify --suite all --seed 42 --out " + out.string() +
                              " > /dev/null 2>&1";
      const int rc = std::system(cmd.c_str());
      return std::make_pair(rc, slurp(out));
    };
    const auto [rc1, r1] = run_verify(1);
    const auto [rc2, r2] = run_verify(1);
    const auto [rc3, r3] = run_verify(8);
    const auto [rc4, r4] = run_verify(8);
    const bool identical_w1 = !r1.empty() && r1 == r2;
    const bool identical_w8 = !r3.empty() && r3 == r4;
    // the verification content must not depend on the worker count at all;
    // only the manifest's workers field may differ
    bool same_content = false;
    try {
      const auto d1 = nlohmann::json::parse(r1);
      const auto d3 = nlohmann::json::parse(r3);
      same_content = d1["checks"] == d3["checks"] &&
                     d1["overall_pass"] == d3["overall_pass"];
    } catch (const std::exception&) {
    }
    const bool all_green = rc1 == 0 && rc2 == 0 && rc3 == 0 && rc4 == 0;
    runner.report(11, "verify byte-determinism (seed 42, workers 1 and 8)",
                  identical_w1 && identical_w8 && same_content && all_green,
                  std::string("w1 rerun ") + (identical_w1 ? "identical" : "DIFFERS") +
                      ", w8 rerun " + (identical_w8 ? "identical" : "DIFFERS") +
                      ", cross-worker checks " + (same_content ? "identical" : "DIFFER") +
                      ", exit codes " + (all_green ? "all 0" : "nonzero"));
  }

  std::printf("%s: %d criterion(s) failed\n", runner.failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              runner.failures);
  return runner.failures == 0 ? 0 : 1;
}

// Copyright (c) 2026 runmax contributors
// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "runmax/analytic.hpp"
#include "runmax/level.hpp"
#include "runmax/passage.hpp"
#include "runmax/quadrature.hpp"
#include "runmax/rng.hpp"
#include "runmax/simulate.hpp"
#include "runmax/stats.hpp"

// Verification suites behind `runmax verify`: every invariant of the library
// phrased as a named check with a metric and a bound. Statistical checks use
// fixed per-check stream tags derived from the root seed, so a report is a
// pure function of (suite, seed) and does not depend on the worker count.

namespace runmax {

struct VerifyCheck {
  std::string name;
  double metric = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<VerifyCheck> checks;
  bool overall_pass = true;

  void add(std::string name, double metric, double bound, bool pass) {
    overall_pass = overall_pass && pass;
    checks.push_back({std::move(name), metric, bound, pass});
  }

  // common case: pass when the metric stays below the bound
  void add(std::string name, double metric, double bound) {
    add(std::move(name), metric, bound, metric < bound);
  }

  void add(const std::string& prefix, const KsReport& ks) {
    add(prefix, ks.distance, ks.bound, ks.pass);
  }

  void append(const SuiteReport& other) {
    for (const auto& c : other.checks) add(c.name, c.metric, c.bound, c.pass);
  }
};

enum class Suite { analytic, lemma, path, interval, levy, all };

inline std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "analytic") return Suite::analytic;
  if (name == "lemma") return Suite::lemma;
  if (name == "path") return Suite::path;
  if (name == "interval") return Suite::interval;
  if (name == "levy") return Suite::levy;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

inline std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::analytic: return "analytic";
    case Suite::lemma: return "lemma";
    case Suite::path: return "path";
    case Suite::interval: return "interval";
    case Suite::levy: return "levy";
    case Suite::all: return "all";
  }
  return "?";
}

namespace detail {

inline std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = lo;
    return grid;
  }
  const double llo = std::log(lo), lhi = std::log(hi);
  for (std::size_t i = 0; i < count; ++i)
    grid[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                 static_cast<double>(count - 1));
  return grid;
}

// Normalization of a density over (0, inf) through s = c tan^2(theta), which
// maps the heavy tail onto the finite interval (0, pi/2).
template <typename Density>
double improper_density_mass(Density&& density, double c) {
  auto integrand = [&](double theta) {
    const double tan_theta = std::tan(theta);
    const double sec = 1.0 / std::cos(theta);
    const double s = c * tan_theta * tan_theta;
    if (s <= 0.0) return 2.0 / std::numbers::pi;  // continuous limit at 0
    return density(s) * 2.0 * c * tan_theta * sec * sec;
  };
  return integrate(integrand, 0.0, 0.5 * std::numbers::pi, 1e-11, 3e-11);
}

inline double median_of_sorted(const std::vector<double>& sorted) {
  const std::size_t n = sorted.size();
  return n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

// fixed stream tags so suites stay independent and reproducible
inline constexpr std::uint64_t kTagLemmaSampler = 0x4c31;
inline constexpr std::uint64_t kTagLemmaMedian = 0x4c32;
inline constexpr std::uint64_t kTagLemmaCoupling = 0x4c33;
inline constexpr std::uint64_t kTagPathMedian = 0x5031;
inline constexpr std::uint64_t kTagPathKs = 0x5032;
inline constexpr std::uint64_t kTagPathMean4 = 0x5033;
inline constexpr std::uint64_t kTagPathMean8 = 0x5034;
inline constexpr std::uint64_t kTagPathDeterminism = 0x5035;
inline constexpr std::uint64_t kTagPathB0A = 0x5036;
inline constexpr std::uint64_t kTagPathB0B = 0x5037;
inline constexpr std::uint64_t kTagPathB0C = 0x5038;
inline constexpr std::uint64_t kTagIntervalA = 0x4931;
inline constexpr std::uint64_t kTagIntervalB = 0x4932;
inline constexpr std::uint64_t kTagIntervalZero = 0x4933;
inline constexpr std::uint64_t kTagIntervalPlain = 0x4934;
inline constexpr std::uint64_t kTagIntervalExact = 0x4935;
inline constexpr std::uint64_t kTagLevy = 0x4641;
inline constexpr std::uint64_t kTagLevyShift = 0x4642;

inline std::uint64_t tag_seed(std::uint64_t root, std::uint64_t tag) {
  return SplitMix64{root ^ (tag * 0x9e3779b97f4a7c15ull)}.next();
}

}  // namespace detail

inline SuiteReport run_analytic_suite(std::uint64_t /*seed*/, unsigned /*workers*/) {
  SuiteReport report{"analytic", {}, true};
  const std::vector<double> rs = {0.5, 1.0, 7.0};

  {  // closed-form trigonometric points
    double worst = 0.0;
    for (double r : rs) {
      const LawParams p(r);
      worst = std::max({worst, std::abs(arctan_cdf(r / 3.0, p) - 1.0 / 3.0),
                        std::abs(arctan_cdf(r, p) - 0.5),
                        std::abs(arctan_cdf(3.0 * r, p) - 2.0 / 3.0)});
    }
    report.add("exact_points", worst, 1e-15);
  }

  {  // quantile round-trip on [0, 0.999]
    double worst = 0.0;
    for (double r : rs) {
      const LawParams p(r);
      for (int i = 0; i <= 999; ++i) {
        const double u = static_cast<double>(i) / 1000.0;
        worst = std::max(worst, std::abs(arctan_cdf(arctan_quantile(u, p), p) - u));
      }
    }
    report.add("quantile_roundtrip", worst, 1e-12);
  }

  {  // quantile closed-form spot values
    const double m1 = std::abs(arctan_quantile(0.5, LawParams(5.0)) - 5.0);
    const double m2 = std::abs(arctan_quantile(2.0 / 3.0, LawParams(1.0)) - 3.0);
    report.add("quantile_examples", std::max(m1, m2), 1e-14);
  }

  {  // central finite difference of the CDF against the density
    double worst = 0.0;
    for (double r : {1.0, 7.0}) {
      const LawParams p(r);
      for (double s : detail::log_grid(1e-3 * r, 1e3 * r, 200)) {
        const double h = 5e-4 * s;
        const double fd = (arctan_cdf(s + h, p) - arctan_cdf(s - h, p)) / (2.0 * h);
        worst = std::max(worst, std::abs(fd / arctan_density(s, p) - 1.0));
      }
    }
    report.add("density_cdf_consistency", worst, 1e-6);
  }

  {  // strict monotonicity in s, strict decrease in r
    const LawParams p1(1.0);
    const auto grid = detail::log_grid(1e-6, 1e6, 400);
    double min_increment = 1.0;
    double max_r_violation = -1.0;
    double prev = arctan_cdf(grid[0], p1);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double cur = arctan_cdf(grid[i], p1);
      min_increment = std::min(min_increment, cur - prev);
      prev = cur;
    }
    for (double s : grid)
      max_r_violation =
          std::max(max_r_violation, arctan_cdf(s, LawParams(2.0)) - arctan_cdf(s, p1));
    report.add("cdf_strictly_increasing_in_s", min_increment, 0.0, min_increment > 0.0);
    report.add("cdf_decreasing_in_r", max_r_violation, 0.0, max_r_violation < 0.0);
  }

  {  // Brownian scaling: F(c s; c r) = F(s; r)
    double worst = 0.0;
    const LawParams p1(1.0);
    for (double c : {0.25, 3.7, 1024.0})
      for (double s : detail::log_grid(1e-3, 1e3, 60))
        worst = std::max(worst,
                         std::abs(arctan_cdf(c * s, LawParams(c)) - arctan_cdf(s, p1)));
    report.add("scaling_law", worst, 1e-15);
  }

  {  // survival tail against its first-order expansion (2/pi) sqrt(r/s):
     // the relative deviation is (r/s)/3 + O((r/s)^2), so the ratio to (r/s)
     // stays below 0.34 for s >= 100 r.
    double worst = 0.0;
    for (double r : rs) {
      const LawParams p(r);
      for (double ratio : detail::log_grid(1e2, 1e8, 50)) {
        const double s = ratio * r;
        const double leading = 2.0 * std::numbers::inv_pi * std::sqrt(r / s);
        const double rel_dev = std::abs(arctan_survival(s, p) - leading) / leading;
        worst = std::max(worst, rel_dev / (r / s));
      }
    }
    report.add("tail_expansion", worst, 0.34);
  }

  {  // exact survival complement (complementary-angle identity)
    double worst = 0.0;
    const LawParams p(3.0);
    for (double s : detail::log_grid(1e-4, 1e4, 100))
      worst = std::max(worst,
                       std::abs(arctan_cdf(s, p) + arctan_survival(s, p) - 1.0));
    report.add("survival_complement", worst, 1e-15);
  }

  {  // reflection CDF reference values (bulk and deep tail, no cancellation)
    report.add("reflection_value_bulk",
               std::abs(reflection_cdf(1.0, 1.0) - 0.31731050786291415), 1e-14);
    report.add("reflection_value_tail",
               std::abs(reflection_cdf(6.0, 1.0) / 1.9731752900753892e-9 - 1.0), 1e-12);
  }

  {  // reflection CDF depends on (x, t) through x/sqrt(t) only
    double worst = 0.0;
    for (double x : {0.3, 1.0, 2.5})
      for (double t : {0.1, 1.0, 9.0})
        worst = std::max(worst,
                         std::abs(reflection_cdf(x, t) - reflection_cdf(2.0 * x, 4.0 * t)));
    report.add("reflection_scale_invariance", worst, 1e-14);
  }

  {  // window starting at 0 degenerates to the plain law, exactly
    double worst = 0.0;
    const IntervalParams window(0.0, 2.5);
    const LawParams p(2.5);
    for (double s : detail::log_grid(1e-3, 1e3, 60))
      worst = std::max(worst, std::abs(interval_cdf(s, window) - arctan_cdf(s, p)));
    report.add("interval_r1_zero_exact", worst, 0.0, worst <= 0.0);
  }

  {  // density normalizations by quadrature
    const LawParams p(1.0);
    const double arctan_mass =
        detail::improper_density_mass([&](double s) { return arctan_density(s, p); }, 1.0);
    report.add("density_normalization", std::abs(arctan_mass - 1.0), 1e-10);

    const LawParams p3(3.0);
    auto half_mass = integrate_to_infinity(
        [&](double x) { return x < 0.0 ? 0.0 : halfnormal_density(x, p3); }, 0.0,
        6.0 * std::sqrt(2.0 * 3.0), 1e-11, 3e-11);
    report.add("halfnormal_normalization", std::abs(half_mass.value - 1.0), 1e-10);
  }

  return report;
}

inline SuiteReport run_lemma_suite(std::uint64_t seed, unsigned /*workers*/) {
  SuiteReport report{"lemma", {}, true};

  {  // quadrature of the passage density against the closed form
    double worst_density = 0.0, worst_cdf = 0.0;
    for (double r : {0.5, 1.0, 7.0}) {
      const LawParams p(r);
      const HalfNormalLevel level(r);
      for (double s : detail::log_grid(0.01 * r, 100.0 * r, 200)) {
        const double exact = arctan_density(s, p);
        worst_density =
            std::max(worst_density, std::abs(passage_density(s, level) / exact - 1.0));
        worst_cdf = std::max(worst_cdf,
                             std::abs(passage_cdf(s, level) - arctan_cdf(s, p)));
      }
    }
    report.add("halfnormal_equivalence", worst_density, 1e-8);
    report.add("tonelli_halfnormal", worst_cdf, 1e-8);
  }

  {  // deterministic level: Tonelli route against the reflection principle
    double worst = 0.0;
    for (double x : {0.5, 1.0, 3.0}) {
      const PointMassLevel level(x);
      for (double t : detail::log_grid(0.01, 100.0, 50))
        worst = std::max(worst, std::abs(passage_cdf(t, level) - reflection_cdf(x, t)));
    }
    report.add("tonelli_pointmass", worst, 1e-9);
  }

  {  // numerical derivative of the passage CDF against the passage density
    const HalfNormalLevel level(1.0);
    double worst = 0.0;
    for (double t : detail::log_grid(0.05, 20.0, 20)) {
      const double h = 1e-3 * t;
      const double fd = (passage_cdf(t + h, level) - passage_cdf(t - h, level)) / (2.0 * h);
      worst = std::max(worst, std::abs(fd / passage_density(t, level) - 1.0));
    }
    report.add("cdf_density_consistency", worst, 1e-5);
  }

  {  // total mass of the passage density
    const HalfNormalLevel level(2.0);
    const double mass = detail::improper_density_mass(
        [&](double t) { return passage_density(t, level); }, 2.0);
    report.add("passage_normalization", std::abs(mass - 1.0), 1e-10);
  }

  report.add("pointmass_density_value",
             std::abs(passage_density(1.0, PointMassLevel(1.0)) - 0.24197072451914337),
             1e-15);

  {  // sampler follows the arctangent law (independent mechanism)
    const HalfNormalLevel level(1.0);
    RandomStream rng(detail::tag_seed(seed, detail::kTagLemmaSampler));
    std::vector<double> draws(100000);
    for (auto& d : draws) d = sample_passage_time(level, rng);
    const LawParams p(1.0);
    report.add("sampler_ks",
               ks_one_sample(EmpiricalCdf(std::move(draws)),
                             [&](double s) { return arctan_cdf(s, p).value(); }, 0.01));
  }

  {  // sampler median near r and P{T <= 3r} near 2/3 at n = 1e6
    const HalfNormalLevel level(1.0);
    RandomStream rng(detail::tag_seed(seed, detail::kTagLemmaMedian));
    std::vector<double> draws(1000000);
    std::size_t below_3r = 0;
    for (auto& d : draws) {
      d = sample_passage_time(level, rng);
      if (d <= 3.0) ++below_3r;
    }
    std::sort(draws.begin(), draws.end());
    report.add("sampler_median", std::abs(detail::median_of_sorted(draws) - 1.0), 0.01);
    report.add("sampler_fraction_3r",
               std::abs(static_cast<double>(below_3r) / 1e6 - 2.0 / 3.0), 0.002);
  }

  {  // stochastic domination carries to passage times path by path when the
     // coupled levels share one stream
    std::size_t violations = 0;
    const std::uint64_t s0 = detail::tag_seed(seed, detail::kTagLemmaCoupling);
    {
      RandomStream rng_a(s0), rng_b(s0);
      const PointMassLevel a(1.0), b(2.0);
      for (int i = 0; i < 10000; ++i)
        if (sample_passage_time(a, rng_a) > sample_passage_time(b, rng_b)) ++violations;
    }
    {
      RandomStream rng_a(s0 + 1), rng_b(s0 + 1);
      const HalfNormalLevel a(1.0), b(4.0);
      for (int i = 0; i < 10000; ++i)
        if (sample_passage_time(a, rng_a) > sample_passage_time(b, rng_b)) ++violations;
    }
    report.add("monotone_coupling", static_cast<double>(violations), 0.5);
  }

  return report;
}

inline SuiteReport run_path_suite(std::uint64_t seed, unsigned workers) {
  SuiteReport report{"path", {}, true};
  const LawParams law(1.0);

  {  // P{S <= r} = 1/2
    PathConfig cfg;
    cfg.r = 1.0;
    cfg.steps_per_unit_time = 500;
    cfg.horizon_multiple = 10.0;
    cfg.seed = detail::tag_seed(seed, detail::kTagPathMedian);
    cfg.workers = workers;
    const auto outcomes = simulate_exceedance(cfg, 10000);
    std::size_t below = 0;
    for (const auto& o : outcomes)
      if (o.s && *o.s <= cfg.r) ++below;
    report.add("median_band", std::abs(static_cast<double>(below) / 1e4 - 0.5), 0.015);
  }

  {  // censored KS against the law, censoring fraction, structural invariants
    PathConfig cfg;
    cfg.r = 1.0;
    cfg.steps_per_unit_time = 500;
    cfg.horizon_multiple = 10.0;
    cfg.seed = detail::tag_seed(seed, detail::kTagPathKs);
    cfg.workers = workers;
    const PathGrid grid = make_grid(cfg);
    const std::size_t n = 40000;
    const auto outcomes = simulate_exceedance(cfg, n);

    const auto censored = CensoredSample::from_outcomes(outcomes, grid.horizon);
    report.add("censored_ks",
               censored_compare(censored,
                                [&](double s) { return arctan_cdf(s, law).value(); }, 0.01));
    const double frac =
        static_cast<double>(censored.censored_count()) / static_cast<double>(n);
    report.add("censor_fraction",
               std::abs(frac - arctan_survival(grid.horizon, law)), 0.006);

    std::size_t violations = 0;
    for (const auto& o : outcomes) {
      if (o.m_r < o.b_r || o.m_r < 0.0 || o.gap != o.m_r - o.b_r) ++violations;
      if (o.s && !(*o.s > 0.0 && *o.s <= grid.horizon)) ++violations;
    }
    report.add("outcome_invariants", static_cast<double>(violations), 0.5);
  }

  {  // bridge-corrected maxima are exact in law at any resolution:
     // E[M_1] = sqrt(2/pi) even on very coarse grids
    for (auto [spt, tag] : {std::pair<unsigned, std::uint64_t>{4, detail::kTagPathMean4},
                            {8, detail::kTagPathMean8}}) {
      PathConfig cfg;
      cfg.r = 1.0;
      cfg.steps_per_unit_time = spt;
      cfg.horizon_multiple = 1.0;
      cfg.seed = detail::tag_seed(seed, tag);
      cfg.workers = workers;
      const std::size_t n = 20000;
      const auto outcomes = simulate_exceedance(cfg, n);
      double mean = 0.0;
      for (const auto& o : outcomes) mean += o.m_r;
      mean /= static_cast<double>(n);
      report.add("max_mean_spt" + std::to_string(spt),
                 std::abs(mean - std::sqrt(2.0 * std::numbers::inv_pi)), 0.0128);
    }
  }

  {  // same (seed, config) is bit-identical regardless of the worker count
    PathConfig cfg;
    cfg.r = 1.0;
    cfg.steps_per_unit_time = 100;
    cfg.horizon_multiple = 5.0;
    cfg.seed = detail::tag_seed(seed, detail::kTagPathDeterminism);
    cfg.workers = 1;
    const auto a = simulate_exceedance(cfg, 2000);
    cfg.workers = 4;
    const auto b = simulate_exceedance(cfg, 2000);
    std::size_t diffs = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].m_r != b[i].m_r || a[i].b_r != b[i].b_r ||
          a[i].argmax_bucket != b[i].argmax_bucket || a[i].s != b[i].s)
        ++diffs;
    }
    report.add("worker_determinism", static_cast<double>(diffs), 0.5);
  }

  {  // the law of S ignores the initial value entirely
    auto run = [&](InitialValue b0, std::uint64_t tag) {
      PathConfig cfg;
      cfg.r = 1.0;
      cfg.steps_per_unit_time = 250;
      cfg.horizon_multiple = 10.0;
      cfg.b0 = b0;
      cfg.seed = detail::tag_seed(seed, tag);
      cfg.workers = workers;
      const PathGrid grid = make_grid(cfg);
      return CensoredSample::from_outcomes(simulate_exceedance(cfg, 10000), grid.horizon);
    };
    const auto sample_zero = run(0.0, detail::kTagPathB0A);
    const auto sample_shift = run(100.0, detail::kTagPathB0B);
    const auto sample_gauss = run(GaussianInit{5.0, 3.0}, detail::kTagPathB0C);
    report.add("b0_pair_zero_shift", ks_two_sample_censored(sample_zero, sample_shift, 0.01));
    report.add("b0_pair_zero_gauss", ks_two_sample_censored(sample_zero, sample_gauss, 0.01));
    report.add("b0_pair_shift_gauss",
               ks_two_sample_censored(sample_shift, sample_gauss, 0.01));
  }

  return report;
}

inline SuiteReport run_interval_suite(std::uint64_t seed, unsigned workers) {
  SuiteReport report{"interval", {}, true};
  const std::size_t n = 5000;

  PathConfig base;
  base.steps_per_unit_time = 200;
  base.horizon_multiple = 10.0;
  base.workers = workers;

  PathConfig cfg_a = base;
  cfg_a.seed = detail::tag_seed(seed, detail::kTagIntervalA);
  const IntervalParams window_a(2.0, 5.0);
  const PathGrid grid_a = make_interval_grid(window_a, cfg_a);
  const auto outcomes_a = simulate_interval_exceedance(window_a, cfg_a, n);

  PathConfig cfg_b = base;
  cfg_b.seed = detail::tag_seed(seed, detail::kTagIntervalB);
  const IntervalParams window_b(7.0, 10.0);
  const PathGrid grid_b = make_interval_grid(window_b, cfg_b);
  const auto outcomes_b = simulate_interval_exceedance(window_b, cfg_b, n);

  {  // P{S_[2,5] <= 3} = 1/2 (median at the window width)
    std::size_t below = 0;
    for (const auto& o : outcomes_a)
      if (o.s && *o.s <= window_a.width()) ++below;
    report.add("window_median",
               std::abs(static_cast<double>(below) / static_cast<double>(n) - 0.5), 0.0212);
  }

  const auto censored_a = CensoredSample::from_outcomes(outcomes_a, grid_a.horizon);
  const auto censored_b = CensoredSample::from_outcomes(outcomes_b, grid_b.horizon);

  // the law depends on the window through its width only
  report.add("translation_invariance", ks_two_sample_censored(censored_a, censored_b, 0.01));

  {  // window [0, r] coincides with the plain definition
    PathConfig cfg_zero = base;
    cfg_zero.seed = detail::tag_seed(seed, detail::kTagIntervalZero);
    const IntervalParams window_zero(0.0, 1.0);
    const PathGrid grid_zero = make_interval_grid(window_zero, cfg_zero);
    const auto outcomes_zero = simulate_interval_exceedance(window_zero, cfg_zero, n);

    PathConfig cfg_plain = base;
    cfg_plain.r = 1.0;
    cfg_plain.seed = detail::tag_seed(seed, detail::kTagIntervalPlain);
    const PathGrid grid_plain = make_grid(cfg_plain);
    const auto outcomes_plain = simulate_exceedance(cfg_plain, n);

    report.add("degenerate_window",
               ks_two_sample_censored(
                   CensoredSample::from_outcomes(outcomes_zero, grid_zero.horizon),
                   CensoredSample::from_outcomes(outcomes_plain, grid_plain.horizon), 0.01));
  }

  {  // window S against exact draws with r = width
    RandomStream rng(detail::tag_seed(seed, detail::kTagIntervalExact));
    const LawParams law(window_a.width());
    std::vector<double> draws(n);
    for (auto& d : draws) d = sample_exceedance_exact(law, rng);
    report.add("matches_exact_law",
               ks_two_sample_censored(censored_a,
                                      CensoredSample::censor(draws, grid_a.horizon), 0.01));
  }

  {  // argmax location within the window is translation invariant
    auto offsets = [](const std::vector<IntervalOutcome>& outcomes, double dt) {
      std::vector<double> xs;
      xs.reserve(outcomes.size());
      for (const auto& o : outcomes)
        xs.push_back((static_cast<double>(o.argmax_bucket) + 0.5) * dt);
      return EmpiricalCdf(std::move(xs));
    };
    report.add("argmax_translation",
               ks_two_sample(offsets(outcomes_a, grid_a.dt), offsets(outcomes_b, grid_b.dt),
                             0.01));
  }

  return report;
}

inline SuiteReport run_levy_suite(std::uint64_t seed, unsigned workers) {
  SuiteReport report{"levy", {}, true};
  const std::size_t n = 50000;

  PathConfig cfg;
  cfg.r = 1.0;
  cfg.steps_per_unit_time = 500;
  cfg.seed = detail::tag_seed(seed, detail::kTagLevy);
  cfg.workers = workers;
  auto samples = levy_identity_samples(cfg, n);

  const EmpiricalCdf gap_ecdf(samples.gap);
  report.add("gap_vs_displacement",
             ks_two_sample(gap_ecdf, EmpiricalCdf(samples.displacement), 0.01));

  const HalfNormalLevel half(cfg.r);
  report.add("gap_vs_halfnormal",
             ks_one_sample(gap_ecdf, [&](double x) { return half.cdf(x); }, 0.01));

  {  // shifting B_0 leaves the gap law alone
    PathConfig shifted = cfg;
    shifted.b0 = 100.0;
    shifted.seed = detail::tag_seed(seed, detail::kTagLevyShift);
    auto shifted_samples = levy_identity_samples(shifted, n);
    report.add("b0_shift_invariance",
               ks_two_sample(gap_ecdf, EmpiricalCdf(shifted_samples.gap), 0.01));
  }

  return report;
}

inline SuiteReport run_suite(Suite suite, std::uint64_t seed, unsigned workers) {
  switch (suite) {
    case Suite::analytic: return run_analytic_suite(seed, workers);
    case Suite::lemma: return run_lemma_suite(seed, workers);
    case Suite::path: return run_path_suite(seed, workers);
    case Suite::interval: return run_interval_suite(seed, workers);
    case Suite::levy: return run_levy_suite(seed, workers);
    case Suite::all: break;
  }
  SuiteReport all{"all", {}, true};
  all.append(run_analytic_suite(seed, workers));
  all.append(run_lemma_suite(seed, workers));
  all.append(run_path_suite(seed, workers));
  all.append(run_interval_suite(seed, workers));
  all.append(run_levy_suite(seed, workers));
  return all;
}

}  // namespace runmax

// Copyright (c) 2026 runmax contributors
// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "runmax/analytic.hpp"
#include "runmax/level.hpp"
#include "runmax/simulate.hpp"
#include "runmax/stats.hpp"

using namespace runmax;
using Catch::Approx;

namespace {

PathConfig quick_config(std::uint64_t seed, unsigned spt = 200,
                        double horizon_multiple = 10.0) {
  PathConfig cfg;
  cfg.r = 1.0;
  cfg.steps_per_unit_time = spt;
  cfg.horizon_multiple = horizon_multiple;
  cfg.seed = seed;
  cfg.workers = 2;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  PathConfig cfg;
  cfg.r = -1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.r = 1.0;
  cfg.steps_per_unit_time = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.steps_per_unit_time = 10;
  cfg.horizon_multiple = 0.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.horizon_multiple = 2.0;
  cfg.workers = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.workers = 1;
  cfg.b0 = GaussianInit{0.0, -1.0};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.b0 = 0.0;
  CHECK_NOTHROW(cfg.validate());
  CHECK_THROWS_AS(simulate_exceedance(cfg, 0), std::invalid_argument);
}

TEST_CASE("grid layout covers the phases exactly") {
  PathConfig cfg = quick_config(1, 1000, 10.0);
  const PathGrid grid = make_grid(cfg);
  CHECK(grid.n_window == 1000);
  CHECK(grid.n_post == 10000);
  CHECK(grid.dt == Approx(1e-3).epsilon(1e-15));
  CHECK(grid.horizon == Approx(10.0).epsilon(1e-12));

  const PathGrid wgrid = make_interval_grid(IntervalParams(2.0, 5.0), cfg);
  CHECK(wgrid.n_pre == 2000);
  CHECK(wgrid.n_window == 3000);
  CHECK(wgrid.dt * static_cast<double>(wgrid.n_window) == Approx(3.0).epsilon(1e-15));
  CHECK(wgrid.horizon == Approx(30.0).epsilon(1e-12));
}

TEST_CASE("structural invariants of every outcome") {
  auto cfg = quick_config(11);
  cfg.b0 = 2.5;
  const PathGrid grid = make_grid(cfg);
  for (const auto& o : simulate_exceedance(cfg, 3000)) {
    REQUIRE(o.m_r >= o.b_r);
    REQUIRE(o.m_r >= 2.5);  // max dominates the initial value
    REQUIRE(o.gap == o.m_r - o.b_r);
    REQUIRE(o.argmax_bucket < grid.n_window);
    if (o.s) {
      REQUIRE(*o.s > 0.0);
      REQUIRE(*o.s <= grid.horizon);
    }
  }
}

TEST_CASE("identical seed and config are bit-identical across worker counts") {
  auto cfg = quick_config(77, 100, 5.0);
  cfg.workers = 1;
  const auto a = simulate_exceedance(cfg, 500);
  cfg.workers = 5;
  const auto b = simulate_exceedance(cfg, 500);
  cfg.workers = 16;
  const auto c = simulate_exceedance(cfg, 500);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].m_r == b[i].m_r);
    REQUIRE(a[i].b_r == b[i].b_r);
    REQUIRE(a[i].s == b[i].s);
    REQUIRE(a[i].argmax_bucket == b[i].argmax_bucket);
    REQUIRE(a[i].m_r == c[i].m_r);
    REQUIRE(a[i].s == c[i].s);
  }
}

TEST_CASE("median and censoring fraction track the law") {
  auto cfg = quick_config(2026);
  const std::size_t n = 10000;
  const PathGrid grid = make_grid(cfg);
  const auto outcomes = simulate_exceedance(cfg, n);
  std::size_t below_r = 0, censored = 0;
  for (const auto& o : outcomes) {
    if (!o.s) ++censored;
    else if (*o.s <= cfg.r) ++below_r;
  }
  const double p_half = static_cast<double>(below_r) / static_cast<double>(n);
  CHECK(std::abs(p_half - 0.5) < 0.015);

  const LawParams law(cfg.r);
  const double expected_censored = arctan_survival(grid.horizon, law);
  CHECK(expected_censored == Approx(0.195).margin(2e-4));
  const double frac = static_cast<double>(censored) / static_cast<double>(n);
  CHECK(std::abs(frac - expected_censored) < 0.012);
}

TEST_CASE("bridge-corrected maxima are unbiased even on coarse grids") {
  // E[M_1] = sqrt(2/pi); naive grid maxima at 4 steps would read ~0.55
  for (unsigned spt : {4u, 8u}) {
    auto cfg = quick_config(31 + spt, spt, 1.0);
    const std::size_t n = 20000;
    double mean = 0.0;
    for (const auto& o : simulate_exceedance(cfg, n)) mean += o.m_r;
    mean /= static_cast<double>(n);
    CHECK(std::abs(mean - std::sqrt(2.0 * std::numbers::inv_pi)) < 0.0128);
  }
}

TEST_CASE("interval variant: r1 = 0 coincides with the plain simulation") {
  auto cfg = quick_config(5150);
  const std::size_t n = 4000;
  const auto plain = simulate_exceedance(cfg, n);
  auto cfg2 = cfg;
  cfg2.seed = 5151;
  const auto window = simulate_interval_exceedance(IntervalParams(0.0, 1.0), cfg2, n);
  const double horizon = make_grid(cfg).horizon;
  const auto ks = ks_two_sample_censored(CensoredSample::from_outcomes(plain, horizon),
                                         CensoredSample::from_outcomes(window, horizon),
                                         0.01);
  CHECK(ks.pass);
}

TEST_CASE("levy identity: gap and displacement share a law") {
  auto cfg = quick_config(8888, 300, 1.0);
  const auto samples = levy_identity_samples(cfg, 20000);
  REQUIRE(samples.gap.size() == 20000);
  REQUIRE(samples.displacement.size() == 20000);

  const auto two = ks_two_sample(EmpiricalCdf(samples.gap),
                                 EmpiricalCdf(samples.displacement), 0.01);
  CHECK(two.pass);

  const HalfNormalLevel half(cfg.r);
  const auto one = ks_one_sample(EmpiricalCdf(samples.gap),
                                 [&](double x) { return half.cdf(x); }, 0.01);
  CHECK(one.pass);
}

TEST_CASE("exact sampler: forced median and survival fraction") {
  const LawParams p(4.0);
  RandomStream rng(4242);
  std::size_t beyond = 0;
  const std::size_t n = 100000;
  for (std::size_t i = 0; i < n; ++i)
    if (sample_exceedance_exact(p, rng) > 100.0 * p.r) ++beyond;
  // P{S > 100 r} = (2/pi) atan(1/10) ~ 0.06345
  const double frac = static_cast<double>(beyond) / static_cast<double>(n);
  CHECK(std::abs(frac - 0.063451) < 0.0024);  // 3 sigma at n = 1e5

  // u = 1/2 maps to the median r
  CHECK(arctan_quantile(0.5, p) == Approx(p.r).epsilon(1e-15));
}

TEST_CASE("initial value does not move the exceedance law") {
  auto cfg_a = quick_config(1001, 150);
  auto cfg_b = quick_config(1002, 150);
  cfg_b.b0 = 100.0;
  auto cfg_c = quick_config(1003, 150);
  cfg_c.b0 = GaussianInit{5.0, 3.0};
  const std::size_t n = 5000;
  const double horizon = make_grid(cfg_a).horizon;
  const auto sa = CensoredSample::from_outcomes(simulate_exceedance(cfg_a, n), horizon);
  const auto sb = CensoredSample::from_outcomes(simulate_exceedance(cfg_b, n), horizon);
  const auto sc = CensoredSample::from_outcomes(simulate_exceedance(cfg_c, n), horizon);
  CHECK(ks_two_sample_censored(sa, sb, 0.01).pass);
  CHECK(ks_two_sample_censored(sa, sc, 0.01).pass);
  CHECK(ks_two_sample_censored(sb, sc, 0.01).pass);
}

// Copyright (c) 2026 runmax contributors
// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "runmax/rng.hpp"

namespace runmax {

// A positive random level X, with enough structure for the passage-time
// engine: CDF, exact sampling, and effective support bounds for quadrature
// truncation. X > 0 almost surely is a standing assumption.
template <typename L>
concept LevelDistribution = requires(const L& level, RandomStream& rng, double x) {
  { level.cdf(x) } -> std::convertible_to<double>;
  { level.sample(rng) } -> std::convertible_to<double>;
  { level.support_lower() } -> std::convertible_to<double>;
  { level.support_upper() } -> std::convertible_to<double>;
};

// Absolutely continuous level: also exposes a density and its log (the log
// form keeps large-level/small-time corners out of premature underflow).
template <typename L>
concept ContinuousLevel = LevelDistribution<L> && requires(const L& level, double x) {
  { level.density(x) } -> std::convertible_to<double>;
  { level.log_density(x) } -> std::convertible_to<double>;
};

// |N(0, r)|: the law of the gap M_r - B_r.
class HalfNormalLevel {
 public:
  explicit HalfNormalLevel(double r) : r_(r) {
    if (!(std::isfinite(r) && r > 0.0))
      throw std::domain_error("HalfNormalLevel: r must be positive and finite");
  }

  double r() const { return r_; }

  double density(double x) const {
    if (x < 0.0) return 0.0;
    return std::sqrt(2.0 / (std::numbers::pi * r_)) * std::exp(-x * x / (2.0 * r_));
  }

  double log_density(double x) const {
    if (x < 0.0) return -std::numeric_limits<double>::infinity();
    return 0.5 * std::log(2.0 / (std::numbers::pi * r_)) - x * x / (2.0 * r_);
  }

  double cdf(double x) const {
    if (x <= 0.0) return 0.0;
    return std::erf(x / std::sqrt(2.0 * r_));
  }

  double sample(RandomStream& rng) const {
    double z;
    do {
      z = rng.normal();
    } while (z == 0.0);  // keeps X > 0; expected once per 2^53 draws
    return std::sqrt(r_) * std::abs(z);
  }

  double support_lower() const { return 0.0; }

  // erfc(6) ~ 2e-17 of the mass lies beyond; the quadrature's tail-doubling
  // confirms the truncation.
  double support_upper() const { return 6.0 * std::sqrt(2.0 * r_); }

 private:
  double r_;
};

// Degenerate level at x0 > 0. No density: the passage density has an exact
// closed form instead, and the CDF route integrates the step honestly.
class PointMassLevel {
 public:
  explicit PointMassLevel(double x0) : x0_(x0) {
    if (!(std::isfinite(x0) && x0 > 0.0))
      throw std::domain_error("PointMassLevel: x0 must be positive and finite");
  }

  double value() const { return x0_; }

  double cdf(double x) const { return x >= x0_ ? 1.0 : 0.0; }

  double sample(RandomStream&) const { return x0_; }

  double support_lower() const { return x0_; }
  double support_upper() const { return x0_; }

 private:
  double x0_;
};

static_assert(ContinuousLevel<HalfNormalLevel>);
static_assert(LevelDistribution<PointMassLevel> && !ContinuousLevel<PointMassLevel>);

}  // namespace runmax

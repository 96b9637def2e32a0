// Copyright (c) 2026 runmax contributors
// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "runmax/analytic.hpp"
#include "runmax/level.hpp"
#include "runmax/quadrature.hpp"
#include "runmax/rng.hpp"

// First-passage law of a Brownian motion to an independent positive random
// level X:
//
//   f_{T_X}(t)    = (2 pi t^3)^(-1/2) E[X exp(-X^2 / (2t))]
//   P{T_X <= t}   = sqrt(2/(pi t)) Int_0^inf exp(-x^2/(2t)) F_X(x) dx
//
// With X half-normal of scale sqrt(r), T_X recovers the arctangent
// exceedance law of analytic.hpp; that equivalence is the central cross-check
// of this library.

namespace runmax {

// Passage time value; positive and finite by construction (censoring of
// path simulations lives in simulate.hpp, not here).
struct PassageTime {
  double t;

  explicit PassageTime(double t_) : t(t_) {
    detail::require(std::isfinite(t_) && t_ > 0.0,
                    "PassageTime: t must be positive and finite");
  }

  operator double() const { return t; }
};

namespace detail {

inline constexpr double kLogSpaceExponent = 700.0;  // exp(-700) ~ 1e-304

// x exp(-x^2/(2t)) f_X(x); single-exp log form once the Gaussian factor
// would underflow and then multiply.
template <ContinuousLevel L>
double passage_integrand(double x, double t, const L& level) {
  if (x <= 0.0) return 0.0;
  const double exponent = x * x / (2.0 * t);
  if (exponent > kLogSpaceExponent) {
    const double log_value = std::log(x) - exponent + level.log_density(x);
    return log_value < -745.0 ? 0.0 : std::exp(log_value);
  }
  return x * std::exp(-exponent) * level.density(x);
}

inline double inv_sqrt_two_pi_t_cubed(double t) {
  if (t > 1e-100 && t < 1e100)
    return 1.0 / std::sqrt(2.0 * std::numbers::pi * t * t * t);
  return std::exp(-0.5 * (std::log(2.0 * std::numbers::pi) + 3.0 * std::log(t)));
}

inline void require_time(double t, const char* who) {
  require(std::isfinite(t) && t > 0.0, who);
}

}  // namespace detail

// Density of T_X at t, by adaptive quadrature of the expectation over the
// level's effective support. Breakpoints seed the partition at the integrand
// peak scale sqrt(t) so narrow peaks are not missed, and the improper tail is
// closed by interval doubling. Non-convergence surfaces as QuadratureError
// with the achieved estimate.
template <ContinuousLevel L>
double passage_density(double t, const L& level, double rel_tol = 1e-11) {
  detail::require_time(t, "passage_density: t must be positive and finite");
  const double scale = std::sqrt(t);  // peak of x exp(-x^2/(2t))
  const double upper = std::max(level.support_upper(), 4.0 * scale);
  const std::vector<double> breakpoints = {level.support_lower(), 0.25 * scale, scale,
                                           4.0 * scale, 32.0 * scale,
                                           level.support_upper()};
  auto expectation = integrate_to_infinity(
      [&](double x) { return detail::passage_integrand(x, t, level); }, 0.0, upper,
      rel_tol, 0.0, 4000, breakpoints);
  return detail::inv_sqrt_two_pi_t_cubed(t) * expectation.value;
}

// Deterministic level: the expectation collapses, no quadrature.
inline double passage_density(double t, const PointMassLevel& level) {
  detail::require_time(t, "passage_density: t must be positive and finite");
  const double x0 = level.value();
  const double exponent = x0 * x0 / (2.0 * t);
  if (exponent > detail::kLogSpaceExponent) {
    const double log_value = std::log(x0) - exponent -
                             0.5 * (std::log(2.0 * std::numbers::pi) + 3.0 * std::log(t));
    return log_value < -745.0 ? 0.0 : std::exp(log_value);
  }
  return x0 * std::exp(-exponent) * detail::inv_sqrt_two_pi_t_cubed(t);
}

// P{T_X <= t} in the Tonelli form; works for any level with a CDF, including
// discrete ones (the PointMass step is split at its jump by a breakpoint).
template <LevelDistribution L>
Probability passage_cdf(double t, const L& level, double rel_tol = 1e-11) {
  detail::require_time(t, "passage_cdf: t must be positive and finite");
  const double scale = std::sqrt(t);
  const double upper = std::max(level.support_upper(), 9.0 * scale);
  const std::vector<double> breakpoints = {level.support_lower(), level.support_upper(),
                                           0.5 * scale, 2.0 * scale};
  auto integral = integrate_to_infinity(
      [&](double x) {
        if (x <= 0.0) return 0.0;
        const double exponent = x * x / (2.0 * t);
        return exponent > 745.0 ? 0.0 : std::exp(-exponent) * level.cdf(x);
      },
      0.0, upper, rel_tol, 0.0, 4000, breakpoints);
  const double value = std::sqrt(2.0 / (std::numbers::pi * t)) * integral.value;
  return std::clamp(value, 0.0, 1.0);
}

// Exact draw of T_X: draw the level first (and never re-examine it), then use
// the classical identity T_x = x^2 / Z^2 for a fixed level x. Resamples the
// measure-zero Z = 0 (and any overflow to infinity): expected at most once
// per 2^53 draws.
template <LevelDistribution L>
PassageTime sample_passage_time(const L& level, RandomStream& rng) {
  const double x = level.sample(rng);
  for (;;) {
    const double z = rng.normal();
    if (z == 0.0) continue;
    const double ratio = x / z;
    const double t = ratio * ratio;
    if (std::isfinite(t) && t > 0.0) return PassageTime(t);
  }
}

}  // namespace runmax

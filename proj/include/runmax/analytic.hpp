// Copyright (c) 2026 runmax contributors
// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

// Closed forms for the exceedance-time law of a Brownian running maximum.
//
// With M_r the maximum of a Brownian motion B over [0, r] and
// S = inf{t >= r : B_t = M_r} - r, the law of S is
//
//   P{S <= s} = (2/pi) atan(sqrt(s / r)),        s >= 0,
//   f_S(s)    = (sqrt(r)/pi) / ((s + r) sqrt(s)), s > 0.
//
// The law is heavy tailed (no mean); its median is exactly r. For a window
// [r1, r2] the same law holds with r replaced by r2 - r1.

namespace runmax {

namespace detail {

inline void require(bool condition, const char* message) {
  if (!condition) throw std::domain_error(message);
}

}  // namespace detail

// Value in [0, 1]; construction validates, so domain errors surface as typed
// errors instead of NaNs drifting through Monte Carlo aggregates.
class Probability {
 public:
  Probability(double value) : value_(value) {
    detail::require(value >= 0.0 && value <= 1.0,  // rejects NaN too
                    "Probability: value must lie in [0, 1]");
  }

  double value() const { return value_; }
  operator double() const { return value_; }

 private:
  double value_;
};

// Fixed horizon r > 0 of the exceedance law.
struct LawParams {
  double r;

  explicit LawParams(double r_) : r(r_) {
    detail::require(std::isfinite(r_) && r_ > 0.0,
                    "LawParams: r must be positive and finite");
  }
};

// Observation window [r1, r2], 0 <= r1 < r2.
struct IntervalParams {
  double r1;
  double r2;

  IntervalParams(double r1_, double r2_) : r1(r1_), r2(r2_) {
    detail::require(std::isfinite(r1_) && std::isfinite(r2_) && r1_ >= 0.0 && r1_ < r2_,
                    "IntervalParams: need 0 <= r1 < r2, both finite");
  }

  double width() const { return r2 - r1; }
};

// P{S <= s} = (2/pi) atan(sqrt(s/r)).
inline Probability arctan_cdf(double s, const LawParams& params) {
  detail::require(std::isfinite(s) && s >= 0.0,
                  "arctan_cdf: s must be nonnegative and finite");
  if (s == 0.0) return 0.0;
  return std::min(1.0, 2.0 * std::numbers::inv_pi * std::atan(std::sqrt(s / params.r)));
}

// P{S > s} = (2/pi) atan(sqrt(r/s)): the exact complementary-angle form, so
// deep-tail evaluation never cancels against 1.
inline Probability arctan_survival(double s, const LawParams& params) {
  detail::require(std::isfinite(s) && s >= 0.0,
                  "arctan_survival: s must be nonnegative and finite");
  if (s == 0.0) return 1.0;
  return std::min(1.0, 2.0 * std::numbers::inv_pi * std::atan(std::sqrt(params.r / s)));
}

// f_S(s) = (sqrt(r)/pi) / ((s + r) sqrt(s)). The singularity at s = 0 is
// integrable; evaluation there is a domain error, not infinity.
inline double arctan_density(double s, const LawParams& params) {
  detail::require(std::isfinite(s) && s > 0.0, "arctan_density: s must be positive");
  return std::sqrt(params.r) * std::numbers::inv_pi / ((s + params.r) * std::sqrt(s));
}

// Inverse of arctan_cdf: r tan^2(pi u / 2). u = 1 is rejected (unbounded
// support).
inline double arctan_quantile(Probability u, const LawParams& params) {
  detail::require(u.value() < 1.0, "arctan_quantile: u must lie in [0, 1)");
  if (u.value() == 0.0) return 0.0;
  const double t = std::tan(0.5 * std::numbers::pi * u.value());
  return params.r * t * t;
}

// Deterministic-level passage law P{T_x <= t} = 2 P{W_t >= x}, evaluated as
// erfc(x / sqrt(2t)) so the deep tail keeps full relative accuracy.
inline Probability reflection_cdf(double x, double t) {
  detail::require(std::isfinite(x) && x > 0.0, "reflection_cdf: x must be positive");
  detail::require(std::isfinite(t) && t > 0.0, "reflection_cdf: t must be positive");
  return std::min(1.0, std::erfc(x / std::sqrt(2.0 * t)));
}

// Density of the gap X = M_r - B_r: sqrt(2/(pi r)) exp(-x^2 / (2r)), x >= 0.
inline double halfnormal_density(double x, const LawParams& params) {
  detail::require(std::isfinite(x) && x >= 0.0,
                  "halfnormal_density: x must be nonnegative");
  return std::sqrt(2.0 / (std::numbers::pi * params.r)) *
         std::exp(-x * x / (2.0 * params.r));
}

// Window law: only the width r2 - r1 enters.
inline Probability interval_cdf(double s, const IntervalParams& params) {
  return arctan_cdf(s, LawParams(params.width()));
}

}  // namespace runmax

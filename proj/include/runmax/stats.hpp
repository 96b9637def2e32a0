// Copyright (c) 2026 runmax contributors
// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "runmax/simulate.hpp"

// Goodness-of-fit layer: empirical CDFs, one- and two-sample Kolmogorov-
// Smirnov distances with DKW / asymptotic critical values, and the censored
// sub-distribution comparison forced by the exceedance law's infinite mean.

namespace runmax {

class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
    if (sorted_.empty()) throw std::invalid_argument("EmpiricalCdf: empty sample");
    for (double x : sorted_)
      if (!std::isfinite(x))
        throw std::invalid_argument("EmpiricalCdf: non-finite sample value");
    std::sort(sorted_.begin(), sorted_.end());
  }

  // P_n(X <= x); right-continuous step function with range {0, 1/n, ..., 1}.
  double operator()(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
  }

  // P_n(X < x).
  double left_limit(double x) const {
    const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
  }

  std::size_t size() const { return sorted_.size(); }
  const std::vector<double>& sorted() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

struct KsReport {
  double distance = 0.0;
  std::size_t n = 0;
  double bound = 0.0;
  double alpha = 0.0;
  bool pass = false;  // pass <=> distance < bound
};

// DKW band: P{sup |F_n - F| > eps} <= 2 exp(-2 n eps^2), so the alpha-level
// acceptance bound is sqrt(ln(2/alpha) / (2n)). Tight constant, non-asymptotic.
inline double dkw_bound(std::size_t n, double alpha) {
  if (n == 0 || !(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("dkw_bound: need n >= 1 and alpha in (0, 1)");
  return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

// Asymptotic two-sample critical value c(alpha) sqrt((n_a + n_b)/(n_a n_b)),
// c(alpha) = sqrt(-ln(alpha/2) / 2); c(0.01) ~ 1.628.
inline double two_sample_bound(std::size_t n_a, std::size_t n_b, double alpha) {
  if (n_a == 0 || n_b == 0 || !(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("two_sample_bound: need samples and alpha in (0, 1)");
  const double c = std::sqrt(-std::log(0.5 * alpha) / 2.0);
  const double na = static_cast<double>(n_a), nb = static_cast<double>(n_b);
  return c * std::sqrt((na + nb) / (na * nb));
}

// Classical one-sample D_n: evaluated at sample points with both one-sided
// limits (grid evaluation underestimates the sup).
template <typename Cdf>
KsReport ks_one_sample(const EmpiricalCdf& ecdf, Cdf&& cdf, double alpha = 0.01) {
  const auto& xs = ecdf.sorted();
  const double n = static_cast<double>(xs.size());
  double distance = 0.0;
  std::size_t i = 0;
  while (i < xs.size()) {
    std::size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    const double f = cdf(xs[i]);
    distance = std::max({distance, std::abs(static_cast<double>(j) / n - f),
                         std::abs(static_cast<double>(i) / n - f)});
    i = j;
  }
  const double bound = dkw_bound(xs.size(), alpha);
  return {distance, xs.size(), bound, alpha, distance < bound};
}

// sup_x |F_a - F_b| over the merged jump points (the difference of two step
// functions is constant between them). Symmetric in (a, b).
inline KsReport ks_two_sample(const EmpiricalCdf& a, const EmpiricalCdf& b,
                              double alpha = 0.01) {
  const auto& xa = a.sorted();
  const auto& xb = b.sorted();
  const double na = static_cast<double>(xa.size()), nb = static_cast<double>(xb.size());
  double distance = 0.0;
  std::size_t i = 0, j = 0;
  while (i < xa.size() || j < xb.size()) {
    const double v = (j >= xb.size() || (i < xa.size() && xa[i] <= xb[j])) ? xa[i] : xb[j];
    while (i < xa.size() && xa[i] == v) ++i;
    while (j < xb.size() && xb[j] == v) ++j;
    distance = std::max(distance, std::abs(static_cast<double>(i) / na -
                                           static_cast<double>(j) / nb));
  }
  const double bound = two_sample_bound(xa.size(), xb.size(), alpha);
  return {distance, xa.size() + xb.size(), bound, alpha, distance < bound};
}

// A sample observed only up to a horizon: the resolved values plus the count
// that censored. Comparisons use the sub-distribution function
// (#resolved <= x) / n_total with no renormalization, so censoring-rate error
// and shape error stay separate.
class CensoredSample {
 public:
  CensoredSample(std::vector<double> uncensored, std::size_t n_total, double horizon)
      : values_(std::move(uncensored)), n_total_(n_total), horizon_(horizon) {
    if (!(std::isfinite(horizon) && horizon > 0.0))
      throw std::domain_error("CensoredSample: horizon must be positive");
    if (n_total_ < values_.size())
      throw std::invalid_argument("CensoredSample: n_total smaller than resolved count");
    if (n_total_ == 0) throw std::invalid_argument("CensoredSample: empty sample");
    for (double x : values_)
      if (!(std::isfinite(x) && x <= horizon_))
        throw std::invalid_argument("CensoredSample: resolved value beyond horizon");
    std::sort(values_.begin(), values_.end());
  }

  // Censor unbounded draws at a horizon (for comparing against exact-law draws).
  static CensoredSample censor(const std::vector<double>& draws, double horizon) {
    std::vector<double> kept;
    kept.reserve(draws.size());
    for (double x : draws)
      if (x <= horizon) kept.push_back(x);
    return CensoredSample(std::move(kept), draws.size(), horizon);
  }

  static CensoredSample from_outcomes(const std::vector<PathOutcome>& outcomes,
                                      double horizon) {
    std::vector<double> kept;
    kept.reserve(outcomes.size());
    for (const auto& o : outcomes)
      if (o.s) kept.push_back(std::min(*o.s, horizon));
    return CensoredSample(std::move(kept), outcomes.size(), horizon);
  }

  double sub_cdf(double x) const {
    const auto it = std::upper_bound(values_.begin(), values_.end(), x);
    return static_cast<double>(it - values_.begin()) / static_cast<double>(n_total_);
  }

  const std::vector<double>& values() const { return values_; }
  std::size_t n_total() const { return n_total_; }
  std::size_t censored_count() const { return n_total_ - values_.size(); }
  double horizon() const { return horizon_; }

 private:
  std::vector<double> values_;
  std::size_t n_total_;
  double horizon_;
};

// Censored one-sample comparison on [0, horizon]: sub-distribution against
// the analytic CDF, censored paths contributing to the denominator only. The
// DKW bound at n_total remains valid for the restricted sup.
template <typename Cdf>
KsReport censored_compare(const CensoredSample& sample, Cdf&& cdf, double alpha = 0.01) {
  const auto& xs = sample.values();
  const double n = static_cast<double>(sample.n_total());
  double distance = 0.0;
  std::size_t i = 0;
  while (i < xs.size()) {
    std::size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    const double f = cdf(xs[i]);
    distance = std::max({distance, std::abs(static_cast<double>(j) / n - f),
                         std::abs(static_cast<double>(i) / n - f)});
    i = j;
  }
  // plateau between the largest resolved value and the horizon
  distance = std::max(distance,
                      std::abs(static_cast<double>(xs.size()) / n - cdf(sample.horizon())));
  const double bound = dkw_bound(sample.n_total(), alpha);
  return {distance, sample.n_total(), bound, alpha, distance < bound};
}

// Two censored samples over a common horizon: sup of the sub-CDF difference
// over the merged resolved values. The classical critical value is
// conservative here.
inline KsReport ks_two_sample_censored(const CensoredSample& a, const CensoredSample& b,
                                       double alpha = 0.01) {
  if (a.horizon() != b.horizon())
    throw std::invalid_argument("ks_two_sample_censored: horizons differ");
  const auto& xa = a.values();
  const auto& xb = b.values();
  const double na = static_cast<double>(a.n_total()), nb = static_cast<double>(b.n_total());
  double distance = 0.0;
  std::size_t i = 0, j = 0;
  while (i < xa.size() || j < xb.size()) {
    const double v = (j >= xb.size() || (i < xa.size() && xa[i] <= xb[j])) ? xa[i] : xb[j];
    while (i < xa.size() && xa[i] == v) ++i;
    while (j < xb.size() && xb[j] == v) ++j;
    distance = std::max(distance, std::abs(static_cast<double>(i) / na -
                                           static_cast<double>(j) / nb));
  }
  const double bound = two_sample_bound(a.n_total(), b.n_total(), alpha);
  return {distance, a.n_total() + b.n_total(), bound, alpha, distance < bound};
}

}  // namespace runmax

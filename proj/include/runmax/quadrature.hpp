// Copyright (c) 2026 runmax contributors
// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace runmax {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  bool converged = false;
  std::size_t intervals = 0;
};

// Non-convergence carries the achieved estimate so callers can report it.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double value, double error_estimate)
      : std::runtime_error(what + " (value=" + std::to_string(value) +
                           ", error estimate=" + std::to_string(error_estimate) + ")"),
        value_(value),
        error_estimate_(error_estimate) {}

  double value() const { return value_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double value_;
  double error_estimate_;
};

namespace detail {

// Gauss-Kronrod 7/15 rule on [-1, 1]; nonnegative abscissae, QUADPACK values.
inline constexpr std::array<double, 8> kGk15Nodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kGk15KronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGk15GaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename F>
std::pair<double, double> gk15(F&& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double result_kronrod = kGk15KronrodWeights[7] * fc;
  double result_gauss = kGk15GaussWeights[3] * fc;

  for (int j = 0; j < 3; ++j) {
    const int idx = 2 * j + 1;  // Gauss points sit at the odd Kronrod nodes
    const double dx = half * kGk15Nodes[idx];
    const double sum = f(center - dx) + f(center + dx);
    result_gauss += kGk15GaussWeights[j] * sum;
    result_kronrod += kGk15KronrodWeights[idx] * sum;
  }
  for (int j = 0; j < 4; ++j) {
    const int idx = 2 * j;
    const double dx = half * kGk15Nodes[idx];
    result_kronrod += kGk15KronrodWeights[idx] * (f(center - dx) + f(center + dx));
  }

  const double integral = result_kronrod * half;
  const double error = std::abs((result_kronrod - result_gauss) * half);
  return {integral, error};
}

struct Segment {
  double a, b, value, error;
};

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over [a, b]. Optional
// breakpoints seed the initial partition (peaks and discontinuities the
// caller knows about); convergence means total error <= max(abs_tol,
// rel_tol * |value|).
template <typename F>
QuadratureResult integrate_adaptive(F&& f, double a, double b,
                                    double rel_tol = 1e-10, double abs_tol = 0.0,
                                    std::size_t max_intervals = 4000,
                                    const std::vector<double>& breakpoints = {}) {
  QuadratureResult out;
  if (!(std::isfinite(a) && std::isfinite(b)))
    throw std::domain_error("integrate_adaptive: bounds must be finite");
  if (a == b) {
    out.converged = true;
    return out;
  }

  std::vector<double> edges;
  edges.push_back(a);
  for (double x : breakpoints)
    if (x > a && x < b) edges.push_back(x);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<detail::Segment> segments;
  segments.reserve(max_intervals + 1);
  double total = 0.0, total_err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    auto [v, e] = detail::gk15(f, edges[i], edges[i + 1]);
    if (!std::isfinite(v))
      throw QuadratureError("integrate_adaptive: integrand not finite", v, e);
    segments.push_back({edges[i], edges[i + 1], v, e});
    total += v;
    total_err += e;
  }

  auto worst = [&]() {
    std::size_t k = 0;
    for (std::size_t i = 1; i < segments.size(); ++i)
      if (segments[i].error > segments[k].error) k = i;
    return k;
  };

  while (total_err > std::max(abs_tol, rel_tol * std::abs(total)) &&
         segments.size() < max_intervals) {
    const std::size_t k = worst();
    detail::Segment seg = segments[k];
    const double mid = 0.5 * (seg.a + seg.b);
    if (mid <= seg.a || mid >= seg.b) {
      // subdivision exhausted at machine resolution
      segments[k].error = 0.0;
      total_err = 0.0;
      for (const auto& s : segments) total_err += s.error;
      continue;
    }
    auto [v1, e1] = detail::gk15(f, seg.a, mid);
    auto [v2, e2] = detail::gk15(f, mid, seg.b);
    if (!std::isfinite(v1) || !std::isfinite(v2))
      throw QuadratureError("integrate_adaptive: integrand not finite", total, total_err);
    segments[k] = {seg.a, mid, v1, e1};
    segments.push_back({mid, seg.b, v2, e2});
    total += v1 + v2 - seg.value;
    total_err += e1 + e2 - seg.error;
  }

  out.value = total;
  out.error = total_err;
  out.intervals = segments.size();
  out.converged = total_err <= std::max(abs_tol, rel_tol * std::abs(total));
  return out;
}

// Same, but throws on non-convergence.
template <typename F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-10,
                 double abs_tol = 0.0, std::size_t max_intervals = 4000,
                 const std::vector<double>& breakpoints = {}) {
  auto res = integrate_adaptive(f, a, b, rel_tol, abs_tol, max_intervals, breakpoints);
  if (!res.converged)
    throw QuadratureError("quadrature did not converge", res.value, res.error);
  return res.value;
}

// Improper upper limit: integrate [a, first_upper], then keep doubling the
// upper bound until an octave contributes below 1e-15 of the running total.
template <typename F>
QuadratureResult integrate_to_infinity(F&& f, double a, double first_upper,
                                       double rel_tol = 1e-10, double abs_tol = 0.0,
                                       std::size_t max_intervals = 4000,
                                       const std::vector<double>& breakpoints = {}) {
  if (!(first_upper > a))
    throw std::domain_error("integrate_to_infinity: first_upper must exceed a");
  QuadratureResult acc =
      integrate_adaptive(f, a, first_upper, rel_tol, abs_tol, max_intervals, breakpoints);
  if (!acc.converged)
    throw QuadratureError("quadrature did not converge", acc.value, acc.error);

  double upper = std::max(first_upper, 1.0);
  while (upper < 1e300) {
    const double next = 2.0 * upper;
    auto inc = integrate_adaptive(f, upper, next, rel_tol,
                                  std::max(abs_tol, 1e-16 * std::abs(acc.value)),
                                  max_intervals);
    if (!inc.converged)
      throw QuadratureError("quadrature tail did not converge", acc.value + inc.value,
                            acc.error + inc.error);
    acc.value += inc.value;
    acc.error += inc.error;
    acc.intervals += inc.intervals;
    upper = next;
    if (std::abs(inc.value) <= 1e-15 * std::abs(acc.value)) break;
  }
  acc.converged = true;
  return acc;
}

}  // namespace runmax

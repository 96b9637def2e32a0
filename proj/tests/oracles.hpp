// Copyright (c) 2026 runmax contributors
// SPDX-License-Identifier: MIT
//
// Test-only reference computations, deliberately independent of the
// library's Gauss-Kronrod machinery: adaptive Simpson quadrature, a normal
// CDF/tail built on it, and finite differences.
#pragma once

#include <cmath>
#include <numbers>

namespace oracle {

namespace detail {

template <typename F>
double simpson_rec(F&& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

template <typename F>
double integrate(F&& f, double a, double b, double tol = 1e-13) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

inline double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

inline double normal_cdf(double z) {
  if (z < 0.0) return 0.5 - integrate(normal_pdf, z, 0.0);
  return 0.5 + integrate(normal_pdf, 0.0, z);
}

// Upper tail P{Z >= z}, integrated directly so the deep tail keeps relative
// accuracy (never 1 - Phi).
inline double normal_tail(double z) {
  return integrate(normal_pdf, z, z + 40.0, 1e-18);
}

template <typename F>
double central_diff(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracle

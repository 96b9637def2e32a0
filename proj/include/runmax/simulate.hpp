// Copyright (c) 2026 runmax contributors
// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <variant>
#include <vector>

#include "runmax/analytic.hpp"
#include "runmax/rng.hpp"

// Path-level Monte Carlo for the exceedance time: simulate B on a grid over
// the tracked window, draw each cell's maximum exactly from the Brownian
// bridge maximum law (removing the O(sqrt(dt)) downward bias of grid maxima),
// then continue past the window until a cell's bridge exceeds the running
// maximum. The crossing cell is localized by conditional bridge bisection, so
// the simulated law is exact up to a ~2^-26 fraction of one cell.

namespace runmax {

struct GaussianInit {
  double mean = 0.0;
  double stddev = 1.0;
};

// B_0 can be an arbitrary constant or a Gaussian draw; the law of S does not
// depend on it.
using InitialValue = std::variant<double, GaussianInit>;

struct PathConfig {
  double r = 1.0;
  unsigned steps_per_unit_time = 1000;
  double horizon_multiple = 10.0;  // censor S at horizon_multiple * r
  InitialValue b0 = 0.0;
  std::uint64_t seed = 0;
  unsigned workers = 1;

  void validate() const {
    if (!(std::isfinite(r) && r > 0.0))
      throw std::invalid_argument("PathConfig: r must be positive and finite");
    if (steps_per_unit_time < 1)
      throw std::invalid_argument("PathConfig: steps_per_unit_time must be >= 1");
    if (!(std::isfinite(horizon_multiple) && horizon_multiple >= 1.0))
      throw std::invalid_argument("PathConfig: horizon_multiple must be >= 1");
    if (workers < 1) throw std::invalid_argument("PathConfig: workers must be >= 1");
    if (const auto* g = std::get_if<GaussianInit>(&b0)) {
      if (!(std::isfinite(g->mean) && std::isfinite(g->stddev) && g->stddev >= 0.0))
        throw std::invalid_argument("PathConfig: invalid Gaussian initial value");
    } else if (!std::isfinite(std::get<double>(b0))) {
      throw std::invalid_argument("PathConfig: initial value must be finite");
    }
  }
};

struct PathOutcome {
  double m_r;                    // maximum over the tracked window
  double b_r;                    // value at the window's right end
  double gap;                    // m_r - b_r
  std::optional<double> s;       // exceedance time past the window; empty = censored
  std::uint32_t argmax_bucket;   // window grid cell attaining the maximum (diagnostic)
};

// Same shape; the window is [r1, r2] instead of [0, r].
using IntervalOutcome = PathOutcome;

// Uniform-cell grid layout. Cell widths divide the phase lengths exactly, so
// the effective censoring horizon is n_post * dt (within rounding of
// horizon_multiple * window length).
struct PathGrid {
  std::size_t n_pre = 0;     // cells ahead of the window (interval variant)
  std::size_t n_window = 0;  // cells on the tracked window
  std::size_t n_post = 0;    // cells past the window, up to the horizon
  double dt_pre = 0.0;
  double dt = 0.0;
  double horizon = 0.0;      // n_post * dt: exact censoring point for s
};

namespace detail {

inline std::size_t cells_for(double length, unsigned steps_per_unit_time) {
  return static_cast<std::size_t>(
      std::ceil(length * static_cast<double>(steps_per_unit_time) - 1e-9));
}

}  // namespace detail

inline PathGrid make_grid(double window, double horizon_multiple,
                          unsigned steps_per_unit_time, double pre = 0.0) {
  PathGrid grid;
  grid.n_window = std::max<std::size_t>(1, detail::cells_for(window, steps_per_unit_time));
  grid.dt = window / static_cast<double>(grid.n_window);
  if (pre > 0.0) {
    grid.n_pre = std::max<std::size_t>(1, detail::cells_for(pre, steps_per_unit_time));
    grid.dt_pre = pre / static_cast<double>(grid.n_pre);
  }
  grid.n_post = static_cast<std::size_t>(
      std::ceil(horizon_multiple * window / grid.dt - 1e-9));
  grid.horizon = static_cast<double>(grid.n_post) * grid.dt;
  return grid;
}

inline PathGrid make_grid(const PathConfig& config) {
  return make_grid(config.r, config.horizon_multiple, config.steps_per_unit_time);
}

inline PathGrid make_interval_grid(const IntervalParams& window, const PathConfig& config) {
  return make_grid(window.width(), config.horizon_multiple, config.steps_per_unit_time,
                   window.r1);
}

namespace detail {

// Exact maximum of a Brownian bridge over one cell with endpoint values
// (a, b) and width h: m = (a + b + sqrt((b-a)^2 - 2 h ln U)) / 2, U in (0,1].
inline double bridge_max(double a, double b, double h, double u) {
  const double d = b - a;
  return 0.5 * (a + b + std::sqrt(d * d - 2.0 * h * std::log(u)));
}

// P{bridge over (a, b, h) reaches level m}; certain once an endpoint does.
inline double bridge_cross_prob(double a, double b, double m, double h) {
  if (a >= m || b >= m) return 1.0;
  return std::exp(-2.0 * (m - a) * (m - b) / h);
}

// First-passage offset of the level m within a cell already known to cross:
// recursively halve the cell, drawing the midpoint from the bridge law
// conditioned on the crossing (rejection), and descend into the half that
// crossed first. Resolution is 2^-26 of the cell; the returned offset is
// strictly positive.
inline double bisect_first_hit(double a, double b, double m, double h, RandomStream& rng) {
  double t0 = 0.0;
  const double h_min = h * 0x1p-26;
  while (h > h_min) {
    if (a >= m) return t0 > 0.0 ? t0 : 0.25 * h_min;
    const double half = 0.5 * h;
    double c, p_left, p_right, q;
    int tries = 0;
    for (;;) {
      c = 0.5 * (a + b) + 0.5 * std::sqrt(h) * rng.normal();
      p_left = bridge_cross_prob(a, c, m, half);
      p_right = bridge_cross_prob(c, b, m, half);
      q = p_left + p_right - p_left * p_right;
      if (q > 0.0 && rng.uniform_open_closed() <= q) break;
      if (++tries == 100000) break;  // vanishing-probability corner
    }
    if (tries == 100000) break;      // settle at the current cell's midpoint
    if (rng.uniform_open_closed() * q <= p_left) {
      b = c;  // first passage in the left half
    } else {
      a = c;
      t0 += half;
    }
    h = half;
  }
  return t0 + 0.5 * h;
}

inline double draw_initial(const InitialValue& init, RandomStream& rng) {
  if (const auto* g = std::get_if<GaussianInit>(&init))
    return g->mean + g->stddev * rng.normal();
  return std::get<double>(init);
}

// Advance endpoints only (no maximum tracking).
inline double diffuse(double a, std::size_t cells, double sqrt_dt, RandomStream& rng) {
  for (std::size_t i = 0; i < cells; ++i) a += sqrt_dt * rng.normal();
  return a;
}

struct WindowResult {
  double max;
  double end;
  std::uint32_t argmax;
};

// One pass over the tracked window: Gaussian increments plus an exact bridge
// maximum per cell. Ties keep the first attaining cell.
inline WindowResult window_with_max(double a, std::size_t cells, double dt,
                                    double sqrt_dt, RandomStream& rng) {
  double max = a;
  std::uint32_t argmax = 0;
  for (std::size_t i = 0; i < cells; ++i) {
    const double b = a + sqrt_dt * rng.normal();
    const double cell_max = bridge_max(a, b, dt, rng.uniform_open_closed());
    if (cell_max > max) {
      max = cell_max;
      argmax = static_cast<std::uint32_t>(i);
    }
    a = b;
  }
  return {max, a, argmax};
}

// Continue past the window until a cell's bridge exceeds the maximum (strict
// form; the non-strict definition coincides a.s.). The per-cell indicator
// U < exp(-2 (m-a)(m-b) / dt) realizes exactly the event {cell bridge
// maximum > m}. Returns the exceedance time or nullopt when censored.
inline std::optional<double> post_phase(double a, double m, std::size_t cells, double dt,
                                        double sqrt_dt, RandomStream& rng) {
  for (std::size_t j = 0; j < cells; ++j) {
    const double b = a + sqrt_dt * rng.normal();
    bool crossed;
    if (a >= m || b >= m) {
      crossed = true;
    } else {
      crossed = rng.uniform_open_closed() < bridge_cross_prob(a, b, m, dt);
    }
    if (crossed)
      return static_cast<double>(j) * dt + bisect_first_hit(a, b, m, dt, rng);
    a = b;
  }
  return std::nullopt;
}

// Static split of [0, n) into contiguous per-worker ranges; every path owns
// its derived rng stream, so the outcome list does not depend on the worker
// count and is assembled in path order.
template <typename Fn>
auto run_paths(std::size_t n_paths, unsigned workers, std::uint64_t seed,
               std::uint64_t stream_offset, Fn&& per_path)
    -> std::vector<std::invoke_result_t<Fn&, RandomStream&>> {
  using Outcome = std::invoke_result_t<Fn&, RandomStream&>;
  std::vector<Outcome> out(n_paths);
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      RandomStream rng = RandomStream::derived(seed, stream_offset + i);
      out[i] = per_path(rng);
    }
  };
  if (workers <= 1 || n_paths < 2) {
    run_range(0, n_paths);
    return out;
  }
  const std::size_t w = std::min<std::size_t>(workers, n_paths);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (std::size_t k = 0; k < w; ++k) {
    const std::size_t begin = n_paths * k / w;
    const std::size_t end = n_paths * (k + 1) / w;
    threads.emplace_back(run_range, begin, end);
  }
  for (auto& t : threads) t.join();
  return out;
}

inline constexpr std::uint64_t kLevySecondSetOffset = 1ull << 40;

}  // namespace detail

// Realizes S = inf{t >= r : B_t = M_r} - r with censoring at the grid
// horizon (~horizon_multiple * r). Censoring is a value, not an error.
inline std::vector<PathOutcome> simulate_exceedance(const PathConfig& config,
                                                    std::size_t n_paths) {
  config.validate();
  if (n_paths < 1) throw std::invalid_argument("simulate_exceedance: n_paths must be >= 1");
  const PathGrid grid = make_grid(config);
  const double sqrt_dt = std::sqrt(grid.dt);
  return detail::run_paths(
      n_paths, config.workers, config.seed, 0, [&](RandomStream& rng) {
        const double b0 = detail::draw_initial(config.b0, rng);
        const auto window =
            detail::window_with_max(b0, grid.n_window, grid.dt, sqrt_dt, rng);
        auto s = detail::post_phase(window.end, window.max, grid.n_post, grid.dt,
                                    sqrt_dt, rng);
        return PathOutcome{window.max, window.end, window.max - window.end,
                           std::move(s), window.argmax};
      });
}

// Window variant: B runs on [0, r2], the maximum is tracked on [r1, r2] only,
// and S is censored at horizon_multiple * (r2 - r1) past r2. config.r is
// ignored; the window defines all time scales. argmax_bucket indexes cells
// within the window.
inline std::vector<IntervalOutcome> simulate_interval_exceedance(
    const IntervalParams& window, const PathConfig& config, std::size_t n_paths) {
  config.validate();
  if (n_paths < 1)
    throw std::invalid_argument("simulate_interval_exceedance: n_paths must be >= 1");
  const PathGrid grid = make_interval_grid(window, config);
  const double sqrt_dt = std::sqrt(grid.dt);
  const double sqrt_dt_pre = std::sqrt(grid.dt_pre);
  return detail::run_paths(
      n_paths, config.workers, config.seed, 0, [&](RandomStream& rng) {
        double a = detail::draw_initial(config.b0, rng);
        a = detail::diffuse(a, grid.n_pre, sqrt_dt_pre, rng);
        const auto w = detail::window_with_max(a, grid.n_window, grid.dt, sqrt_dt, rng);
        auto s = detail::post_phase(w.end, w.max, grid.n_post, grid.dt, sqrt_dt, rng);
        return IntervalOutcome{w.max, w.end, w.max - w.end, std::move(s), w.argmax};
      });
}

struct LevyIdentitySamples {
  std::vector<double> gap;           // M_r - B_r
  std::vector<double> displacement;  // |B_r - B_0|, independent path set
};

// Two marginal samples for the identity law(M_r - B_r) = law(|B_r - B_0|).
// The identity holds in law, not pathwise, so the sets are independent.
inline LevyIdentitySamples levy_identity_samples(const PathConfig& config,
                                                 std::size_t n_paths) {
  config.validate();
  if (n_paths < 1)
    throw std::invalid_argument("levy_identity_samples: n_paths must be >= 1");
  const PathGrid grid = make_grid(config);
  const double sqrt_dt = std::sqrt(grid.dt);
  auto gaps = detail::run_paths(
      n_paths, config.workers, config.seed, 0, [&](RandomStream& rng) {
        const double b0 = detail::draw_initial(config.b0, rng);
        const auto w = detail::window_with_max(b0, grid.n_window, grid.dt, sqrt_dt, rng);
        return w.max - w.end;
      });
  auto displacements = detail::run_paths(
      n_paths, config.workers, config.seed, detail::kLevySecondSetOffset,
      [&](RandomStream& rng) {
        const double b0 = detail::draw_initial(config.b0, rng);
        const double end = detail::diffuse(b0, grid.n_window, sqrt_dt, rng);
        return std::abs(end - b0);
      });
  return {std::move(gaps), std::move(displacements)};
}

// Inverse-CDF draw from the arctangent law: the reference mechanism against
// which the path and passage samplers are judged.
inline double sample_exceedance_exact(const LawParams& params, RandomStream& rng) {
  return arctan_quantile(Probability(rng.uniform_half_open()), params);
}

}  // namespace runmax

// Copyright (c) 2026 runmax contributors
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace runmax {

// splitmix64: seeding and stream derivation only.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

// xoshiro256++ (Blackman/Vigna), state filled through splitmix64.
class Xoshiro256PlusPlus {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256PlusPlus(std::uint64_t seed) {
    SplitMix64 sm{seed};
    for (auto& word : state_) word = sm.next();
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~0ull; }

  result_type operator()() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_;
};

// A reproducible stream of uniform and Gaussian variates. Concurrent use
// requires one stream per owner; independent streams come from `derived`
// with distinct indices under one root seed.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

  // Stream for (root seed, stream index). One per simulated path, so results
  // do not depend on how paths are split across workers.
  static RandomStream derived(std::uint64_t root_seed, std::uint64_t stream_index) {
    return RandomStream(root_seed ^ (stream_index + 1) * 0x9e3779b97f4a7c15ull);
  }

  std::uint64_t bits() { return gen_(); }

  // Uniform on (0, 1]; never 0, safe under log.
  double uniform_open_closed() {
    return static_cast<double>((bits() >> 11) + 1) * 0x1p-53;
  }

  // Uniform on [0, 1).
  double uniform_half_open() {
    return static_cast<double>(bits() >> 11) * 0x1p-53;
  }

  // Standard normal, Box-Muller; the second variate of each pair is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform_open_closed()));
    const double angle = 2.0 * std::numbers::pi * uniform_half_open();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  Xoshiro256PlusPlus gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace runmax

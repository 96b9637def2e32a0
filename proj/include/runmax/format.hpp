// Copyright (c) 2026 runmax contributors
// SPDX-License-Identifier: MIT
#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <system_error>

namespace runmax {

// Shortest decimal that round-trips the exact double (std::to_chars):
// locale-independent and byte-deterministic, '.' decimal separator.
inline std::string format_double(double value) {
  char buffer[40];
  const auto res = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (res.ec != std::errc())
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buffer, res.ptr);
}

}  // namespace runmax

// Copyright (c) 2026 runmax contributors
// SPDX-License-Identifier: MIT
#pragma once

namespace runmax {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace runmax

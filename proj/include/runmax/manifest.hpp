// Copyright (c) 2026 runmax contributors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "runmax/version.hpp"

namespace runmax {

// Everything needed to reproduce a run bit-exactly: command, parameters,
// seed, workers, version. Wall-clock duration is carried for logging but is
// excluded from serialized manifests so identical command lines keep
// producing byte-identical output files.
struct RunManifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string version = kVersion;
  double duration_seconds = 0.0;

  nlohmann::json to_json() const {
    return nlohmann::json{{"command", command},
                          {"parameters", parameters},
                          {"seed", seed},
                          {"workers", workers},
                          {"version", version}};
  }
};

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

// Sidecar manifest accompanying a data output file.
inline void write_manifest(const std::string& data_path, const RunManifest& manifest) {
  write_text_file(data_path + ".manifest.json", manifest.to_json().dump(2) + "\n");
}

}  // namespace runmax

/*
   Copyright 2026 the latgauge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <string>

#include "latgauge/lattice.hpp"

namespace latgauge {

/// Binary gauge-config dump. Layout (little-endian):
///   bytes 0-7   magic "LATGCFG1"
///   u32 dim, u32 extent, u32 matrix_dim, u32 reserved (0)
///   u64 seed
///   K*D matrices in edge_index order, each matrix_dim^2 entries row-major,
///   each entry two doubles (re, im).
/// The round trip is bit-lossless.
struct StoredConfig {
  GaugeConfig config;
  std::uint64_t seed = 0;
};

void save_config(const GaugeConfig& config, std::uint64_t seed, const std::string& path);

/// Loads and validates a dump; throws std::runtime_error on malformed
/// files and on links that fail the unitarity tolerance.
StoredConfig load_config(const std::string& path);

}  // namespace latgauge

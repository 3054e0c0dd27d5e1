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
#include <random>

namespace latgauge {

/// Identifies one independent substream of the global random sequence.
/// Equal (seed, stream_id) pairs always reproduce the same draws, so any
/// assignment of substreams to threads yields worker-count independent
/// results.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

/// Substream generator: mt19937_64 keyed by (seed, stream_id), with a
/// fully specified Box-Muller normal variate (no library-dependent
/// distribution state).
class Rng {
 public:
  explicit Rng(RngStream stream);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal variate.
  double normal();

 private:
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace latgauge

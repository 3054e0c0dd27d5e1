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

#include "latgauge/lattice.hpp"

namespace latgauge {

/// Number of leading-order terms in the expansion of t^l: ways to group l
/// ordered plaquette slots into pairs carrying the same plaquette with
/// opposite orientations,
///   (l-1)!! * 2^{l/2} * K^{l/2} * C(D,2)^{l/2}
/// for even l, and 0 for odd l.
std::uint64_t count_pairings_closed(int order, std::int64_t site_count, int dim);

/// Same count by enumeration: sums, over all ordered l-tuples of oriented
/// plaquettes, the number of perfect matchings of tuple positions into
/// (same plaquette, opposite orientation) pairs. Degenerate tuples
/// contribute once per matching, which is what makes the count agree with
/// the closed form. Guard: (2 K C(D,2))^l <= 1e7.
std::uint64_t count_pairings_bruteforce(int order, const LatticeShape& shape);

}  // namespace latgauge

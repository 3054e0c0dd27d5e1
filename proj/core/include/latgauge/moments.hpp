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
#include "latgauge/rational.hpp"

namespace latgauge {

enum class MomentKind { exact, leading, empirical };

struct MomentReport {
  int order = 0;
  double value = 0.0;
  double std_error = 0.0;  // 0 for exact/leading
  int matrix_dim = 0;
  int dim = 0;
  int extent = 0;
  std::int64_t site_count = 0;
  MomentKind kind = MomentKind::empirical;
};

/// l-th moment of the limit Gaussian of the rescaled variable N*t:
///   0 for odd l, (l-1)!! * (D(D-1)/(4K))^{l/2} for even l.
double leading_moment(int order, std::int64_t site_count, int dim);

/// Exact l-th moment of t under the product Haar measure, computed by
/// expanding t^l into oriented-plaquette tuples and integrating edge by
/// edge with the exact Weingarten coefficients. All arithmetic is
/// rational, so the result carries no roundoff.
///
/// Complexity guards: order <= 3 for general shapes, order == 4 only for
/// (D, L) = (2, 2); requires matrix_dim >= 2 * order.
Rational exact_moment_rational(int order, const LatticeShape& shape, int matrix_dim);

double exact_moment(int order, const LatticeShape& shape, int matrix_dim);

}  // namespace latgauge

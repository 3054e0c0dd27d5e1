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

#include <vector>

#include "latgauge/lattice.hpp"
#include "latgauge/matrix.hpp"

namespace latgauge {

/// Ordered boundary product U^dag_{x,nu} U^dag_{x+nu,mu} U_{x+mu,nu} U_{x,mu};
/// unitary whenever the links are.
Matrix plaquette_holonomy(const GaugeConfig& config, const PlaquetteId& p);

/// Normalized action
///   t(U) = (1/K) sum_plaquettes (1/N) Re Tr(holonomy),
/// bounded by |t| <= D(D-1)/2 with the maximum attained on the identity
/// config. Plaquette terms are combined with pairwise summation.
double normalized_action(const GaugeConfig& config);

/// exp((2 N^2 K / lambda) * t(config)). Rejects lambda <= 0.
double wilson_weight(const GaugeConfig& config, double lambda);

/// Exponent of the Wilson weight for a precomputed t.
double wilson_log_weight(double t, double lambda, std::int64_t site_count, int matrix_dim);

/// Site-dependent rotation U_{x,mu} -> g_{x+mu} U_{x,mu} g_x^dag. Leaves
/// every plaquette trace, and hence t, unchanged. `site_rotations` must
/// hold one unitary of matching dimension per site.
GaugeConfig gauge_transform(const GaugeConfig& config,
                            const std::vector<Matrix>& site_rotations);

/// Evaluates t(U) for many configs of one shape; precomputes the plaquette
/// boundaries once and reuses scratch matrices between calls.
class ActionEvaluator {
 public:
  ActionEvaluator(const LatticeShape& shape, int matrix_dim);

  double evaluate(const GaugeConfig& config);

 private:
  LatticeShape shape_;
  std::vector<std::array<std::int64_t, 4>> boundary_edges_;  // flat edge ids
  std::vector<double> terms_;
  Matrix left_, right_;
};

}  // namespace latgauge

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
#include <vector>

#include "latgauge/lattice.hpp"

namespace latgauge {

/// Saddle evaluation of the partition integral against the limit
/// Gaussian: total log free energy K N^2 D(D-1) / (2 lambda^2).
double gaussian_free_energy(double lambda, int dim, std::int64_t site_count,
                            int matrix_dim);

/// Same quantity per plaquette-normalized N^2 unit: D(D-1)/(2 lambda^2);
/// 1/lambda^2 at D = 2.
double gaussian_free_energy_density(double lambda, int dim);

/// Endpoint-dominated weak-coupling asymptote
///   N^2 K (2 C(D,2)/lambda + (D-1)/2 * ln C(D,2)).
/// At D = 2 the log term vanishes and the value is exactly 2 N^2 K / lambda.
double weak_coupling_free_energy(double lambda, int dim, std::int64_t site_count,
                                 int matrix_dim);

/// Power with which the pushforward density vanishes toward its upper
/// endpoint t = C(D,2): (D-1)(N^2-1)K/2.
double weak_scaling_exponent(int dim, std::int64_t site_count, int matrix_dim);

struct LogZEstimate {
  double value = 0.0;
  double std_error = 0.0;
  /// Set when lambda < D(D-1): the integrand's tail dominates and the
  /// naive sample-mean estimator degrades.
  bool tail_warning = false;
};

/// ln Z estimated as the log of the sample mean of the Wilson weight over
/// Haar draws, with a delta-method standard error. Exponents are shifted
/// by their maximum before exponentiation.
LogZEstimate mc_log_partition(const LatticeShape& shape, int matrix_dim,
                              double lambda, std::int64_t n_samples,
                              std::uint64_t seed, int workers = 1);

/// Exact single-plaquette U(N) partition function
///   ln integral dU exp((2N/lambda) Re Tr U),
/// via the Toeplitz determinant det[ I_{j-k}(2N/lambda) ].
double one_plaquette_log_z(int matrix_dim, double lambda);

/// Large-N limit of one_plaquette_log_z / N^2, from a 1/N^2 fit over
/// N = 8..16.
double one_plaquette_free_energy(double lambda);

/// D = 2 reference free-energy density: 1/lambda^2 on the strong branch
/// (lambda >= 2), and the extrapolated one-plaquette value on the weak
/// branch (0 < lambda < 2). Continuous at lambda = 2.
double reference_free_energy_d2(double lambda);

/// Exact ln Z of the D = 2 U(1) theory on a K-plaquette torus: character
/// expansion ln sum_{n in Z} I_n(2/lambda)^K. Oracle for the Monte Carlo
/// estimator at N = 1.
double u1_torus_log_z(std::int64_t site_count, double lambda);

struct FreeEnergyReport {
  double lambda = 0.0;
  int dim = 0;
  int extent = 0;
  std::int64_t site_count = 0;
  int matrix_dim = 0;
  double f_gaussian = 0.0;   // totals (include the K N^2 prefactor)
  double f_weak = 0.0;
  double f_mc = 0.0;
  double f_mc_std_error = 0.0;
  double f_reference = 0.0;  // NaN outside D = 2
  std::vector<std::string> warnings;
};

FreeEnergyReport evaluate_free_energies(const LatticeShape& shape, int matrix_dim,
                                        double lambda, std::int64_t n_samples,
                                        std::uint64_t seed, int workers = 1);

}  // namespace latgauge

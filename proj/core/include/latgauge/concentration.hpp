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
#include <vector>

#include "latgauge/lattice.hpp"
#include "latgauge/moments.hpp"

namespace latgauge {

/// Number of logical RNG substreams a batch is split over. Sample i is
/// drawn from substream (i mod kSampleStreams), so the batch is identical
/// for every worker count.
inline constexpr int kSampleStreams = 256;

struct SampleParams {
  LatticeShape shape;
  int matrix_dim = 0;
  std::uint64_t seed = 0;
  std::int64_t n_samples = 0;
};

/// Raw i.i.d. draws of t under the product Haar measure (unrescaled).
struct SampleBatch {
  SampleParams params;
  std::vector<double> values;
};

SampleBatch sample_actions(const LatticeShape& shape, int matrix_dim,
                           std::int64_t n_samples, std::uint64_t seed,
                           int workers = 1);

/// Standard deviation sqrt(D(D-1)/(4K)) of the limit Gaussian of N*t.
double gaussian_limit_sigma(std::int64_t site_count, int dim);

/// Density sqrt(2K/(pi D(D-1))) exp(-2K t^2 / (D(D-1))) of the limit law.
double gaussian_limit_density(double t, std::int64_t site_count, int dim);

double gaussian_limit_cdf(double t, std::int64_t site_count, int dim);

/// Moments of the rescaled variable N*t for l = 1..l_max (l_max <= 8),
/// with batch-mean standard errors.
std::vector<MomentReport> empirical_moments(const SampleBatch& batch, int l_max);

/// Kolmogorov-Smirnov distance between the empirical CDF of N*t and the
/// limit Gaussian CDF. Requires at least 1000 samples.
double ks_distance(const SampleBatch& batch);

/// Uniform histogram of N*t. Out-of-range values are clamped into the
/// edge bins so counts always sum to the sample total and the density
/// integrates to 1.
struct Histogram {
  std::vector<double> edges;        // n_bins + 1 ascending
  std::vector<std::int64_t> counts; // n_bins
  std::int64_t total = 0;

  double bin_width() const { return edges[1] - edges[0]; }
  double density(int bin) const;
};

/// Default layout: `bins` uniform bins spanning +-5 limit-Gaussian
/// standard deviations.
Histogram histogram_rescaled(const SampleBatch& batch, int bins = 61);

}  // namespace latgauge

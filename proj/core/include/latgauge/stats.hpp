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

#include <functional>
#include <span>
#include <vector>

namespace latgauge {

/// Pairwise (cascade) summation; error grows like log(n) instead of n.
double pairwise_sum(std::span<const double> values);

struct MeanStdError {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Mean with a standard error from `n_batches` consecutive batch means
/// (unbiased for i.i.d. draws). Falls back to one value per batch when
/// there are fewer values than batches.
MeanStdError batch_mean_std_error(std::span<const double> values, int n_batches = 100);

/// One-sample Kolmogorov-Smirnov distance between the empirical CDF of
/// `values` and the continuous CDF `cdf`.
double ks_distance_to_cdf(std::span<const double> values,
                          const std::function<double(double)>& cdf);

}  // namespace latgauge

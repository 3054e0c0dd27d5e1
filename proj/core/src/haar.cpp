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

#include "latgauge/haar.hpp"

#include <cmath>
#include <stdexcept>

namespace latgauge {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
}

HaarSampler::HaarSampler(int dim) : dim_(dim), ginibre_(dim, dim), qr_(dim, dim) {
  if (dim < 1) throw std::invalid_argument("HaarSampler: dim must be >= 1");
}

void HaarSampler::sample_into(Matrix& out, Rng& rng) {
  if (dim_ == 1) {
    // U(1): normalized complex Gaussian, i.e. a uniform phase.
    double re = rng.normal();
    double im = rng.normal();
    double norm = std::hypot(re, im);
    while (norm == 0.0) {
      re = rng.normal();
      im = rng.normal();
      norm = std::hypot(re, im);
    }
    out.resize(1, 1);
    out(0, 0) = Complex(re / norm, im / norm);
    return;
  }

  for (int col = 0; col < dim_; ++col) {
    for (int row = 0; row < dim_; ++row) {
      const double re = rng.normal();
      const double im = rng.normal();
      ginibre_(row, col) = Complex(re * kInvSqrt2, im * kInvSqrt2);
    }
  }
  qr_.compute(ginibre_);
  out = qr_.householderQ();
  // Rotate each column by the phase of the matching diagonal entry of R;
  // without this the distribution depends on the QR sign convention.
  for (int col = 0; col < dim_; ++col) {
    const Complex diag = qr_.matrixQR()(col, col);
    const double mag = std::abs(diag);
    const Complex phase = mag > 0.0 ? diag / mag : Complex(1.0, 0.0);
    out.col(col) *= phase;
  }
}

Matrix sample_haar_unitary(int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("sample_haar_unitary: dim must be >= 1");
  HaarSampler sampler(dim);
  Matrix out;
  sampler.sample_into(out, rng);
  return out;
}

}  // namespace latgauge

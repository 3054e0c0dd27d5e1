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

#include "latgauge/matrix.hpp"
#include "latgauge/rng.hpp"

namespace latgauge {

/// Reusable sampler of Haar-distributed U(N) matrices.
///
/// A complex Ginibre matrix is orthonormalized with a Householder QR
/// factorization and the columns are rescaled by the phases of the
/// triangular factor's diagonal. The phase correction removes the sign
/// ambiguity of the factorization and makes the resulting distribution
/// exactly Haar (left- and right-invariant), not merely column-orthonormal.
///
/// Keeping the sampler alive across draws reuses the Ginibre and QR
/// workspaces, which matters in Monte Carlo loops.
class HaarSampler {
 public:
  explicit HaarSampler(int dim);

  int dim() const { return dim_; }

  /// Draws one Haar unitary into `out` (resized if needed).
  void sample_into(Matrix& out, Rng& rng);

 private:
  int dim_;
  Matrix ginibre_;
  Eigen::HouseholderQR<Matrix> qr_;
};

/// One-shot draw of a Haar-distributed U(dim) matrix. Throws
/// std::invalid_argument for dim < 1.
Matrix sample_haar_unitary(int dim, Rng& rng);

}  // namespace latgauge

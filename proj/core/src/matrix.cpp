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

#include "latgauge/matrix.hpp"

namespace latgauge {

double unitarity_residual(const Matrix& u) {
  const Matrix gram = u.adjoint() * u;
  const auto n = u.cols();
  return (gram - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols() || u.rows() < 1) return false;
  return unitarity_residual(u) <= tol;
}

}  // namespace latgauge

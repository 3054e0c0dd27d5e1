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

#include <complex>

#include <Eigen/Dense>

namespace latgauge {

using Complex = std::complex<double>;

/// Dense complex square matrix; group elements and gauge links are stored
/// in this representation.
using Matrix = Eigen::MatrixXcd;

/// Accepted departure from exact unitarity for link matrices, valid for
/// double precision accumulation up to dimension 64.
inline constexpr double kUnitarityTol = 1e-10;

/// Max-norm of U^dag U - I.
double unitarity_residual(const Matrix& u);

bool is_unitary(const Matrix& u, double tol = kUnitarityTol);

}  // namespace latgauge

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
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "latgauge/permutation.hpp"
#include "latgauge/rational.hpp"

namespace latgauge {

/// Degrees above this are refused outright: the Gram matrix is n! x n!.
inline constexpr int kMaxWeingartenDegree = 6;

/// Up to this degree the linear system is solved in exact rational
/// arithmetic; degrees 5 and 6 fall back to double precision.
inline constexpr int kExactWeingartenDegree = 4;

/// Monomial in matrix entries:
///   U_{row[k], col[k]} for k < n()  times  conj(U)_{row_conj[k], col_conj[k]}
/// for k < m(). Indices are 0-based and must lie in [0, dim).
struct IndexPattern {
  std::vector<int> row, col;            // U factors
  std::vector<int> row_conj, col_conj;  // U* factors

  int n() const { return static_cast<int>(row.size()); }
  int m() const { return static_cast<int>(row_conj.size()); }
};

/// Gram matrix G(sigma, tau) = N^{#cycles(sigma tau^{-1})} over S_n in
/// symmetric_group(n) order. Symmetric with positive entries.
Eigen::MatrixXd gram_matrix(int degree, int dim);

/// Haar-integral coefficients on U(N): the unique class function solving
///   sum_tau N^{#cycles(sigma tau^{-1})} Wg(tau) = [sigma == id].
///
/// Built once per (degree, dim) and cached behind a mutex; requires
/// dim >= degree (below that the Gram matrix is rank deficient and the
/// two-sided expansion changes meaning).
class WeingartenTable {
 public:
  static const WeingartenTable& get(int degree, int dim);

  /// Uncached build, mainly for tests and benchmarks.
  static WeingartenTable build(int degree, int dim);

  int degree() const { return degree_; }
  int dim() const { return dim_; }

  /// True when the table was solved in exact rational arithmetic.
  bool exact() const { return exact_; }

  double value(const Permutation& p) const;
  const Rational& value_rational(const Permutation& p) const;

  double value_by_type(const std::vector<int>& cycle_type) const;
  const Rational& value_rational_by_type(const std::vector<int>& cycle_type) const;

  /// Max-norm of G * wg - e_id, evaluated in double precision.
  double residual_inf_norm() const;

 private:
  int degree_ = 0;
  int dim_ = 0;
  bool exact_ = false;
  std::map<std::vector<int>, Rational> rational_values_;
  std::map<std::vector<int>, double> double_values_;
};

/// Exact Haar integral of the monomial described by `pattern` over U(dim):
///   sum_{sigma,tau} delta_{row,row_conj o sigma} delta_{col,col_conj o tau}
///     Wg(sigma tau^{-1}; dim).
/// Zero when n != m; real for every pattern (returned with zero imaginary
/// part). Requires n <= kMaxWeingartenDegree and dim >= n.
std::complex<double> haar_integral_exact(const IndexPattern& pattern, int dim);

/// Same value as an exact rational (degrees up to kExactWeingartenDegree).
Rational haar_integral_exact_rational(const IndexPattern& pattern, int dim);

/// Leading large-N expression: only sigma == tau terms, each with
/// coefficient 1/N^n. Exact for n = 1; the gap to the exact integral is
/// O(1/N^{n+1}).
std::complex<double> haar_integral_leading(const IndexPattern& pattern, int dim);

}  // namespace latgauge

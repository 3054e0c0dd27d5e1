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

namespace latgauge {

/// Element of the symmetric group S_n in one-line notation.
class Permutation {
 public:
  /// Identity on {0, ..., n-1}.
  explicit Permutation(int degree);

  /// From images; must be a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  /// (this o other)(k) = this(other(k)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  int cycle_count() const;

  /// Cycle lengths sorted descending; permutations share a conjugacy class
  /// iff their cycle types are equal.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All n! elements of S_n in lexicographic order of their image vectors;
/// the identity comes first.
std::vector<Permutation> symmetric_group(int degree);

std::int64_t factorial(int n);

}  // namespace latgauge

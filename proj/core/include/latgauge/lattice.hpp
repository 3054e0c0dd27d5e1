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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "latgauge/haar.hpp"
#include "latgauge/matrix.hpp"
#include "latgauge/rng.hpp"

namespace latgauge {

/// Periodic hypercubic lattice with the same extent in every direction.
///
/// Sites are indexed row-major with coordinate 0 running fastest. Extents
/// below 2 are rejected: at extent 1 a plaquette would traverse one edge
/// twice and the edge-multiplicity bookkeeping used by the moment engine
/// assumes the four boundary edges are distinct.
struct LatticeShape {
  int dim = 0;     // D >= 2
  int extent = 0;  // L >= 2

  LatticeShape(int dim_, int extent_);

  std::int64_t site_count() const;       // K = L^D
  std::int64_t edge_count() const;       // K * D
  std::int64_t plaquette_count() const;  // K * D(D-1)/2
};

/// Directed edge (site, mu): from `site` one step in direction `mu`.
struct EdgeId {
  std::int64_t site = 0;
  int mu = 0;

  friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

/// Elementary square loop at `site` in the (mu, nu) coordinate plane,
/// mu < nu.
struct PlaquetteId {
  std::int64_t site = 0;
  int mu = 0;
  int nu = 0;

  friend bool operator==(const PlaquetteId&, const PlaquetteId&) = default;
};

std::vector<int> site_coords(const LatticeShape& shape, std::int64_t site);
std::int64_t site_index(const LatticeShape& shape, std::span<const int> coords);

/// Periodic shift by one step in direction mu.
std::int64_t neighbor_site(const LatticeShape& shape, std::int64_t site, int mu);

/// Flat edge index: site * D + mu.
std::int64_t edge_index(const LatticeShape& shape, const EdgeId& edge);

/// All K * D(D-1)/2 plaquettes, ordered by (site, mu, nu).
std::vector<PlaquetteId> enumerate_plaquettes(const LatticeShape& shape);

/// One factor of a plaquette holonomy: which link, and whether it enters
/// conjugate-transposed.
struct PlaquetteEdge {
  EdgeId edge;
  bool dagger = false;
};

/// The four boundary factors in trace order,
///   U^dag_{x,nu} U^dag_{x+nu,mu} U_{x+mu,nu} U_{x,mu}.
std::array<PlaquetteEdge, 4> plaquette_boundary(const LatticeShape& shape,
                                                const PlaquetteId& p);

/// Assignment of one unitary link matrix to every directed edge.
class GaugeConfig {
 public:
  GaugeConfig(LatticeShape shape, int matrix_dim);

  const LatticeShape& shape() const { return shape_; }
  int matrix_dim() const { return matrix_dim_; }

  Matrix& link(const EdgeId& e) { return links_[edge_index(shape_, e)]; }
  const Matrix& link(const EdgeId& e) const { return links_[edge_index(shape_, e)]; }

  std::vector<Matrix>& links() { return links_; }
  const std::vector<Matrix>& links() const { return links_; }

 private:
  LatticeShape shape_;
  int matrix_dim_;
  std::vector<Matrix> links_;  // edge_index order
};

/// Every link set to the identity matrix.
GaugeConfig identity_config(const LatticeShape& shape, int matrix_dim);

/// Every link drawn independently from the Haar measure.
GaugeConfig random_config(const LatticeShape& shape, int matrix_dim, RngStream stream);

/// Redraws all links of an existing config in place (no allocation in the
/// steady state); links are filled in edge_index order.
void redraw_links(GaugeConfig& config, HaarSampler& sampler, Rng& rng);

}  // namespace latgauge

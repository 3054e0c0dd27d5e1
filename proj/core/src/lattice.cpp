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

#include "latgauge/lattice.hpp"

#include <stdexcept>

namespace latgauge {

LatticeShape::LatticeShape(int dim_, int extent_) : dim(dim_), extent(extent_) {
  if (dim < 2) throw std::invalid_argument("LatticeShape: dim must be >= 2");
  if (extent < 2) throw std::invalid_argument("LatticeShape: extent must be >= 2");
  // Keep K*D and the link storage comfortably in range.
  if (site_count() > (std::int64_t{1} << 40)) {
    throw std::invalid_argument("LatticeShape: site count too large");
  }
}

std::int64_t LatticeShape::site_count() const {
  std::int64_t k = 1;
  for (int d = 0; d < dim; ++d) k *= extent;
  return k;
}

std::int64_t LatticeShape::edge_count() const { return site_count() * dim; }

std::int64_t LatticeShape::plaquette_count() const {
  return site_count() * dim * (dim - 1) / 2;
}

std::vector<int> site_coords(const LatticeShape& shape, std::int64_t site) {
  std::vector<int> coords(shape.dim);
  for (int d = 0; d < shape.dim; ++d) {
    coords[d] = static_cast<int>(site % shape.extent);
    site /= shape.extent;
  }
  return coords;
}

std::int64_t site_index(const LatticeShape& shape, std::span<const int> coords) {
  std::int64_t site = 0;
  for (int d = shape.dim - 1; d >= 0; --d) {
    site = site * shape.extent + coords[d];
  }
  return site;
}

std::int64_t neighbor_site(const LatticeShape& shape, std::int64_t site, int mu) {
  std::int64_t stride = 1;
  for (int d = 0; d < mu; ++d) stride *= shape.extent;
  const int coord = static_cast<int>((site / stride) % shape.extent);
  if (coord + 1 == shape.extent) {
    return site - stride * (shape.extent - 1);
  }
  return site + stride;
}

std::int64_t edge_index(const LatticeShape& shape, const EdgeId& edge) {
  return edge.site * shape.dim + edge.mu;
}

std::vector<PlaquetteId> enumerate_plaquettes(const LatticeShape& shape) {
  std::vector<PlaquetteId> plaquettes;
  plaquettes.reserve(static_cast<std::size_t>(shape.plaquette_count()));
  const std::int64_t sites = shape.site_count();
  for (std::int64_t site = 0; site < sites; ++site) {
    for (int mu = 0; mu < shape.dim; ++mu) {
      for (int nu = mu + 1; nu < shape.dim; ++nu) {
        plaquettes.push_back({site, mu, nu});
      }
    }
  }
  return plaquettes;
}

std::array<PlaquetteEdge, 4> plaquette_boundary(const LatticeShape& shape,
                                                const PlaquetteId& p) {
  const std::int64_t x_mu = neighbor_site(shape, p.site, p.mu);
  const std::int64_t x_nu = neighbor_site(shape, p.site, p.nu);
  return {{
      {{p.site, p.nu}, true},
      {{x_nu, p.mu}, true},
      {{x_mu, p.nu}, false},
      {{p.site, p.mu}, false},
  }};
}

GaugeConfig::GaugeConfig(LatticeShape shape, int matrix_dim)
    : shape_(shape), matrix_dim_(matrix_dim) {
  if (matrix_dim < 1) throw std::invalid_argument("GaugeConfig: matrix_dim must be >= 1");
  links_.assign(static_cast<std::size_t>(shape_.edge_count()),
                Matrix::Identity(matrix_dim, matrix_dim));
}

GaugeConfig identity_config(const LatticeShape& shape, int matrix_dim) {
  return GaugeConfig(shape, matrix_dim);
}

GaugeConfig random_config(const LatticeShape& shape, int matrix_dim, RngStream stream) {
  GaugeConfig config(shape, matrix_dim);
  Rng rng(stream);
  HaarSampler sampler(matrix_dim);
  redraw_links(config, sampler, rng);
  return config;
}

void redraw_links(GaugeConfig& config, HaarSampler& sampler, Rng& rng) {
  for (Matrix& link : config.links()) {
    sampler.sample_into(link, rng);
  }
}

}  // namespace latgauge

// Copyright 2026 The Haco Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HACO_TORUS_ORACLE_HPP_
#define HACO_TORUS_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "haco/automorphism.hpp"
#include "haco/spectrum.hpp"
#include "haco/torus_point.hpp"

namespace haco {

// Samples of a function on the uniform N^dim grid of the torus. The
// quadrature measure puts mass N^{-dim} on every node, so grid integrals
// approximate integrals against the normalized Haar measure. Axis 0 is the
// slowest index.
struct GridFunction {
  int dim = 1;
  int n = 2;  // nodes per axis, power of two >= 2
  std::vector<Complex> values;

  std::size_t flat(const std::vector<std::int64_t>& coords) const;
};

constexpr double kInfiniteP = -1.0;  // lp_norm(p = kInfiniteP) is the sup norm

// values(k) = sum_n s(n) exp(2 pi i n.k / N). Requires every key component
// |n_i| < N/2 (alias-free) and a ZLex spectrum.
GridFunction synthesize(const Spectrum& s, int n);

// Grid Fourier coefficients on the centered index box; inverse of
// synthesize up to roundoff whenever the alias-free condition held. Exact
// zeros are dropped, everything else (including transform noise) is kept.
Spectrum analyze(const GridFunction& g);

// (N^{-dim} sum |values|^p)^{1/p}; p = kInfiniteP gives max |values|.
// The grid sup is a lower estimate of the true sup norm.
double lp_norm(const GridFunction& g, double p);

struct SpatialTerm {
  Complex weight;
  UnimodMatrix matrix;
};

// result(k) = sum_u weight_u * g(M_u k mod N). Exact on the grid: a
// unimodular integer matrix permutes the uniform grid nodes.
GridFunction spatial_hausdorff(const std::vector<SpatialTerm>& terms,
                               const GridFunction& g);

// ||P_minus q||_1 + ||P_plus q||_1 on the grid, for real polynomials (the
// spectrum must be conjugate-symmetric to 1e-12; NOT_REAL otherwise).
double h1r_norm(const Spectrum& s, int n);

// Certificate value ||f||_inf + ||g||_inf (grid sup norms) attached to the
// decomposition phi = f + hilbert-conjugate(g). An upper-bound certificate
// as computed on grid N; the grid sup itself underestimates the true sup.
double bmo_upper(const Spectrum& f, const Spectrum& g, int n);

// Duality lower bound for the analytic-BMO norm of phi (supported in the
// cone): max over test polynomials f of |<f, phi>| / (||P_-f||_1 +
// ||P_+f||_1), with deterministic delta candidates at the support of phi
// plus `trials` seeded random polynomials. Monotone nondecreasing in trials.
double bmoa_lower(const Spectrum& phi, int n, int trials, std::uint64_t seed);

}  // namespace haco

#endif  // HACO_TORUS_ORACLE_HPP_

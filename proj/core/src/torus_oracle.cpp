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

#include "haco/torus_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "haco/sampling.hpp"

namespace haco {

namespace {

bool is_pow2(int n) { return n >= 2 && (n & (n - 1)) == 0; }

std::size_t pow_size(int n, int dim) {
  std::size_t total = 1;
  for (int i = 0; i < dim; ++i) total *= static_cast<std::size_t>(n);
  return total;
}

// Iterative radix-2 transform; `tw` holds exp(-2 pi i j / n) for j < n/2.
// inverse = true conjugates the twiddles (no scaling either way).
void fft_line(Complex* x, int n, const std::vector<Complex>& tw,
              bool inverse) {
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const int half = len >> 1;
    const int step = n / len;
    for (int start = 0; start < n; start += len) {
      for (int j = 0; j < half; ++j) {
        Complex w = tw[static_cast<std::size_t>(j) * step];
        if (inverse) w = std::conj(w);
        const Complex u = x[start + j];
        const Complex v = x[start + j + half] * w;
        x[start + j] = u + v;
        x[start + j + half] = u - v;
      }
    }
  }
}

std::vector<Complex> twiddles(int n) {
  std::vector<Complex> tw(n / 2);
  for (int j = 0; j < n / 2; ++j)
    tw[j] = std::polar(1.0, -2.0 * std::numbers::pi * j / n);
  return tw;
}

// In-place transform along every axis of the dim-dimensional array.
void fft_grid(std::vector<Complex>& values, int dim, int n, bool inverse) {
  const auto tw = twiddles(n);
  std::vector<Complex> line(n);
  std::size_t stride = pow_size(n, dim - 1);  // axis 0 stride
  for (int axis = 0; axis < dim; ++axis) {
    const std::size_t block = stride * n;  // span of one axis run
    const std::size_t total = values.size();
    for (std::size_t base = 0; base < total; base += block) {
      for (std::size_t offset = 0; offset < stride; ++offset) {
        Complex* first = values.data() + base + offset;
        for (int j = 0; j < n; ++j) line[j] = first[j * stride];
        fft_line(line.data(), n, tw, inverse);
        for (int j = 0; j < n; ++j) first[j * stride] = line[j];
      }
    }
    stride /= n;
  }
}

void check_grid_args(const GroupDescriptor& group, int n) {
  require(group.kind == GroupKind::ZLex, errc::group_mismatch,
          "torus grids exist for z_lex groups only, got " + group.to_string());
  require(is_pow2(n), errc::invalid_argument,
          "grid size must be a power of two >= 2");
}

void check_nyquist(const Spectrum& s, int n) {
  for (const auto& [chi, c] : s.terms()) {
    for (std::int64_t v : chi.z_lex_coords()) {
      require(std::llabs(v) < n / 2, errc::aliasing,
              "character " + chi.to_string() + " aliases on an N=" +
                  std::to_string(n) + " grid");
    }
  }
}

}  // namespace

std::size_t GridFunction::flat(const std::vector<std::int64_t>& coords) const {
  std::size_t idx = 0;
  for (int i = 0; i < dim; ++i)
    idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(coords[i]);
  return idx;
}

GridFunction synthesize(const Spectrum& s, int n) {
  check_grid_args(s.group(), n);
  check_nyquist(s, n);
  const int dim = s.group().dim;
  GridFunction g{dim, n, std::vector<Complex>(pow_size(n, dim), {0.0, 0.0})};

  // Scatter each coefficient into its (unique, alias-free) frequency bin,
  // then run the unnormalized inverse transform.
  std::vector<std::int64_t> bin(dim);
  for (const auto& [chi, c] : s.terms()) {
    const auto& coords = chi.z_lex_coords();
    for (int i = 0; i < dim; ++i) bin[i] = ((coords[i] % n) + n) % n;
    g.values[g.flat(bin)] += c;
  }
  fft_grid(g.values, dim, n, /*inverse=*/true);
  return g;
}

Spectrum analyze(const GridFunction& g) {
  require(is_pow2(g.n), errc::invalid_argument, "grid size must be 2^k >= 2");
  require(g.values.size() == pow_size(g.n, g.dim), errc::invalid_argument,
          "grid value count does not match n^dim");
  std::vector<Complex> freq = g.values;
  fft_grid(freq, g.dim, g.n, /*inverse=*/false);
  const double scale = 1.0 / static_cast<double>(pow_size(g.n, g.dim));

  // Walk the centered box in lexicographic (canonical key) order so map
  // insertion stays O(1) with an end hint.
  Spectrum::TermMap terms;
  const std::int64_t lo = -g.n / 2;
  const std::int64_t hi = g.n / 2 - 1;
  std::vector<std::int64_t> cur(g.dim, lo);
  std::vector<std::int64_t> bin(g.dim);
  while (true) {
    for (int i = 0; i < g.dim; ++i) bin[i] = ((cur[i] % g.n) + g.n) % g.n;
    const Complex c = freq[g.flat(bin)] * scale;
    if (c.real() != 0.0 || c.imag() != 0.0)
      terms.emplace_hint(terms.end(), Character::z_lex(cur), c);
    int axis = g.dim - 1;
    while (axis >= 0 && cur[axis] == hi) {
      cur[axis] = lo;
      --axis;
    }
    if (axis < 0) break;
    ++cur[axis];
  }
  return Spectrum::from_term_map(GroupDescriptor::z_lex(g.dim),
                                 std::move(terms));
}

double lp_norm(const GridFunction& g, double p) {
  if (p == kInfiniteP || std::isinf(p)) {
    double worst = 0.0;
    for (const Complex& v : g.values) worst = std::max(worst, std::abs(v));
    return worst;
  }
  require(p >= 1.0 && std::isfinite(p), errc::invalid_p,
          "p must lie in [1, inf]");
  const double mass = 1.0 / static_cast<double>(g.values.size());
  double sum = 0.0;
  if (p == 1.0) {
    for (const Complex& v : g.values) sum += std::abs(v);
  } else if (p == 2.0) {
    for (const Complex& v : g.values) sum += std::norm(v);
  } else {
    for (const Complex& v : g.values) sum += std::pow(std::abs(v), p);
  }
  return std::pow(sum * mass, 1.0 / p);
}

GridFunction spatial_hausdorff(const std::vector<SpatialTerm>& terms,
                               const GridFunction& g) {
  GridFunction out{g.dim, g.n,
                   std::vector<Complex>(g.values.size(), {0.0, 0.0})};
  std::vector<std::int64_t> cur(g.dim, 0);
  std::vector<std::int64_t> image(g.dim);
  for (const SpatialTerm& term : terms) {
    require(term.matrix.dim == g.dim, errc::dim_mismatch,
            "spatial matrix dim differs from grid dim");
    std::fill(cur.begin(), cur.end(), 0);
    std::size_t flat = 0;
    while (true) {
      for (int i = 0; i < g.dim; ++i) {
        std::int64_t acc = 0;
        for (int j = 0; j < g.dim; ++j) acc += term.matrix.at(i, j) * cur[j];
        image[i] = ((acc % g.n) + g.n) % g.n;
      }
      out.values[flat] += term.weight * g.values[g.flat(image)];
      int axis = g.dim - 1;
      while (axis >= 0 && cur[axis] == g.n - 1) {
        cur[axis] = 0;
        --axis;
      }
      if (axis < 0) break;
      ++cur[axis];
      ++flat;
    }
  }
  return out;
}

double h1r_norm(const Spectrum& s, int n) {
  check_grid_args(s.group(), n);
  // Real-valued synthesis means conjugate-symmetric coefficients.
  for (const auto& [chi, c] : s.terms()) {
    const Complex mirrored = s.at(negate(chi));
    require(std::abs(std::conj(c) - mirrored) <= 1e-12, errc::not_real,
            "spectrum is not conjugate-symmetric at " + chi.to_string());
  }
  const double minus = lp_norm(synthesize(project(s, Part::minus), n), 1.0);
  const double plus = lp_norm(synthesize(project(s, Part::plus), n), 1.0);
  return minus + plus;
}

double bmo_upper(const Spectrum& f, const Spectrum& g, int n) {
  return lp_norm(synthesize(f, n), kInfiniteP) +
         lp_norm(synthesize(g, n), kInfiniteP);
}

namespace {

double h1r_style_norm(const Spectrum& f, int n) {
  return lp_norm(synthesize(project(f, Part::minus), n), 1.0) +
         lp_norm(synthesize(project(f, Part::plus), n), 1.0);
}

}  // namespace

double bmoa_lower(const Spectrum& phi, int n, int trials, std::uint64_t seed) {
  check_grid_args(phi.group(), n);
  const SupportCheck support = is_supported_in(phi, in_lex_cone);
  require(support.ok, errc::not_analytic,
          "spectrum leaves the cone at " +
              (support.witness ? support.witness->to_string() : "?"));
  if (phi.empty()) return 0.0;

  double best = 0.0;
  auto consider = [&](const Spectrum& f) {
    const double denom = h1r_style_norm(f, n);
    if (denom <= 0.0) return;
    best = std::max(best, std::abs(pairing(f, phi)) / denom);
  };

  // Deterministic candidates: the characters of the support itself.
  for (const auto& [chi, c] : phi.terms()) {
    Spectrum delta(phi.group());
    delta.set(chi, {1.0, 0.0});
    consider(delta);
  }

  // Seeded random test polynomials: support uniform in a centered box,
  // complex Gaussian coefficients.
  const int dim = phi.group().dim;
  const std::int64_t radius = std::min<std::int64_t>(8, n / 2 - 1);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Spectrum f(phi.group());
    const int terms = static_cast<int>(rng.range(1, 12));
    for (int i = 0; i < terms; ++i) {
      std::vector<std::int64_t> coords(dim);
      for (auto& v : coords) v = rng.range(-radius, radius);
      f.add(Character::z_lex(std::move(coords)), rng.complex_gaussian());
    }
    consider(f);
  }
  return best;
}

}  // namespace haco

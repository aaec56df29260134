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

#include <benchmark/benchmark.h>

#include "haco/dirichlet.hpp"
#include "haco/hausdorff.hpp"
#include "haco/sampling.hpp"
#include "haco/torus_oracle.hpp"

namespace {

using namespace haco;

Spectrum random_spectrum(Rng& rng, int dim, std::int64_t radius, int terms) {
  Spectrum s(GroupDescriptor::z_lex(dim));
  for (int i = 0; i < terms; ++i) {
    std::vector<std::int64_t> v(dim);
    for (auto& x : v) x = rng.range(-radius, radius);
    s.add(Character::z_lex(std::move(v)), rng.complex_gaussian());
  }
  return s;
}

void BM_SynthesizeAnalyzeRoundtrip(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng(1);
  const Spectrum s = random_spectrum(rng, dim, 8, 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze(synthesize(s, 64)));
  }
}
BENCHMARK(BM_SynthesizeAnalyzeRoundtrip)->Arg(1)->Arg(2)->Arg(3);

void BM_SpatialHausdorff3d(benchmark::State& state) {
  Rng rng(2);
  const Spectrum s = random_spectrum(rng, 3, 8, 20);
  const GridFunction g = synthesize(s, 64);
  std::vector<SpatialTerm> terms;
  for (int t = 0; t < 5; ++t) {
    terms.push_back({rng.complex_gaussian(),
                     make_unimod_matrix(3, {1, 0, 0, 1, 1, 0, 0, 1, 1})});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(spatial_hausdorff(terms, g));
  }
}
BENCHMARK(BM_SpatialHausdorff3d);

void BM_OperatorApply(benchmark::State& state) {
  Rng rng(3);
  const int dim = 3;
  std::vector<OperatorTerm> terms;
  for (int t = 0; t < 5; ++t) {
    terms.push_back({rng.complex_gaussian(),
                     make_lower_unitriangular(dim, {1, -1, 2})});
  }
  const HausdorffOperator h = HausdorffOperator::from_dual_terms(
      GroupDescriptor::z_lex(dim), std::move(terms));
  const Spectrum s = random_spectrum(rng, dim, 8, 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply(h, s));
  }
}
BENCHMARK(BM_OperatorApply);

void BM_SigmaOperator(benchmark::State& state) {
  Rng rng(4);
  DirichletPolynomial d;
  // 5-smooth keys with bounded exponents keep every preimage below n_max
  for (std::int64_t a = 0; a <= 3; ++a)
    for (std::int64_t b = 0; b <= 2; ++b)
      for (std::int64_t c = 0; c <= 2; ++c) {
        std::int64_t n = 1;
        for (int i = 0; i < a; ++i) n *= 2;
        for (int i = 0; i < b; ++i) n *= 3;
        for (int i = 0; i < c; ++i) n *= 5;
        d.add(n, rng.complex_gaussian());
      }
  const std::vector<SigmaWeight> weights = {{{{1, 1}}, {0.5, 0.0}},
                                            {{{2, 1}}, {0.25, 0.0}},
                                            {{}, {0.25, 0.0}}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigma_operator(weights, d));
  }
}
BENCHMARK(BM_SigmaOperator);

void BM_H1rNorm4096(benchmark::State& state) {
  Rng rng(5);
  Spectrum q(GroupDescriptor::z_lex(1));
  for (int i = 0; i < 12; ++i) {
    const std::int64_t k = rng.range(1, 32);
    const Complex c = rng.complex_gaussian();
    q.add(Character::z_lex({k}), c);
    q.add(Character::z_lex({-k}), std::conj(c));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(h1r_norm(q, 4096));
  }
}
BENCHMARK(BM_H1rNorm4096);

}  // namespace

BENCHMARK_MAIN();

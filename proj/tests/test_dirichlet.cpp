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

#include "haco/dirichlet.hpp"

#include <cmath>
#include <thread>

#include "doctest.h"
#include "haco/hausdorff.hpp"
#include "haco/sampling.hpp"

using namespace haco;

namespace {

DirichletPolynomial random_polynomial(Rng& rng, std::int64_t max_key,
                                      int max_terms) {
  DirichletPolynomial d;
  const int n = static_cast<int>(rng.range(1, max_terms));
  for (int i = 0; i < n; ++i)
    d.add(rng.range(1, max_key), rng.complex_gaussian());
  return d;
}

std::vector<SigmaWeight> random_sigma_weights(Rng& rng) {
  std::vector<SigmaWeight> out;
  const int n = static_cast<int>(rng.range(1, 3));
  for (int i = 0; i < n; ++i) {
    SparseSeq u;
    for (std::int32_t j = 1; j <= 3; ++j)
      if (rng.flip()) u.push_back({j, 1});
    out.push_back({canonical_sparse(std::move(u)), rng.complex_gaussian()});
  }
  return out;
}

}  // namespace

TEST_CASE("factorize gives sparse prime exponents over prime indices") {
  CHECK(factorize(6) == Character::z_inf_lex({{1, 1}, {2, 1}}));
  CHECK(factorize(1) == Character::z_inf_lex({}));
  CHECK(factorize(12) == Character::z_inf_lex({{1, 2}, {2, 1}}));
  // a large prime lands on a single deep index
  const Character big = factorize(999983);
  CHECK(big.sparse_entries().size() == 1);
  CHECK(big.sparse_entries().front().value == 1);
  CHECK(from_multi_index(big) == 999983);

  CHECK_THROWS_WITH_AS(factorize(0), doctest::Contains("OUT_OF_RANGE"), Error);
  CHECK_THROWS_AS(factorize(kDefaultNMax + 1), Error);
}

TEST_CASE("factorize and from_multi_index are inverse bijections") {
  Rng rng(1000);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t n = rng.range(1, kDefaultNMax);
    CHECK(from_multi_index(factorize(n)) == n);
  }
  CHECK_THROWS_AS(from_multi_index(Character::z_inf_lex({{1, 60}})), Error);
  CHECK_THROWS_AS(from_multi_index(Character::z_inf_lex({{1, -1}})), Error);
}

TEST_CASE("bohr lift moves coefficients to exponent sequences") {
  DirichletPolynomial d;
  d.set(6, {1.0, 0.0});
  const Spectrum lifted = bohr_lift(d);
  CHECK(lifted.size() == 1);
  CHECK(lifted.at(Character::z_inf_lex({{1, 1}, {2, 1}})) == Complex{1.0, 0.0});

  DirichletPolynomial constant;
  constant.set(1, {0.5, -2.0});
  CHECK(bohr_lift(constant).at(Character::identity(
            GroupDescriptor::z_inf_lex())) == Complex{0.5, -2.0});

  CHECK(bohr_lift(DirichletPolynomial()).empty());

  Rng rng(1001);
  for (int i = 0; i < 40; ++i) {
    const DirichletPolynomial p = random_polynomial(rng, 100000, 10);
    CHECK(is_supported_in(bohr_lift(p), in_nonneg_orthant).ok);
  }
}

TEST_CASE("sigma kernel action on coefficients") {
  // u = (1): sigma_u((1,1)) = (1,0), so b(6) picks up a(2)
  const std::vector<SigmaWeight> weights = {{{{1, 1}}, {1.0, 0.0}}};
  DirichletPolynomial d;
  d.set(2, {1.0, 0.0});
  const DirichletPolynomial out = sigma_operator(weights, d);
  CHECK(out.at(6) == Complex{1.0, 0.0});
  CHECK(out.at(4) == Complex{0.0, 0.0});

  // the zero sequence is the identity kernel
  const std::vector<SigmaWeight> id_weights = {{{}, {0.25, -1.0}}};
  DirichletPolynomial p;
  p.set(10, {2.0, 0.0});
  p.set(3, {0.0, 1.0});
  const DirichletPolynomial scaled = sigma_operator(id_weights, p);
  CHECK(scaled.at(10) == Complex{0.25, -1.0} * Complex{2.0, 0.0});
  CHECK(scaled.at(3) == Complex{0.25, -1.0} * Complex{0.0, 1.0});

  // exponent growth past n_max is an error, not a silent wrap
  const std::vector<SigmaWeight> grow = {{{{1, 3}}, {1.0, 0.0}}};
  DirichletPolynomial big;
  big.set(std::int64_t{1} << 13, {1.0, 0.0});
  CHECK_THROWS_WITH_AS(sigma_operator(grow, big),
                       doctest::Contains("OUT_OF_RANGE"), Error);
}

TEST_CASE("root rescaling: golden table and degree structure") {
  const std::vector<RootWeight> weights = {{1, {0.5, 0.0}}, {2, {0.5, 0.0}}};
  DirichletPolynomial d;
  d.set(2, {1.0, 0.0});
  d.set(4, {1.0, 0.0});
  const DirichletPolynomial out = root_rescale_operator(weights, d);
  CHECK(out.at(4) == Complex{1.0, 0.0});
  CHECK(out.at(2) == Complex{0.5, 0.0});

  DirichletPolynomial ones;
  ones.set(1, {1.0, 0.0});
  CHECK(root_rescale_operator(weights, ones).at(1) == Complex{1.0, 0.0});

  // keys of the output are exact powers of input keys; keys stay below the
  // cube root of n_max so every produced power is representable
  Rng rng(1002);
  for (int i = 0; i < 25; ++i) {
    const DirichletPolynomial p = random_polynomial(rng, 90, 6);
    const std::vector<RootWeight> w = {{2, {1.0, 0.0}}, {3, {0.0, 1.0}}};
    const DirichletPolynomial r = root_rescale_operator(w, p);
    for (const auto& [n, c] : r.coeffs()) {
      bool explained = false;
      for (const auto& [m, a] : p.coeffs()) {
        if (n == m * m || n == m * m * m) explained = true;
      }
      CHECK(explained);
    }
  }

  const std::vector<RootWeight> square = {{2, {1.0, 0.0}}};
  DirichletPolynomial overflow;
  overflow.set(2000, {1.0, 0.0});
  CHECK_THROWS_WITH_AS(root_rescale_operator(square, overflow),
                       doctest::Contains("OUT_OF_RANGE"), Error);
}

TEST_CASE("evaluation and boundary sup estimates") {
  DirichletPolynomial d;
  d.set(1, {1.0, 0.0});
  d.set(2, {1.0, 0.0});
  CHECK(std::abs(evaluate(d, {1.0, 0.0}) - Complex{1.5, 0.0}) <= 1e-15);
  CHECK(evaluate(DirichletPolynomial(), {2.0, 1.0}) == Complex{0.0, 0.0});

  DirichletPolynomial two;
  two.set(2, {1.0, 0.0});
  CHECK(std::abs(std::abs(evaluate(two, {0.0, 17.25})) - 1.0) <= 1e-12);
  CHECK(sup_estimate(two, 101, 10.0) == doctest::Approx(1.0).epsilon(1e-12));

  DirichletPolynomial constant;
  constant.set(1, {3.0, 0.0});
  CHECK(sup_estimate(constant, 1, 0.0) == doctest::Approx(3.0));

  Rng rng(1003);
  for (int i = 0; i < 20; ++i) {
    const DirichletPolynomial p = random_polynomial(rng, 500, 8);
    CHECK(sup_estimate(p, 400, 50.0) <=
          l1_coeff(bohr_lift(p)) * (1 + 1e-12));
  }
}

TEST_CASE("prime coefficient mass") {
  DirichletPolynomial d;
  d.set(2, {0.3, 0.0});
  d.set(3, {0.0, -0.4});
  d.set(4, {9.0, 0.0});
  CHECK(bohr_prime_sum(d) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(bohr_prime_sum(DirichletPolynomial()) == 0.0);

  DirichletPolynomial primes;
  primes.set(2, {1.0, 0.0});
  primes.set(3, {1.0, 0.0});
  primes.set(5, {1.0, 0.0});
  CHECK(bohr_prime_sum(primes) == doctest::Approx(3.0));
}

TEST_CASE("the prime table is safe to hit from several threads") {
  std::vector<std::thread> workers;
  std::vector<int> bad(4, 0);
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([w, &bad] {
      Rng rng(9000 + static_cast<std::uint64_t>(w));
      for (int i = 0; i < 2000; ++i) {
        const std::int64_t n = rng.range(1, kDefaultNMax);
        if (from_multi_index(factorize(n)) != n) ++bad[w];
      }
    });
  }
  for (auto& t : workers) t.join();
  for (int w = 0; w < 4; ++w) CHECK(bad[w] == 0);
}

TEST_CASE("the lift conjugates the sigma kernel into the operator core") {
  Rng rng(1004);
  int done = 0;
  while (done < 25) {
    const DirichletPolynomial d = random_polynomial(rng, 10'000, 8);
    const std::vector<SigmaWeight> weights = random_sigma_weights(rng);
    DirichletPolynomial out(d.n_max());
    try {
      out = sigma_operator(weights, d);
    } catch (const Error& e) {
      if (e.code() == errc::out_of_range) continue;
      throw;
    }
    std::vector<OperatorTerm> terms;
    for (const SigmaWeight& w : weights)
      terms.push_back({w.weight, make_sigma_u(w.u)});
    const HausdorffOperator h = HausdorffOperator::from_dual_terms(
        GroupDescriptor::z_inf_lex(), std::move(terms));
    CHECK(max_term_difference(bohr_lift(out), apply(h, bohr_lift(d))) <=
          1e-12);

    // orthant safety and the weak prime-sum bound
    CHECK(is_supported_in(bohr_lift(out), in_nonneg_orthant).ok);
    double mass = 0.0;
    for (const SigmaWeight& w : weights) mass += std::abs(w.weight);
    CHECK(bohr_prime_sum(out) <= mass * l1_coeff(bohr_lift(d)) + 1e-12);
    ++done;
  }
}

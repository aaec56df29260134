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

#include "haco/hausdorff.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "haco/sampling.hpp"

using namespace haco;

namespace {

Spectrum random_zlex_spectrum(Rng& rng, int dim, int max_terms) {
  Spectrum s(GroupDescriptor::z_lex(dim));
  const int n = static_cast<int>(rng.range(1, max_terms));
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> v(dim);
    for (auto& x : v) x = rng.range(-8, 8);
    s.add(Character::z_lex(std::move(v)), rng.complex_gaussian());
  }
  return s;
}

HausdorffOperator random_unitriangular_operator(Rng& rng, int dim,
                                                bool real_weights) {
  const int count = static_cast<int>(rng.range(1, 4));
  std::vector<OperatorTerm> terms;
  for (int t = 0; t < count; ++t) {
    std::vector<std::int64_t> sub(static_cast<std::size_t>(dim) * (dim - 1) /
                                  2);
    for (auto& x : sub) x = rng.range(-2, 2);
    const Complex w = real_weights ? Complex{rng.gaussian(), 0.0}
                                   : rng.complex_gaussian();
    terms.push_back({w, make_lower_unitriangular(dim, std::move(sub))});
  }
  return HausdorffOperator::from_dual_terms(GroupDescriptor::z_lex(dim),
                                            std::move(terms));
}

}  // namespace

TEST_CASE("apply pulls support back through the dual maps") {
  const auto g = GroupDescriptor::z_lex(2);
  const HausdorffOperator h = HausdorffOperator::from_dual_terms(
      g, {{{0.5, 0.0}, make_lower_unitriangular(2, {0})},
          {{0.5, 0.0}, make_lower_unitriangular(2, {1})}});
  Spectrum s(g);
  s.set(Character::z_lex({1, 0}), {1.0, 0.0});
  const Spectrum out = apply(h, s);
  CHECK(out.size() == 2);
  CHECK(out.at(Character::z_lex({1, 0})) == Complex{0.5, 0.0});
  CHECK(out.at(Character::z_lex({1, -1})) == Complex{0.5, 0.0});
}

TEST_CASE("apply fixes the identity with the full kernel mass") {
  const auto g = GroupDescriptor::z_lex(2);
  const HausdorffOperator h = HausdorffOperator::from_dual_terms(
      g, {{{0.3, 0.0}, make_lower_unitriangular(2, {2})},
          {{0.7, 0.0}, make_lower_unitriangular(2, {-1})}});
  Spectrum delta(g);
  delta.set(Character::identity(g), {1.0, 0.0});
  const Spectrum out = apply(h, delta);
  CHECK(out.size() == 1);
  CHECK(out.at(Character::identity(g)) == Complex{1.0, 0.0});

  CHECK(apply(h, Spectrum(g)).empty());
}

TEST_CASE("kernel mass and the zero operator") {
  const auto g = GroupDescriptor::z_lex(1);
  const HausdorffOperator h = HausdorffOperator::from_dual_terms(
      g, {{{-1.0, 0.0}, make_unimod_matrix(1, {1})},
          {{0.0, 2.0}, make_unimod_matrix(1, {-1})}});
  CHECK(phi_l1(h) == doctest::Approx(3.0).epsilon(1e-15));

  const HausdorffOperator zero = HausdorffOperator::zero(g);
  CHECK(zero.is_zero());
  CHECK(phi_l1(zero) == 0.0);
  Spectrum s(g);
  s.set(Character::z_lex({2}), {1.0, 0.0});
  CHECK(apply(zero, s).empty());

  CHECK_THROWS_AS(HausdorffOperator::from_dual_terms(g, {}), Error);
}

TEST_CASE("group mismatch is rejected") {
  const HausdorffOperator h = HausdorffOperator::from_dual_terms(
      GroupDescriptor::z_lex(1), {{{1.0, 0.0}, make_unimod_matrix(1, {1})}});
  Spectrum s(GroupDescriptor::z_inf_lex());
  CHECK_THROWS_WITH_AS(apply(h, s), doctest::Contains("GROUP_MISMATCH"),
                       Error);
  CHECK_THROWS_WITH_AS(
      HausdorffOperator::from_dual_terms(
          GroupDescriptor::z_inf_lex(),
          {{{1.0, 0.0}, make_unimod_matrix(1, {1})}}),
      doctest::Contains("FAMILY_MISMATCH"), Error);
}

TEST_CASE("spatial construction encodes the transpose-inverse direction") {
  // A(z) = z^M with M = [[1,0],[1,1]] sends the character at (0,1) to the
  // character at M^T (0,1) = (1,1).
  const HausdorffOperator h = HausdorffOperator::from_spatial_matrices(
      2, {{Complex{1.0, 0.0}, make_unimod_matrix(2, {1, 0, 1, 1})}});
  CHECK(h.provenance() == Provenance::from_spatial);
  Spectrum s(GroupDescriptor::z_lex(2));
  s.set(Character::z_lex({0, 1}), {1.0, 0.0});
  const Spectrum out = apply(h, s);
  CHECK(out.size() == 1);
  CHECK(out.at(Character::z_lex({1, 1})) == Complex{1.0, 0.0});
}

TEST_CASE("adjoint satisfies the pairing identity") {
  Rng rng(77);
  for (int round = 0; round < 60; ++round) {
    const int dim = 2 + round % 2;
    const bool real_weights = round % 2 == 0;
    const HausdorffOperator h =
        random_unitriangular_operator(rng, dim, real_weights);
    const HausdorffOperator adj = adjoint(h);
    const Spectrum f = random_zlex_spectrum(rng, dim, 10);
    const Spectrum phi = random_zlex_spectrum(rng, dim, 10);
    const Complex lhs = pairing(apply(adj, f), phi);
    const Complex rhs = pairing(f, apply(h, phi));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));

    if (real_weights) {
      // involution for real kernels
      const HausdorffOperator twice = adjoint(adj);
      const Spectrum x = random_zlex_spectrum(rng, dim, 8);
      CHECK(max_term_difference(apply(twice, x), apply(h, x)) <= 1e-12);
    }
  }

  // delta-spectrum form: the operator sends delta at chi to delta at
  // B^{-1}(chi), and both sides of the pairing identity evaluate to 1 there
  const auto g = GroupDescriptor::z_lex(2);
  const Automorphism b = make_lower_unitriangular(2, {3});
  const HausdorffOperator h =
      HausdorffOperator::from_dual_terms(g, {{{1.0, 0.0}, b}});
  const Character chi = Character::z_lex({2, 1});
  Spectrum delta_chi(g);
  delta_chi.set(chi, {1.0, 0.0});
  Spectrum delta_img(g);
  delta_img.set(apply(invert(b), chi), {1.0, 0.0});
  CHECK(pairing(apply(adjoint(h), delta_img), delta_chi) == Complex{1.0, 0.0});
  CHECK(pairing(delta_img, apply(h, delta_chi)) == Complex{1.0, 0.0});
}

TEST_CASE("linearity and the l2 bound on random instances") {
  Rng rng(3001);
  for (int round = 0; round < 100; ++round) {
    const int dim = 1 + round % 3;
    const HausdorffOperator h = random_unitriangular_operator(rng, dim, false);
    const Spectrum s = random_zlex_spectrum(rng, dim, 10);
    const Spectrum t = random_zlex_spectrum(rng, dim, 10);
    const Complex a = rng.complex_gaussian();
    const Complex b = rng.complex_gaussian();

    const Spectrum lhs = apply(h, add(scale(a, s), scale(b, t)));
    const Spectrum rhs = add(scale(a, apply(h, s)), scale(b, apply(h, t)));
    CHECK(max_term_difference(lhs, rhs) <= 1e-12);

    CHECK(l2_norm(apply(h, s)) <= phi_l1(h) * l2_norm(s) + 1e-12);
  }
}

TEST_CASE("cone-preserving kernels keep Hardy supports and commute with the "
          "conjugation") {
  Rng rng(88);
  for (int round = 0; round < 60; ++round) {
    const int dim = 2 + round % 2;
    const HausdorffOperator h = random_unitriangular_operator(rng, dim, false);
    Spectrum s(GroupDescriptor::z_lex(dim));
    const int terms = static_cast<int>(rng.range(1, 12));
    for (int t = 0; t < terms; ++t) {
      std::vector<std::int64_t> v(dim);
      for (auto& x : v) x = rng.range(-8, 8);
      Character chi = Character::z_lex(std::move(v));
      if (sgn_plus(chi) < 0) chi = negate(chi);
      s.add(chi, rng.complex_gaussian());
    }
    CHECK(is_supported_in(apply(h, s), in_lex_cone).ok);

    const Spectrum any = random_zlex_spectrum(rng, dim, 10);
    CHECK(max_term_difference(apply(h, hilbert(any)),
                              hilbert(apply(h, any))) == 0.0);
  }
}

TEST_CASE("sigma kernels keep the nonnegative orthant") {
  Rng rng(89);
  for (int round = 0; round < 60; ++round) {
    const int count = static_cast<int>(rng.range(1, 3));
    std::vector<OperatorTerm> terms;
    for (int t = 0; t < count; ++t) {
      SparseSeq u;
      for (std::int32_t j = 1; j <= 3; ++j) {
        const std::int64_t v = rng.range(0, 2);
        if (v != 0) u.push_back({j, v});
      }
      terms.push_back({rng.complex_gaussian(), make_sigma_u(std::move(u))});
    }
    const HausdorffOperator h = HausdorffOperator::from_dual_terms(
        GroupDescriptor::z_inf_lex(), std::move(terms));
    Spectrum s(GroupDescriptor::z_inf_lex());
    const int nt = static_cast<int>(rng.range(1, 8));
    for (int t = 0; t < nt; ++t) {
      SparseSeq entries;
      for (std::int32_t j = 1; j <= 4; ++j) {
        const std::int64_t v = rng.range(0, 3);
        if (v != 0) entries.push_back({j, v});
      }
      s.add(Character::z_inf_lex(std::move(entries)), rng.complex_gaussian());
    }
    CHECK(is_supported_in(apply(h, s), in_nonneg_orthant).ok);
  }
}

TEST_CASE("a swap kernel leaks the cone with a concrete witness") {
  const auto g = GroupDescriptor::z_lex(2);
  const HausdorffOperator h = HausdorffOperator::from_dual_terms(
      g, {{{1.0, 0.0}, make_unimod_matrix(2, {0, 1, 1, 0})}});
  Spectrum delta(g);
  delta.set(Character::z_lex({1, -1}), {1.0, 0.0});
  const SupportCheck check = is_supported_in(apply(h, delta), in_lex_cone);
  REQUIRE(!check.ok);
  CHECK(sgn_plus(*check.witness) < 0);
  CHECK(*check.witness == Character::z_lex({-1, 1}));
}

TEST_CASE("Delsarte shift: modulate then average") {
  const auto g = GroupDescriptor::z_lex(1);
  const std::vector<Automorphism> family = {make_unimod_matrix(1, {1}),
                                            make_unimod_matrix(1, {-1})};
  const double theta = 0.3125;
  Spectrum delta1(g);
  delta1.set(Character::z_lex({1}), {1.0, 0.0});
  const Spectrum out = delsarte_shift(family, TorusPoint::of({theta}), delta1);
  const Complex expected =
      0.5 * Complex{std::cos(2 * std::numbers::pi * theta),
                    std::sin(2 * std::numbers::pi * theta)};
  CHECK(std::abs(out.at(Character::z_lex({1})) - expected) <= 1e-15);
  CHECK(std::abs(out.at(Character::z_lex({-1})) - expected) <= 1e-15);

  Spectrum delta0(g);
  delta0.set(Character::identity(g), {1.0, 0.0});
  CHECK(delsarte_shift(family, TorusPoint::of({0.77}), delta0) == delta0);

  // singleton identity family at h = 0 is a no-op
  Spectrum s(g);
  s.set(Character::z_lex({2}), {0.5, -1.5});
  s.set(Character::z_lex({-3}), {1.0, 0.25});
  CHECK(delsarte_shift({make_unimod_matrix(1, {1})}, TorusPoint::of({0.0}),
                       s) == s);
}

TEST_CASE("Delsarte shift validates the family and the group") {
  const std::vector<Automorphism> not_closed = {
      make_lower_unitriangular(2, {1})};
  Spectrum s(GroupDescriptor::z_lex(2));
  s.set(Character::z_lex({1, 0}), {1.0, 0.0});
  CHECK_THROWS_WITH_AS(
      delsarte_shift(not_closed, TorusPoint::of({0.0, 0.0}), s),
      doctest::Contains("NOT_CLOSED"), Error);

  Spectrum sparse(GroupDescriptor::z_inf_lex());
  CHECK_THROWS_WITH_AS(delsarte_shift(not_closed, TorusPoint::of({0.0}),
                                      sparse),
                       doctest::Contains("GROUP_MISMATCH"), Error);
}

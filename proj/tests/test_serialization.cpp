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

#include "haco/serialization.hpp"

#include "doctest.h"
#include "haco/sampling.hpp"

using namespace haco;

TEST_CASE("spectrum files round trip on every group") {
  Spectrum zd(GroupDescriptor::z_lex(2));
  zd.set(Character::z_lex({1, -4}), {0.25, -1.5});
  zd.set(Character::identity(zd.group()), {2.0, 0.0});
  CHECK(spectrum_from_json(to_json_string(zd)) == zd);

  Spectrum sparse(GroupDescriptor::z_inf_lex());
  sparse.set(Character::z_inf_lex({{1, 2}, {4, -1}}), {1e-17, 3.0});
  CHECK(spectrum_from_json(to_json_string(sparse)) == sparse);

  Spectrum rational(GroupDescriptor::rationals());
  rational.set(Character::rational(22, 7), {1.0, 1.0});
  CHECK(spectrum_from_json(to_json_string(rational)) == rational);
}

TEST_CASE("rational characters survive far beyond 64-bit components") {
  // scale 3/2 a hundred times: numerator and denominator overflow int64,
  // so the schema switches to decimal strings
  Character chi = Character::rational(1, 1);
  const Automorphism scale = make_rational_scale(Rational(3, 2));
  for (int i = 0; i < 100; ++i) chi = apply(scale, chi);
  Spectrum s(GroupDescriptor::rationals());
  s.set(chi, {1.0, 0.0});
  const std::string text = to_json_string(s);
  CHECK(spectrum_from_json(text) == s);
}

TEST_CASE("operator configs round trip across families") {
  const HausdorffOperator h = HausdorffOperator::from_dual_terms(
      GroupDescriptor::z_lex(2),
      {{{0.5, -0.25}, make_lower_unitriangular(2, {3})},
       {{1.0, 0.0}, make_unimod_matrix(2, {0, 1, 1, 0})},
       {{0.0, 1.0}, make_coordinate_flip({1, -1})}});
  CHECK(same_operator(operator_from_json(to_json_string(h)), h));

  const HausdorffOperator sparse = HausdorffOperator::from_dual_terms(
      GroupDescriptor::z_inf_lex(),
      {{{1.0, 0.0}, make_sigma_u({{1, 2}})},
       {{2.0, 0.0}, make_two_diagonal({{2, -3}})},
       {{0.5, 0.5}, invert(Automorphism{make_sigma_u({{2, 1}})})}});
  CHECK(same_operator(operator_from_json(to_json_string(sparse)), sparse));

  const HausdorffOperator rational = HausdorffOperator::from_dual_terms(
      GroupDescriptor::rationals(),
      {{{1.0, 0.0}, make_rational_scale(Rational(5, 3))}});
  CHECK(same_operator(operator_from_json(to_json_string(rational)), rational));
}

TEST_CASE("spatial-side configs build the transpose-inverse dual map") {
  const std::string config = R"({
    "group": {"kind": "z_lex", "dim": 2},
    "terms": [{
      "weight": {"re": 1.0, "im": 0.0},
      "side": "spatial_matrix",
      "automorphism": {"family": "unimod_matrix", "dim": 2,
                       "matrix": [[1, 0], [1, 1]]}
    }]
  })";
  const HausdorffOperator parsed = operator_from_json(config);
  CHECK(parsed.provenance() == Provenance::from_spatial);
  const HausdorffOperator direct = HausdorffOperator::from_spatial_matrices(
      2, {{Complex{1.0, 0.0}, make_unimod_matrix(2, {1, 0, 1, 1})}});
  CHECK(same_operator(parsed, direct));

  // a mixed config parses too; sides are per term
  const std::string mixed = R"({
    "group": {"kind": "z_lex", "dim": 2},
    "terms": [
      {"weight": {"re": 1.0, "im": 0.0}, "side": "dual",
       "automorphism": {"family": "lower_unitriangular", "dim": 2,
                        "entries": [[2, 1, 4]]}},
      {"weight": {"re": 0.5, "im": 0.0}, "side": "spatial_matrix",
       "automorphism": {"family": "unimod_matrix", "dim": 2,
                        "matrix": [[0, 1], [1, 0]]}}
    ]
  })";
  CHECK(operator_from_json(mixed).terms().size() == 2);
}

TEST_CASE("malformed configs fail with the offending field named") {
  CHECK_THROWS_WITH_AS(spectrum_from_json("{}"),
                       doctest::Contains("'group'"), Error);
  CHECK_THROWS_WITH_AS(
      operator_from_json(R"({"group": {"kind": "z_lex", "dim": 2},
                             "terms": []})"),
      doctest::Contains("'terms'"), Error);
  CHECK_THROWS_WITH_AS(
      spectrum_from_json(R"({"group": {"kind": "izarra"}, "terms": []})"),
      doctest::Contains("'kind'"), Error);

  // determinant validation happens at parse time
  const std::string degenerate = R"({
    "group": {"kind": "z_lex", "dim": 2},
    "terms": [{"weight": {"re": 1.0, "im": 0.0}, "side": "dual",
               "automorphism": {"family": "unimod_matrix", "dim": 2,
                                "matrix": [[1, 0], [0, 2]]}}]
  })";
  CHECK_THROWS_WITH_AS(operator_from_json(degenerate),
                       doctest::Contains("determinant"), Error);

  try {
    operator_from_json(degenerate);
  } catch (const Error& e) {
    CHECK(!is_compatibility_error(e.code()));
  }

  // wrong JSON types surface as parse errors, never as foreign exceptions
  CHECK_THROWS_AS(
      spectrum_from_json(R"({"group": {"kind": "z_lex", "dim": "two"},
                             "terms": []})"),
      Error);
  CHECK_THROWS_AS(
      dirichlet_from_json(R"({"coeffs": [{"n": "six", "re": 1, "im": 0}]})"),
      Error);
  CHECK_THROWS_AS(
      root_weights_from_json(R"({"weights": [{"q": true, "re": 1,
                                              "im": 0}]})"),
      Error);
}

TEST_CASE("dirichlet coefficient files and kernels round trip") {
  DirichletPolynomial d(500000);
  d.set(2, {1.0, -2.0});
  d.set(720, {0.125, 0.0});
  const DirichletPolynomial back = dirichlet_from_json(to_json_string(d));
  CHECK(back == d);
  CHECK(back.n_max() == 500000);

  const std::vector<RootWeight> weights = {{1, {0.5, 0.0}}, {2, {0.5, 0.0}}};
  const auto parsed = root_weights_from_json(root_weights_to_json(weights));
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].q == 1);
  CHECK(parsed[1].q == 2);
  CHECK(parsed[1].weight == Complex{0.5, 0.0});

  CHECK_THROWS_WITH_AS(root_weights_from_json(R"({"weights": []})"),
                       doctest::Contains("'weights'"), Error);
}

TEST_CASE("sigma kernels extract from sigma-only operator configs") {
  const HausdorffOperator ok = HausdorffOperator::from_dual_terms(
      GroupDescriptor::z_inf_lex(),
      {{{1.0, 0.0}, make_sigma_u({{1, 1}})},
       {{0.0, -2.0}, make_sigma_u({{2, 3}})}});
  const auto weights = sigma_weights_from_operator(ok);
  REQUIRE(weights.size() == 2);
  CHECK(weights[0].u == SparseSeq{{1, 1}});
  CHECK(weights[1].weight == Complex{0.0, -2.0});

  const HausdorffOperator wrong = HausdorffOperator::from_dual_terms(
      GroupDescriptor::z_inf_lex(),
      {{{1.0, 0.0}, make_two_diagonal({{2, 1}})}});
  CHECK_THROWS_AS(sigma_weights_from_operator(wrong), Error);
}

TEST_CASE("report serialization is stable and carries witnesses") {
  VerificationReport report;
  report.suite = "demo";
  report.seed = 17;
  CheckRecord rec;
  rec.id = "demo.check";
  rec.anchor = "demo anchor";
  rec.instances = 3;
  rec.max_deviation = 0.5;
  rec.tolerance = 1.0;
  rec.pass = true;
  rec.witness = "(1,-2) -> (-2,1)";
  report.checks.push_back(rec);

  const std::string text = to_json_string(report);
  CHECK(text.find("\"witness\"") != std::string::npos);
  CHECK(text.find("demo.check") != std::string::npos);
  CHECK(text == to_json_string(report));
}

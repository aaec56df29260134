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
#include <set>
#include <utility>

namespace haco {

HausdorffOperator HausdorffOperator::from_dual_terms(
    GroupDescriptor group, std::vector<OperatorTerm> terms) {
  require(!terms.empty(), errc::invalid_argument,
          "operator needs at least one term; use zero() for the zero operator");
  for (const OperatorTerm& t : terms) {
    require(compatible(t.dual_map, group), errc::family_mismatch,
            family_name(t.dual_map) + " term cannot act on " +
                group.to_string());
  }
  return HausdorffOperator(group, std::move(terms), Provenance::dual_given);
}

HausdorffOperator HausdorffOperator::from_spatial_matrices(
    int dim, const std::vector<std::pair<Complex, UnimodMatrix>>& terms) {
  require(!terms.empty(), errc::invalid_argument,
          "operator needs at least one term");
  std::vector<OperatorTerm> dual;
  dual.reserve(terms.size());
  for (const auto& [w, m] : terms) {
    require(m.dim == dim, errc::dim_mismatch, "spatial matrix dim differs");
    // chi_n(z^M) = chi_{M^T n}(z), so the dual-side map is (M^T)^{-1}.
    UnimodMatrix transposed{m.dim,
                            std::vector<std::int64_t>(m.dim * m.dim, 0)};
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < m.dim; ++j) transposed.at(i, j) = m.at(j, i);
    Automorphism b = invert(Automorphism{transposed});
    dual.push_back({w, std::move(b)});
  }
  return HausdorffOperator(GroupDescriptor::z_lex(dim), std::move(dual),
                           Provenance::from_spatial);
}

HausdorffOperator HausdorffOperator::zero(GroupDescriptor group) {
  return HausdorffOperator(group, {}, Provenance::dual_given);
}

Spectrum apply(const HausdorffOperator& h, const Spectrum& s) {
  require(h.group() == s.group(), errc::group_mismatch,
          "operator on " + h.group().to_string() + ", spectrum on " +
              s.group().to_string());
  Spectrum out(s.group());
  if (h.is_zero() || s.empty()) return out;

  // Candidate support: pull the input support back through every term.
  std::set<Character, CharacterLess> candidates;
  for (const OperatorTerm& t : h.terms()) {
    const Automorphism inv = invert(t.dual_map);
    for (const auto& [chi, c] : s.terms()) candidates.insert(apply(inv, chi));
  }

  for (const Character& chi : candidates) {
    Complex value{0.0, 0.0};
    for (const OperatorTerm& t : h.terms())
      value += t.weight * s.at(apply(t.dual_map, chi));
    out.set(chi, value);
  }
  return out;
}

double phi_l1(const HausdorffOperator& h) {
  double sum = 0.0;
  for (const OperatorTerm& t : h.terms()) sum += std::abs(t.weight);
  return sum;
}

HausdorffOperator adjoint(const HausdorffOperator& h) {
  if (h.is_zero()) return h;
  std::vector<OperatorTerm> terms;
  terms.reserve(h.terms().size());
  for (const OperatorTerm& t : h.terms())
    terms.push_back({std::conj(t.weight), invert(t.dual_map)});
  return HausdorffOperator::from_dual_terms(h.group(), std::move(terms));
}

Spectrum delsarte_shift(const std::vector<Automorphism>& family,
                        const TorusPoint& h, const Spectrum& s) {
  require(s.group().kind == GroupKind::ZLex, errc::group_mismatch,
          "delsarte shift is defined on z_lex groups");
  const int dim = s.group().dim;
  require(h.dim == dim, errc::dim_mismatch, "shift point dim differs");
  require(!family.empty(), errc::invalid_argument, "family is empty");

  // Closure under inversion, checked on matrix forms.
  std::vector<UnimodMatrix> matrices;
  matrices.reserve(family.size());
  for (const Automorphism& a : family) matrices.push_back(to_matrix(a, dim));
  for (const UnimodMatrix& m : matrices) {
    const UnimodMatrix inv = to_matrix(invert(Automorphism{m}), dim);
    bool found = false;
    for (const UnimodMatrix& other : matrices)
      if (other == inv) {
        found = true;
        break;
      }
    require(found, errc::not_closed,
            "family is not closed under inversion");
  }

  // Fourier side of the translation S_h: multiply the coefficient at n by
  // exp(2 pi i n.h).
  Spectrum modulated(s.group());
  for (const auto& [chi, c] : s.terms()) {
    double phase = 0.0;
    const auto& n = chi.z_lex_coords();
    for (int i = 0; i < dim; ++i)
      phase += static_cast<double>(n[i]) * h.angles[i];
    const double theta = 2.0 * std::numbers::pi * phase;
    modulated.set(chi, c * Complex{std::cos(theta), std::sin(theta)});
  }

  const Complex weight{1.0 / static_cast<double>(family.size()), 0.0};
  std::vector<OperatorTerm> terms;
  terms.reserve(family.size());
  for (const Automorphism& a : family) terms.push_back({weight, invert(a)});
  return apply(HausdorffOperator::from_dual_terms(s.group(), std::move(terms)),
               modulated);
}

}  // namespace haco

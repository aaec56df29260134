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

#ifndef HACO_HAUSDORFF_HPP_
#define HACO_HAUSDORFF_HPP_

#include <vector>

#include "haco/automorphism.hpp"
#include "haco/spectrum.hpp"
#include "haco/torus_point.hpp"

namespace haco {

struct OperatorTerm {
  Complex weight;
  Automorphism dual_map;  // applied inside the coefficient argument
};

// Records whether the dual-side maps were supplied directly or derived from
// spatial torus automorphisms.
enum class Provenance { dual_given, from_spatial };

// A discrete Hausdorff operator acting on spectra:
//
//   (H s)(chi) = sum_u weight_u * s(B_u(chi)).
//
// B_u is the dual-side map. For the spatial torus action z -> z^M the
// correct dual-side map is B = (M^T)^{-1}; `from_spatial_matrices` encodes
// that direction once so callers cannot get the transpose wrong. Weights are
// a finite discrete kernel; continuous kernels must be quadratured by the
// caller. The modular factor of the spatial automorphisms is identically 1
// on compact groups and is therefore not represented.
class HausdorffOperator {
 public:
  // Dual-side construction; `terms` must be nonempty.
  static HausdorffOperator from_dual_terms(GroupDescriptor group,
                                           std::vector<OperatorTerm> terms);

  // Spatial construction on ZLex(d): each matrix M gives B = (M^T)^{-1}.
  static HausdorffOperator from_spatial_matrices(
      int dim, const std::vector<std::pair<Complex, UnimodMatrix>>& terms);

  // The zero operator (empty kernel), the one case with no terms.
  static HausdorffOperator zero(GroupDescriptor group);

  const GroupDescriptor& group() const noexcept { return group_; }
  const std::vector<OperatorTerm>& terms() const noexcept { return terms_; }
  Provenance provenance() const noexcept { return provenance_; }
  bool is_zero() const noexcept { return terms_.empty(); }

 private:
  HausdorffOperator(GroupDescriptor group, std::vector<OperatorTerm> terms,
                    Provenance provenance)
      : group_(group), terms_(std::move(terms)), provenance_(provenance) {}

  GroupDescriptor group_;
  std::vector<OperatorTerm> terms_;
  Provenance provenance_;
};

// (H s)(chi) = sum_u w_u s(B_u(chi)), evaluated exactly on the finite
// candidate support union_u B_u^{-1}(supp s). Term summation follows the
// stored list order, so results are reproducible.
Spectrum apply(const HausdorffOperator& h, const Spectrum& s);

// sum |weights|: the L1 kernel mass that bounds the operator norm on every
// space the theory covers.
double phi_l1(const HausdorffOperator& h);

// Adjoint under the Parseval pairing: (w, B) -> (conj w, B^{-1}).
HausdorffOperator adjoint(const HausdorffOperator& h);

// Delsarte generalized shift T^h on ZLex(d): modulate the coefficients by
// exp(2 pi i n.h), then average the inverted family with uniform weights
// 1/|family|. The family must be closed under inversion (a finite subgroup
// of dual actions); otherwise NOT_CLOSED is raised.
Spectrum delsarte_shift(const std::vector<Automorphism>& family,
                        const TorusPoint& h, const Spectrum& s);

}  // namespace haco

#endif  // HACO_HAUSDORFF_HPP_

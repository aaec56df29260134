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

#ifndef HACO_AUTOMORPHISM_HPP_
#define HACO_AUTOMORPHISM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "haco/dual_group.hpp"

namespace haco {

// Square integer matrix with det = +-1, acting on ZLex(dim) column vectors.
struct UnimodMatrix {
  int dim = 1;
  std::vector<std::int64_t> entries;  // row-major, dim*dim

  std::int64_t at(int row, int col) const { return entries[row * dim + col]; }
  std::int64_t& at(int row, int col) { return entries[row * dim + col]; }
  bool operator==(const UnimodMatrix&) const = default;
};

// Unit lower triangular integer matrix on ZLex(dim); stores the strictly
// lower entries u(i,j), i > j, row by row.
struct LowerUnitriangular {
  int dim = 1;
  std::vector<std::int64_t> sub;  // dim*(dim-1)/2 entries

  std::int64_t at(int row, int col) const;  // 0-based, row > col
  bool operator==(const LowerUnitriangular&) const = default;
};

// Infinite unit lower two-diagonal matrix on ZInfLex: beta_k = alpha_k +
// u_k * alpha_{k-1}, where u_k is the stored entry at subdiagonal row k >= 2.
// `inverted` selects the inverse action (forward substitution), which is not
// two-diagonal itself but maps finitely supported sequences to finitely
// supported sequences because the entry map is finite.
struct TwoDiagonal {
  SparseSeq sub;  // index k >= 2 -> u_{k,k-1}
  bool inverted = false;

  bool operator==(const TwoDiagonal&) const = default;
};

// The sigma_u family on ZInfLex: beta_1 = alpha_1, beta_k = alpha_k -
// u_{k-1} * alpha_{k-1} with a finitely supported nonnegative sequence u.
// The inverse runs the recurrence alpha_1 = beta_1, alpha_k = beta_k +
// u_{k-1} * alpha_{k-1}.
struct SigmaU {
  SparseSeq u;  // index j >= 1 -> u_j >= 0
  bool inverted = false;

  bool operator==(const SigmaU&) const = default;
};

// Multiplication by a positive rational on the rational character group.
struct RationalScale {
  Rational q;  // > 0

  bool operator==(const RationalScale& other) const { return q == other.q; }
};

// Componentwise sign flips on ZLex(dim); an involution.
struct CoordinateFlip {
  int dim = 1;
  std::vector<int> signs;  // each +1 or -1

  bool operator==(const CoordinateFlip&) const = default;
};

// Tagged family union. A struct (not a bare variant alias) so the group
// action below is never confused with std::apply by argument-dependent
// lookup.
struct Automorphism {
  using Variant = std::variant<UnimodMatrix, LowerUnitriangular, TwoDiagonal,
                               SigmaU, RationalScale, CoordinateFlip>;

  Variant value;

  Automorphism() = default;
  template <typename T,
            typename = std::enable_if_t<std::is_constructible_v<Variant, T&&>>>
  Automorphism(T&& family) : value(std::forward<T>(family)) {}

  bool operator==(const Automorphism&) const = default;
};

// Validating constructors.
UnimodMatrix make_unimod_matrix(int dim, std::vector<std::int64_t> entries);
LowerUnitriangular make_lower_unitriangular(int dim,
                                            std::vector<std::int64_t> sub);
TwoDiagonal make_two_diagonal(SparseSeq sub);
SigmaU make_sigma_u(SparseSeq u);
RationalScale make_rational_scale(Rational q);
CoordinateFlip make_coordinate_flip(std::vector<int> signs);

std::int64_t det(const UnimodMatrix& m);
UnimodMatrix multiply(const UnimodMatrix& a, const UnimodMatrix& b);

// True when the family can act on characters of `group`.
bool compatible(const Automorphism& a, const GroupDescriptor& group);

std::string family_name(const Automorphism& a);

// The image of chi under the automorphism, in canonical form.
Character apply(const Automorphism& a, const Character& chi);

// The inverse automorphism as a closed form within the same representation.
Automorphism invert(const Automorphism& a);

// Matrix form of a ZLex-family automorphism (unimodular, unitriangular or
// coordinate flip). Used for composition and for subgroup closure checks.
UnimodMatrix to_matrix(const Automorphism& a, int dim);

// Sets whose invariance under an automorphism the paper-level results need.
enum class InvariantSet {
  lex_cone,                   // {chi : chi >= identity} under compare
  nonneg_orthant_complement,  // sparse sequences with some negative entry
};

struct AnalyticTrue {};
struct SampledTrue {
  std::int64_t samples = 0;
};
struct FalseWitness {
  Character witness;  // element of the set whose image escapes it
  Character image;
};

using PreserveVerdict = std::variant<AnalyticTrue, SampledTrue, FalseWitness>;

struct SampleSpec {
  std::int64_t radius = 2;       // entries drawn from [-radius, radius]
  std::int64_t budget = 4096;    // max number of probes
  int sparse_index_limit = 6;    // ZInfLex probes live on indices 1..limit
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

// Decides whether a maps S into S. Families the theory settles outright
// return AnalyticTrue; everything else is probed on a finite box and either
// yields a concrete escaping witness or SampledTrue with the probe count.
PreserveVerdict preserves(const Automorphism& a, InvariantSet set,
                          const SampleSpec& spec = {});

bool is_analytic_true(const PreserveVerdict& v);
bool is_false_witness(const PreserveVerdict& v);

}  // namespace haco

#endif  // HACO_AUTOMORPHISM_HPP_

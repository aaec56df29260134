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

#ifndef HACO_DUAL_GROUP_HPP_
#define HACO_DUAL_GROUP_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "haco/errors.hpp"

namespace haco {

// Discrete totally ordered abelian groups used as character (dual) groups:
//   ZLex(d)  : integer vectors of length d with the lexicographic order,
//   ZInfLex  : finitely supported integer sequences, lexicographic order,
//   Rationals: the additive rationals with the usual order.
// All three are torsion-free, so each order is compatible with addition.
enum class GroupKind { ZLex, ZInfLex, Rationals };

struct GroupDescriptor {
  GroupKind kind = GroupKind::ZLex;
  int dim = 1;  // meaningful for ZLex only

  static GroupDescriptor z_lex(int dim);
  static GroupDescriptor z_inf_lex() { return {GroupKind::ZInfLex, 0}; }
  static GroupDescriptor rationals() { return {GroupKind::Rationals, 0}; }

  bool operator==(const GroupDescriptor&) const = default;
  std::string to_string() const;
};

// One term of a finitely supported integer sequence: (index >= 1, value != 0).
struct SparseEntry {
  std::int32_t index = 1;
  std::int64_t value = 0;
  bool operator==(const SparseEntry&) const = default;
};

using SparseSeq = std::vector<SparseEntry>;

// Canonical form: indices strictly increasing, zero values removed.
SparseSeq canonical_sparse(SparseSeq entries);

using Rational = mpq_class;

// A group element written additively. The payload is exact integer data;
// rationals use arbitrary precision so repeated scaling never overflows.
class Character {
 public:
  using ZLexPayload = std::vector<std::int64_t>;

  static Character z_lex(std::vector<std::int64_t> coords);
  static Character z_inf_lex(SparseSeq entries);
  static Character rational(Rational value);
  static Character rational(std::int64_t numerator, std::int64_t denominator);
  static Character identity(const GroupDescriptor& group);

  const GroupDescriptor& group() const noexcept { return group_; }
  bool is_identity() const;

  const ZLexPayload& z_lex_coords() const;
  const SparseSeq& sparse_entries() const;
  const Rational& rational_value() const;

  bool operator==(const Character& other) const;
  std::string to_string() const;

 private:
  Character(GroupDescriptor group,
            std::variant<ZLexPayload, SparseSeq, Rational> payload)
      : group_(group), payload_(std::move(payload)) {}

  GroupDescriptor group_;
  std::variant<ZLexPayload, SparseSeq, Rational> payload_;
};

enum class Ordering { less = -1, equal = 0, greater = 1 };

// a + b in canonical form. Throws group_mismatch if descriptors differ.
Character combine(const Character& a, const Character& b);

// The additive inverse; combine(a, negate(a)) is the identity.
Character negate(const Character& a);

// Total order compatible with the group operation: lexicographic by the
// first differing coordinate for ZLex/ZInfLex, the usual order on rationals.
Ordering compare(const Character& a, const Character& b);

// 0 at the identity, +1 on the open positive cone, -1 on the negative part.
int sgn_plus(const Character& a);

// Strict-weak-order functor so characters can key ordered containers.
struct CharacterLess {
  bool operator()(const Character& a, const Character& b) const {
    return compare(a, b) == Ordering::less;
  }
};

// Rudin lacunarity constant of a finite set E of nonnegative characters on
// ZLex(1): the largest number of elements of E inside any interval
// [chi, 2*chi] with chi ranging over 0..max(E). The count vanishes for
// chi > max(E), so the search domain is provably exhaustive. Restricted to
// X = Z; other groups are rejected rather than approximated.
std::int64_t lacunarity_constant(std::span<const Character> elements);

}  // namespace haco

#endif  // HACO_DUAL_GROUP_HPP_

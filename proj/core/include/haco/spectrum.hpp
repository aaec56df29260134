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

#ifndef HACO_SPECTRUM_HPP_
#define HACO_SPECTRUM_HPP_

#include <complex>
#include <functional>
#include <map>
#include <optional>

#include "haco/dual_group.hpp"

namespace haco {

using Complex = std::complex<double>;

// A finitely supported Fourier coefficient function: the spectrum of a
// trigonometric polynomial on the group dual to `group`. Characters are
// exact; coefficients are floating complex. Terms whose coefficient becomes
// exactly zero are dropped, near-zero floats are kept: support questions
// must never be decided by a pruning epsilon. Terms are kept in the group
// order, so iteration and summation are reproducible.
class Spectrum {
 public:
  using TermMap = std::map<Character, Complex, CharacterLess>;

  explicit Spectrum(GroupDescriptor group) : group_(group) {}

  const GroupDescriptor& group() const noexcept { return group_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  // Coefficient at chi, zero when absent.
  Complex at(const Character& chi) const;

  // Replaces the coefficient at chi; an exact zero removes the term.
  void set(const Character& chi, Complex value);

  // Adds into the coefficient at chi, dropping exact-zero results.
  void add(const Character& chi, Complex value);

  // Adopts an already-ordered term map; keys must live on `group` and
  // exact-zero coefficients are dropped. Fast path for bulk producers.
  static Spectrum from_term_map(GroupDescriptor group, TermMap terms);

  bool operator==(const Spectrum& other) const;

 private:
  GroupDescriptor group_;
  TermMap terms_;
};

enum class Part { plus, minus };

// Riesz projection: `plus` keeps sgn_plus(chi) >= 0 (the cone includes the
// identity), `minus` keeps the strictly negative part.
Spectrum project(const Spectrum& s, Part part);

// Hilbert transform as the multiplier -i * sgn_plus; the identity-character
// term is annihilated.
Spectrum hilbert(const Spectrum& s);

// Parseval pairing sum a(chi) * conj(b(chi)).
Complex pairing(const Spectrum& a, const Spectrum& b);

// sqrt(sum |coefficients|^2), the L2 norm of the synthesized polynomial.
double l2_norm(const Spectrum& s);

// sum |coefficients|: an upper bound for the sup norm of the synthesis.
double l1_coeff(const Spectrum& s);

struct SupportCheck {
  bool ok = true;
  std::optional<Character> witness;  // a key outside the set when !ok
};

// True iff every key satisfies the predicate; otherwise carries a witness.
SupportCheck is_supported_in(const Spectrum& s,
                             const std::function<bool(const Character&)>& in_e);

// Membership helpers for the two supports the theory uses.
bool in_lex_cone(const Character& chi);
bool in_nonneg_orthant(const Character& chi);

// Pointwise arithmetic (exact zeros dropped).
Spectrum add(const Spectrum& a, const Spectrum& b);
Spectrum scale(Complex factor, const Spectrum& s);
Spectrum sub(const Spectrum& a, const Spectrum& b);

// max over the union support of |a(chi) - b(chi)|.
double max_term_difference(const Spectrum& a, const Spectrum& b);

// sqrt(sum over the union support of |a(chi) - b(chi)|^2), computed by a
// sorted merge without materializing the difference.
double l2_distance(const Spectrum& a, const Spectrum& b);

}  // namespace haco

#endif  // HACO_SPECTRUM_HPP_

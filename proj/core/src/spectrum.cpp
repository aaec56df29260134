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

#include "haco/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace haco {

namespace {

bool exact_zero(Complex v) { return v.real() == 0.0 && v.imag() == 0.0; }

void check_key(const GroupDescriptor& group, const Character& chi) {
  if (chi.group() != group) {
    fail(errc::group_mismatch,
         "term character lives on " + chi.group().to_string() +
             ", spectrum on " + group.to_string());
  }
}

}  // namespace

Complex Spectrum::at(const Character& chi) const {
  check_key(group_, chi);
  auto it = terms_.find(chi);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

void Spectrum::set(const Character& chi, Complex value) {
  check_key(group_, chi);
  if (exact_zero(value)) {
    terms_.erase(chi);
  } else {
    terms_.insert_or_assign(chi, value);
  }
}

void Spectrum::add(const Character& chi, Complex value) {
  check_key(group_, chi);
  auto [it, inserted] = terms_.try_emplace(chi, value);
  if (!inserted) it->second += value;
  if (exact_zero(it->second)) terms_.erase(it);
}

Spectrum Spectrum::from_term_map(GroupDescriptor group, TermMap terms) {
  Spectrum out(group);
  for (auto it = terms.begin(); it != terms.end();) {
    check_key(group, it->first);
    it = exact_zero(it->second) ? terms.erase(it) : std::next(it);
  }
  out.terms_ = std::move(terms);
  return out;
}

bool Spectrum::operator==(const Spectrum& other) const {
  return group_ == other.group_ && terms_ == other.terms_;
}

Spectrum project(const Spectrum& s, Part part) {
  Spectrum out(s.group());
  for (const auto& [chi, c] : s.terms()) {
    const int sign = sgn_plus(chi);
    if ((part == Part::plus && sign >= 0) || (part == Part::minus && sign < 0))
      out.set(chi, c);
  }
  return out;
}

Spectrum hilbert(const Spectrum& s) {
  Spectrum out(s.group());
  for (const auto& [chi, c] : s.terms()) {
    const int sign = sgn_plus(chi);
    if (sign == 0) continue;
    // -i * sign * c, computed by component swap so no rounding occurs
    const Complex v = sign > 0 ? Complex{c.imag(), -c.real()}
                               : Complex{-c.imag(), c.real()};
    out.set(chi, v);
  }
  return out;
}

Complex pairing(const Spectrum& a, const Spectrum& b) {
  require(a.group() == b.group(), errc::group_mismatch,
          "pairing across different groups");
  Complex sum{0.0, 0.0};
  for (const auto& [chi, c] : a.terms()) {
    auto it = b.terms().find(chi);
    if (it != b.terms().end()) sum += c * std::conj(it->second);
  }
  return sum;
}

double l2_norm(const Spectrum& s) {
  double sum = 0.0;
  for (const auto& [chi, c] : s.terms()) sum += std::norm(c);
  return std::sqrt(sum);
}

double l1_coeff(const Spectrum& s) {
  double sum = 0.0;
  for (const auto& [chi, c] : s.terms()) sum += std::abs(c);
  return sum;
}

SupportCheck is_supported_in(
    const Spectrum& s, const std::function<bool(const Character&)>& in_e) {
  for (const auto& [chi, c] : s.terms()) {
    if (!in_e(chi)) return {false, chi};
  }
  return {true, std::nullopt};
}

bool in_lex_cone(const Character& chi) { return sgn_plus(chi) >= 0; }

bool in_nonneg_orthant(const Character& chi) {
  for (const SparseEntry& e : chi.sparse_entries())
    if (e.value < 0) return false;
  return true;
}

Spectrum add(const Spectrum& a, const Spectrum& b) {
  require(a.group() == b.group(), errc::group_mismatch,
          "adding spectra on different groups");
  Spectrum out = a;
  for (const auto& [chi, c] : b.terms()) out.add(chi, c);
  return out;
}

Spectrum scale(Complex factor, const Spectrum& s) {
  Spectrum out(s.group());
  for (const auto& [chi, c] : s.terms()) out.set(chi, factor * c);
  return out;
}

Spectrum sub(const Spectrum& a, const Spectrum& b) {
  return add(a, scale(Complex{-1.0, 0.0}, b));
}

namespace {

// Sorted merge over the union support.
template <typename Visit>
void merge_terms(const Spectrum& a, const Spectrum& b, Visit&& visit) {
  require(a.group() == b.group(), errc::group_mismatch,
          "comparing spectra on different groups");
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  const Complex zero{0.0, 0.0};
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end()) {
      visit(ia->second, zero);
      ++ia;
    } else if (ia == a.terms().end()) {
      visit(zero, ib->second);
      ++ib;
    } else {
      switch (compare(ia->first, ib->first)) {
        case Ordering::less:
          visit(ia->second, zero);
          ++ia;
          break;
        case Ordering::greater:
          visit(zero, ib->second);
          ++ib;
          break;
        case Ordering::equal:
          visit(ia->second, ib->second);
          ++ia;
          ++ib;
          break;
      }
    }
  }
}

}  // namespace

double max_term_difference(const Spectrum& a, const Spectrum& b) {
  double worst = 0.0;
  merge_terms(a, b, [&](Complex x, Complex y) {
    worst = std::max(worst, std::abs(x - y));
  });
  return worst;
}

double l2_distance(const Spectrum& a, const Spectrum& b) {
  double sum = 0.0;
  merge_terms(a, b, [&](Complex x, Complex y) { sum += std::norm(x - y); });
  return std::sqrt(sum);
}

}  // namespace haco

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

#include "haco/automorphism.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "haco/sampling.hpp"

namespace haco {

namespace {

// Fraction-free (Bareiss) determinant; exact for the small dims used here.
std::int64_t int_det(std::vector<__int128> a, int n) {
  __int128 sign = 1;
  __int128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k * n + k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i * n + k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap_row * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i * n + j] =
            (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  return static_cast<std::int64_t>(sign * a[(n - 1) * n + (n - 1)]);
}

std::int64_t minor_det(const UnimodMatrix& m, int drop_row, int drop_col) {
  const int n = m.dim - 1;
  if (n == 0) return 1;
  std::vector<__int128> sub;
  sub.reserve(n * n);
  for (int i = 0; i < m.dim; ++i) {
    if (i == drop_row) continue;
    for (int j = 0; j < m.dim; ++j) {
      if (j == drop_col) continue;
      sub.push_back(m.at(i, j));
    }
  }
  return int_det(std::move(sub), n);
}

std::map<std::int32_t, std::int64_t> to_dense(const SparseSeq& s) {
  std::map<std::int32_t, std::int64_t> out;
  for (const SparseEntry& e : s) out[e.index] = e.value;
  return out;
}

SparseSeq from_dense(const std::map<std::int32_t, std::int64_t>& m) {
  SparseSeq out;
  for (const auto& [k, v] : m)
    if (v != 0) out.push_back({k, v});
  return out;
}

std::int64_t value_at(const std::map<std::int32_t, std::int64_t>& m,
                      std::int32_t k) {
  auto it = m.find(k);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

std::int64_t LowerUnitriangular::at(int row, int col) const {
  return sub[row * (row - 1) / 2 + col];
}

UnimodMatrix make_unimod_matrix(int dim, std::vector<std::int64_t> entries) {
  require(dim >= 1, errc::invalid_argument, "matrix dim must be >= 1");
  require(entries.size() == static_cast<std::size_t>(dim) * dim,
          errc::invalid_argument, "matrix needs dim*dim entries");
  UnimodMatrix m{dim, std::move(entries)};
  std::int64_t d = det(m);
  require(d == 1 || d == -1, errc::invalid_argument,
          "matrix determinant is " + std::to_string(d) +
              ", must be +1 or -1");
  return m;
}

LowerUnitriangular make_lower_unitriangular(int dim,
                                            std::vector<std::int64_t> sub) {
  require(dim >= 1, errc::invalid_argument, "dim must be >= 1");
  require(sub.size() == static_cast<std::size_t>(dim) * (dim - 1) / 2,
          errc::invalid_argument,
          "unitriangular needs dim*(dim-1)/2 subdiagonal entries");
  return {dim, std::move(sub)};
}

TwoDiagonal make_two_diagonal(SparseSeq sub) {
  sub = canonical_sparse(std::move(sub));
  for (const SparseEntry& e : sub) {
    require(e.index >= 2, errc::invalid_argument,
            "two-diagonal entries start at row 2");
  }
  return {std::move(sub), false};
}

SigmaU make_sigma_u(SparseSeq u) {
  u = canonical_sparse(std::move(u));
  for (const SparseEntry& e : u) {
    require(e.value >= 0, errc::invalid_argument,
            "sigma_u entries must be nonnegative");
  }
  return {std::move(u), false};
}

RationalScale make_rational_scale(Rational q) {
  q.canonicalize();
  require(sgn(q) > 0, errc::invalid_argument,
          "rational scale must be positive");
  return {std::move(q)};
}

CoordinateFlip make_coordinate_flip(std::vector<int> signs) {
  require(!signs.empty(), errc::invalid_argument, "flip needs >= 1 sign");
  for (int s : signs) {
    require(s == 1 || s == -1, errc::invalid_argument,
            "flip signs must be +1 or -1");
  }
  int dim = static_cast<int>(signs.size());
  return {dim, std::move(signs)};
}

std::int64_t det(const UnimodMatrix& m) {
  std::vector<__int128> a(m.entries.begin(), m.entries.end());
  return int_det(std::move(a), m.dim);
}

UnimodMatrix multiply(const UnimodMatrix& a, const UnimodMatrix& b) {
  require(a.dim == b.dim, errc::dim_mismatch, "matrix dims differ");
  UnimodMatrix out{a.dim, std::vector<std::int64_t>(a.dim * a.dim, 0)};
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k) {
      const std::int64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.dim; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

bool compatible(const Automorphism& a, const GroupDescriptor& group) {
  return std::visit(
      [&](const auto& fam) -> bool {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, UnimodMatrix> ||
                      std::is_same_v<T, LowerUnitriangular> ||
                      std::is_same_v<T, CoordinateFlip>) {
          return group.kind == GroupKind::ZLex && group.dim == fam.dim;
        } else if constexpr (std::is_same_v<T, TwoDiagonal> ||
                             std::is_same_v<T, SigmaU>) {
          return group.kind == GroupKind::ZInfLex;
        } else {
          return group.kind == GroupKind::Rationals;
        }
      },
      a.value);
}

std::string family_name(const Automorphism& a) {
  return std::visit(
      [](const auto& fam) -> std::string {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, UnimodMatrix>) {
          return "unimod_matrix";
        } else if constexpr (std::is_same_v<T, LowerUnitriangular>) {
          return "lower_unitriangular";
        } else if constexpr (std::is_same_v<T, TwoDiagonal>) {
          return "two_diagonal";
        } else if constexpr (std::is_same_v<T, SigmaU>) {
          return "sigma_u";
        } else if constexpr (std::is_same_v<T, RationalScale>) {
          return "rational_scale";
        } else {
          return "coordinate_flip";
        }
      },
      a.value);
}

namespace {

void check_compatible(const Automorphism& a, const Character& chi) {
  require(compatible(a, chi.group()), errc::family_mismatch,
          family_name(a) + " cannot act on " + chi.group().to_string());
}

Character apply_two_diagonal(const TwoDiagonal& t, const Character& chi) {
  auto alpha = to_dense(chi.sparse_entries());
  if (!t.inverted) {
    // beta_k = alpha_k + u_k * alpha_{k-1}
    std::map<std::int32_t, std::int64_t> beta = alpha;
    for (const SparseEntry& e : t.sub) {
      std::int64_t prev = value_at(alpha, e.index - 1);
      if (prev != 0) beta[e.index] += e.value * prev;
    }
    return Character::z_inf_lex(from_dense(beta));
  }
  // alpha_k = beta_k - u_k * alpha_{k-1}, ascending; finite because the
  // entry map is finite.
  std::int32_t top = 0;
  for (const SparseEntry& e : chi.sparse_entries()) top = std::max(top, e.index);
  for (const SparseEntry& e : t.sub) top = std::max(top, e.index);
  auto u = to_dense(t.sub);
  std::map<std::int32_t, std::int64_t> out;
  std::int64_t prev = 0;
  for (std::int32_t k = 1; k <= top; ++k) {
    std::int64_t v = value_at(alpha, k) - value_at(u, k) * prev;
    if (v != 0) out[k] = v;
    prev = v;
  }
  return Character::z_inf_lex(from_dense(out));
}

Character apply_sigma_u(const SigmaU& s, const Character& chi) {
  auto alpha = to_dense(chi.sparse_entries());
  if (!s.inverted) {
    // beta_1 = alpha_1, beta_k = alpha_k - u_{k-1} * alpha_{k-1}
    std::map<std::int32_t, std::int64_t> beta = alpha;
    for (const SparseEntry& e : s.u) {
      std::int64_t prev = value_at(alpha, e.index);
      if (prev != 0) beta[e.index + 1] -= e.value * prev;
    }
    return Character::z_inf_lex(from_dense(beta));
  }
  // alpha_1 = beta_1, alpha_k = beta_k + u_{k-1} * alpha_{k-1}
  std::int32_t top = 0;
  for (const SparseEntry& e : chi.sparse_entries()) top = std::max(top, e.index);
  for (const SparseEntry& e : s.u) top = std::max(top, e.index + 1);
  auto u = to_dense(s.u);
  std::map<std::int32_t, std::int64_t> out;
  std::int64_t prev = 0;
  for (std::int32_t k = 1; k <= top; ++k) {
    std::int64_t v = value_at(alpha, k) + value_at(u, k - 1) * prev;
    if (v != 0) out[k] = v;
    prev = v;
  }
  return Character::z_inf_lex(from_dense(out));
}

}  // namespace

Character apply(const Automorphism& a, const Character& chi) {
  check_compatible(a, chi);
  return std::visit(
      [&](const auto& fam) -> Character {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, UnimodMatrix>) {
          const auto& n = chi.z_lex_coords();
          std::vector<std::int64_t> out(fam.dim, 0);
          for (int i = 0; i < fam.dim; ++i)
            for (int j = 0; j < fam.dim; ++j) out[i] += fam.at(i, j) * n[j];
          return Character::z_lex(std::move(out));
        } else if constexpr (std::is_same_v<T, LowerUnitriangular>) {
          const auto& n = chi.z_lex_coords();
          std::vector<std::int64_t> out(n);
          for (int i = 1; i < fam.dim; ++i)
            for (int j = 0; j < i; ++j) out[i] += fam.at(i, j) * n[j];
          return Character::z_lex(std::move(out));
        } else if constexpr (std::is_same_v<T, TwoDiagonal>) {
          return apply_two_diagonal(fam, chi);
        } else if constexpr (std::is_same_v<T, SigmaU>) {
          return apply_sigma_u(fam, chi);
        } else if constexpr (std::is_same_v<T, RationalScale>) {
          return Character::rational(fam.q * chi.rational_value());
        } else {
          const auto& n = chi.z_lex_coords();
          std::vector<std::int64_t> out(n);
          for (int i = 0; i < fam.dim; ++i) out[i] *= fam.signs[i];
          return Character::z_lex(std::move(out));
        }
      },
      a.value);
}

Automorphism invert(const Automorphism& a) {
  return std::visit(
      [](const auto& fam) -> Automorphism {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, UnimodMatrix>) {
          // inverse = det * adjugate since det is +1 or -1
          const std::int64_t d = det(fam);
          UnimodMatrix inv{fam.dim,
                           std::vector<std::int64_t>(fam.dim * fam.dim, 0)};
          for (int i = 0; i < fam.dim; ++i) {
            for (int j = 0; j < fam.dim; ++j) {
              std::int64_t cof = minor_det(fam, j, i);
              if ((i + j) % 2 != 0) cof = -cof;
              inv.at(i, j) = d * cof;
            }
          }
          return inv;
        } else if constexpr (std::is_same_v<T, LowerUnitriangular>) {
          // forward substitution; the inverse is unit lower triangular with
          // integer entries, so it stays in the family
          const int n = fam.dim;
          std::vector<std::int64_t> x(n * n, 0);
          for (int i = 0; i < n; ++i) x[i * n + i] = 1;
          for (int j = 0; j < n; ++j)
            for (int i = j + 1; i < n; ++i) {
              std::int64_t s = 0;
              for (int k = j; k < i; ++k) s += fam.at(i, k) * x[k * n + j];
              x[i * n + j] = -s;
            }
          std::vector<std::int64_t> sub;
          sub.reserve(n * (n - 1) / 2);
          for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j) sub.push_back(x[i * n + j]);
          return LowerUnitriangular{n, std::move(sub)};
        } else if constexpr (std::is_same_v<T, TwoDiagonal>) {
          TwoDiagonal out = fam;
          out.inverted = !out.inverted;
          return out;
        } else if constexpr (std::is_same_v<T, SigmaU>) {
          SigmaU out = fam;
          out.inverted = !out.inverted;
          return out;
        } else if constexpr (std::is_same_v<T, RationalScale>) {
          return RationalScale{1 / fam.q};
        } else {
          return fam;  // involution
        }
      },
      a.value);
}

UnimodMatrix to_matrix(const Automorphism& a, int dim) {
  return std::visit(
      [&](const auto& fam) -> UnimodMatrix {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, UnimodMatrix>) {
          require(fam.dim == dim, errc::dim_mismatch, "matrix dim differs");
          return fam;
        } else if constexpr (std::is_same_v<T, LowerUnitriangular>) {
          require(fam.dim == dim, errc::dim_mismatch, "matrix dim differs");
          UnimodMatrix m{dim, std::vector<std::int64_t>(dim * dim, 0)};
          for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
          for (int i = 1; i < dim; ++i)
            for (int j = 0; j < i; ++j) m.at(i, j) = fam.at(i, j);
          return m;
        } else if constexpr (std::is_same_v<T, CoordinateFlip>) {
          require(fam.dim == dim, errc::dim_mismatch, "matrix dim differs");
          UnimodMatrix m{dim, std::vector<std::int64_t>(dim * dim, 0)};
          for (int i = 0; i < dim; ++i) m.at(i, i) = fam.signs[i];
          return m;
        } else {
          fail(errc::family_mismatch,
               family_name(Automorphism(fam)) + " has no matrix form");
        }
      },
      a.value);
}

namespace {

bool in_set(const Character& chi, InvariantSet set) {
  switch (set) {
    case InvariantSet::lex_cone:
      return sgn_plus(chi) >= 0;
    case InvariantSet::nonneg_orthant_complement:
      for (const SparseEntry& e : chi.sparse_entries())
        if (e.value < 0) return true;
      return false;
  }
  return false;
}

bool set_on_group(InvariantSet set, const GroupDescriptor& g) {
  if (set == InvariantSet::nonneg_orthant_complement)
    return g.kind == GroupKind::ZInfLex;
  return true;
}

GroupDescriptor acting_group(const Automorphism& a) {
  return std::visit(
      [](const auto& fam) -> GroupDescriptor {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, UnimodMatrix> ||
                      std::is_same_v<T, LowerUnitriangular> ||
                      std::is_same_v<T, CoordinateFlip>) {
          return GroupDescriptor::z_lex(fam.dim);
        } else if constexpr (std::is_same_v<T, TwoDiagonal> ||
                             std::is_same_v<T, SigmaU>) {
          return GroupDescriptor::z_inf_lex();
        } else {
          return GroupDescriptor::rationals();
        }
      },
      a.value);
}

// Draw a probe lying inside the tested set.
Character draw_probe(Rng& rng, const GroupDescriptor& g, InvariantSet set,
                     const SampleSpec& spec) {
  if (g.kind == GroupKind::ZLex) {
    std::vector<std::int64_t> v(g.dim);
    for (auto& x : v) x = rng.range(-spec.radius, spec.radius);
    Character chi = Character::z_lex(std::move(v));
    if (sgn_plus(chi) < 0) chi = negate(chi);
    return chi;
  }
  if (g.kind == GroupKind::ZInfLex) {
    SparseSeq entries;
    int support = static_cast<int>(rng.range(1, spec.sparse_index_limit));
    for (int i = 0; i < support; ++i) {
      std::int32_t idx =
          static_cast<std::int32_t>(rng.range(1, spec.sparse_index_limit));
      std::int64_t val = rng.range(-spec.radius, spec.radius);
      if (val != 0) entries.push_back({idx, val});
    }
    Character chi = Character::z_inf_lex(canonical_sparse(std::move(entries)));
    if (set == InvariantSet::lex_cone) {
      if (sgn_plus(chi) < 0) chi = negate(chi);
      return chi;
    }
    if (!in_set(chi, set)) {
      // force a negative entry
      SparseSeq e = chi.sparse_entries();
      if (e.empty()) {
        e.push_back({1, -1});
      } else {
        e.front().value = -std::llabs(e.front().value);
      }
      chi = Character::z_inf_lex(std::move(e));
    }
    return chi;
  }
  // rationals
  std::int64_t num = rng.range(-spec.radius * 8, spec.radius * 8);
  std::int64_t den = rng.range(1, spec.radius * 8);
  Character chi = Character::rational(num, den);
  if (sgn_plus(chi) < 0) chi = negate(chi);
  return chi;
}

}  // namespace

bool is_analytic_true(const PreserveVerdict& v) {
  return std::holds_alternative<AnalyticTrue>(v);
}

bool is_false_witness(const PreserveVerdict& v) {
  return std::holds_alternative<FalseWitness>(v);
}

PreserveVerdict preserves(const Automorphism& a, InvariantSet set,
                          const SampleSpec& spec) {
  const GroupDescriptor g = acting_group(a);
  require(set_on_group(set, g), errc::family_mismatch,
          "set is not defined on " + g.to_string());

  // Settled (family, set) pairs. Unit lower (two-)diagonal maps fix the
  // first nonzero entry, so they preserve the lexicographic cone, and the
  // subgroup property extends that to their inverses. sigma_u with u >= 0
  // keeps the first negative entry negative at the same index. Positive
  // scaling preserves sign on the rationals.
  if (set == InvariantSet::lex_cone) {
    if (std::holds_alternative<LowerUnitriangular>(a.value)) return AnalyticTrue{};
    if (std::holds_alternative<TwoDiagonal>(a.value)) return AnalyticTrue{};
    if (std::holds_alternative<RationalScale>(a.value)) return AnalyticTrue{};
  }
  if (set == InvariantSet::nonneg_orthant_complement) {
    if (const auto* s = std::get_if<SigmaU>(&a.value); s && !s->inverted)
      return AnalyticTrue{};
  }

  // Exhaustive sweep of the box when it fits the budget (ZLex only),
  // otherwise seeded random probes inside the set.
  if (g.kind == GroupKind::ZLex) {
    const std::int64_t side = 2 * spec.radius + 1;
    std::int64_t cells = 1;
    bool fits = true;
    for (int i = 0; i < g.dim; ++i) {
      cells *= side;
      if (cells > spec.budget) {
        fits = false;
        break;
      }
    }
    if (fits) {
      std::vector<std::int64_t> v(g.dim, -spec.radius);
      std::int64_t tested = 0;
      while (true) {
        Character chi = Character::z_lex(v);
        if (in_set(chi, set)) {
          ++tested;
          Character image = apply(a, chi);
          if (!in_set(image, set))
            return FalseWitness{std::move(chi), std::move(image)};
        }
        int axis = g.dim - 1;
        while (axis >= 0 && v[axis] == spec.radius) {
          v[axis] = -spec.radius;
          --axis;
        }
        if (axis < 0) break;
        ++v[axis];
      }
      return SampledTrue{tested};
    }
  }

  Rng rng(spec.seed);
  for (std::int64_t i = 0; i < spec.budget; ++i) {
    Character chi = draw_probe(rng, g, set, spec);
    if (!in_set(chi, set)) continue;
    Character image = apply(a, chi);
    if (!in_set(image, set))
      return FalseWitness{std::move(chi), std::move(image)};
  }
  return SampledTrue{spec.budget};
}

}  // namespace haco

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

#include "haco/dual_group.hpp"

#include <algorithm>
#include <sstream>

namespace haco {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::group_mismatch: return "GROUP_MISMATCH";
    case errc::family_mismatch: return "FAMILY_MISMATCH";
    case errc::dim_mismatch: return "DIM_MISMATCH";
    case errc::not_closed: return "NOT_CLOSED";
    case errc::unsupported_group: return "UNSUPPORTED_GROUP";
    case errc::empty_set: return "EMPTY_SET";
    case errc::aliasing: return "ALIASING";
    case errc::invalid_p: return "INVALID_P";
    case errc::not_real: return "NOT_REAL";
    case errc::not_analytic: return "NOT_ANALYTIC";
    case errc::out_of_range: return "OUT_OF_RANGE";
    case errc::invalid_argument: return "INVALID_ARGUMENT";
    case errc::parse_error: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

bool is_compatibility_error(errc code) noexcept {
  switch (code) {
    case errc::group_mismatch:
    case errc::family_mismatch:
    case errc::dim_mismatch:
    case errc::not_closed:
      return true;
    default:
      return false;
  }
}

GroupDescriptor GroupDescriptor::z_lex(int dim) {
  require(dim >= 1, errc::invalid_argument, "z_lex dim must be >= 1");
  return {GroupKind::ZLex, dim};
}

std::string GroupDescriptor::to_string() const {
  switch (kind) {
    case GroupKind::ZLex: return "z_lex(" + std::to_string(dim) + ")";
    case GroupKind::ZInfLex: return "z_inf_lex";
    case GroupKind::Rationals: return "rationals";
  }
  return "?";
}

SparseSeq canonical_sparse(SparseSeq entries) {
  std::sort(entries.begin(), entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) {
              return a.index < b.index;
            });
  SparseSeq out;
  out.reserve(entries.size());
  for (const SparseEntry& e : entries) {
    require(e.index >= 1, errc::invalid_argument,
            "sparse sequence index must be >= 1");
    if (!out.empty() && out.back().index == e.index) {
      out.back().value += e.value;
      if (out.back().value == 0) out.pop_back();
    } else if (e.value != 0) {
      out.push_back(e);
    }
  }
  return out;
}

Character Character::z_lex(std::vector<std::int64_t> coords) {
  auto group = GroupDescriptor::z_lex(static_cast<int>(coords.size()));
  return Character(group, std::move(coords));
}

Character Character::z_inf_lex(SparseSeq entries) {
  return Character(GroupDescriptor::z_inf_lex(),
                   canonical_sparse(std::move(entries)));
}

Character Character::rational(Rational value) {
  value.canonicalize();
  return Character(GroupDescriptor::rationals(), std::move(value));
}

Character Character::rational(std::int64_t numerator,
                              std::int64_t denominator) {
  require(denominator != 0, errc::invalid_argument,
          "rational denominator must be nonzero");
  Rational q(static_cast<long>(numerator), static_cast<long>(denominator));
  q.canonicalize();
  return Character(GroupDescriptor::rationals(), std::move(q));
}

Character Character::identity(const GroupDescriptor& group) {
  switch (group.kind) {
    case GroupKind::ZLex:
      return Character(group, ZLexPayload(group.dim, 0));
    case GroupKind::ZInfLex:
      return Character(group, SparseSeq{});
    case GroupKind::Rationals:
      return Character(group, Rational(0));
  }
  fail(errc::invalid_argument, "unknown group kind");
}

bool Character::is_identity() const {
  switch (group_.kind) {
    case GroupKind::ZLex: {
      for (std::int64_t v : z_lex_coords())
        if (v != 0) return false;
      return true;
    }
    case GroupKind::ZInfLex:
      return sparse_entries().empty();
    case GroupKind::Rationals:
      return rational_value() == 0;
  }
  return false;
}

const Character::ZLexPayload& Character::z_lex_coords() const {
  return std::get<ZLexPayload>(payload_);
}

const SparseSeq& Character::sparse_entries() const {
  return std::get<SparseSeq>(payload_);
}

const Rational& Character::rational_value() const {
  return std::get<Rational>(payload_);
}

bool Character::operator==(const Character& other) const {
  return group_ == other.group_ && payload_ == other.payload_;
}

std::string Character::to_string() const {
  std::ostringstream os;
  switch (group_.kind) {
    case GroupKind::ZLex: {
      os << "(";
      const auto& v = z_lex_coords();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
      }
      os << ")";
      break;
    }
    case GroupKind::ZInfLex: {
      os << "{";
      const auto& v = sparse_entries();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].index << ":" << v[i].value;
      }
      os << "}";
      break;
    }
    case GroupKind::Rationals:
      os << rational_value().get_str();
      break;
  }
  return os.str();
}

namespace {

void check_same_group(const Character& a, const Character& b) {
  if (a.group() != b.group()) {
    fail(errc::group_mismatch,
         "characters live on " + a.group().to_string() + " and " +
             b.group().to_string());
  }
}

}  // namespace

Character combine(const Character& a, const Character& b) {
  check_same_group(a, b);
  switch (a.group().kind) {
    case GroupKind::ZLex: {
      std::vector<std::int64_t> sum = a.z_lex_coords();
      const auto& other = b.z_lex_coords();
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other[i];
      return Character::z_lex(std::move(sum));
    }
    case GroupKind::ZInfLex: {
      const SparseSeq& x = a.sparse_entries();
      const SparseSeq& y = b.sparse_entries();
      SparseSeq merged;
      merged.reserve(x.size() + y.size());
      std::size_t i = 0, j = 0;
      while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].index < y[j].index)) {
          merged.push_back(x[i++]);
        } else if (i == x.size() || y[j].index < x[i].index) {
          merged.push_back(y[j++]);
        } else {
          std::int64_t v = x[i].value + y[j].value;
          if (v != 0) merged.push_back({x[i].index, v});
          ++i;
          ++j;
        }
      }
      return Character::z_inf_lex(std::move(merged));
    }
    case GroupKind::Rationals:
      return Character::rational(a.rational_value() + b.rational_value());
  }
  fail(errc::invalid_argument, "unknown group kind");
}

Character negate(const Character& a) {
  switch (a.group().kind) {
    case GroupKind::ZLex: {
      std::vector<std::int64_t> v = a.z_lex_coords();
      for (std::int64_t& x : v) x = -x;
      return Character::z_lex(std::move(v));
    }
    case GroupKind::ZInfLex: {
      SparseSeq v = a.sparse_entries();
      for (SparseEntry& e : v) e.value = -e.value;
      return Character::z_inf_lex(std::move(v));
    }
    case GroupKind::Rationals:
      return Character::rational(-a.rational_value());
  }
  fail(errc::invalid_argument, "unknown group kind");
}

namespace {

Ordering from_sign(int s) {
  if (s < 0) return Ordering::less;
  if (s > 0) return Ordering::greater;
  return Ordering::equal;
}

}  // namespace

Ordering compare(const Character& a, const Character& b) {
  check_same_group(a, b);
  switch (a.group().kind) {
    case GroupKind::ZLex: {
      const auto& x = a.z_lex_coords();
      const auto& y = b.z_lex_coords();
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) return x[i] < y[i] ? Ordering::less : Ordering::greater;
      }
      return Ordering::equal;
    }
    case GroupKind::ZInfLex: {
      // Smallest index at which the stored sequences differ decides;
      // missing entries read as zero.
      const SparseSeq& x = a.sparse_entries();
      const SparseSeq& y = b.sparse_entries();
      std::size_t i = 0, j = 0;
      while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].index < y[j].index)) {
          return x[i].value < 0 ? Ordering::less : Ordering::greater;
        }
        if (i == x.size() || y[j].index < x[i].index) {
          return y[j].value > 0 ? Ordering::less : Ordering::greater;
        }
        if (x[i].value != y[j].value) {
          return x[i].value < y[j].value ? Ordering::less : Ordering::greater;
        }
        ++i;
        ++j;
      }
      return Ordering::equal;
    }
    case GroupKind::Rationals:
      return from_sign(cmp(a.rational_value(), b.rational_value()));
  }
  fail(errc::invalid_argument, "unknown group kind");
}

int sgn_plus(const Character& a) {
  switch (a.group().kind) {
    case GroupKind::ZLex: {
      for (std::int64_t v : a.z_lex_coords()) {
        if (v != 0) return v > 0 ? 1 : -1;
      }
      return 0;
    }
    case GroupKind::ZInfLex: {
      const SparseSeq& v = a.sparse_entries();
      if (v.empty()) return 0;
      return v.front().value > 0 ? 1 : -1;
    }
    case GroupKind::Rationals: {
      int s = sgn(a.rational_value());
      return s;
    }
  }
  fail(errc::invalid_argument, "unknown group kind");
}

std::int64_t lacunarity_constant(std::span<const Character> elements) {
  require(!elements.empty(), errc::empty_set,
          "lacunarity constant of an empty set");
  std::vector<std::int64_t> values;
  values.reserve(elements.size());
  for (const Character& c : elements) {
    require(c.group().kind == GroupKind::ZLex && c.group().dim == 1,
            errc::unsupported_group,
            "lacunarity constant is defined on z_lex(1) only");
    std::int64_t v = c.z_lex_coords()[0];
    require(v >= 0, errc::invalid_argument,
            "lacunary sets must lie in the nonnegative cone");
    values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  // Exhaustive over chi in 0..max(E): the interval [chi, 2*chi] misses E
  // entirely once chi exceeds max(E).
  std::int64_t best = 0;
  const std::int64_t top = values.back();
  for (std::int64_t chi = 0; chi <= top; ++chi) {
    auto lo = std::lower_bound(values.begin(), values.end(), chi);
    auto hi = std::upper_bound(values.begin(), values.end(), 2 * chi);
    best = std::max<std::int64_t>(best, hi - lo);
  }
  return best;
}

}  // namespace haco

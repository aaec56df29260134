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

#ifndef HACO_DIRICHLET_HPP_
#define HACO_DIRICHLET_HPP_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "haco/spectrum.hpp"

namespace haco {

inline constexpr std::int64_t kDefaultNMax = 1'000'000;

// An ordinary Dirichlet polynomial sum a(n) n^{-s}, stored as its finitely
// supported coefficient map. Keys are bounded by n_max so trial-division
// factorization stays exact and fast.
class DirichletPolynomial {
 public:
  explicit DirichletPolynomial(std::int64_t n_max = kDefaultNMax);

  std::int64_t n_max() const noexcept { return n_max_; }
  const std::map<std::int64_t, Complex>& coeffs() const noexcept {
    return coeffs_;
  }
  bool empty() const noexcept { return coeffs_.empty(); }

  Complex at(std::int64_t n) const;
  void set(std::int64_t n, Complex value);  // exact zero removes the term
  void add(std::int64_t n, Complex value);

  bool operator==(const DirichletPolynomial&) const = default;

 private:
  std::int64_t n_max_;
  std::map<std::int64_t, Complex> coeffs_;
};

// Exact prime factorization of n as a sparse exponent sequence over prime
// indices (index j <-> the j-th prime), i.e. a ZInfLex character in the
// nonnegative orthant. factorize(1) is the empty sequence.
Character factorize(std::int64_t n, std::int64_t n_max = kDefaultNMax);

// Inverse of factorize: the integer with the given prime exponents.
// OUT_OF_RANGE when the product exceeds n_max.
std::int64_t from_multi_index(const Character& alpha,
                              std::int64_t n_max = kDefaultNMax);

// The Bohr lift: coefficient a(n) moves to the exponent sequence of n. The
// image is supported in the nonnegative orthant of ZInfLex.
Spectrum bohr_lift(const DirichletPolynomial& d);

// One kernel term of the sigma_u operator: a finitely supported nonnegative
// sequence u with its weight.
struct SigmaWeight {
  SparseSeq u;
  Complex weight;
};

// b(p^alpha) = sum over u with sigma_u(alpha) in the nonnegative orthant of
// weight(u) * a(p^{sigma_u(alpha)}). The output support is computed by
// pulling the input support back through each sigma_u inverse, so no
// unbounded exponent domain is ever scanned.
DirichletPolynomial sigma_operator(const std::vector<SigmaWeight>& weights,
                                   const DirichletPolynomial& d);

// One kernel term of the root-rescaling operator: scaling by 1/q.
struct RootWeight {
  std::int64_t q = 1;  // >= 1
  Complex weight;
};

// b(n) = sum over q such that n is an exact q-th power of
// weight(q) * a(n^{1/q}). Exact q-th powers are detected by integer root
// extraction with re-exponentiation.
DirichletPolynomial root_rescale_operator(
    const std::vector<RootWeight>& weights, const DirichletPolynomial& d);

// sum a(n) n^{-s} (finite sum, any complex s).
Complex evaluate(const DirichletPolynomial& d, Complex s);

// Max of |evaluate(d, it)| over a uniform sample of t in [-t_range, t_range]:
// a lower bound for the sup norm on the right half-plane, approached by
// dense sampling on the boundary line. The matching upper bound is the
// coefficient l1 mass of the Bohr lift.
double sup_estimate(const DirichletPolynomial& d,
                    std::int64_t t_samples = 100'000,
                    double t_range = 1'000.0);

// sum over prime keys p of |a(p)|: the coefficient mass on the exponent
// sequences with unit total degree.
double bohr_prime_sum(const DirichletPolynomial& d);

}  // namespace haco

#endif  // HACO_DIRICHLET_HPP_

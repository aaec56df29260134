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

#include "haco/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>

#include "haco/automorphism.hpp"

namespace haco {

namespace {

// Process-wide prime sieve, grown on demand and read-only between growths.
std::mutex g_prime_mutex;
std::vector<std::uint8_t> g_is_prime;  // index n -> primality, size limit+1
std::vector<std::int64_t> g_primes;

void ensure_sieve_locked(std::int64_t limit) {
  if (static_cast<std::int64_t>(g_is_prime.size()) > limit) return;
  std::int64_t target = std::max<std::int64_t>(limit, kDefaultNMax);
  g_is_prime.assign(static_cast<std::size_t>(target) + 1, 1);
  g_is_prime[0] = 0;
  if (target >= 1) g_is_prime[1] = 0;
  for (std::int64_t p = 2; p * p <= target; ++p) {
    if (!g_is_prime[p]) continue;
    for (std::int64_t q = p * p; q <= target; q += p) g_is_prime[q] = 0;
  }
  g_primes.clear();
  for (std::int64_t p = 2; p <= target; ++p)
    if (g_is_prime[p]) g_primes.push_back(p);
}

bool prime_lookup(std::int64_t n) {
  std::lock_guard<std::mutex> lock(g_prime_mutex);
  ensure_sieve_locked(n);
  return n >= 2 && g_is_prime[static_cast<std::size_t>(n)] != 0;
}

std::int64_t nth_prime(std::int32_t index_1based, std::int64_t hint) {
  std::lock_guard<std::mutex> lock(g_prime_mutex);
  ensure_sieve_locked(hint);
  require(index_1based >= 1 &&
              static_cast<std::size_t>(index_1based) <= g_primes.size(),
          errc::out_of_range,
          "prime index " + std::to_string(index_1based) +
              " exceeds the sieve");
  return g_primes[static_cast<std::size_t>(index_1based) - 1];
}

void check_key(std::int64_t n, std::int64_t n_max) {
  require(n >= 1 && n <= n_max, errc::out_of_range,
          "coefficient index " + std::to_string(n) + " outside [1, " +
              std::to_string(n_max) + "]");
}

}  // namespace

DirichletPolynomial::DirichletPolynomial(std::int64_t n_max) : n_max_(n_max) {
  require(n_max >= 1, errc::invalid_argument, "n_max must be >= 1");
}

Complex DirichletPolynomial::at(std::int64_t n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

void DirichletPolynomial::set(std::int64_t n, Complex value) {
  check_key(n, n_max_);
  if (value.real() == 0.0 && value.imag() == 0.0) {
    coeffs_.erase(n);
  } else {
    coeffs_.insert_or_assign(n, value);
  }
}

void DirichletPolynomial::add(std::int64_t n, Complex value) {
  check_key(n, n_max_);
  auto [it, inserted] = coeffs_.try_emplace(n, value);
  if (!inserted) it->second += value;
  if (it->second.real() == 0.0 && it->second.imag() == 0.0) coeffs_.erase(it);
}

Character factorize(std::int64_t n, std::int64_t n_max) {
  check_key(n, n_max);
  SparseSeq exponents;
  std::int64_t rest = n;
  {
    std::lock_guard<std::mutex> lock(g_prime_mutex);
    ensure_sieve_locked(n_max);
    for (std::size_t j = 0; j < g_primes.size(); ++j) {
      const std::int64_t p = g_primes[j];
      if (p * p > rest) break;
      if (rest % p != 0) continue;
      std::int64_t e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      exponents.push_back({static_cast<std::int32_t>(j + 1), e});
    }
    if (rest > 1) {
      auto it = std::lower_bound(g_primes.begin(), g_primes.end(), rest);
      const auto rank = static_cast<std::int32_t>(it - g_primes.begin()) + 1;
      exponents.push_back({rank, 1});
    }
  }
  return Character::z_inf_lex(canonical_sparse(std::move(exponents)));
}

std::int64_t from_multi_index(const Character& alpha, std::int64_t n_max) {
  require(alpha.group().kind == GroupKind::ZInfLex, errc::group_mismatch,
          "exponent sequences live on z_inf_lex");
  std::int64_t result = 1;
  for (const SparseEntry& e : alpha.sparse_entries()) {
    require(e.value >= 0, errc::invalid_argument,
            "exponent sequence must be nonnegative to name an integer");
    const std::int64_t p = nth_prime(e.index, n_max);
    for (std::int64_t i = 0; i < e.value; ++i) {
      require(result <= n_max / p, errc::out_of_range,
              "prime power product exceeds n_max = " + std::to_string(n_max));
      result *= p;
    }
  }
  return result;
}

Spectrum bohr_lift(const DirichletPolynomial& d) {
  Spectrum out(GroupDescriptor::z_inf_lex());
  for (const auto& [n, a] : d.coeffs()) out.set(factorize(n, d.n_max()), a);
  return out;
}

DirichletPolynomial sigma_operator(const std::vector<SigmaWeight>& weights,
                                   const DirichletPolynomial& d) {
  std::vector<SigmaU> maps;
  maps.reserve(weights.size());
  for (const SigmaWeight& w : weights) maps.push_back(make_sigma_u(w.u));

  // Output support: pull the input support back through each sigma_u.
  std::set<Character, CharacterLess> candidates;
  for (const SigmaU& map : maps) {
    const Automorphism inverse = invert(Automorphism{map});
    for (const auto& [n, a] : d.coeffs())
      candidates.insert(apply(inverse, factorize(n, d.n_max())));
  }

  DirichletPolynomial out(d.n_max());
  for (const Character& alpha : candidates) {
    const std::int64_t key = from_multi_index(alpha, d.n_max());
    Complex value{0.0, 0.0};
    for (std::size_t i = 0; i < weights.size(); ++i) {
      const Character image = apply(Automorphism{maps[i]}, alpha);
      if (!in_nonneg_orthant(image)) continue;
      value += weights[i].weight * d.at(from_multi_index(image, d.n_max()));
    }
    out.set(key, value);
  }
  return out;
}

namespace {

// Largest r with r^q == n, or 0 when n is not an exact q-th power.
std::int64_t exact_root(std::int64_t n, std::int64_t q) {
  if (q == 1) return n;
  if (n == 1) return 1;
  auto power_matches = [&](std::int64_t r) -> int {
    // returns -1/0/+1 as r^q compares to n, saturating on overflow
    __int128 acc = 1;
    for (std::int64_t i = 0; i < q; ++i) {
      acc *= r;
      if (acc > n) return 1;
    }
    if (acc == n) return 0;
    return -1;
  };
  const double guess = std::pow(static_cast<double>(n),
                                1.0 / static_cast<double>(q));
  const auto base = static_cast<std::int64_t>(std::llround(guess));
  for (std::int64_t r = std::max<std::int64_t>(1, base - 2); r <= base + 2;
       ++r) {
    if (power_matches(r) == 0) return r;
  }
  return 0;
}

}  // namespace

DirichletPolynomial root_rescale_operator(
    const std::vector<RootWeight>& weights, const DirichletPolynomial& d) {
  for (const RootWeight& w : weights) {
    require(w.q >= 1, errc::invalid_argument, "root order q must be >= 1");
  }

  // Output keys are exact q-th powers of input keys.
  std::set<std::int64_t> candidates;
  for (const RootWeight& w : weights) {
    for (const auto& [m, a] : d.coeffs()) {
      __int128 power = 1;
      bool overflow = false;
      for (std::int64_t i = 0; i < w.q; ++i) {
        power *= m;
        if (power > d.n_max()) {
          overflow = m > 1;
          break;
        }
      }
      require(!overflow, errc::out_of_range,
              "key " + std::to_string(m) + " raised to power " +
                  std::to_string(w.q) + " exceeds n_max");
      candidates.insert(static_cast<std::int64_t>(power));
    }
  }

  DirichletPolynomial out(d.n_max());
  for (const std::int64_t n : candidates) {
    Complex value{0.0, 0.0};
    for (const RootWeight& w : weights) {
      const std::int64_t r = exact_root(n, w.q);
      if (r != 0) value += w.weight * d.at(r);
    }
    out.set(n, value);
  }
  return out;
}

Complex evaluate(const DirichletPolynomial& d, Complex s) {
  Complex sum{0.0, 0.0};
  for (const auto& [n, a] : d.coeffs()) {
    sum += a * std::exp(-s * std::log(static_cast<double>(n)));
  }
  return sum;
}

double sup_estimate(const DirichletPolynomial& d, std::int64_t t_samples,
                    double t_range) {
  require(t_samples >= 1, errc::invalid_argument, "need t_samples >= 1");
  double best = 0.0;
  for (std::int64_t j = 0; j < t_samples; ++j) {
    const double t =
        t_samples == 1
            ? 0.0
            : -t_range + 2.0 * t_range * static_cast<double>(j) /
                             static_cast<double>(t_samples - 1);
    best = std::max(best, std::abs(evaluate(d, Complex{0.0, t})));
  }
  return best;
}

double bohr_prime_sum(const DirichletPolynomial& d) {
  double sum = 0.0;
  for (const auto& [n, a] : d.coeffs()) {
    if (prime_lookup(n)) sum += std::abs(a);
  }
  return sum;
}

}  // namespace haco

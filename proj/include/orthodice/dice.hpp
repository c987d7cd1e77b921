// Copyright 2026 The orthodice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Discrete uniform counting laws ("dice") and the orthogonal family whose mean
// equals its variance. Everything here is exact: supports, means and indices
// are arbitrary precision integers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "orthodice/numeric.hpp"

namespace orthodice {

// Support {m, ..., n} of a discrete uniform count law.
struct SupportPair {
  Integer m;
  Integer n;

  SupportPair() = default;
  SupportPair(Integer lo, Integer hi) : m(std::move(lo)), n(std::move(hi)) {}

  // Throws InvalidSupport unless 0 <= m <= n and (m, n) != (0, 0).
  void validate() const;

  Integer sides() const { return n - m + 1; }
  Rational mean() const;
  // ((n - m + 1)^2 - 1) / 12
  Rational variance() const;

  friend bool operator==(const SupportPair&, const SupportPair&) = default;
};

// Member of the orthogonal family, identified by its canonical index k.
struct OrthogonalDie {
  Integer k;
  Integer m;
  Integer n;
  Integer c;         // (m + n) / 2, always integral here
  Integer sides;     // n - m + 1 = 2k + 3
  Integer position;  // ceil(2k / 3), the rank of k in the index set
  // Set only when a primality check of `sides` was requested.
  std::optional<bool> sides_prime;

  SupportPair support() const { return {m, n}; }

  friend bool operator==(const OrthogonalDie& a, const OrthogonalDie& b) {
    return a.k == b.k && a.m == b.m && a.n == b.n && a.c == b.c &&
           a.sides == b.sides && a.position == b.position;
  }
};

enum class DiceVariant { Orthogonal, PositiveDie, NegativeDie };

struct DiceClass {
  DiceVariant variant;
  bool degenerate;  // m == n, the Dirac law
};

const char* variant_name(DiceVariant v) noexcept;

// K = center + L with L uniform on {-halfwidth, ..., halfwidth}.
struct DieDecomposition {
  Integer center;
  Integer halfwidth;
};

// k >= 1 and k not a multiple of 3.
bool in_index_set(const Integer& k);

// c(k) = (k + 1)(k + 2) / 3
Integer mean_at_index(const Integer& k);

OrthogonalDie die_from_index(const Integer& k);

// First `count` members in increasing k.
std::vector<OrthogonalDie> enumerate_orthogonal(std::size_t count);

// p must be >= 5 and coprime to 6. Prime factors are not inspected; pass
// check_primality to annotate `sides_prime` (BPSW, deterministic below 2^64).
OrthogonalDie die_from_prime_product(const Integer& p,
                                     bool check_primality = false);

// Checks c = (m + n)/2, c = ((n - m + 1)^2 - 1)/12 and the k-form of m, n in
// integer arithmetic.
bool verify_orthogonality(const OrthogonalDie& die);

DiceClass classify(const SupportPair& support);

// Closest mean to c_star; ties go to the smaller index.
OrthogonalDie nearest_die(const Rational& c_star);

OrthogonalDie first_die_with_mean_at_least(const Integer& c_min);

// Number of j in [1, n] coprime to 6, closed form valid for n >= 5.
Integer count_coprime23(const Integer& n);

// Same count by scanning gcd(j, 6) for every j <= n.
std::uint64_t count_coprime23_oracle(std::uint64_t n);

DieDecomposition decompose(const OrthogonalDie& die);

// Sieve of Eratosthenes; returns all primes <= limit.
std::vector<std::uint32_t> sieve_primes(std::uint32_t limit);

// 1-based rank of n among the primes, or nullopt if n is not prime.
std::optional<std::size_t> prime_rank(std::uint32_t n);

}  // namespace orthodice

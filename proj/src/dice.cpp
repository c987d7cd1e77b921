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

#include "orthodice/dice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orthodice/error.hpp"

namespace orthodice {

void SupportPair::validate() const {
  if (m < 0 || n < m || (m == 0 && n == 0)) {
    throw Error(ErrorCode::InvalidSupport,
                "support (" + to_string(m) + ", " + to_string(n) +
                    ") needs 0 <= m <= n and (m, n) != (0, 0)");
  }
}

Rational SupportPair::mean() const {
  Rational q(m + n, 2);
  q.canonicalize();
  return q;
}

Rational SupportPair::variance() const {
  const Integer s = sides();
  Rational q(s * s - 1, 12);
  q.canonicalize();
  return q;
}

const char* variant_name(DiceVariant v) noexcept {
  switch (v) {
    case DiceVariant::Orthogonal: return "Orthogonal";
    case DiceVariant::PositiveDie: return "PositiveDie";
    case DiceVariant::NegativeDie: return "NegativeDie";
  }
  return "Unknown";
}

bool in_index_set(const Integer& k) {
  return k >= 1 && mpz_divisible_ui_p(k.get_mpz_t(), 3) == 0;
}

Integer mean_at_index(const Integer& k) {
  Integer c = (k + 1) * (k + 2);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), 3);
  return c;
}

OrthogonalDie die_from_index(const Integer& k) {
  if (!in_index_set(k)) {
    throw Error(ErrorCode::IndexNotInI,
                "index k=" + to_string(k) +
                    " must be a positive integer not divisible by 3");
  }
  OrthogonalDie die;
  die.k = k;
  die.m = k * k - 1;
  mpz_divexact_ui(die.m.get_mpz_t(), die.m.get_mpz_t(), 3);
  die.n = 2 * k + die.m + 2;
  die.c = mean_at_index(k);
  die.sides = 2 * k + 3;
  die.position = ceil_div(2 * k, 3);
  return die;
}

std::vector<OrthogonalDie> enumerate_orthogonal(std::size_t count) {
  std::vector<OrthogonalDie> dice;
  dice.reserve(count);
  for (unsigned long k = 1; dice.size() < count; ++k) {
    if (k % 3 != 0) dice.push_back(die_from_index(Integer(k)));
  }
  return dice;
}

OrthogonalDie die_from_prime_product(const Integer& p, bool check_primality) {
  if (p < 5 || mpz_divisible_ui_p(p.get_mpz_t(), 2) ||
      mpz_divisible_ui_p(p.get_mpz_t(), 3)) {
    throw Error(ErrorCode::InvalidSideCount,
                "side count p=" + to_string(p) +
                    " must be >= 5 and coprime to 2 and 3");
  }
  OrthogonalDie die;
  die.sides = p;
  die.k = (p - 3) / 2;
  const Integer p_minus_one = p - 1;
  die.m = (p - 5) * p_minus_one;
  mpz_divexact_ui(die.m.get_mpz_t(), die.m.get_mpz_t(), 12);
  die.n = (p + 7) * p_minus_one;
  mpz_divexact_ui(die.n.get_mpz_t(), die.n.get_mpz_t(), 12);
  die.c = p * p - 1;
  mpz_divexact_ui(die.c.get_mpz_t(), die.c.get_mpz_t(), 12);
  die.position = ceil_div(p, 3) - 1;
  if (check_primality) {
    die.sides_prime = mpz_probab_prime_p(p.get_mpz_t(), 30) > 0;
  }
  return die;
}

bool verify_orthogonality(const OrthogonalDie& die) {
  const Integer& k = die.k;
  if (!in_index_set(k)) return false;
  if (3 * die.m != k * k - 1) return false;
  if (die.n != 2 * k + die.m + 2) return false;
  if (2 * die.c != die.m + die.n) return false;
  const Integer sides = die.n - die.m + 1;
  if (sides != die.sides) return false;
  // variance ((n - m + 1)^2 - 1)/12 equals the mean
  return 12 * die.c == sides * sides - 1;
}

DiceClass classify(const SupportPair& support) {
  support.validate();
  const Integer gap = support.n - support.m - 2;
  const Integer bound = 4 * (3 * support.m + 1);
  DiceVariant variant = DiceVariant::NegativeDie;
  if (gap > 0) {
    const Integer gap_sq = gap * gap;
    if (gap_sq == bound) {
      variant = DiceVariant::Orthogonal;
    } else if (gap_sq > bound) {
      variant = DiceVariant::PositiveDie;
    }
  }
  return {variant, support.m == support.n};
}

namespace {

// Smallest k with c(k) >= target, ignoring the index set; target >= 0.
Integer real_root_floor(const Integer& target) {
  // c(k) >= target  <=>  k >= (sqrt(12 target + 1) - 3) / 2
  const Integer root = isqrt(12 * target + 1);
  Integer k = (root - 3) / 2;
  return k < 1 ? Integer(1) : k;
}

}  // namespace

OrthogonalDie nearest_die(const Rational& c_star) {
  if (c_star <= 0) {
    throw Error(ErrorCode::InvalidArgument, "target mean must be positive");
  }
  Integer floor_target;
  mpz_fdiv_q(floor_target.get_mpz_t(), c_star.get_num_mpz_t(),
             c_star.get_den_mpz_t());
  const Integer center = real_root_floor(floor_target);
  // c(k) is increasing, so the argmin lies among the members of the index
  // set nearest the real root; a window of +-4 covers two on each side.
  Integer best_k;
  Rational best_gap;
  for (Integer k = center - 4; k <= center + 4; ++k) {
    if (!in_index_set(k)) continue;
    Rational gap = Rational(mean_at_index(k)) - c_star;
    gap = abs(gap);
    if (best_k == 0 || gap < best_gap) {
      best_k = k;
      best_gap = gap;
    }
  }
  return die_from_index(best_k);
}

OrthogonalDie first_die_with_mean_at_least(const Integer& c_min) {
  if (c_min < 1) {
    throw Error(ErrorCode::InvalidArgument, "minimum mean must be >= 1");
  }
  Integer k = real_root_floor(c_min) - 2;
  if (k < 1) k = 1;
  while (!in_index_set(k) || mean_at_index(k) < c_min) ++k;
  return die_from_index(k);
}

Integer count_coprime23(const Integer& n) {
  if (n < 5) {
    throw Error(ErrorCode::DomainTooSmall,
                "closed form needs n >= 5, got " + to_string(n));
  }
  Integer count = ceil_div(n, 3);
  if (mpz_fdiv_ui(Integer(n - 4).get_mpz_t(), 6) == 0) count -= 1;
  return count;
}

std::uint64_t count_coprime23_oracle(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t j = 1; j <= n; ++j) {
    if (std::gcd(j, std::uint64_t{6}) == 1) ++count;
  }
  return count;
}

DieDecomposition decompose(const OrthogonalDie& die) {
  Integer center = die.m + die.n;
  Integer halfwidth = die.n - die.m;
  mpz_divexact_ui(center.get_mpz_t(), center.get_mpz_t(), 2);
  mpz_divexact_ui(halfwidth.get_mpz_t(), halfwidth.get_mpz_t(), 2);
  return {center, halfwidth};
}

std::vector<std::uint32_t> sieve_primes(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::optional<std::size_t> prime_rank(std::uint32_t n) {
  const auto primes = sieve_primes(n);
  if (primes.empty() || primes.back() != n) return std::nullopt;
  return primes.size();
}

}  // namespace orthodice

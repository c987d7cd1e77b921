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

#include "orthodice/law.hpp"

#include <algorithm>
#include <cmath>

#include "orthodice/error.hpp"

namespace orthodice {

Rational DiscreteLaw::total() const {
  Rational sum = 0;
  for (const auto& p : probs) sum += p;
  return sum;
}

Rational DiscreteLaw::mean() const {
  Rational sum = 0;
  for (std::size_t j = 0; j < probs.size(); ++j)
    sum += probs[j] * Rational(offset + static_cast<long>(j));
  return sum;
}

Rational DiscreteLaw::variance() const {
  Rational second = 0;
  for (std::size_t j = 0; j < probs.size(); ++j) {
    const Rational x(offset + static_cast<long>(j));
    second += probs[j] * x * x;
  }
  const Rational mu = mean();
  return second - mu * mu;
}

double NumericLaw::at(std::int64_t x) const {
  if (x < offset || x > last()) return 0.0;
  return probs[static_cast<std::size_t>(x - offset)];
}

NumericLaw to_numeric(const DiscreteLaw& law) {
  NumericLaw out;
  out.offset = law.offset;
  out.probs.reserve(law.probs.size());
  for (const auto& p : law.probs) out.probs.push_back(to_double(p));
  return out;
}

ThinningParam::ThinningParam(Rational a) : a_(std::move(a)) {
  a_.canonicalize();
  if (a_ <= 0 || a_ > 1) {
    throw Error(ErrorCode::InvalidArgument,
                "thinning parameter must lie in (0, 1], got " + to_string(a_));
  }
}

MomentSummary MomentSummary::of(const SupportPair& support) {
  support.validate();
  return {support.mean(), support.variance()};
}

MomentSummary MomentSummary::thinned(const ThinningParam& a) const {
  const Rational& p = a.value();
  return {p * c, p * c + p * p * (delta_sq - c)};
}

namespace {

constexpr double kSingularBand = 1e-8;
constexpr double kMaxSummedSides = 1e6;

// psi_{m,n}(s) where one_minus_s = 1 - s is passed separately to keep
// precision near s = 1.
double pgf_core(const SupportPair& support, double s, double one_minus_s) {
  const double m = to_double(support.m);
  const double sides = to_double(support.sides());
  if (one_minus_s <= 0.0) return 1.0;
  if (s <= 0.0) return support.m == 0 ? 1.0 / sides : 0.0;
  if (one_minus_s < kSingularBand && sides <= kMaxSummedSides) {
    // removable singularity: sum t^i directly
    double term = std::pow(s, m);
    double sum = 0.0;
    const auto count = static_cast<std::int64_t>(sides);
    for (std::int64_t i = 0; i < count; ++i) {
      sum += term;
      term *= s;
    }
    return sum / sides;
  }
  const double log_s = std::log1p(-one_minus_s);
  // (s^m - s^{n+1}) / (S (1 - s)) = -s^m expm1(S log s) / (S (1 - s))
  return -std::exp(m * log_s) * std::expm1(sides * log_s) /
         (sides * one_minus_s);
}

}  // namespace

double pgf_eval(const SupportPair& support, double t) {
  support.validate();
  if (t < 0.0 || t > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "pgf argument must lie in [0, 1]");
  }
  return pgf_core(support, t, 1.0 - t);
}

double thinned_pgf_eval(const SupportPair& support, const ThinningParam& a,
                        double t) {
  support.validate();
  if (t < 0.0 || t > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "pgf argument must lie in [0, 1]");
  }
  const double one_minus_s = a.as_double() * (1.0 - t);
  return pgf_core(support, 1.0 - one_minus_s, one_minus_s);
}

double laplace_functional(const SupportPair& support, double s) {
  if (s <= 0.0 || s > 1.0) {
    throw Error(ErrorCode::InvalidArgument,
                "Laplace functional argument must lie in (0, 1]");
  }
  return pgf_eval(support, s);
}

DiscreteLaw thinned_pmf(const SupportPair& support, const ThinningParam& a,
                        std::int64_t cap) {
  support.validate();
  if (support.n > cap) {
    throw Error(ErrorCode::SupportTooLarge,
                "support upper bound " + to_string(support.n) +
                    " exceeds the pmf cap " + std::to_string(cap));
  }
  const auto m = static_cast<unsigned long>(support.m.get_ui());
  const auto n = static_cast<unsigned long>(support.n.get_ui());
  const Integer sides = support.sides();

  DiscreteLaw law;
  law.offset = 0;
  law.probs.assign(n + 1, Rational(0));
  if (a.value() == 1) {
    const Rational p(1, sides);
    for (unsigned long j = m; j <= n; ++j) law.probs[j] = p;
    return law;
  }

  // sum_{i=m}^{n} (a t + b)^i = Q(t) / (a (1 - t)) with
  // Q(t) = (a t + b)^m - (a t + b)^{n+1} and Q(1) = 0, so the coefficients of
  // Q / (1 - t) are prefix sums of Q's. With a = u/v, w = v - u everything is
  // scaled by v^{n+1} to stay in integers.
  const Integer& u = a.value().get_num();
  const Integer& v = a.value().get_den();
  const Integer w = v - u;

  Integer v_pow_gap;  // v^{n+1-m}
  mpz_pow_ui(v_pow_gap.get_mpz_t(), v.get_mpz_t(), n + 1 - m);

  Integer low;   // C(m, i) u^i w^{m-i}
  Integer high;  // C(n+1, i) u^i w^{n+1-i}
  mpz_pow_ui(low.get_mpz_t(), w.get_mpz_t(), m);
  mpz_pow_ui(high.get_mpz_t(), w.get_mpz_t(), n + 1);

  Integer denominator;  // u S v^n
  mpz_pow_ui(denominator.get_mpz_t(), v.get_mpz_t(), n);
  denominator *= u * sides;

  Integer prefix = 0;
  Integer step;
  for (unsigned long i = 0; i <= n; ++i) {
    if (i <= m) prefix += low * v_pow_gap;
    prefix -= high;
    Rational p(prefix, denominator);
    p.canonicalize();
    law.probs[i] = std::move(p);

    if (i < m) {
      low *= u;
      low *= m - i;
      step = w * (i + 1);
      mpz_divexact(low.get_mpz_t(), low.get_mpz_t(), step.get_mpz_t());
    }
    high *= u;
    high *= n + 1 - i;
    step = w * (i + 1);
    mpz_divexact(high.get_mpz_t(), high.get_mpz_t(), step.get_mpz_t());
  }
  return law;
}

Rational factorial_moment(const SupportPair& support, const ThinningParam& a,
                          unsigned r) {
  support.validate();
  if (r == 0) return Rational(1);
  // sum_{k=m}^{n} (k)_r = [(n+1)_{r+1} - (m)_{r+1}] / (r + 1)
  const Integer sum = falling_factorial(support.n + 1, r + 1) -
                      falling_factorial(support.m, r + 1);
  Rational moment(sum, Integer(r + 1) * support.sides());
  moment.canonicalize();
  Rational a_pow(1);
  for (unsigned i = 0; i < r; ++i) a_pow *= a.value();
  return a_pow * moment;
}

Rational raw_moment(const SupportPair& support, const ThinningParam& a,
                    unsigned r) {
  const auto stirling = stirling2_row(r);
  Rational sum = 0;
  for (unsigned j = 0; j <= r; ++j) {
    if (stirling[j] == 0) continue;
    sum += Rational(stirling[j]) * factorial_moment(support, a, j);
  }
  return sum;
}

NumericLaw poisson_pmf(double b, double tail_tol) {
  if (!(b > 0.0) || !(tail_tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "Poisson mean and tail tolerance must be positive");
  }
  // Far enough that the remaining mass is far below any usable tolerance.
  const auto reach = static_cast<std::size_t>(
      std::ceil(b + 60.0 + 40.0 * std::sqrt(b)));
  const double log_b = std::log(b);
  std::vector<double> p(reach + 1);
  for (std::size_t k = 0; k <= reach; ++k) {
    p[k] = std::exp(-b + static_cast<double>(k) * log_b -
                    std::lgamma(static_cast<double>(k) + 1.0));
  }
  // suffix[k] = sum_{j >= k} p[j], accumulated from the small end.
  std::vector<double> suffix(reach + 2, 0.0);
  for (std::size_t k = reach + 1; k-- > 0;) suffix[k] = suffix[k + 1] + p[k];

  std::size_t cut = 0;
  while (cut < reach && suffix[cut + 1] >= tail_tol) ++cut;
  NumericLaw law;
  law.offset = 0;
  law.probs.assign(p.begin(), p.begin() + static_cast<long>(cut) + 1);
  law.tail_mass = suffix[cut + 1];
  return law;
}

double tv_distance(const NumericLaw& p, const NumericLaw& q) {
  const std::int64_t lo = std::min(p.offset, q.offset);
  const std::int64_t hi = std::max(p.last(), q.last());
  double sum = 0.0;
  for (std::int64_t x = lo; x <= hi; ++x) sum += std::fabs(p.at(x) - q.at(x));
  return 0.5 * (sum + p.tail_mass + q.tail_mass);
}

double tv_distance(const DiscreteLaw& p, const DiscreteLaw& q) {
  const std::int64_t p_last = p.offset + static_cast<std::int64_t>(p.probs.size()) - 1;
  const std::int64_t q_last = q.offset + static_cast<std::int64_t>(q.probs.size()) - 1;
  const std::int64_t lo = std::min(p.offset, q.offset);
  const std::int64_t hi = std::max(p_last, q_last);
  auto at = [](const DiscreteLaw& law, std::int64_t x) {
    const std::int64_t idx = x - law.offset;
    if (idx < 0 || idx >= static_cast<std::int64_t>(law.probs.size()))
      return Rational(0);
    return law.probs[static_cast<std::size_t>(idx)];
  };
  Rational sum = 0;
  for (std::int64_t x = lo; x <= hi; ++x) sum += abs(Rational(at(p, x) - at(q, x)));
  return to_double(sum) / 2.0;
}

double sup_distance(const std::function<double(double)>& f,
                    const std::function<double(double)>& g,
                    std::size_t grid_size) {
  if (grid_size < 2) {
    throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 points");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double t =
        static_cast<double>(i) / static_cast<double>(grid_size - 1);
    worst = std::max(worst, std::fabs(f(t) - g(t)));
  }
  return worst;
}

double pgf_sup_distance(const SupportPair& support, const ThinningParam& a,
                        double b, std::size_t grid_size) {
  support.validate();
  return sup_distance(
      [&](double t) { return thinned_pgf_eval(support, a, t); },
      [b](double t) { return std::exp(b * (t - 1.0)); }, grid_size);
}

std::vector<ConvergenceRow> convergence_sequence(
    const Integer& k0, const std::vector<Integer>& indices,
    std::size_t grid_size, double tail_tol) {
  const OrthogonalDie base = die_from_index(k0);
  const double b = to_double(base.c);
  const NumericLaw poisson = poisson_pmf(b, tail_tol);

  std::vector<ConvergenceRow> rows;
  rows.reserve(indices.size());
  for (const auto& l : indices) {
    const OrthogonalDie die = die_from_index(l);
    if (l < k0) {
      throw Error(ErrorCode::InvalidArgument,
                  "index " + to_string(l) + " is below the base index " +
                      to_string(k0));
    }
    Rational a(base.c, die.c);
    a.canonicalize();
    const ThinningParam thinning(a);
    const NumericLaw thinned = to_numeric(thinned_pmf(die.support(), thinning));
    rows.push_back({l, a, tv_distance(thinned, poisson),
                    pgf_sup_distance(die.support(), thinning, b, grid_size)});
  }
  return rows;
}

}  // namespace orthodice

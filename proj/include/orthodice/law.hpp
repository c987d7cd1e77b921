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

// Probability generating functions, exact pmfs and moments of (thinned)
// uniform count laws, plus distances to the Poisson law.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "orthodice/dice.hpp"
#include "orthodice/numeric.hpp"

namespace orthodice {

// Exact pmf on {offset, offset + 1, ...}.
struct DiscreteLaw {
  std::int64_t offset = 0;
  std::vector<Rational> probs;

  Rational total() const;
  Rational mean() const;
  Rational variance() const;
};

// Floating pmf on a window. tail_mass is probability outside the window
// (for a truncated Poisson law: the mass above the last entry).
struct NumericLaw {
  std::int64_t offset = 0;
  std::vector<double> probs;
  double tail_mass = 0.0;

  std::int64_t last() const {
    return offset + static_cast<std::int64_t>(probs.size()) - 1;
  }
  double at(std::int64_t x) const;
};

NumericLaw to_numeric(const DiscreteLaw& law);

// Survival probability a in (0, 1].
class ThinningParam {
 public:
  explicit ThinningParam(Rational a);
  static ThinningParam none() { return ThinningParam(Rational(1)); }

  const Rational& value() const { return a_; }
  double as_double() const { return to_double(a_); }

 private:
  Rational a_;
};

struct MomentSummary {
  Rational c;         // mean of the count law
  Rational delta_sq;  // variance of the count law

  static MomentSummary of(const SupportPair& support);
  // Moments of the count N(A) after thinning with survival probability a.
  MomentSummary thinned(const ThinningParam& a) const;
};

template <class T>
struct FunctionalStats {
  T nu_f{};   // nu f
  T nu_g{};   // nu g
  T nu_fg{};  // nu (f g)
  T nu_f2{};  // nu f^2
};

template <class T>
struct SecondOrderStats {
  T mean{};
  T variance{};
  T covariance{};
};

// Mean/variance/covariance of N f, N g for a mixed binomial process with count
// moments (c, delta^2).
template <class T>
SecondOrderStats<T> mixed_binomial_stats(const T& c, const T& delta_sq,
                                         const FunctionalStats<T>& fs) {
  const T excess = delta_sq - c;
  return {c * fs.nu_f, c * fs.nu_f2 + excess * fs.nu_f * fs.nu_f,
          c * fs.nu_fg + excess * fs.nu_f * fs.nu_g};
}

inline SecondOrderStats<Rational> mixed_binomial_stats(
    const MomentSummary& ms, const FunctionalStats<Rational>& fs) {
  return mixed_binomial_stats<Rational>(ms.c, ms.delta_sq, fs);
}

inline SecondOrderStats<double> mixed_binomial_stats(
    const MomentSummary& ms, const FunctionalStats<double>& fs) {
  return mixed_binomial_stats<double>(to_double(ms.c), to_double(ms.delta_sq),
                                      fs);
}

// Restriction to A with nu(A) = a; fs holds moments under nu_A. For an
// orthogonal law this is (a c nu_A f, a c nu_A f^2, a c nu_A(fg)).
template <class T>
SecondOrderStats<T> restricted_stats(const T& c, const T& delta_sq,
                                     const T& a, const FunctionalStats<T>& fs) {
  const T c_a = a * c;
  const T delta_sq_a = a * c + a * a * (delta_sq - c);
  return mixed_binomial_stats<T>(c_a, delta_sq_a, fs);
}

inline SecondOrderStats<double> restricted_stats(
    const MomentSummary& ms, double a, const FunctionalStats<double>& fs) {
  return restricted_stats<double>(to_double(ms.c), to_double(ms.delta_sq), a,
                                  fs);
}

inline SecondOrderStats<Rational> restricted_stats(
    const MomentSummary& ms, const ThinningParam& a,
    const FunctionalStats<Rational>& fs) {
  return restricted_stats<Rational>(ms.c, ms.delta_sq, a.value(), fs);
}

// psi_{m,n}(t) = (t^m - t^{n+1}) / ((n - m + 1)(1 - t)), t in [0, 1].
double pgf_eval(const SupportPair& support, double t);

// psi_{m,n}(a t + 1 - a)
double thinned_pgf_eval(const SupportPair& support, const ThinningParam& a,
                        double t);

// Laplace functional E exp(-N f) = psi(s) with s = nu e^{-f} in (0, 1].
double laplace_functional(const SupportPair& support, double s);

inline constexpr std::int64_t kDefaultSupportCap = 1'000'000;

// Exact law of N(A) on {0, ..., n}; throws SupportTooLarge when n > cap.
DiscreteLaw thinned_pmf(const SupportPair& support, const ThinningParam& a,
                        std::int64_t cap = kDefaultSupportCap);

// a^r E[(K)_r], the r-th factorial moment of the thinned count.
Rational factorial_moment(const SupportPair& support, const ThinningParam& a,
                          unsigned r);

// E[N(A)^r] by the Stirling transform of factorial moments.
Rational raw_moment(const SupportPair& support, const ThinningParam& a,
                    unsigned r);

inline constexpr double kDefaultTailTol = 1e-12;
inline constexpr std::size_t kDefaultGridSize = 1001;

// Poisson(b) pmf on {0, ..., N} with N the smallest cut whose upper tail mass
// is below tail_tol. Not renormalized; tail_mass holds the remainder.
NumericLaw poisson_pmf(double b, double tail_tol = kDefaultTailTol);

// Half the l1 distance on the common window plus half of both tail masses
// (tails are taken to lie outside the other law's window).
double tv_distance(const NumericLaw& p, const NumericLaw& q);
double tv_distance(const DiscreteLaw& p, const DiscreteLaw& q);

// max over a uniform grid on [0, 1] of |f(t) - g(t)|
double sup_distance(const std::function<double(double)>& f,
                    const std::function<double(double)>& g,
                    std::size_t grid_size = kDefaultGridSize);

// max_t |psi^a_{m,n}(t) - exp(b (t - 1))| over a uniform grid.
double pgf_sup_distance(const SupportPair& support, const ThinningParam& a,
                        double b, std::size_t grid_size = kDefaultGridSize);

struct ConvergenceRow {
  Integer index;
  Rational a;
  double tv_distance = 0.0;
  double sup_distance = 0.0;
};

// Thins die(l) by a(l) = c(k0)/c(l) so the mean stays c(k0) and measures the
// distance to Poisson(c(k0)).
std::vector<ConvergenceRow> convergence_sequence(
    const Integer& k0, const std::vector<Integer>& indices,
    std::size_t grid_size = kDefaultGridSize,
    double tail_tol = kDefaultTailTol);

}  // namespace orthodice

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

#include "orthodice/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orthodice/error.hpp"

namespace orthodice {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
  trim();
}

Polynomial Polynomial::monomial(unsigned degree) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c.back() = 1;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + to_double(*it);
  }
  return acc;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] -= q.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
  }
  return Polynomial(std::move(c));
}

Rational inner_product(const Polynomial& p, const Polynomial& q,
                       std::span<const Rational> moments) {
  const auto& pc = p.coefficients();
  const auto& qc = q.coefficients();
  if (pc.size() + qc.size() - 1 > moments.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "not enough moments for this inner product");
  }
  Rational acc = 0;
  for (std::size_t i = 0; i < pc.size(); ++i) {
    if (pc[i] == 0) continue;
    for (std::size_t j = 0; j < qc.size(); ++j) acc += pc[i] * qc[j] * moments[i + j];
  }
  return acc;
}

std::vector<Rational> hankel_leading_minors(std::span<const Rational> moments,
                                            unsigned d) {
  const std::size_t size = d + 1;
  if (moments.size() < 2 * d + 1) {
    throw Error(ErrorCode::InvalidArgument, "need moments up to order 2d");
  }
  // Gaussian elimination without pivoting: the k-th pivot is the ratio of
  // consecutive leading minors, so the running product gives every minor.
  std::vector<std::vector<Rational>> h(size, std::vector<Rational>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) h[i][j] = moments[i + j];
  std::vector<Rational> minors;
  Rational det = 1;
  for (std::size_t k = 0; k < size; ++k) {
    det *= h[k][k];
    minors.push_back(det);
    if (h[k][k] == 0) {
      // Every later minor is undefined by this route; report zeros.
      minors.resize(size, Rational(0));
      return minors;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      const Rational factor = h[i][k] / h[k][k];
      if (factor == 0) continue;
      for (std::size_t j = k; j < size; ++j) h[i][j] -= factor * h[k][j];
    }
  }
  return minors;
}

PolySystem gram_schmidt_system(std::span<const Rational> moments,
                               unsigned d_max) {
  if (moments.empty() || moments[0] != 1) {
    throw Error(ErrorCode::InvalidArgument, "moments must start with mu_0 = 1");
  }
  const auto minors = hankel_leading_minors(moments, d_max);
  for (unsigned k = 0; k <= d_max; ++k) {
    if (minors[k] <= 0) {
      throw Error(ErrorCode::DegenerateMomentMatrix,
                  "Hankel matrix is not positive definite at degree " +
                      std::to_string(k));
    }
  }
  PolySystem system{MomentMeasure{}, {}};
  std::vector<Rational> norms;
  for (unsigned k = 0; k <= d_max; ++k) {
    const Polynomial xk = Polynomial::monomial(k);
    Polynomial pk = xk;
    for (unsigned j = 0; j < k; ++j) {
      const Rational proj = inner_product(xk, system.polys[j], moments) / norms[j];
      pk = pk - Polynomial({proj}) * system.polys[j];
    }
    norms.push_back(inner_product(pk, pk, moments));
    system.polys.push_back(std::move(pk));
  }
  return system;
}

PolySystem charlier_system(const Rational& theta, unsigned d_max) {
  if (theta <= 0) throw Error(ErrorCode::InvalidArgument, "theta must be positive");
  PolySystem system{PoissonMeasure{theta}, {Polynomial()}};
  const Polynomial x({Rational(0), Rational(1)});
  if (d_max >= 1) system.polys.push_back(x - Polynomial({theta}));
  for (unsigned n = 1; n < d_max; ++n) {
    const Polynomial shift = x - Polynomial({Rational(n) + theta});
    system.polys.push_back(shift * system.polys[n] -
                           Polynomial({Rational(n) * theta}) * system.polys[n - 1]);
  }
  return system;
}

PolySystem thinned_die_system(const SupportPair& support,
                              const ThinningParam& a, unsigned d_max) {
  support.validate();
  std::vector<Rational> moments;
  for (unsigned r = 0; r <= 2 * d_max; ++r) moments.push_back(raw_moment(support, a, r));
  PolySystem system = gram_schmidt_system(moments, d_max);
  system.measure = DieMeasure{support, a.value()};
  return system;
}

LpDistance lp_distance(const Polynomial& p, const Polynomial& q, double theta,
                       unsigned power, double tail_tol) {
  if (power < 1) throw Error(ErrorCode::InvalidArgument, "p must be >= 1");
  if (!(tail_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tail_tol must be positive");
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw Error(ErrorCode::InvalidArgument, "theta must be positive");
  }
  const Polynomial diff = p - q;
  const auto& coeffs = diff.coefficients();
  LpDistance out;
  if (diff.degree() == 0 && coeffs[0] == 0) return out;

  // Fujiwara bound: every root of diff lies within |x| < R with
  // R = 2 max_i |c_{d-i} / c_d|^{1/i}. Past it,
  // |D(x+1)/D(x)| <= ((x + 1 + R)/(x - R))^deg.
  double root_bound = 0.0;
  const unsigned deg = diff.degree();
  if (deg > 0) {
    const Rational& lead = coeffs.back();
    for (unsigned i = 1; i <= deg; ++i) {
      const double ratio = std::abs(to_double(Rational(coeffs[deg - i] / lead)));
      root_bound = std::max(root_bound, std::pow(ratio, 1.0 / i));
    }
    root_bound *= 2.0;
  }
  const double exponent = static_cast<double>(diff.degree()) * power;
  const double log_theta = std::log(theta);
  double sum = 0.0;
  for (std::int64_t x = 0;; ++x) {
    const double xd = static_cast<double>(x);
    const double log_w = -theta + xd * log_theta - std::lgamma(xd + 1.0);
    const double d = std::abs(to_double(diff(Rational(x))));
    const double term = d == 0.0 ? 0.0 : std::exp(log_w + power * std::log(d));
    sum += term;
    if (xd > root_bound) {
      const double ratio = theta / (xd + 1.0) *
                           std::pow((xd + 1.0 + root_bound) / (xd - root_bound), exponent);
      if (ratio < 1.0) {
        // The ratio bound decreases in x, so the tail is geometric.
        const double tail = term * ratio / (1.0 - ratio);
        if (tail < tail_tol) {
          out.truncation = x;
          out.tail_bound = tail;
          break;
        }
      }
    }
  }
  out.distance = std::pow(sum, 1.0 / power);
  return out;
}

PolyReport convergence_report(const Integer& k0,
                              const std::vector<Integer>& indices,
                              unsigned degree,
                              const std::vector<unsigned>& powers,
                              double tail_tol) {
  if (!in_index_set(k0)) {
    throw Error(ErrorCode::IndexNotInI, "k0 = " + to_string(k0) + " is not in I");
  }
  if (powers.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one p");
  PolyReport report;
  report.theta = Rational(mean_at_index(k0));
  report.degree = degree;
  report.powers = powers;
  report.charlier = charlier_system(report.theta, degree).polys.back();
  const double theta = to_double(report.theta);
  std::vector<Polynomial> polys;
  for (const Integer& l : indices) {
    if (!in_index_set(l)) {
      throw Error(ErrorCode::IndexNotInI, "l = " + to_string(l) + " is not in I");
    }
    if (l < k0) {
      throw Error(ErrorCode::InvalidArgument,
                  "indices must be >= k0 so that a(l) <= 1");
    }
    const OrthogonalDie die = die_from_index(l);
    Rational a(report.theta / Rational(die.c));
    a.canonicalize();
    PolyConvergenceRow row;
    row.index = l;
    row.a = a;
    row.poly = thinned_die_system(die.support(), ThinningParam(a), degree).polys.back();
    for (unsigned pw : powers) {
      row.distances.push_back(lp_distance(row.poly, report.charlier, theta, pw, tail_tol));
    }
    polys.push_back(row.poly);
    report.rows.push_back(std::move(row));
  }
  const NumericLaw weights = poisson_pmf(theta, tail_tol);
  for (std::int64_t x = weights.offset; x <= weights.last(); ++x) {
    FigureRow fr;
    fr.x = x;
    fr.weight = weights.at(x);
    const Rational xr(x);
    fr.charlier_weighted = to_double(report.charlier(xr)) * fr.weight;
    for (const Polynomial& poly : polys) {
      fr.die_weighted.push_back(to_double(poly(xr)) * fr.weight);
    }
    report.figure.push_back(std::move(fr));
  }
  return report;
}

}  // namespace orthodice

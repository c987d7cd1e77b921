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

// Monic orthogonal polynomial systems of thinned dice ("discrete Legendre")
// and of the Poisson law (Charlier), and L^p(Poisson) distances between them.

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "orthodice/dice.hpp"
#include "orthodice/law.hpp"
#include "orthodice/numeric.hpp"

namespace orthodice {

// Exact coefficients in ascending degree.
class Polynomial {
 public:
  Polynomial() : coeffs_{Rational(1)} {}
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_monic() const { return coeffs_.back() == 1; }

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.coeffs_ == q.coeffs_;
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DieMeasure {
  SupportPair support;
  Rational a;
};

struct PoissonMeasure {
  Rational theta;
};

struct MomentMeasure {};

using MeasureDescriptor = std::variant<MomentMeasure, DieMeasure, PoissonMeasure>;

struct PolySystem {
  MeasureDescriptor measure;
  std::vector<Polynomial> polys;  // degrees 0..d_max
};

// <p, q> = sum_{i,j} p_i q_j mu_{i+j}
Rational inner_product(const Polynomial& p, const Polynomial& q,
                       std::span<const Rational> moments);

// det of the leading (k+1) x (k+1) Hankel blocks, k = 0..d.
std::vector<Rational> hankel_leading_minors(std::span<const Rational> moments,
                                            unsigned d);

// Needs moments mu_0..mu_{2 d_max} with mu_0 = 1 and a positive definite
// Hankel matrix; throws DegenerateMomentMatrix otherwise.
PolySystem gram_schmidt_system(std::span<const Rational> moments,
                               unsigned d_max);

// C_0 = 1, C_1 = x - theta, C_{n+1} = (x - n - theta) C_n - n theta C_{n-1}.
PolySystem charlier_system(const Rational& theta, unsigned d_max);

PolySystem thinned_die_system(const SupportPair& support,
                              const ThinningParam& a, unsigned d_max);

struct LpDistance {
  double distance = 0.0;
  std::int64_t truncation = 0;  // last x included
  double tail_bound = 0.0;      // certified bound on the dropped p-th power mass
};

// ||P - Q||_{L^p(Poisson(theta))}, truncated where a geometric bound on the
// remaining tail of kappa{x} |P - Q|^p falls below tail_tol.
LpDistance lp_distance(const Polynomial& p, const Polynomial& q, double theta,
                       unsigned power, double tail_tol = kDefaultTailTol);

struct PolyConvergenceRow {
  Integer index;
  Rational a;
  Polynomial poly;
  std::vector<LpDistance> distances;  // one per requested p
};

struct FigureRow {
  std::int64_t x = 0;
  double weight = 0.0;           // Poisson(theta){x}
  double charlier_weighted = 0.0;
  std::vector<double> die_weighted;  // one per index
};

struct PolyReport {
  Rational theta;
  unsigned degree = 0;
  std::vector<unsigned> powers;
  Polynomial charlier;
  std::vector<PolyConvergenceRow> rows;
  std::vector<FigureRow> figure;
};

PolyReport convergence_report(const Integer& k0,
                              const std::vector<Integer>& indices,
                              unsigned degree,
                              const std::vector<unsigned>& powers,
                              double tail_tol = kDefaultTailTol);

}  // namespace orthodice

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


#include <gtest/gtest.h>

#include <cmath>

#include "orthodice/dice.hpp"
#include "orthodice/error.hpp"
#include "orthodice/orthopoly.hpp"

namespace orthodice {
namespace {

// Touchard: E X^r = sum_j S(r, j) theta^j for X ~ Poisson(theta).
std::vector<Rational> poisson_moments(const Rational& theta, unsigned order) {
  std::vector<Rational> out;
  for (unsigned r = 0; r <= order; ++r) {
    const auto s = stirling2_row(r);
    Rational acc = 0, power = 1;
    for (unsigned j = 0; j <= r; ++j) {
      acc += Rational(s[j]) * power;
      power *= theta;
    }
    out.push_back(acc);
  }
  return out;
}

TEST(OrthoPoly, SecondCharlierPolynomial) {
  const auto sys = charlier_system(Rational(114), 3);
  ASSERT_EQ(sys.polys.size(), 4u);
  EXPECT_EQ(sys.polys[2], Polynomial({Rational(12996), Rational(-229), Rational(1)}));
  for (const auto& p : sys.polys) EXPECT_TRUE(p.is_monic());
}

TEST(OrthoPoly, CharlierNorms) {
  for (const Rational& theta : {Rational(1), Rational(114), Rational(5, 2)}) {
    const auto moments = poisson_moments(theta, 10);
    const auto sys = charlier_system(theta, 5);
    Rational expected = 1;
    for (unsigned n = 0; n <= 5; ++n) {
      if (n > 0) expected *= Rational(n) * theta;
      EXPECT_EQ(inner_product(sys.polys[n], sys.polys[n], moments), expected);
      for (unsigned m = 0; m < n; ++m) {
        EXPECT_EQ(inner_product(sys.polys[n], sys.polys[m], moments), 0);
      }
    }
  }
}

TEST(OrthoPoly, GramSchmidtRecoversCharlier) {
  for (const Rational& theta : {Rational(1), Rational(2), Rational(114)}) {
    const auto gs = gram_schmidt_system(poisson_moments(theta, 8), 4);
    const auto rec = charlier_system(theta, 4);
    EXPECT_EQ(gs.polys, rec.polys);
  }
}

TEST(OrthoPoly, HankelMinors) {
  // Poisson(1): det H_n = prod_{k<=n} k! theta^k
  const auto minors = hankel_leading_minors(poisson_moments(Rational(1), 6), 3);
  ASSERT_EQ(minors.size(), 4u);
  EXPECT_EQ(minors[0], 1);
  EXPECT_EQ(minors[1], 1);
  EXPECT_EQ(minors[2], 2);
  EXPECT_EQ(minors[3], 12);
}

TEST(OrthoPoly, DegenerateMomentsAreRejected) {
  // Dirac mass at 3
  std::vector<Rational> moments;
  Rational power = 1;
  for (int r = 0; r <= 4; ++r, power *= 3) moments.push_back(power);
  try {
    gram_schmidt_system(moments, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateMomentMatrix);
  }
  moments[0] = 2;
  EXPECT_THROW(gram_schmidt_system(moments, 1), Error);
}

TEST(OrthoPoly, ThinnedDieMatchesCharlierToDegreeOne) {
  for (int l : {17, 19, 22, 25, 31}) {
    const auto die = die_from_index(Integer(l));
    const Rational a(Integer(114), die.c);
    const auto sys = thinned_die_system(die.support(), ThinningParam(a), 3);
    const auto ch = charlier_system(Rational(114), 3);
    EXPECT_EQ(sys.polys[0], ch.polys[0]) << l;
    EXPECT_EQ(sys.polys[1], ch.polys[1]) << l;
  }
}

TEST(OrthoPoly, LpDistanceAgainstDirectSum) {
  const Polynomial p({Rational(3), Rational(-2), Rational(1)});
  const Polynomial q({Rational(1), Rational(-1)});
  const double theta = 6.5;
  for (unsigned power : {1u, 2u}) {
    const auto d = lp_distance(p, q, theta, power);
    double sum = 0.0;
    for (int x = 0; x < 300; ++x) {
      const double w = std::exp(-theta + x * std::log(theta) - std::lgamma(x + 1.0));
      const double diff = (3.0 - 2.0 * x + x * x) - (1.0 - x);
      sum += w * std::pow(std::abs(diff), power);
    }
    EXPECT_NEAR(d.distance, std::pow(sum, 1.0 / power), 1e-9 * d.distance);
    EXPECT_LT(d.tail_bound, 1e-12);
    EXPECT_GT(d.truncation, 0);
  }
  EXPECT_EQ(lp_distance(p, p, theta, 2).distance, 0.0);
}

TEST(OrthoPoly, ThirdDegreeDistancesDecrease) {
  std::vector<Integer> ls;
  for (int l : {17, 19, 22, 25, 31}) ls.emplace_back(l);
  const auto report = convergence_report(Integer(17), ls, 3, {1, 2});
  ASSERT_EQ(report.rows.size(), ls.size());
  EXPECT_EQ(report.theta, 114);
  for (std::size_t p = 0; p < 2; ++p) {
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
      EXPECT_LT(report.rows[i].distances[p].distance,
                report.rows[i - 1].distances[p].distance);
    }
  }
  EXPECT_FALSE(report.figure.empty());
  for (const auto& row : report.figure) EXPECT_EQ(row.die_weighted.size(), ls.size());
}

TEST(OrthoPoly, ReportRejectsBadIndices) {
  const std::vector<Integer> bad{Integer(17), Integer(21)};
  EXPECT_THROW(convergence_report(Integer(17), bad, 3, {2}), Error);
  const std::vector<Integer> small{Integer(14)};
  EXPECT_THROW(convergence_report(Integer(17), small, 3, {2}), Error);
  EXPECT_THROW(convergence_report(Integer(18), small, 3, {2}), Error);
}

}  // namespace
}  // namespace orthodice

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
#include <numbers>

#include "orthodice/error.hpp"
#include "orthodice/gravity.hpp"

namespace orthodice::gravity {
namespace {

GravityModel unit_model(Density d) {
  GravityModel m;
  m.density = std::move(d);
  m.mass_mean = 1.0;
  m.mass_variance = 1.0;
  return m;
}

TEST(Gravity, ShellTheoremOutsideABall) {
  // Dirac count law with one point: mean = G b_m nu(1/|x - z|) = 1/|z|.
  const auto m = unit_model(Density::uniform_ball({0, 0, 0}, 2.0));
  const auto ref = reference_values(m, {1, 1}, {5, 0, 0}, {0, 4, 0});
  EXPECT_NEAR(ref.mean_z, 1.0 / 5.0, 1e-10);
}

TEST(Gravity, PotentialInsideABall) {
  // nu(1/|x - z|) = (3 R^2 - s^2) / (2 R^3) for |z| = s < R
  auto m = unit_model(Density::uniform_ball({0, 0, 0}, 2.0));
  m.softening = 1e-9;
  const auto ref = reference_values(m, {1, 1}, {0, 0, 0.5}, {0, 0, 0.5});
  EXPECT_NEAR(ref.mean_z, (12.0 - 0.25) / 16.0, 1e-9);
}

TEST(Gravity, SecondMomentOfABall) {
  // (2 pi / d) int_0^R s log((d + s)/(d - s)) ds / volume
  const double R = 2.0, d = 5.0;
  const int steps = 100000;
  double acc = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double s = (i + 0.5) * R / steps;
    acc += s * std::log((d + s) / (d - s));
  }
  const double expected =
      2 * std::numbers::pi / d * acc * R / steps / (4.0 / 3.0 * std::numbers::pi * R * R * R);
  const auto m = unit_model(Density::uniform_ball({0, 0, 0}, R));
  // Var for the Dirac law with one point: E[Y^2] nu f^2 - (nu f)^2 summed
  // through mixed_binomial_stats with c = 1, delta^2 = 0.
  const auto ref = reference_values(m, {1, 1}, {d, 0, 0}, {d, 0, 0});
  EXPECT_NEAR(ref.var_z, 2.0 * expected - 1.0 / (d * d), 1e-9);
  EXPECT_NEAR(ref.cov_wz, ref.var_z, 1e-15);
}

TEST(Gravity, GaussianPotentialInsideTheSupport) {
  // z sits well inside the Gaussian; with negligible softening the exact
  // potential is erf(d / (sigma sqrt 2)) / d.
  const double sigma = 1.5, d = 3.0;
  auto m = unit_model(Density::gaussian({0, 0, 0}, sigma));
  m.softening = 1e-9;
  const auto ref = reference_values(m, {1, 1}, {0, d, 0}, {0, d, 0});
  EXPECT_NEAR(ref.mean_z, std::erf(d / (sigma * std::sqrt(2.0))) / d, 1e-9);

  // nu(1/|x - z|^2): the angular integral of the Gaussian is elementary,
  // (2 pi s^2 / (r d)) (exp(-(r - d)^2 / 2 s^2) - exp(-(r + d)^2 / 2 s^2)).
  const double s2 = sigma * sigma;
  const int steps = 400000;
  const double upper = d + 12 * sigma, h = upper / steps;
  double acc = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double r = (i + 0.5) * h;
    acc += 2 * std::numbers::pi * s2 / (r * d) *
           (std::exp(-(r - d) * (r - d) / (2 * s2)) - std::exp(-(r + d) * (r + d) / (2 * s2)));
  }
  const double inv_sq = acc * h * std::pow(2 * std::numbers::pi * s2, -1.5);
  // Dirac law with one point, E[Y^2] = 2: var = 2 nu f^2 - (nu f)^2
  EXPECT_NEAR(ref.var_z, 2 * inv_sq - ref.mean_z * ref.mean_z, 1e-8);
}

TEST(Gravity, CrossTermAgreesFromBothSides) {
  // z inside, w outside the 8-sigma support: the split is integrated with two
  // different rules but Cov(Z_z, Z_w) must not depend on the labelling.
  GravityModel m = unit_model(Density::gaussian({0, 0, 0}, 1.0));
  m.softening = 1e-9;
  const auto a = reference_values(m, {0, 36}, {1, 0, 0}, {0, 9, 0});
  const auto b = reference_values(m, {0, 36}, {0, 9, 0}, {1, 0, 0});
  EXPECT_NEAR(a.cov_wz, b.cov_wz, 1e-9 * std::abs(a.cov_wz));
}

TEST(Gravity, StoneThrowingMatchesReference) {
  GravityModel m;  // Gaussian sigma 1, b_m = 4, d_m^2 = 4
  for (const SupportPair& die : {SupportPair(1, 6), SupportPair(0, 36)}) {
    const auto est = estimate(m, die, {3, 0, 0}, {0, 3, 0}, 100000, 6);
    EXPECT_EQ(est.estimator, "stc");
    EXPECT_LT(std::abs(est.mean_z.z_score(est.reference.mean_z)), 4.0);
    EXPECT_LT(std::abs(est.var_z.z_score(est.reference.var_z)), 4.0);
    EXPECT_LT(std::abs(est.cov_wz.z_score(est.reference.cov_wz)), 4.0);
  }
}

TEST(Gravity, CampbellRouteForHugeCounts) {
  GravityModel m;
  const auto die = die_from_index(Integer(20000)).support();  // c ~ 1.3e8
  const auto est = estimate(m, die, {3, 0, 0}, {0, 3, 0}, 200000, 6);
  EXPECT_EQ(est.estimator, "campbell");
  EXPECT_LT(std::abs(est.mean_z.z_score(est.reference.mean_z)), 4.0);
  EXPECT_LT(std::abs(est.var_z.z_score(est.reference.var_z)), 4.0);
  EXPECT_LT(std::abs(est.cov_wz.z_score(est.reference.cov_wz)), 4.0);
}

TEST(Gravity, SofteningInsideTheSupport) {
  auto m = unit_model(Density::uniform_ball({0, 0, 0}, 1.0));
  const auto est = estimate(m, {1, 6}, {0.2, 0, 0}, {3, 0, 0}, 1000, 1);
  EXPECT_DOUBLE_EQ(est.softening, 2e-3);
  m.soften_inside = false;
  try {
    reference_values(m, {1, 6}, {0.2, 0, 0}, {3, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularEvaluationPoint);
  }
}

TEST(Gravity, DiskSamplesStayInside) {
  const auto disk = Density::exponential_disk(3, 0.3, 15, 2);
  auto sampler = disk.sampler();
  StreamRng rng(4, 0);
  for (int i = 0; i < 20000; ++i) {
    const Point p = sampler(rng);
    ASSERT_TRUE(disk.contains({p.x[0], p.x[1], p.x[2]}));
  }
  double total = 0.0;
  for (const auto& node : disk.quadrature_nodes()) total += node.second;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Gravity, MilkyWayPreset) {
  const auto mw = milky_way();
  EXPECT_EQ(mw.die.m, Integer("249999189525"));
  EXPECT_EQ(mw.die.n, Integer("250000921575"));
  EXPECT_EQ(mw.die.c, Integer("250000055550"));
  EXPECT_EQ(mw.die.sides, 1732051);
  ASSERT_TRUE(mw.die.sides_prime.has_value());
  EXPECT_TRUE(*mw.die.sides_prime);
  EXPECT_EQ(mw.sides_prime_rank, 130347u);
  EXPECT_EQ(mw.mass_scale, Integer("1000000222200"));
}

}  // namespace
}  // namespace orthodice::gravity

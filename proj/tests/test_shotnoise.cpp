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

#include "orthodice/error.hpp"
#include "orthodice/shotnoise.hpp"

namespace orthodice::shotnoise {
namespace {

ShotNoiseModel model_for(SupportPair die) {
  ShotNoiseModel m;
  m.horizon = 10.0;
  m.die = std::move(die);
  m.amplitude = 2.0;
  m.decay = 0.5;
  return m;
}

// nu(f_s f_t) by the midpoint rule, independent of the closed form.
double nu_product(const ShotNoiseModel& m, double s, double t) {
  const int steps = 200000;
  const double h = m.horizon / steps;
  double acc = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double x = (i + 0.5) * h;
    acc += m.pulse(s - x) * m.pulse(t - x);
  }
  return acc * h / m.horizon;
}

TEST(ShotNoise, ClosedFormAgainstQuadrature) {
  const auto m = model_for({1, 6});  // negative die: delta^2 != c
  const double c = 3.5, d2 = 35.0 / 12.0;
  const double s = 2.0, t = 7.5;
  const double nu_s = (m.amplitude / (m.decay * m.horizon)) *
                      (1 - std::exp(-m.decay * s));
  const double nu_t = (m.amplitude / (m.decay * m.horizon)) *
                      (1 - std::exp(-m.decay * t));
  const auto cf = closed_form(m, s, t);
  EXPECT_NEAR(cf.mean, c * nu_t, 1e-12);
  EXPECT_NEAR(cf.variance, c * nu_product(m, t, t) + (d2 - c) * nu_t * nu_t, 1e-8);
  EXPECT_NEAR(cf.covariance, c * nu_product(m, s, t) + (d2 - c) * nu_s * nu_t, 1e-8);
}

TEST(ShotNoise, OrthogonalDieCovarianceIsCampbell) {
  const auto m = model_for({96, 132});
  const auto cf = closed_form(m, 3.0, 4.0);
  EXPECT_NEAR(cf.covariance, 114.0 * nu_product(m, 3.0, 4.0), 1e-7);
  EXPECT_NEAR(cf.variance, 114.0 * nu_product(m, 4.0, 4.0), 1e-7);
}

TEST(ShotNoise, TimesOutsideHorizon) {
  const auto m = model_for({1, 6});
  try {
    closed_form(m, 0.0, 10.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TimeOutOfRange);
  }
  EXPECT_THROW(closed_form(m, -0.1, 1.0), Error);
}

TEST(ShotNoise, SinglePulseDecaysExponentially) {
  ShotNoiseModel m;
  m.horizon = 5.0;
  m.die = {1, 1};
  const auto grid = uniform_grid(5.0, 101);
  const std::vector<double> arrival{0.0};
  const auto z = path(m, arrival, grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    EXPECT_DOUBLE_EQ(z[j], std::exp(-grid[j]));
  }
}

TEST(ShotNoise, OrnsteinUhlenbeckIdentity) {
  // Z_t + b int_0^t Z = a N([0, t]) up to trapezoid error.
  const auto m = model_for({1, 6});
  const std::vector<double> arrivals{0.7, 2.25, 2.3, 8.0};
  const auto coarse = uniform_grid(m.horizon, 201);
  const auto fine = uniform_grid(m.horizon, 20001);
  const double r_coarse = ou_residual(m, arrivals, coarse);
  const double r_fine = ou_residual(m, arrivals, fine);
  const double h = m.horizon / 200;
  EXPECT_LT(r_coarse, m.amplitude * m.decay * h * (0.5 * 4 + 1));
  EXPECT_LT(r_fine, r_coarse / 50);
}

TEST(ShotNoise, SimulationMatchesClosedForms) {
  ShotNoiseModel m;
  m.horizon = 10.0;
  m.die = die_from_index(Integer(4)).support();
  m.amplitude = 1.5;
  m.decay = 0.8;
  const auto grid = uniform_grid(m.horizon, 20);
  const auto res = simulate(m, grid, 10000, 314);
  ASSERT_EQ(res.mean.size(), 20u);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    EXPECT_LT(std::abs(res.mean[j].z_score(res.closed[j].mean)), 4.0) << j;
    EXPECT_LT(std::abs(res.variance[j].z_score(res.closed[j].variance)), 4.0) << j;
    EXPECT_LT(std::abs(res.covariance[j].z_score(res.closed[j].covariance)), 4.0) << j;
  }
  EXPECT_LE(res.max_ou_residual, res.ou_tolerance);
  EXPECT_EQ(res.sample_paths.size(), 5u);
  EXPECT_DOUBLE_EQ(res.reference_time, grid[10]);
}

TEST(ShotNoise, SimulationIsThreadIndependent) {
  const auto m = model_for({0, 36});
  const auto grid = uniform_grid(m.horizon, 12);
  const auto a = simulate(m, grid, 3000, 1, {1});
  const auto b = simulate(m, grid, 3000, 1, {4});
  for (std::size_t j = 0; j < grid.size(); ++j) {
    EXPECT_EQ(a.mean[j].point_estimate, b.mean[j].point_estimate);
    EXPECT_EQ(a.covariance[j].point_estimate, b.covariance[j].point_estimate);
  }
  EXPECT_EQ(a.sample_paths, b.sample_paths);
}

TEST(ShotNoise, Validation) {
  auto m = model_for({1, 6});
  m.decay = 0.0;
  EXPECT_THROW(m.validate(), Error);
  m = model_for({6, 1});
  EXPECT_THROW(m.validate(), Error);
}

}  // namespace
}  // namespace orthodice::shotnoise

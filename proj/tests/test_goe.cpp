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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "orthodice/error.hpp"
#include "orthodice/goe.hpp"
#include "orthodice/stats.hpp"

namespace orthodice::goe {
namespace {

TEST(Goe, EnsembleGapMoments) {
  const auto m = ensemble_moments(1'000'000, 21);
  EXPECT_LT(std::abs(m.nu_f - std::sqrt(2.0 * std::numbers::pi)) / m.se_f, 4.0);
  EXPECT_LT(std::abs(m.nu_f2 - 8.0) / m.se_f2, 4.0);
}

TEST(Goe, RestrictionMass) {
  EXPECT_DOUBLE_EQ(restriction_mass(0.0), 0.25);
  // a_r = P(x11 > r)^2 with x11 ~ N(0, 2)
  const double tail = 0.5 * std::erfc(1.0 / 2.0);
  EXPECT_NEAR(restriction_mass(1.0), tail * tail, 1e-15);
}

TEST(Goe, QuadratureAtZero) {
  const auto q = conditional_moments_quadrature(0.0);
  EXPECT_NEAR(q.nu_f, 2.98373, 2e-4);
  EXPECT_NEAR(q.nu_f2, 10.5465, 1e-3);
}

TEST(Goe, ConditionedSamplerAgreesWithQuadrature) {
  for (double r : {-1.5, 0.0, 1.0, 2.5}) {
    const auto mc = conditional_moments(r, 400000, 3);
    const auto q = conditional_moments_quadrature(r);
    EXPECT_LT(std::abs(mc.nu_f - q.nu_f) / mc.se_f, 4.0) << r;
    EXPECT_LT(std::abs(mc.nu_f2 - q.nu_f2) / mc.se_f2, 4.0) << r;
  }
}

TEST(Goe, ConditionedSamplerStaysInA) {
  auto sampler = conditioned_sampler(1.25);
  StreamRng rng(1, 0);
  for (int i = 0; i < 10000; ++i) {
    ASSERT_TRUE(in_a(sampler(rng), 1.25));
  }
}

TEST(Goe, ConditioningByRejectionGivesTheSameLaw) {
  // Keep the ensemble draws that land in A_r and compare means.
  const double r = 0.5;
  auto ensemble = ensemble_sampler();
  StreamRng rng(8, 0);
  double sum = 0.0, sum2 = 0.0;
  int kept = 0;
  while (kept < 40000) {
    const Point p = ensemble(rng);
    if (!in_a(p, r)) continue;
    const double g = gap(p);
    sum += g;
    sum2 += g * g;
    ++kept;
  }
  const double mean = sum / kept;
  const double se = std::sqrt((sum2 / kept - mean * mean) / kept);
  EXPECT_LT(std::abs(mean - conditional_moments_quadrature(r).nu_f) / se, 4.0);
}

TEST(Goe, CurveShapesOnDefaultGrid) {
  const auto grid = default_r_grid();
  ASSERT_EQ(grid.size(), 25u);
  const auto rows = summary(grid, 0, 0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LT(rows[i].var_ratio_orthogonal, rows[i - 1].var_ratio_orthogonal);
    EXPECT_LT(rows[i].cov_ratio_dirac, 0.0);
  }
  const auto peak = std::max_element(
      rows.begin(), rows.end(), [](const SummaryRow& a, const SummaryRow& b) {
        return a.var_ratio_dirac < b.var_ratio_dirac;
      });
  EXPECT_NE(peak, rows.begin());
  EXPECT_NE(peak, rows.end() - 1);
}

TEST(Goe, WignerSurmise) {
  for (double u : {0.0, 0.1, 0.5, 0.99}) {
    EXPECT_NEAR(wigner_cdf(wigner_inverse_cdf(u)), u, 1e-14);
  }
  // pdf integrates to the cdf
  double acc = 0.0;
  const double h = 1e-3;
  for (double y = h / 2; y < 3.0; y += h) acc += wigner_pdf(y) * h;
  EXPECT_NEAR(acc, wigner_cdf(3.0), 1e-6);
  EXPECT_THROW(wigner_inverse_cdf(1.0), Error);

  const auto xs = wigner_sample(5, 20000);
  EXPECT_GT(stats::ks_test(xs, wigner_cdf).p_value, 1e-3);
  EXPECT_EQ(xs, wigner_sample(5, 20000, {4}));
}

TEST(Goe, EnsembleGapsFollowTheSurmise) {
  auto ensemble = ensemble_sampler();
  StreamRng rng(12, 0);
  std::vector<double> gaps(20000);
  for (auto& g : gaps) g = gap(ensemble(rng));
  EXPECT_GT(stats::ks_test(gaps, wigner_cdf).p_value, 1e-3);
}

}  // namespace
}  // namespace orthodice::goe

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

// Spectral gap of the 2x2 Gaussian orthogonal ensemble under restriction to
// A_r = (r, inf) x R x (-inf, -r).

#include <cstdint>
#include <span>
#include <vector>

#include "orthodice/stc.hpp"

namespace orthodice::goe {

// x[0] = x11 ~ N(0, 2), x[1] = x12 ~ N(0, 1), x[2] = x22 ~ N(0, 2).
PointSampler ensemble_sampler();

// nu conditioned on A_r. The region is a product set, so each coordinate is
// drawn from its own truncated normal (exact; exponential-proposal rejection
// in the far tail).
PointSampler conditioned_sampler(double r);

// sqrt((x11 - x22)^2 + 4 x12^2)
double gap(const Point& p);

bool in_a(const Point& p, double r);  // x11 > r, x22 < -r
bool in_b(const Point& p, double r);  // x11 < -r, x22 > r

// nu(A_r) = (1 - erf(r / 2))^2 / 4
double restriction_mass(double r);

struct ConditionalMoments {
  double nu_f = 0.0;
  double nu_f2 = 0.0;
  double se_f = 0.0;
  double se_f2 = 0.0;
  std::uint64_t samples = 0;
};

inline constexpr std::uint64_t kDefaultSamples = 10'000'000;

// Unconditioned nu f and nu f^2 (r is ignored).
ConditionalMoments ensemble_moments(std::uint64_t samples, std::uint64_t seed,
                                    const EngineOptions& options = {});

ConditionalMoments conditional_moments(double r, std::uint64_t samples,
                                       std::uint64_t seed,
                                       const EngineOptions& options = {});

// Nested Gauss-Kronrod integration of the same moments (no standard error).
ConditionalMoments conditional_moments_quadrature(double r);

struct SummaryRow {
  double r = 0.0;
  double a_r = 0.0;
  ConditionalMoments moments;
  double var_ratio_orthogonal = 0.0;  // (1/c) Var N_{A_r} f, orthogonal die
  double var_ratio_dirac = 0.0;       // same for the Dirac count law
  double cov_ratio_dirac = 0.0;       // (1/c) Cov(M f_A, M f_B), Dirac
};

// -3, -2.75, ..., 3
std::vector<double> default_r_grid();

// samples == 0 switches to the quadrature moments.
std::vector<SummaryRow> summary(std::span<const double> r_grid,
                                std::uint64_t samples, std::uint64_t seed,
                                const EngineOptions& options = {});

// Wigner surmise: density (y/4) exp(-y^2/8).
double wigner_pdf(double y);
double wigner_cdf(double y);
// y = 2 sqrt(2 log(1 / (1 - u)))
double wigner_inverse_cdf(double u);

std::vector<double> wigner_sample(std::uint64_t seed, std::uint64_t n,
                                  const EngineOptions& options = {});

}  // namespace orthodice::goe

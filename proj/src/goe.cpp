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

#include "orthodice/goe.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "orthodice/error.hpp"
#include "orthodice/law.hpp"

namespace orthodice::goe {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
// Samples per RNG stream; blocks are the unit of parallel work.
constexpr std::uint64_t kBlock = 1 << 14;

// Standard normal conditioned on z > alpha.
double truncated_normal_above(StreamRng& rng, double alpha) {
  if (alpha < 0.5) {
    while (true) {
      const double z = rng.normal();
      if (z > alpha) return z;
    }
  }
  // Robert (1995): shifted exponential proposal with the optimal rate.
  const double lambda = 0.5 * (alpha + std::sqrt(alpha * alpha + 4.0));
  while (true) {
    const double z = alpha + rng.exponential() / lambda;
    const double d = z - lambda;
    if (rng.uniform() < std::exp(-0.5 * d * d)) return z;
  }
}

struct Sums {
  double f = 0.0, f2 = 0.0, f4 = 0.0;
};

ConditionalMoments moments_from(const PointSampler& sampler,
                                std::uint64_t samples, std::uint64_t seed,
                                const EngineOptions& options) {
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "need >= 2 samples");
  const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<Sums> partial(blocks);
  parallel_for_replicates(blocks, options.threads, [&](std::uint64_t b) {
    StreamRng rng(seed, b);
    const std::uint64_t end = std::min(samples, (b + 1) * kBlock);
    Sums s;
    for (std::uint64_t i = b * kBlock; i < end; ++i) {
      const double g = gap(sampler(rng));
      const double g2 = g * g;
      s.f += g;
      s.f2 += g2;
      s.f4 += g2 * g2;
    }
    partial[b] = s;
  });
  Sums total;
  for (const Sums& s : partial) {
    total.f += s.f;
    total.f2 += s.f2;
    total.f4 += s.f4;
  }
  const double n = static_cast<double>(samples);
  ConditionalMoments out;
  out.samples = samples;
  out.nu_f = total.f / n;
  out.nu_f2 = total.f2 / n;
  const double var_f = std::max(0.0, (total.f2 - n * out.nu_f * out.nu_f) / (n - 1));
  const double var_f2 =
      std::max(0.0, (total.f4 - n * out.nu_f2 * out.nu_f2) / (n - 1));
  out.se_f = std::sqrt(var_f / n);
  out.se_f2 = std::sqrt(var_f2 / n);
  return out;
}

}  // namespace

PointSampler ensemble_sampler() {
  return [](StreamRng& rng) {
    Point p;
    p.x[0] = kSqrt2 * rng.normal();
    p.x[1] = rng.normal();
    p.x[2] = kSqrt2 * rng.normal();
    return p;
  };
}

PointSampler conditioned_sampler(double r) {
  if (!std::isfinite(r)) throw Error(ErrorCode::InvalidArgument, "r must be finite");
  const double alpha = r / kSqrt2;
  return [alpha](StreamRng& rng) {
    Point p;
    p.x[0] = kSqrt2 * truncated_normal_above(rng, alpha);
    p.x[1] = rng.normal();
    p.x[2] = -kSqrt2 * truncated_normal_above(rng, alpha);
    return p;
  };
}

double gap(const Point& p) {
  const double d = p.x[0] - p.x[2];
  return std::sqrt(d * d + 4.0 * p.x[1] * p.x[1]);
}

bool in_a(const Point& p, double r) { return p.x[0] > r && p.x[2] < -r; }
bool in_b(const Point& p, double r) { return p.x[0] < -r && p.x[2] > r; }

double restriction_mass(double r) {
  // erfc keeps precision for large r, where 1 - erf cancels.
  const double half = 0.5 * boost::math::erfc(r / 2.0);
  return half * half;
}

ConditionalMoments ensemble_moments(std::uint64_t samples, std::uint64_t seed,
                                    const EngineOptions& options) {
  return moments_from(ensemble_sampler(), samples, seed, options);
}

ConditionalMoments conditional_moments(double r, std::uint64_t samples,
                                       std::uint64_t seed,
                                       const EngineOptions& options) {
  return moments_from(conditioned_sampler(r), samples, seed, options);
}

ConditionalMoments conditional_moments_quadrature(double r) {
  if (!std::isfinite(r)) throw Error(ErrorCode::InvalidArgument, "r must be finite");
  // With u = x11 - x22, v = x11 + x22 (independent N(0,4)) and w = 2 x12
  // (N(0,4)), A_r is {u > 2r, |v| < u - 2r} and f = sqrt(u^2 + w^2). The v
  // integral is erf((u - 2r) / (2 sqrt 2)); E_w f^2 = u^2 + 4.
  using boost::math::quadrature::gauss_kronrod;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr double kTol = 1e-12;
  const double norm4 = 1.0 / (2.0 * std::sqrt(2.0 * std::numbers::pi));
  auto phi4 = [norm4](double x) { return norm4 * std::exp(-x * x / 8.0); };
  auto weight = [&](double u) {
    return phi4(u) * boost::math::erf((u - 2.0 * r) / (2.0 * kSqrt2));
  };
  auto mean_radius = [&](double u) {
    // E sqrt(u^2 + w^2), symmetric in w.
    auto inner = [&](double w) { return 2.0 * phi4(w) * std::hypot(u, w); };
    return gauss_kronrod<double, 61>::integrate(inner, 0.0, kInf, 15, kTol);
  };
  const double lo = 2.0 * r;
  const double mass = gauss_kronrod<double, 61>::integrate(weight, lo, kInf, 15, kTol);
  const double first = gauss_kronrod<double, 61>::integrate(
      [&](double u) { return weight(u) * mean_radius(u); }, lo, kInf, 15, kTol);
  const double second = gauss_kronrod<double, 61>::integrate(
      [&](double u) { return weight(u) * (u * u + 4.0); }, lo, kInf, 15, kTol);
  if (!(mass > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "A_r has negligible mass");
  }
  ConditionalMoments out;
  out.nu_f = first / mass;
  out.nu_f2 = second / mass;
  return out;
}

std::vector<double> default_r_grid() {
  std::vector<double> grid;
  for (int i = -12; i <= 12; ++i) grid.push_back(0.25 * i);
  return grid;
}

std::vector<SummaryRow> summary(std::span<const double> r_grid,
                                std::uint64_t samples, std::uint64_t seed,
                                const EngineOptions& options) {
  std::vector<SummaryRow> rows;
  rows.reserve(r_grid.size());
  for (double r : r_grid) {
    SummaryRow row;
    row.r = r;
    row.a_r = restriction_mass(r);
    // Same seed at every r: common random numbers keep the curves smooth.
    row.moments = samples == 0 ? conditional_moments_quadrature(r)
                               : conditional_moments(r, samples, seed, options);
    const double a = row.a_r;
    const double f1 = row.moments.nu_f;
    const double f2 = row.moments.nu_f2;
    row.var_ratio_orthogonal = a * f2;
    row.var_ratio_dirac = a * f2 - a * a * f1 * f1;
    row.cov_ratio_dirac = -a * a * f1 * f1;
    rows.push_back(row);
  }
  return rows;
}

double wigner_pdf(double y) {
  return y < 0.0 ? 0.0 : 0.25 * y * std::exp(-y * y / 8.0);
}

double wigner_cdf(double y) {
  return y < 0.0 ? 0.0 : -std::expm1(-y * y / 8.0);
}

double wigner_inverse_cdf(double u) {
  if (!(u >= 0.0 && u < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "u must lie in [0, 1)");
  }
  return 2.0 * std::sqrt(-2.0 * std::log1p(-u));
}

std::vector<double> wigner_sample(std::uint64_t seed, std::uint64_t n,
                                  const EngineOptions& options) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "need n >= 1");
  std::vector<double> out(n);
  const std::uint64_t blocks = (n + kBlock - 1) / kBlock;
  parallel_for_replicates(blocks, options.threads, [&](std::uint64_t b) {
    StreamRng rng(seed, b);
    const std::uint64_t end = std::min(n, (b + 1) * kBlock);
    for (std::uint64_t i = b * kBlock; i < end; ++i) {
      out[i] = wigner_inverse_cdf(rng.uniform());
    }
  });
  return out;
}

}  // namespace orthodice::goe

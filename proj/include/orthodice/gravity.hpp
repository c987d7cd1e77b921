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

// Static gravitational potential of a marked point cloud:
// Z_z = sum_i G Y_i / |X_i - z|, stars X_i ~ rho, masses Y_i lognormal.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orthodice/dice.hpp"
#include "orthodice/stc.hpp"

namespace orthodice::gravity {

using Vec3 = std::array<double, 3>;

// Spatial law of the stars.
class Density {
 public:
  static Density gaussian(Vec3 center, double sigma);
  static Density uniform_ball(Vec3 center, double radius);
  // Exponential disk: surface density ~ exp(-R/scale_length), vertical
  // density ~ exp(-|z|/scale_height), truncated at R <= r_max, |z| <= z_max.
  static Density exponential_disk(double scale_length, double scale_height,
                                  double r_max, double z_max);

  PointSampler sampler() const;
  // Tensor product rule: weighted nodes with weights summing to one.
  std::vector<std::pair<Vec3, double>> quadrature_nodes() const;
  // Rule in spherical coordinates about `origin`: visit(x, r, w) with
  // w = rho(x) r^2 dr dOmega, so integrands with a 1/r or 1/r^2 singularity
  // at the origin stay bounded. Used when origin lies inside the support.
  void for_each_node_around(
      const Vec3& origin,
      const std::function<void(const Vec3&, double, double)>& visit) const;
  bool contains(const Vec3& z) const;
  double diameter() const;
  std::string describe() const;

 private:
  enum class Kind { Gaussian, Ball, Disk };
  Kind kind_ = Kind::Gaussian;
  Vec3 center_{};
  double p1_ = 1.0;  // sigma | radius | scale length
  double p2_ = 0.0;  // scale height
  double p3_ = 0.0;  // r_max
  double p4_ = 0.0;  // z_max
};

struct GravityModel {
  Density density = Density::gaussian({0, 0, 0}, 1.0);
  double mass_mean = 4.0;      // b_m
  double mass_variance = 4.0;  // d_m^2
  double gravitational_constant = 1.0;
  // Softening inside the support: distance becomes sqrt(|x - z|^2 + eps^2).
  bool soften_inside = true;
  std::optional<double> softening;  // default 1e-3 * diameter
};

struct Reference {
  double mean_z = 0.0;
  double var_z = 0.0;
  double cov_wz = 0.0;
};

struct GravityEstimate {
  // "stc" simulates whole realizations; "campbell" samples marked points and
  // scales by the count moments (used when the mean count is too large).
  std::string estimator;
  EstimateReport mean_z;
  EstimateReport var_z;
  EstimateReport cov_wz;
  Reference reference;
  double softening = 0.0;
};

inline constexpr double kMaxSimulatedMean = 1e7;

// Quadrature values of E Z_z, Var Z_z, Cov(Z_w, Z_z).
Reference reference_values(const GravityModel& model, const SupportPair& die,
                           const Vec3& z, const Vec3& w);

GravityEstimate estimate(const GravityModel& model, const SupportPair& die,
                         const Vec3& z, const Vec3& w,
                         std::uint64_t n_replicates, std::uint64_t seed,
                         const EngineOptions& options = {});

struct MilkyWayPreset {
  OrthogonalDie die;  // first die with mean >= 250 * 10^9
  Integer mass_scale; // b_m * c
  std::size_t sides_prime_rank = 0;
  GravityModel model;
  Vec3 z{};
  Vec3 w{};
};

// Stars in kpc on an exponential disk (illustrative stand-in for a barred
// spiral), mean mass 4 solar masses.
MilkyWayPreset milky_way();

}  // namespace orthodice::gravity

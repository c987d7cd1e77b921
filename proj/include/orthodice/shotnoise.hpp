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

// Shot noise Z_t = sum_i g(t - X_i) 1{X_i <= t} with g(u) = a_p exp(-b_p u)
// and arrival times uniform on [0, T].

#include <cstdint>
#include <span>
#include <vector>

#include "orthodice/dice.hpp"
#include "orthodice/stc.hpp"

namespace orthodice::shotnoise {

struct ShotNoiseModel {
  double horizon = 1.0;    // T
  SupportPair die;         // count law
  double amplitude = 1.0;  // a_p
  double decay = 1.0;      // b_p

  void validate() const;
  double pulse(double u) const;
};

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
  double covariance = 0.0;  // Cov(Z_s, Z_t)
};

// Mixed binomial closed forms; for an orthogonal die they reduce to
// mean (c a/(bT))(1 - e^{-bt}), variance (c a^2/(2bT))(1 - e^{-2bt}).
// Throws TimeOutOfRange outside [0, T].
Moments closed_form(const ShotNoiseModel& model, double s, double t);

// Z on the grid for the given arrival times.
std::vector<double> path(const ShotNoiseModel& model,
                         std::span<const double> arrivals,
                         std::span<const double> grid);

// max over grid points of |Z_t + b_p int_0^t Z - a_p N([0, t])|, with the
// integral taken by the trapezoidal rule on the grid.
double ou_residual(const ShotNoiseModel& model,
                   std::span<const double> arrivals,
                   std::span<const double> grid);

// `points` equally spaced times from 0 to T inclusive.
std::vector<double> uniform_grid(double horizon, std::size_t points);

struct SimulationResult {
  std::vector<double> grid;
  double reference_time = 0.0;  // s in Cov(Z_s, Z_t)
  std::vector<Moments> closed;
  std::vector<EstimateReport> mean;
  std::vector<EstimateReport> variance;
  std::vector<EstimateReport> covariance;
  double max_ou_residual = 0.0;
  double ou_tolerance = 0.0;
  std::vector<std::vector<double>> sample_paths;
};

SimulationResult simulate(const ShotNoiseModel& model,
                          std::span<const double> grid,
                          std::uint64_t n_replicates, std::uint64_t seed,
                          const EngineOptions& options = {},
                          std::size_t keep_paths = 5);

}  // namespace orthodice::shotnoise

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

#include "orthodice/shotnoise.hpp"

#include <algorithm>
#include <cmath>

#include "orthodice/error.hpp"
#include "orthodice/law.hpp"

namespace orthodice::shotnoise {

void ShotNoiseModel::validate() const {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw Error(ErrorCode::InvalidArgument, "horizon T must be positive");
  }
  if (!(amplitude > 0.0) || !(decay > 0.0) || !std::isfinite(amplitude) ||
      !std::isfinite(decay)) {
    throw Error(ErrorCode::InvalidArgument,
                "pulse amplitude and decay must be positive");
  }
  die.validate();
}

double ShotNoiseModel::pulse(double u) const {
  return u < 0.0 ? 0.0 : amplitude * std::exp(-decay * u);
}

Moments closed_form(const ShotNoiseModel& model, double s, double t) {
  model.validate();
  for (double time : {s, t}) {
    if (!(time >= 0.0 && time <= model.horizon)) {
      throw Error(ErrorCode::TimeOutOfRange,
                  "time " + std::to_string(time) + " outside [0, T]");
    }
  }
  const double a = model.amplitude;
  const double b = model.decay;
  const double T = model.horizon;
  const double lo = std::min(s, t);
  const double hi = std::max(s, t);
  // nu f_t, nu f_t^2 and nu(f_s f_t) under Uniform[0, T].
  const double nu_f = a / (b * T) * -std::expm1(-b * t);
  const double nu_g = a / (b * T) * -std::expm1(-b * s);
  const double nu_f2 = a * a / (2 * b * T) * -std::expm1(-2 * b * t);
  const double nu_fg = a * a / (2 * b * T) *
                       (std::exp(-b * (hi - lo)) - std::exp(-b * (lo + hi)));
  const auto st =
      mixed_binomial_stats(MomentSummary::of(model.die),
                           FunctionalStats<double>{nu_f, nu_g, nu_fg, nu_f2});
  return {st.mean, st.variance, st.covariance};
}

std::vector<double> path(const ShotNoiseModel& model,
                         std::span<const double> arrivals,
                         std::span<const double> grid) {
  std::vector<double> z(grid.size(), 0.0);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    double sum = 0.0;
    for (double x : arrivals) {
      if (x <= grid[j]) sum += model.pulse(grid[j] - x);
    }
    z[j] = sum;
  }
  return z;
}

double ou_residual(const ShotNoiseModel& model,
                   std::span<const double> arrivals,
                   std::span<const double> grid) {
  const auto z = path(model, arrivals, grid);
  double integral = 0.0;
  double worst = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (j > 0) integral += 0.5 * (z[j] + z[j - 1]) * (grid[j] - grid[j - 1]);
    const auto count = std::count_if(arrivals.begin(), arrivals.end(),
                                     [&](double x) { return x <= grid[j]; });
    const double lhs = z[j] + model.decay * integral;
    worst = std::max(worst, std::abs(lhs - model.amplitude * count));
  }
  return worst;
}

std::vector<double> uniform_grid(double horizon, std::size_t points) {
  if (points < 2 || !(horizon > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "grid needs T > 0 and >= 2 points");
  }
  std::vector<double> grid(points);
  for (std::size_t j = 0; j < points; ++j) {
    grid[j] = horizon * static_cast<double>(j) / static_cast<double>(points - 1);
  }
  grid.back() = horizon;
  return grid;
}

SimulationResult simulate(const ShotNoiseModel& model,
                          std::span<const double> grid,
                          std::uint64_t n_replicates, std::uint64_t seed,
                          const EngineOptions& options,
                          std::size_t keep_paths) {
  model.validate();
  if (grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty time grid");
  if (n_replicates < 2) {
    throw Error(ErrorCode::InvalidArgument, "need at least 2 replicates");
  }
  double step = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (!(grid[j] >= 0.0 && grid[j] <= model.horizon)) {
      throw Error(ErrorCode::TimeOutOfRange, "grid point outside [0, T]");
    }
    if (j > 0) {
      if (!(grid[j] > grid[j - 1])) {
        throw Error(ErrorCode::InvalidArgument, "grid must be increasing");
      }
      step = std::max(step, grid[j] - grid[j - 1]);
    }
  }

  const MeasureModel stc{CountLaw::uniform(model.die),
                         samplers::uniform_interval(0.0, model.horizon),
                         {}, {}, 1.0};
  const std::size_t g = grid.size();
  ReplicateTable table(n_replicates, g);
  std::vector<double> residual(n_replicates);
  parallel_for_replicates(n_replicates, options.threads, [&](std::uint64_t r) {
    const Realization real = sample_realization(stc, seed, r);
    std::vector<double> arrivals;
    arrivals.reserve(real.points.size());
    for (const Point& p : real.points) arrivals.push_back(p.x[0]);
    const auto z = path(model, arrivals, grid);
    for (std::size_t j = 0; j < g; ++j) table.at(r, j) = z[j];
    residual[r] = ou_residual(model, arrivals, grid);
  });

  SimulationResult out;
  out.grid.assign(grid.begin(), grid.end());
  const std::size_t ref = g / 2;
  out.reference_time = grid[ref];
  const auto ref_column = table.column(ref);
  for (std::size_t j = 0; j < g; ++j) {
    const auto column = table.column(j);
    out.closed.push_back(closed_form(model, out.reference_time, grid[j]));
    out.mean.push_back(mean_report(column, seed));
    out.variance.push_back(variance_report(column, seed));
    out.covariance.push_back(covariance_report(ref_column, column, seed));
  }
  out.max_ou_residual = *std::max_element(residual.begin(), residual.end());
  // Trapezoid error: at most a_p b_p h / 2 per jump plus O(h^2) on the smooth
  // decay between jumps. Bound with the largest possible count.
  const double a = model.amplitude;
  const double b = model.decay;
  const double n_max = to_double(model.die.n);
  out.ou_tolerance =
      a * b * step * (0.5 * n_max + 1.0) * (1.0 + b * model.horizon);
  const std::size_t keep = std::min<std::uint64_t>(keep_paths, n_replicates);
  for (std::size_t r = 0; r < keep; ++r) {
    std::vector<double> row(g);
    for (std::size_t j = 0; j < g; ++j) row[j] = table.at(r, j);
    out.sample_paths.push_back(std::move(row));
  }
  return out;
}

}  // namespace orthodice::shotnoise

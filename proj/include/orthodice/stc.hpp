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

// Stone throwing construction: draw K from the count law, throw K iid points
// with law nu, optionally mark them, and evaluate linear functionals N f.
// Replicates run in parallel, each on its own (seed, replicate) RNG stream.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "orthodice/dice.hpp"
#include "orthodice/law.hpp"
#include "orthodice/rng.hpp"

namespace orthodice {

// A point of the (marked) space. Coordinates beyond the space's dimension are
// zero; `atom` is the atom index for finite spaces, -1 otherwise.
struct Point {
  std::array<double, 3> x{};
  double mark = 0.0;
  std::int32_t atom = -1;
};

using PointSampler = std::function<Point(StreamRng&)>;
using MarkKernel = std::function<double(const Point&, StreamRng&)>;
using Indicator = std::function<bool(const Point&)>;

// The count law kappa: a uniform die or an explicit finite pmf.
class CountLaw {
 public:
  // Throws InvalidSupport when the bounds do not fit in 64 bits.
  static CountLaw uniform(const SupportPair& support);
  static CountLaw from_pmf(const NumericLaw& law);

  std::int64_t sample(StreamRng& rng) const;
  double mean() const { return mean_; }
  double variance() const { return variance_; }
  const std::optional<SupportPair>& support() const { return support_; }

 private:
  CountLaw() = default;

  std::int64_t lo_ = 0;
  std::uint64_t width_ = 0;
  std::vector<double> cdf_;
  std::optional<SupportPair> support_;
  double mean_ = 0.0;
  double variance_ = 0.0;
};

struct MeasureModel {
  CountLaw count;
  PointSampler points;
  MarkKernel marks;        // empty: unmarked
  Indicator restriction;   // empty: whole space
  double restriction_mass = 1.0;
};

// Non-negative function on the marked space, optionally multiplied by 1_A.
struct Functional {
  std::string name;
  std::function<double(const Point&)> f;
  Indicator indicator;

  double operator()(const Point& p) const {
    if (indicator && !indicator(p)) return 0.0;
    return f(p);
  }
};

struct Realization {
  std::int64_t count = 0;  // K before any restriction
  std::vector<Point> points;
};

Realization sample_realization(const MeasureModel& model, std::uint64_t seed,
                               std::uint64_t replicate = 0);

// Keeps only points in A. `mass` is nu(A), 0 < mass <= 1.
MeasureModel restrict(const MeasureModel& model, Indicator in_a, double mass);

struct EngineOptions {
  unsigned threads = 1;
};

// Runs body(replicate) for replicate in [0, n) over `threads` workers. The
// body must write only to replicate-indexed storage.
void parallel_for_replicates(std::uint64_t n, unsigned threads,
                             const std::function<void(std::uint64_t)>& body);

// Row-major n_replicates x n_functionals matrix of N f values.
class ReplicateTable {
 public:
  ReplicateTable(std::uint64_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), values_(rows * cols) {}

  std::uint64_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& at(std::uint64_t r, std::size_t c) { return values_[r * cols_ + c]; }
  double at(std::uint64_t r, std::size_t c) const {
    return values_[r * cols_ + c];
  }
  std::vector<double> column(std::size_t c) const;

 private:
  std::uint64_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

ReplicateTable run_replicates(const MeasureModel& model,
                              std::span<const Functional> functionals,
                              std::uint64_t n_replicates, std::uint64_t seed,
                              const EngineOptions& options = {});

struct EstimateReport {
  double point_estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t n_replicates = 0;
  std::uint64_t seed = 0;

  // (estimate - target) / std_error; 0 when both the error and the gap vanish.
  double z_score(double target) const;
};

EstimateReport mean_report(std::span<const double> xs, std::uint64_t seed);
EstimateReport variance_report(std::span<const double> xs, std::uint64_t seed);
EstimateReport covariance_report(std::span<const double> xs,
                                 std::span<const double> ys,
                                 std::uint64_t seed);

struct EstimateSummary {
  std::vector<std::string> names;
  std::vector<EstimateReport> means;
  std::vector<EstimateReport> variances;
  // covariances[i][j] for i < j
  std::vector<std::vector<EstimateReport>> covariances;
};

// Mean of N f across replicates.
EstimateReport estimate_functional(const MeasureModel& model,
                                   const Functional& functional,
                                   std::uint64_t n_replicates,
                                   std::uint64_t seed,
                                   const EngineOptions& options = {});

EstimateSummary estimate_functionals(const MeasureModel& model,
                                     std::span<const Functional> functionals,
                                     std::uint64_t n_replicates,
                                     std::uint64_t seed,
                                     const EngineOptions& options = {});

namespace samplers {

PointSampler uniform_interval(double lo, double hi);
// Independent centered Gaussians on the first `variances.size()` coordinates.
PointSampler gaussian_product(std::vector<double> variances);
// Uniform over `atoms` atoms, sets Point::atom and x[0] = atom.
PointSampler uniform_atoms(std::size_t atoms);

}  // namespace samplers

namespace marks {

// Lognormal with the given mean and variance.
MarkKernel lognormal(double mean, double variance);
// Deterministic mark values[atom].
MarkKernel atom_values(std::vector<double> values);

}  // namespace marks

// Closed registry used by the CLI and the C API.
//
// Models: "<count>@<space>" where count is "die:M:N", "die-index:K" or
// "dirac:C", and space is "interval[:LO:HI]", "goe", "gaussian:V1[:V2[:V3]]",
// "deck" (52 cards marked with points 1..13) or "lognormal-marks:MEAN:VAR"
// (unit interval points with lognormal marks).
//
// Functionals: "one", "x", "x2", "mark", "interval:LO:HI", "suit:S",
// "suit-points:S", "goe-gap", "goe-gap-A:R", "goe-gap-B:R".
MeasureModel parse_model(const std::string& spec);
Functional parse_functional(const std::string& spec);

}  // namespace orthodice

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

#include "orthodice/stc.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "orthodice/error.hpp"

namespace orthodice {

CountLaw CountLaw::uniform(const SupportPair& support) {
  support.validate();
  if (!fits_int64(support.n)) {
    throw Error(ErrorCode::InvalidSupport,
                "support too large to simulate: n=" + to_string(support.n));
  }
  CountLaw law;
  law.lo_ = to_int64(support.m);
  law.width_ = static_cast<std::uint64_t>(to_int64(support.n) - law.lo_) + 1;
  law.support_ = support;
  law.mean_ = to_double(support.mean());
  law.variance_ = to_double(support.variance());
  return law;
}

CountLaw CountLaw::from_pmf(const NumericLaw& pmf) {
  if (pmf.probs.empty() || pmf.offset < 0) {
    throw Error(ErrorCode::InvalidArgument,
                "count pmf must be non-empty on non-negative integers");
  }
  CountLaw law;
  law.lo_ = pmf.offset;
  double total = 0.0;
  double first = 0.0;
  double second = 0.0;
  law.cdf_.reserve(pmf.probs.size());
  for (std::size_t j = 0; j < pmf.probs.size(); ++j) {
    const double p = pmf.probs[j];
    if (p < 0.0) {
      throw Error(ErrorCode::InvalidArgument, "negative probability");
    }
    const double x = static_cast<double>(pmf.offset) + static_cast<double>(j);
    total += p;
    first += p * x;
    second += p * x * x;
    law.cdf_.push_back(total);
  }
  for (auto& value : law.cdf_) value /= total;
  law.mean_ = first / total;
  law.variance_ = second / total - law.mean_ * law.mean_;
  if (!(law.mean_ > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "count law mean must be positive");
  }
  return law;
}

std::int64_t CountLaw::sample(StreamRng& rng) const {
  if (cdf_.empty()) {
    return lo_ + static_cast<std::int64_t>(rng.below(width_));
  }
  const double u = rng.uniform();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto idx = std::min<std::size_t>(
      static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1);
  return lo_ + static_cast<std::int64_t>(idx);
}

namespace {

template <class Visit>
void throw_stones(const MeasureModel& model, StreamRng& rng, Visit&& visit) {
  const std::int64_t count = model.count.sample(rng);
  for (std::int64_t i = 0; i < count; ++i) {
    Point p = model.points(rng);
    if (model.marks) p.mark = model.marks(p, rng);
    if (model.restriction && !model.restriction(p)) continue;
    visit(p);
  }
}

}  // namespace

Realization sample_realization(const MeasureModel& model, std::uint64_t seed,
                               std::uint64_t replicate) {
  StreamRng rng(seed, replicate);
  Realization out;
  // Re-derive K from an identical stream so it is reported before
  // restriction without perturbing the point draws.
  StreamRng count_rng(seed, replicate);
  out.count = model.count.sample(count_rng);
  throw_stones(model, rng, [&](const Point& p) { out.points.push_back(p); });
  return out;
}

MeasureModel restrict(const MeasureModel& model, Indicator in_a, double mass) {
  if (!(mass > 0.0) || mass > 1.0) {
    throw Error(ErrorCode::InvalidArgument,
                "restriction mass must lie in (0, 1]");
  }
  MeasureModel out = model;
  if (mass == 1.0 && !in_a) return out;
  if (model.restriction) {
    Indicator outer = model.restriction;
    out.restriction = [outer, in_a](const Point& p) {
      return outer(p) && in_a(p);
    };
  } else {
    out.restriction = std::move(in_a);
  }
  out.restriction_mass = model.restriction_mass * mass;
  return out;
}

void parallel_for_replicates(std::uint64_t n, unsigned threads,
                             const std::function<void(std::uint64_t)>& body) {
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, n));
  if (workers == 1) {
    for (std::uint64_t r = 0; r < n; ++r) body(r);
    return;
  }
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(n, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&body, &failures, w, begin, end] {
        try {
          for (std::uint64_t r = begin; r < end; ++r) body(r);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
}

std::vector<double> ReplicateTable::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::uint64_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

ReplicateTable run_replicates(const MeasureModel& model,
                              std::span<const Functional> functionals,
                              std::uint64_t n_replicates, std::uint64_t seed,
                              const EngineOptions& options) {
  ReplicateTable table(n_replicates, functionals.size());
  parallel_for_replicates(n_replicates, options.threads, [&](std::uint64_t r) {
    StreamRng rng(seed, r);
    std::vector<double> sums(functionals.size(), 0.0);
    throw_stones(model, rng, [&](const Point& p) {
      for (std::size_t j = 0; j < functionals.size(); ++j)
        sums[j] += functionals[j](p);
    });
    for (std::size_t j = 0; j < sums.size(); ++j) table.at(r, j) = sums[j];
  });
  return table;
}

double EstimateReport::z_score(double target) const {
  const double gap = point_estimate - target;
  if (std_error == 0.0) {
    return gap == 0.0 ? 0.0 : std::copysign(HUGE_VAL, gap);
  }
  return gap / std_error;
}

namespace {

double sample_mean(std::span<const double> xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

void require_replicates(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument, "need at least 2 replicates");
  }
}

}  // namespace

EstimateReport mean_report(std::span<const double> xs, std::uint64_t seed) {
  require_replicates(xs.size());
  const double n = static_cast<double>(xs.size());
  const double mu = sample_mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - mu) * (x - mu);
  const double var = ss / (n - 1.0);
  return {mu, std::sqrt(var / n), xs.size(), seed};
}

EstimateReport variance_report(std::span<const double> xs, std::uint64_t seed) {
  return covariance_report(xs, xs, seed);
}

EstimateReport covariance_report(std::span<const double> xs,
                                 std::span<const double> ys,
                                 std::uint64_t seed) {
  require_replicates(xs.size());
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::InvalidArgument, "sample sizes differ");
  }
  const double n = static_cast<double>(xs.size());
  const double mx = sample_mean(xs);
  const double my = sample_mean(ys);
  double sxy = 0.0;
  double s2 = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double prod = (xs[i] - mx) * (ys[i] - my);
    sxy += prod;
    s2 += prod * prod;
  }
  const double cov = sxy / (n - 1.0);
  // Var of the product of centered values, delta method.
  const double m_prod = sxy / n;
  const double spread = std::max(0.0, s2 / n - m_prod * m_prod);
  return {cov, std::sqrt(spread / n), xs.size(), seed};
}

EstimateReport estimate_functional(const MeasureModel& model,
                                   const Functional& functional,
                                   std::uint64_t n_replicates,
                                   std::uint64_t seed,
                                   const EngineOptions& options) {
  const auto table = run_replicates(model, std::span(&functional, 1),
                                    n_replicates, seed, options);
  return mean_report(table.column(0), seed);
}

EstimateSummary estimate_functionals(const MeasureModel& model,
                                     std::span<const Functional> functionals,
                                     std::uint64_t n_replicates,
                                     std::uint64_t seed,
                                     const EngineOptions& options) {
  const auto table =
      run_replicates(model, functionals, n_replicates, seed, options);
  EstimateSummary out;
  std::vector<std::vector<double>> columns;
  for (std::size_t j = 0; j < functionals.size(); ++j) {
    columns.push_back(table.column(j));
    out.names.push_back(functionals[j].name);
    out.means.push_back(mean_report(columns.back(), seed));
    out.variances.push_back(variance_report(columns.back(), seed));
  }
  out.covariances.resize(functionals.size());
  for (std::size_t i = 0; i < functionals.size(); ++i) {
    out.covariances[i].resize(functionals.size());
    for (std::size_t j = i + 1; j < functionals.size(); ++j)
      out.covariances[i][j] = covariance_report(columns[i], columns[j], seed);
  }
  return out;
}

namespace samplers {

PointSampler uniform_interval(double lo, double hi) {
  if (!(hi > lo)) {
    throw Error(ErrorCode::InvalidArgument, "interval needs lo < hi");
  }
  return [lo, hi](StreamRng& rng) {
    Point p;
    p.x[0] = lo + (hi - lo) * rng.uniform();
    return p;
  };
}

PointSampler gaussian_product(std::vector<double> variances) {
  if (variances.empty() || variances.size() > 3) {
    throw Error(ErrorCode::InvalidArgument,
                "Gaussian space needs 1 to 3 coordinates");
  }
  std::vector<double> sd;
  for (double v : variances) {
    if (!(v > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "variances must be positive");
    }
    sd.push_back(std::sqrt(v));
  }
  return [sd](StreamRng& rng) {
    Point p;
    for (std::size_t i = 0; i < sd.size(); ++i) p.x[i] = sd[i] * rng.normal();
    return p;
  };
}

PointSampler uniform_atoms(std::size_t atoms) {
  if (atoms == 0) {
    throw Error(ErrorCode::InvalidArgument, "need at least one atom");
  }
  return [atoms](StreamRng& rng) {
    Point p;
    p.atom = static_cast<std::int32_t>(rng.below(atoms));
    p.x[0] = p.atom;
    return p;
  };
}

}  // namespace samplers

namespace marks {

MarkKernel lognormal(double mean, double variance) {
  if (!(mean > 0.0) || variance < 0.0) {
    throw Error(ErrorCode::InvalidArgument,
                "lognormal marks need mean > 0 and variance >= 0");
  }
  const double sigma2 = std::log1p(variance / (mean * mean));
  const double mu = std::log(mean) - 0.5 * sigma2;
  const double sigma = std::sqrt(sigma2);
  return [mu, sigma](const Point&, StreamRng& rng) {
    return std::exp(mu + sigma * rng.normal());
  };
}

MarkKernel atom_values(std::vector<double> values) {
  return [values = std::move(values)](const Point& p, StreamRng&) {
    if (p.atom < 0 || static_cast<std::size_t>(p.atom) >= values.size()) {
      throw Error(ErrorCode::InvalidArgument, "point has no atom value");
    }
    return values[static_cast<std::size_t>(p.atom)];
  };
}

}  // namespace marks

}  // namespace orthodice

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

#include "orthodice/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "orthodice/error.hpp"

namespace orthodice::stats {

TestResult chi_square_gof(std::span<const std::uint64_t> observed,
                          std::span<const double> expected_probs,
                          double min_expected) {
  if (observed.size() != expected_probs.size() || observed.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "observed and expected bins must match");
  }
  double total = 0.0;
  for (auto count : observed) total += static_cast<double>(count);

  // Pool left to right; a short remainder joins the last pooled bin.
  std::vector<double> obs;
  std::vector<double> exp;
  double o = 0.0;
  double e = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    o += static_cast<double>(observed[i]);
    e += expected_probs[i] * total;
    if (e >= min_expected) {
      obs.push_back(o);
      exp.push_back(e);
      o = e = 0.0;
    }
  }
  if (e > 0.0 || o > 0.0) {
    if (exp.empty()) {
      obs.push_back(o);
      exp.push_back(e);
    } else {
      obs.back() += o;
      exp.back() += e;
    }
  }
  TestResult result;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const double gap = obs[i] - exp[i];
    result.statistic += gap * gap / exp[i];
  }
  result.dof = obs.size() > 1 ? obs.size() - 1 : 1;
  result.p_value = boost::math::gamma_q(0.5 * static_cast<double>(result.dof),
                                        0.5 * result.statistic);
  return result;
}

TestResult ks_test(std::vector<double> samples,
                   const std::function<double(double)>& cdf) {
  if (samples.empty()) {
    throw Error(ErrorCode::InvalidArgument, "KS test needs samples");
  }
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f,
                  f - static_cast<double>(i) / n});
  }
  const double root_n = std::sqrt(n);
  const double x = (root_n + 0.12 + 0.11 / root_n) * d;
  double p = 0.0;
  if (x < 0.2) {
    p = 1.0;
  } else {
    for (int j = 1; j <= 100; ++j) {
      const double term = std::exp(-2.0 * j * j * x * x);
      p += (j % 2 == 1 ? 2.0 : -2.0) * term;
      if (term < 1e-16) break;
    }
    p = std::clamp(p, 0.0, 1.0);
  }
  return {d, p, samples.size()};
}

}  // namespace orthodice::stats

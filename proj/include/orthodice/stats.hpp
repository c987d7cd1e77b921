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

// Goodness-of-fit helpers used to validate samplers against exact laws.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace orthodice::stats {

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t dof = 0;
};

// Pearson chi-square; adjacent bins are pooled until each expected count is at
// least min_expected.
TestResult chi_square_gof(std::span<const std::uint64_t> observed,
                          std::span<const double> expected_probs,
                          double min_expected = 5.0);

// One-sample Kolmogorov-Smirnov against a continuous CDF (asymptotic p-value).
TestResult ks_test(std::vector<double> samples,
                   const std::function<double(double)>& cdf);

}  // namespace orthodice::stats

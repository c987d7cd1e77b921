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

// String registry for models and functionals (see stc.hpp for the grammar).

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "orthodice/cards.hpp"
#include "orthodice/error.hpp"
#include "orthodice/goe.hpp"
#include "orthodice/stc.hpp"

namespace orthodice {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void bad(const std::string& what, const std::string& spec) {
  throw Error(ErrorCode::InvalidArgument, what + ": '" + spec + "'");
}

double number(const std::string& text, const std::string& spec) {
  if (text.empty()) bad("missing number in", spec);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(text.c_str(), &end);
  if (errno != 0 || end != text.c_str() + text.size() || !std::isfinite(v)) {
    bad("not a finite number '" + text + "' in", spec);
  }
  return v;
}

void expect_arity(const std::vector<std::string>& parts, std::size_t lo,
                  std::size_t hi, const std::string& spec) {
  if (parts.size() < lo || parts.size() > hi) bad("wrong argument count", spec);
}

int parse_suit(const std::string& text, const std::string& spec) {
  for (int s = 0; s < cards::kSuits; ++s) {
    if (text == cards::suit_name(s) || text == std::to_string(s)) return s;
  }
  bad("unknown suit '" + text + "' in", spec);
}

CountLaw parse_count(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  if (kind == "die") {
    expect_arity(parts, 3, 3, spec);
    SupportPair die(parse_integer(parts[1]), parse_integer(parts[2]));
    die.validate();
    return CountLaw::uniform(die);
  }
  if (kind == "die-index") {
    expect_arity(parts, 2, 2, spec);
    return CountLaw::uniform(die_from_index(parse_integer(parts[1])).support());
  }
  if (kind == "dirac") {
    expect_arity(parts, 2, 2, spec);
    const Integer c = parse_integer(parts[1]);
    SupportPair die(c, c);
    die.validate();
    return CountLaw::uniform(die);
  }
  bad("unknown count law", spec);
}

}  // namespace

MeasureModel parse_model(const std::string& spec) {
  const auto at = spec.find('@');
  if (at == std::string::npos || spec.find('@', at + 1) != std::string::npos) {
    bad("model must look like <count>@<space>", spec);
  }
  CountLaw count = parse_count(spec.substr(0, at));
  const std::string space = spec.substr(at + 1);
  const auto parts = split(space, ':');
  const std::string& kind = parts[0];

  if (kind == "interval") {
    expect_arity(parts, 1, 3, space);
    if (parts.size() == 2) bad("interval needs both LO and HI", space);
    double lo = 0.0, hi = 1.0;
    if (parts.size() == 3) {
      lo = number(parts[1], space);
      hi = number(parts[2], space);
    }
    if (!(lo < hi)) bad("interval needs LO < HI", space);
    return {std::move(count), samplers::uniform_interval(lo, hi), {}, {}, 1.0};
  }
  if (kind == "goe") {
    expect_arity(parts, 1, 1, space);
    return {std::move(count), goe::ensemble_sampler(), {}, {}, 1.0};
  }
  if (kind == "gaussian") {
    expect_arity(parts, 2, 4, space);
    std::vector<double> variances;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      const double v = number(parts[i], space);
      if (!(v > 0.0)) bad("variances must be positive", space);
      variances.push_back(v);
    }
    return {std::move(count), samplers::gaussian_product(std::move(variances)),
            {}, {}, 1.0};
  }
  if (kind == "deck") {
    expect_arity(parts, 1, 1, space);
    std::vector<double> values(cards::kDeckSize);
    for (int a = 0; a < cards::kDeckSize; ++a) values[a] = cards::point_value(a);
    return {std::move(count), samplers::uniform_atoms(cards::kDeckSize),
            marks::atom_values(std::move(values)), {}, 1.0};
  }
  if (kind == "lognormal-marks") {
    expect_arity(parts, 3, 3, space);
    const double mean = number(parts[1], space);
    const double var = number(parts[2], space);
    if (!(mean > 0.0) || !(var > 0.0)) {
      bad("lognormal mean and variance must be positive", space);
    }
    return {std::move(count), samplers::uniform_interval(0.0, 1.0),
            marks::lognormal(mean, var), {}, 1.0};
  }
  bad("unknown space", space);
}

Functional parse_functional(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  auto one = [](const Point&) { return 1.0; };
  if (kind == "one") {
    expect_arity(parts, 1, 1, spec);
    return {spec, one, {}};
  }
  if (kind == "x") {
    expect_arity(parts, 1, 1, spec);
    return {spec, [](const Point& p) { return p.x[0]; }, {}};
  }
  if (kind == "x2") {
    expect_arity(parts, 1, 1, spec);
    return {spec, [](const Point& p) { return p.x[0] * p.x[0]; }, {}};
  }
  if (kind == "mark") {
    expect_arity(parts, 1, 1, spec);
    return {spec, [](const Point& p) { return p.mark; }, {}};
  }
  if (kind == "interval") {
    expect_arity(parts, 3, 3, spec);
    const double lo = number(parts[1], spec);
    const double hi = number(parts[2], spec);
    if (!(lo < hi)) bad("interval needs LO < HI", spec);
    return {spec, one,
            [lo, hi](const Point& p) { return p.x[0] >= lo && p.x[0] < hi; }};
  }
  if (kind == "suit" || kind == "suit-points") {
    expect_arity(parts, 2, 2, spec);
    const int suit = parse_suit(parts[1], spec);
    Indicator in_suit = [suit](const Point& p) {
      return p.atom >= 0 && cards::suit_of(p.atom) == suit;
    };
    if (kind == "suit") return {spec, one, std::move(in_suit)};
    return {spec, [](const Point& p) { return p.mark; }, std::move(in_suit)};
  }
  if (kind == "goe-gap") {
    expect_arity(parts, 1, 1, spec);
    return {spec, goe::gap, {}};
  }
  if (kind == "goe-gap-A" || kind == "goe-gap-B") {
    expect_arity(parts, 2, 2, spec);
    const double r = number(parts[1], spec);
    Indicator ind;
    if (kind == "goe-gap-A") {
      ind = [r](const Point& p) { return goe::in_a(p, r); };
    } else {
      ind = [r](const Point& p) { return goe::in_b(p, r); };
    }
    return {spec, goe::gap, std::move(ind)};
  }
  bad("unknown functional", spec);
}

}  // namespace orthodice

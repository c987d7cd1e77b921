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


// Acceptance checks, one line per criterion. Exit status is non-zero if any
// criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "orthodice/cards.hpp"
#include "orthodice/dice.hpp"
#include "orthodice/goe.hpp"
#include "orthodice/gravity.hpp"
#include "orthodice/law.hpp"
#include "orthodice/orthopoly.hpp"
#include "orthodice/shotnoise.hpp"

namespace {

using namespace orthodice;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + ("failed: " + what);
    }
  }
  void note(const std::string& what) {
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome table_one() {
  Outcome o;
  const int expected[15][4] = {{0, 4, 2, 5},      {1, 7, 4, 7},       {5, 15, 10, 11},
                               {8, 20, 14, 13},    {16, 32, 24, 17},   {21, 39, 30, 19},
                               {33, 55, 44, 23},   {40, 64, 52, 25},   {56, 84, 70, 29},
                               {65, 95, 80, 31},   {85, 119, 102, 35}, {96, 132, 114, 37},
                               {120, 160, 140, 41}, {133, 175, 154, 43}, {161, 207, 184, 47}};
  const auto start = Clock::now();
  const auto dice = enumerate_orthogonal(15);
  const double secs = seconds_since(start);
  bool rows = dice.size() == 15;
  for (std::size_t i = 0; rows && i < 15; ++i) {
    rows = dice[i].m == expected[i][0] && dice[i].n == expected[i][1] &&
           dice[i].c == expected[i][2] && dice[i].sides == expected[i][3];
  }
  o.check(rows, "rows differ from the table");
  o.check(secs < 1e-3, "runtime " + fmt(secs) + " s");
  o.note("15 rows, " + fmt(secs * 1e3) + " ms");
  return o;
}

Outcome orthogonality() {
  Outcome o;
  const auto start = Clock::now();
  bool ok = true;
  for (const auto& d : enumerate_orthogonal(500)) {
    ok = ok && d.support().mean() == d.support().variance() &&
         mpz_fdiv_ui(d.sides.get_mpz_t(), 2) != 0 &&
         mpz_fdiv_ui(d.sides.get_mpz_t(), 3) != 0;
  }
  const double secs = seconds_since(start);
  o.check(ok, "mean != variance or side count shares a factor with 6");
  o.check(secs < 1.0, "runtime " + fmt(secs) + " s");
  o.note("500 dice, " + fmt(secs) + " s");
  return o;
}

Outcome prime_construction() {
  Outcome o;
  const auto small = die_from_prime_product(Integer(37));
  o.check(small.m == 96 && small.n == 132 && small.c == 114 && small.k == 17,
          "p = 37");
  const auto start = Clock::now();
  const Integer p = parse_integer("2^82589933-1");
  const auto die = die_from_prime_product(p);
  const std::size_t digits = decimal_digits(p);
  // c = (m + n)/2 and delta^2 = c, both through the k-form.
  const bool halves = 2 * die.c == die.m + die.n;
  const bool orth = verify_orthogonality(die);
  const double secs = seconds_since(start);
  o.check(digits == 24862048, "digit count " + std::to_string(digits));
  o.check(halves, "c != (m + n)/2");
  o.check(orth, "delta^2 != c");
  o.check(secs < 30.0, "runtime " + fmt(secs) + " s");
  o.note("Mersenne p has " + std::to_string(digits) + " digits, " + fmt(secs) + " s");
  return o;
}

Outcome coprime_counting() {
  Outcome o;
  const auto start = Clock::now();
  std::uint64_t running = 0;
  std::uint64_t first_bad = 0;
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    if (n % 2 != 0 && n % 3 != 0) ++running;
    if (n >= 5 && first_bad == 0 && count_coprime23(Integer(n)) != running) first_bad = n;
  }
  const double secs = seconds_since(start);
  o.check(first_bad == 0, "mismatch at n = " + std::to_string(first_bad));
  o.check(count_coprime23_oracle(1'000'000) == running, "oracle scan");
  o.check(secs < 10.0, "runtime " + fmt(secs) + " s");
  o.note("5 <= n <= 10^6, " + fmt(secs) + " s");
  return o;
}

Outcome card_numbers() {
  Outcome o;
  o.check(cards::covariance_table({1, 6}).points.covariance == Rational(-343, 192), "(1,6)");
  o.check(cards::covariance_table({1, 8}).points.covariance == Rational(147, 64), "(1,8)");
  const auto big = cards::covariance_table({0, 36});
  o.check(big.points.covariance == 294 && big.points.variance == Rational(1155, 2), "(0,36)");
  o.check(std::abs(big.points.correlation - 0.509) <= 1e-3,
          "correlation " + fmt(big.points.correlation));
  double worst = 0.0;
  for (const SupportPair& die : {SupportPair(1, 6), SupportPair(1, 8), SupportPair(0, 36)}) {
    const auto t = cards::covariance_table(die);
    const auto g = cards::simulate_game(die, 1'000'000, 20260101, {workers()}, 0);
    worst = std::max({worst, std::abs(g.points_covariance.z_score(to_double(t.points.covariance))),
                      std::abs(g.count_covariance.z_score(to_double(t.counts.covariance)))});
  }
  o.check(worst < 4.0, "Monte Carlo |z| = " + fmt(worst));
  o.note("max |z| " + fmt(worst) + " at 10^6 rounds");
  return o;
}

Outcome partitions() {
  Outcome o;
  const std::array<unsigned, 4> counts{2, 2, 2, 1};
  const auto p = cards::partition_pmf(7, counts);
  const double hyper = to_double(p.without_replacement);
  const double multi = to_double(p.with_replacement);
  o.check(std::abs(hyper - 0.0461128) <= 5e-7, "hypergeometric " + fmt(hyper));
  o.check(std::abs(multi - 0.0384521) <= 5e-7, "multinomial " + fmt(multi));
  o.note(to_string(p.without_replacement) + ", " + to_string(p.with_replacement));
  return o;
}

Outcome poisson_convergence() {
  Outcome o;
  const auto start = Clock::now();
  std::vector<Integer> ls;
  for (int l : {17, 19, 22, 25, 31, 47, 97}) ls.emplace_back(l);
  const auto rows = convergence_sequence(Integer(17), ls);
  const double secs = seconds_since(start);
  bool tv = true, sup = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    tv = tv && rows[i].tv_distance < rows[i - 1].tv_distance;
    sup = sup && rows[i].sup_distance < rows[i - 1].sup_distance;
  }
  o.check(tv, "tv distance not strictly decreasing");
  o.check(sup, "pgf sup distance not strictly decreasing");
  o.check(2 * rows.back().tv_distance <= rows.front().tv_distance, "factor 2 drop");
  o.check(secs < 30.0, "runtime " + fmt(secs) + " s");
  o.note("tv " + fmt(rows.front().tv_distance) + " -> " + fmt(rows.back().tv_distance) +
         ", " + fmt(secs) + " s");
  return o;
}

Outcome thinned_laws() {
  Outcome o;
  int pairs = 0;
  const Rational as[] = {Rational(1, 2), Rational(2, 7)};
  for (const auto& die : enumerate_orthogonal(10)) {
    for (const auto& a : as) {
      const auto law = thinned_pmf(die.support(), ThinningParam(a));
      const Rational ac = a * Rational(die.c);
      o.check(law.total() == 1, "pmf total");
      o.check(law.mean() == ac, "mean");
      o.check(law.variance() == ac, "variance");
      ++pairs;
    }
  }
  o.note(std::to_string(pairs) + " (die, a) pairs");
  return o;
}

Outcome goe_restriction() {
  Outcome o;
  const EngineOptions opts{workers()};
  const auto ens = goe::ensemble_moments(10'000'000, 20260101, opts);
  const double z1 = (ens.nu_f - std::sqrt(2 * std::numbers::pi)) / ens.se_f;
  const double z2 = (ens.nu_f2 - 8.0) / ens.se_f2;
  o.check(std::abs(z1) < 4.0, "nu f z = " + fmt(z1));
  o.check(std::abs(z2) < 4.0, "nu f^2 z = " + fmt(z2));

  const auto at0 = goe::conditional_moments(0.0, 10'000'000, 20260101, opts);
  o.check(std::abs(at0.nu_f - 2.98373) <= 2e-3, "r=0 nu f " + fmt(at0.nu_f));
  o.check(std::abs(at0.nu_f2 - 10.5465) <= 1e-2, "r=0 nu f^2 " + fmt(at0.nu_f2));

  const auto grid = goe::default_r_grid();
  const auto rows = goe::summary(grid, 1'000'000, 20260101, opts);
  bool decreasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    decreasing = decreasing && rows[i].var_ratio_orthogonal < rows[i - 1].var_ratio_orthogonal;
  }
  const auto peak = std::max_element(rows.begin(), rows.end(), [](auto& a, auto& b) {
    return a.var_ratio_dirac < b.var_ratio_dirac;
  });
  o.check(decreasing, "orthogonal curve not strictly decreasing");
  o.check(peak != rows.begin() && peak != rows.end() - 1, "Dirac maximum on the boundary");
  o.note("nu f z " + fmt(z1) + ", nu f^2 z " + fmt(z2) + ", r=0 (" + fmt(at0.nu_f) + ", " +
         fmt(at0.nu_f2) + "), Dirac peak at r=" + fmt(peak->r));
  return o;
}

Outcome milky_way() {
  Outcome o;
  const auto start = Clock::now();
  const auto mw = gravity::milky_way();
  const double secs = seconds_since(start);
  o.check(mw.die.m == Integer("249999189525") && mw.die.n == Integer("250000921575"), "die");
  o.check(mw.die.c == Integer("250000055550"), "c");
  o.check(mw.die.sides == 1732051 && mw.die.sides_prime.value_or(false), "sides prime");
  o.check(mw.sides_prime_rank == 130347, "prime rank " + std::to_string(mw.sides_prime_rank));
  o.check(mw.mass_scale == Integer("1000000222200"), "b_m c");
  o.check(secs < 5.0, "runtime " + fmt(secs) + " s");
  o.note("1732051 is prime #" + std::to_string(mw.sides_prime_rank) + ", " + fmt(secs) + " s");
  return o;
}

Outcome shot_noise() {
  Outcome o;
  shotnoise::ShotNoiseModel m;
  m.horizon = 10.0;
  m.die = die_from_index(Integer(4)).support();
  m.amplitude = 1.0;
  m.decay = 1.0;
  const auto grid = shotnoise::uniform_grid(m.horizon, 20);
  const auto res = shotnoise::simulate(m, grid, 10000, 20260101, {workers()});
  double worst = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    worst = std::max({worst, std::abs(res.mean[j].z_score(res.closed[j].mean)),
                      std::abs(res.variance[j].z_score(res.closed[j].variance)),
                      std::abs(res.covariance[j].z_score(res.closed[j].covariance))});
  }
  o.check(worst < 4.0, "max |z| " + fmt(worst));

  shotnoise::ShotNoiseModel single;
  single.horizon = 5.0;
  single.die = {1, 1};
  const auto fine = shotnoise::uniform_grid(5.0, 501);
  const std::vector<double> arrival{0.0};
  const auto z = shotnoise::path(single, arrival, fine);
  double gap = 0.0;
  for (std::size_t j = 0; j < fine.size(); ++j) gap = std::max(gap, std::abs(z[j] - std::exp(-fine[j])));
  o.check(gap == 0.0, "single pulse deviates by " + fmt(gap));
  o.note("max |z| " + fmt(worst) + " over 20 grid points");
  return o;
}

Outcome polynomials() {
  Outcome o;
  std::vector<Integer> ls;
  for (int l : {17, 19, 22, 25, 31}) ls.emplace_back(l);
  const auto ch = charlier_system(Rational(114), 5);
  for (const auto& l : ls) {
    const auto die = die_from_index(l);
    const auto sys =
        thinned_die_system(die.support(), ThinningParam(Rational(Integer(114), die.c)), 1);
    o.check(sys.polys[0] == ch.polys[0] && sys.polys[1] == ch.polys[1],
            "P0/P1 at l=" + to_string(l));
  }
  const auto report = convergence_report(Integer(17), ls, 3, {1, 2});
  for (std::size_t p = 0; p < 2; ++p) {
    bool dec = true;
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
      dec = dec && report.rows[i].distances[p].distance < report.rows[i - 1].distances[p].distance;
    }
    o.check(dec, "p=" + std::to_string(p + 1) + " distances not strictly decreasing");
  }
  double worst = 0.0;
  for (const int theta : {1, 114}) {
    const auto sys = charlier_system(Rational(theta), 5);
    // Poisson moments by Touchard's formula
    std::vector<Rational> moments;
    for (unsigned r = 0; r <= 10; ++r) {
      const auto s = stirling2_row(r);
      Rational acc = 0, pw = 1;
      for (unsigned j = 0; j <= r; ++j, pw *= theta) acc += Rational(s[j]) * pw;
      moments.push_back(acc);
    }
    double expected = 1.0;
    for (unsigned n = 0; n <= 5; ++n) {
      if (n > 0) expected *= n * static_cast<double>(theta);
      const double norm = to_double(inner_product(sys.polys[n], sys.polys[n], moments));
      worst = std::max(worst, std::abs(norm / expected - 1.0));
    }
  }
  o.check(worst <= 1e-10, "norm identity off by " + fmt(worst));
  o.note("p=2 d: " + fmt(report.rows.front().distances[1].distance) + " -> " +
         fmt(report.rows.back().distances[1].distance));
  return o;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(ORTHODICE_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  if (pclose(pipe) != 0) return "";
  return out;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> commands = {
      "sim estimate --model die:1:6@interval --functional x,x2 --reps 20000 --seed 5",
      "app cards game --m 1 --n 6 --rounds 20000 --seed 5",
      "app goe summary --r-grid=-1,0,1 --samples 20000 --seed 5",
      "app goe wigner --n 5000 --seed 5",
      "app shotnoise --T 10 --ap 1 --bp 1 --die-index 4 --grid 20 --reps 3000 --seed 5",
      "app gravity --reps 3000 --seed 5",
      "app gravity --preset milkyway --reps 3000 --seed 5",
  };
  int same = 0;
  for (const auto& c : commands) {
    const std::string one = run_cli(c + " --threads 1");
    const std::string many = run_cli(c + " --threads 4");
    const bool ok = !one.empty() && one.front() == '{' && one == many;
    o.check(ok, "'" + c + "'");
    same += ok;
  }
  o.note(std::to_string(same) + "/" + std::to_string(commands.size()) +
         " commands identical for --threads 1 and 4");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Table 1 reproduction", table_one},
      {"orthogonality identity", orthogonality},
      {"prime construction", prime_construction},
      {"coprime counting", coprime_counting},
      {"card-game numbers", card_numbers},
      {"partition probabilities", partitions},
      {"Poisson convergence", poisson_convergence},
      {"thinned-law identities", thinned_laws},
      {"GOE", goe_restriction},
      {"Milky Way preset", milky_way},
      {"shot noise", shot_noise},
      {"polynomials", polynomials},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    failures += !out.pass;
    std::printf("criterion %2zu %-24s %s  %s\n", i + 1, criteria[i].first,
                out.pass ? "PASS" : "FAIL", out.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

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

#include "orthodice/cards.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orthodice/error.hpp"

namespace orthodice::cards {

const char* suit_name(int suit) {
  static constexpr const char* kNames[] = {"spades", "hearts", "diamonds",
                                           "clubs"};
  return (suit >= 0 && suit < kSuits) ? kNames[suit] : "unknown";
}

DeckMoments deck_moments() {
  Rational first = 0;
  Rational second = 0;
  for (int atom = 0; atom < kDeckSize; ++atom) {
    const Rational h(point_value(atom));
    first += h;
    second += h * h;
  }
  return {first / kDeckSize, second / kDeckSize};
}

namespace {

SuitStats suit_stats(const MomentSummary& ms, const Rational& nu_f,
                     const Rational& nu_f2) {
  // f_A and f_B live on disjoint suits, so nu(f_A f_B) = 0.
  const FunctionalStats<Rational> fs{nu_f, nu_f, Rational(0), nu_f2};
  const auto st = mixed_binomial_stats(ms, fs);
  SuitStats out{st.mean, st.variance, st.covariance, 0.0};
  if (st.variance != 0) out.correlation = to_double(Rational(st.covariance / st.variance));
  return out;
}

}  // namespace

CovarianceTable covariance_table(const SupportPair& die) {
  const DiceClass cls = classify(die);
  const MomentSummary ms = MomentSummary::of(die);
  const DeckMoments deck = deck_moments();
  const Rational quarter(1, kSuits);
  return {die, cls, ms, suit_stats(ms, quarter, quarter),
          suit_stats(ms, quarter * deck.nu_h, quarter * deck.nu_h2)};
}

PartitionProbs partition_pmf(unsigned hand, std::span<const unsigned> counts) {
  if (counts.size() != kSuits) {
    throw Error(ErrorCode::InvalidPartition,
                "expected one count per suit (4), got " +
                    std::to_string(counts.size()));
  }
  const unsigned total = std::accumulate(counts.begin(), counts.end(), 0U);
  if (total != hand) {
    throw Error(ErrorCode::InvalidPartition,
                "suit counts sum to " + std::to_string(total) +
                    " but the hand has " + std::to_string(hand) + " cards");
  }
  if (hand > kDeckSize) {
    throw Error(ErrorCode::InvalidPartition,
                "a hand holds at most " + std::to_string(kDeckSize) + " cards");
  }
  Integer ways = 1;
  Integer multinomial = 1;
  Integer factorial_hand;
  mpz_fac_ui(factorial_hand.get_mpz_t(), hand);
  multinomial = factorial_hand;
  for (unsigned count : counts) {
    ways *= binomial(kRanks, count);
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), count);
    mpz_divexact(multinomial.get_mpz_t(), multinomial.get_mpz_t(),
                 f.get_mpz_t());
  }
  Rational without(ways, binomial(kDeckSize, hand));
  without.canonicalize();
  Integer four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), kSuits, hand);
  Rational with(multinomial, four_pow);
  with.canonicalize();
  return {without, with};
}

MeasureModel deck_model(const SupportPair& die) {
  std::vector<double> values(kDeckSize);
  for (int atom = 0; atom < kDeckSize; ++atom) values[atom] = point_value(atom);
  return {CountLaw::uniform(die), samplers::uniform_atoms(kDeckSize),
          marks::atom_values(std::move(values)), {}, 1.0};
}

std::vector<Functional> suit_functionals() {
  std::vector<Functional> out;
  for (int suit = 0; suit < kSuits; ++suit) {
    out.push_back({std::string("count:") + suit_name(suit),
                   [](const Point&) { return 1.0; },
                   [suit](const Point& p) { return suit_of(p.atom) == suit; }});
  }
  for (int suit = 0; suit < kSuits; ++suit) {
    out.push_back({std::string("points:") + suit_name(suit),
                   [](const Point& p) { return p.mark; },
                   [suit](const Point& p) { return suit_of(p.atom) == suit; }});
  }
  return out;
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Copy: return "copy";
    case Strategy::AntiCopy: return "anticopy";
    case Strategy::Coin: return "coin";
  }
  return "unknown";
}

Strategy recommended_strategy(const DiceClass& cls) {
  switch (cls.variant) {
    case DiceVariant::PositiveDie: return Strategy::Copy;
    case DiceVariant::NegativeDie: return Strategy::AntiCopy;
    case DiceVariant::Orthogonal: return Strategy::Coin;
  }
  return Strategy::Coin;
}

GameResult simulate_game(const SupportPair& die, std::uint64_t rounds,
                         std::uint64_t seed, const EngineOptions& options,
                         std::size_t scatter_limit) {
  if (rounds < 2) {
    throw Error(ErrorCode::InvalidArgument, "need at least 2 rounds");
  }
  const DiceClass cls = classify(die);
  const MeasureModel model = deck_model(die);
  const auto functionals = suit_functionals();
  const ReplicateTable table =
      run_replicates(model, functionals, rounds, seed, options);

  // Threshold (7/4) c with c = (m + n)/2: points >= 7c/4 <=> 8 points >= 7(m+n).
  const double threshold = 7.0 * to_double(Integer(die.m + die.n));
  constexpr int kPairs = kSuits * (kSuits - 1);
  // Coin flips come from their own stream family so they do not disturb the
  // card draws.
  const std::uint64_t coin_seed = seed ^ 0x636F696E666C6970ULL;

  std::vector<double> copy(rounds);
  std::vector<double> anticopy(rounds);
  std::vector<double> coin(rounds);
  parallel_for_replicates(rounds, options.threads, [&](std::uint64_t r) {
    bool above[kSuits];
    for (int s = 0; s < kSuits; ++s)
      above[s] = 8.0 * table.at(r, kSuits + s) >= threshold;
    StreamRng flips(coin_seed, r);
    int agree = 0;
    int coin_hits = 0;
    for (int a = 0; a < kSuits; ++a) {
      for (int b = 0; b < kSuits; ++b) {
        if (a == b) continue;
        if (above[a] == above[b]) ++agree;
        const bool guess = (flips() >> 63) != 0;
        if (guess == above[b]) ++coin_hits;
      }
    }
    copy[r] = static_cast<double>(agree) / kPairs;
    anticopy[r] = static_cast<double>(kPairs - agree) / kPairs;
    coin[r] = static_cast<double>(coin_hits) / kPairs;
  });

  // Indicator covariance Cov(I_A, I_B) pooled over ordered pairs: the
  // agreement rate is 1/2 + 2 (p - 1/2)^2 + 2 Cov, so the skew of p can mask
  // the sign of the covariance in the raw accuracies.
  double hits = 0.0;
  for (std::uint64_t r = 0; r < rounds; ++r)
    for (int s = 0; s < kSuits; ++s) hits += 8.0 * table.at(r, kSuits + s) >= threshold;
  const double rate = hits / static_cast<double>(rounds * kSuits);
  std::vector<double> cross(rounds);
  for (std::uint64_t r = 0; r < rounds; ++r) {
    double dev[kSuits];
    for (int s = 0; s < kSuits; ++s)
      dev[s] = (8.0 * table.at(r, kSuits + s) >= threshold ? 1.0 : 0.0) - rate;
    double sum = 0.0;
    for (int a = 0; a < kSuits; ++a)
      for (int b = 0; b < kSuits; ++b)
        if (a != b) sum += dev[a] * dev[b];
    cross[r] = sum / kPairs;
  }

  GameResult out;
  out.indicator_rate = rate;
  out.indicator_covariance = mean_report(cross, seed);
  out.die = die;
  out.die_class = cls;
  out.rounds = rounds;
  out.seed = seed;
  out.copy_accuracy = mean_report(copy, seed);
  out.anticopy_accuracy = mean_report(anticopy, seed);
  out.coin_accuracy = mean_report(coin, seed);
  out.recommended = recommended_strategy(cls);
  constexpr int kSpades = 0;
  constexpr int kDiamonds = 2;
  out.count_covariance = covariance_report(
      table.column(kSpades), table.column(kDiamonds), seed);
  out.points_covariance = covariance_report(table.column(kSuits + kSpades),
                                            table.column(kSuits + kDiamonds),
                                            seed);
  const std::uint64_t keep = std::min<std::uint64_t>(scatter_limit, rounds);
  out.scatter.reserve(keep);
  for (std::uint64_t r = 0; r < keep; ++r) {
    out.scatter.push_back({table.at(r, kSpades), table.at(r, kDiamonds),
                           table.at(r, kSuits + kSpades),
                           table.at(r, kSuits + kDiamonds)});
  }
  return out;
}

}  // namespace orthodice::cards

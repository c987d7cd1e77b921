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


#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "orthodice/cards.hpp"
#include "orthodice/error.hpp"

namespace orthodice::cards {
namespace {

TEST(Cards, DeckMoments) {
  const auto d = deck_moments();
  EXPECT_EQ(d.nu_h, 7);
  EXPECT_EQ(d.nu_h2, 63);
}

TEST(Cards, ExactSuitCovariances) {
  EXPECT_EQ(covariance_table({1, 6}).points.covariance, Rational(-343, 192));
  EXPECT_EQ(covariance_table({1, 8}).points.covariance, Rational(147, 64));
  const auto big = covariance_table({0, 36});
  EXPECT_EQ(big.points.covariance, 294);
  EXPECT_EQ(big.points.variance, Rational(1155, 2));
  EXPECT_NEAR(big.points.correlation, 0.509, 1e-3);
  EXPECT_EQ(big.points.mean, Rational(63, 2));
}

TEST(Cards, OrthogonalDieHasNoSuitCovariance) {
  for (const SupportPair& die : {SupportPair(96, 132), SupportPair(0, 4)}) {
    const auto t = covariance_table(die);
    EXPECT_EQ(t.counts.covariance, 0);
    EXPECT_EQ(t.points.covariance, 0);
    EXPECT_EQ(t.die_class.variant, DiceVariant::Orthogonal);
  }
}

TEST(Cards, PartitionProbabilities) {
  const std::array<unsigned, 4> counts{2, 2, 2, 1};
  const auto p = partition_pmf(7, counts);
  EXPECT_EQ(p.without_replacement, Rational(59319, 1286390));
  EXPECT_EQ(p.with_replacement, Rational(315, 8192));
  EXPECT_NEAR(to_double(p.without_replacement), 0.0461128, 5e-7);
  EXPECT_NEAR(to_double(p.with_replacement), 0.0384521, 5e-7);
}

TEST(Cards, PartitionErrors) {
  const std::array<unsigned, 4> short_hand{2, 2, 2, 0};
  EXPECT_THROW(partition_pmf(7, short_hand), Error);
  const std::array<unsigned, 4> past_deck{53, 0, 0, 0};
  EXPECT_THROW(partition_pmf(53, past_deck), Error);
  // Possible with replacement only.
  const std::array<unsigned, 4> one_suit{14, 0, 0, 0};
  const auto p = partition_pmf(14, one_suit);
  EXPECT_EQ(p.without_replacement, 0);
  EXPECT_GT(p.with_replacement, 0);
}

TEST(Cards, MonteCarloCovariancesAtAMillionRounds) {
  for (const SupportPair& die :
       {SupportPair(1, 6), SupportPair(1, 8), SupportPair(0, 36)}) {
    const auto t = covariance_table(die);
    const auto g = simulate_game(die, 1'000'000, 2026, {2}, 0);
    EXPECT_LT(std::abs(g.points_covariance.z_score(to_double(t.points.covariance))), 4.0)
        << die.m << "," << die.n;
    EXPECT_LT(std::abs(g.count_covariance.z_score(to_double(t.counts.covariance))), 4.0)
        << die.m << "," << die.n;
  }
}

TEST(Cards, CopyWinsForStronglyPositiveDie) {
  const auto g = simulate_game({0, 36}, 100000, 4);
  EXPECT_EQ(g.recommended, Strategy::Copy);
  EXPECT_GT(g.copy_accuracy.z_score(0.5), 10.0);
  EXPECT_NEAR(g.copy_accuracy.point_estimate + g.anticopy_accuracy.point_estimate, 1.0, 1e-12);
  EXPECT_LT(std::abs(g.coin_accuracy.z_score(0.5)), 4.0);
}

// The guessing signal is the indicator 1{M f_A >= 7c/4}, not M f_A itself.
// Its correlation sign follows the die variant for (1, 6) and (0, 36), but
// for the orthogonal die it is positive even though Cov(M f_A, M f_B) = 0.
TEST(Cards, IndicatorCorrelationSigns) {
  const auto neg = simulate_game({1, 6}, 200000, 1);
  EXPECT_EQ(neg.recommended, Strategy::AntiCopy);
  EXPECT_LT(neg.indicator_covariance.z_score(0.0), -4.0);

  const auto pos = simulate_game({0, 36}, 200000, 1);
  EXPECT_GT(pos.indicator_covariance.z_score(0.0), 4.0);

  const auto orth = simulate_game({96, 132}, 200000, 1);
  EXPECT_EQ(orth.recommended, Strategy::Coin);
  EXPECT_LT(std::abs(orth.points_covariance.z_score(0.0)), 4.0);
  EXPECT_GT(orth.indicator_covariance.z_score(0.0), 4.0);
}

TEST(Cards, GameIsThreadIndependent) {
  const auto a = simulate_game({1, 8}, 50000, 77, {1});
  const auto b = simulate_game({1, 8}, 50000, 77, {3});
  EXPECT_EQ(a.copy_accuracy.point_estimate, b.copy_accuracy.point_estimate);
  EXPECT_EQ(a.points_covariance.point_estimate, b.points_covariance.point_estimate);
  EXPECT_EQ(a.scatter, b.scatter);
}

TEST(Cards, ScatterRowsHaveConsistentShape) {
  const auto g = simulate_game({0, 36}, 500, 9, {}, 100);
  ASSERT_EQ(g.scatter.size(), 100u);
  for (const auto& row : g.scatter) {
    EXPECT_LE(row[2], 13.0 * row[0]);  // points <= 13 per card
    EXPECT_GE(row[2], row[0]);
  }
}

}  // namespace
}  // namespace orthodice::cards

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

// Card games: dice-driven draws with replacement from a 52 card deck, points
// per suit, and the sign-guessing game between suit holders.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "orthodice/dice.hpp"
#include "orthodice/law.hpp"
#include "orthodice/stc.hpp"

namespace orthodice::cards {

inline constexpr int kSuits = 4;
inline constexpr int kRanks = 13;
inline constexpr int kDeckSize = kSuits * kRanks;

// Atoms are numbered suit * 13 + rank with rank 0 = two ... rank 12 = ace.
inline int suit_of(int atom) { return atom / kRanks; }
// h: two -> 1, ..., ace -> 13.
inline int point_value(int atom) { return atom % kRanks + 1; }

const char* suit_name(int suit);

struct DeckMoments {
  Rational nu_h;   // sum_x nu{x} h(x) = 7
  Rational nu_h2;  // sum_x nu{x} h(x)^2 = 63
};

DeckMoments deck_moments();

struct SuitStats {
  Rational mean;
  Rational variance;
  Rational covariance;  // between two distinct suits
  double correlation = 0.0;
};

struct CovarianceTable {
  SupportPair die;
  DiceClass die_class;
  MomentSummary moments;
  SuitStats counts;  // N(A) for a suit A
  SuitStats points;  // M f_A, points held in suit A
};

CovarianceTable covariance_table(const SupportPair& die);

struct PartitionProbs {
  Rational without_replacement;  // multivariate hypergeometric
  Rational with_replacement;     // multinomial with equal suit masses
};

// counts holds one entry per suit and must sum to `hand`.
PartitionProbs partition_pmf(unsigned hand, std::span<const unsigned> counts);

MeasureModel deck_model(const SupportPair& die);

// Count functionals 1_suit for suits 0..3 followed by point functionals
// f_suit(x, y) = 1_suit(x) y.
std::vector<Functional> suit_functionals();

enum class Strategy { Copy, AntiCopy, Coin };

const char* strategy_name(Strategy s);

// Copy for positive dice, AntiCopy for negative dice, Coin for orthogonal.
Strategy recommended_strategy(const DiceClass& cls);

struct GameResult {
  SupportPair die;
  DiceClass die_class;
  std::uint64_t rounds = 0;
  std::uint64_t seed = 0;
  // Per-round fraction of the 12 ordered (guesser, target) pairs guessed
  // correctly, averaged over rounds.
  EstimateReport copy_accuracy;
  EstimateReport anticopy_accuracy;
  EstimateReport coin_accuracy;
  Strategy recommended = Strategy::Coin;
  // P(M f_A >= (7/4) c) pooled over suits, and Cov(1{M f_A >= (7/4)c},
  // 1{M f_B >= (7/4)c}) pooled over ordered pairs.
  double indicator_rate = 0.0;
  EstimateReport indicator_covariance;
  EstimateReport count_covariance;   // Cov(K_spades, K_diamonds)
  EstimateReport points_covariance;  // Cov(M f_spades, M f_diamonds)
  // (K_A, K_B, M f_A, M f_B) for A = spades, B = diamonds, first rounds.
  std::vector<std::array<double, 4>> scatter;
};

GameResult simulate_game(const SupportPair& die, std::uint64_t rounds,
                         std::uint64_t seed, const EngineOptions& options = {},
                         std::size_t scatter_limit = 1000);

}  // namespace orthodice::cards

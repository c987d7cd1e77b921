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

#include "orthodice/error.hpp"
#include "orthodice/numeric.hpp"

namespace orthodice {
namespace {

TEST(Numeric, ParsesPowersAndOffsets) {
  EXPECT_EQ(parse_integer("2^10-1"), Integer(1023));
  EXPECT_EQ(parse_integer(" 37 "), Integer(37));
  EXPECT_EQ(decimal_digits(parse_integer("2^82589933-1")), 24862048u);
}

TEST(Numeric, RationalsFromFractionsAndDecimals) {
  bool decimal = true;
  EXPECT_EQ(parse_rational("6/8", &decimal), Rational(3, 4));
  EXPECT_FALSE(decimal);
  EXPECT_EQ(parse_rational("0.125", &decimal), Rational(1, 8));
  EXPECT_TRUE(decimal);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Numeric, DigitCountsAtPowersOfTen) {
  EXPECT_EQ(decimal_digits(Integer(0)), 1u);
  EXPECT_EQ(decimal_digits(Integer(9)), 1u);
  EXPECT_EQ(decimal_digits(Integer(10)), 2u);
  EXPECT_EQ(decimal_digits(Integer(-999)), 3u);
}

TEST(Numeric, Combinatorics) {
  EXPECT_EQ(falling_factorial(Integer(10), 3), Integer(720));
  EXPECT_EQ(binomial(52, 7), Integer(133784560));
  // S(4, k) = 0 1 7 6 1
  const auto row = stirling2_row(4);
  ASSERT_EQ(row.size(), 5u);
  EXPECT_EQ(row[1], 1);
  EXPECT_EQ(row[2], 7);
  EXPECT_EQ(row[3], 6);
  EXPECT_EQ(row[4], 1);
  EXPECT_EQ(isqrt(Integer(99)), 9);
  EXPECT_EQ(ceil_div(Integer(7), Integer(3)), 3);
}

}  // namespace
}  // namespace orthodice

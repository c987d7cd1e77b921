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

// Exact arithmetic vocabulary shared by all modules.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace orthodice {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts plain decimal integers and the power forms "B^E", "B^E+C", "B^E-C"
// (e.g. "2^82589933-1").
Integer parse_integer(std::string_view text);

// Accepts "P/Q", integers, and decimal literals ("0.25" parses to exactly 1/4).
// `was_decimal` is set when a decimal point or exponent was present.
Rational parse_rational(std::string_view text, bool* was_decimal = nullptr);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

double to_double(const Integer& value);
double to_double(const Rational& value);

bool fits_int64(const Integer& value);
std::int64_t to_int64(const Integer& value);

// Exact number of decimal digits of |value| (1 for zero).
std::size_t decimal_digits(const Integer& value);

// x (x-1) ... (x-s+1); 1 when s == 0.
Integer falling_factorial(const Integer& x, unsigned s);

Integer binomial(unsigned long n, unsigned long k);

// Row r of the Stirling numbers of the second kind: S(r, 0..r).
std::vector<Integer> stirling2_row(unsigned r);

Integer isqrt(const Integer& value);

// Ceiling of num/den for den > 0.
Integer ceil_div(const Integer& num, const Integer& den);

}  // namespace orthodice

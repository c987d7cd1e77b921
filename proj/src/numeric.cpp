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

#include "orthodice/error.hpp"

#include "orthodice/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cctype>
#include <limits>

namespace orthodice {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IndexNotInI: return "IndexNotInI";
    case ErrorCode::InvalidSideCount: return "InvalidSideCount";
    case ErrorCode::InvalidSupport: return "InvalidSupport";
    case ErrorCode::DomainTooSmall: return "DomainTooSmall";
    case ErrorCode::SupportTooLarge: return "SupportTooLarge";
    case ErrorCode::DegenerateMomentMatrix: return "DegenerateMomentMatrix";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::TimeOutOfRange: return "TimeOutOfRange";
    case ErrorCode::SingularEvaluationPoint: return "SingularEvaluationPoint";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::InvalidArgument,
              "not a number: '" + std::string(text) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Integer plain_integer(std::string_view text) {
  text = trim(text);
  std::string digits(text);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  const std::size_t start = (!digits.empty() && digits.front() == '-') ? 1 : 0;
  if (digits.size() == start) bad_number(text);
  if (!std::all_of(digits.begin() + start, digits.end(),
                   [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    bad_number(text);
  return Integer(digits, 10);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) return plain_integer(text);

  const Integer base = plain_integer(text.substr(0, caret));
  std::string_view rest = text.substr(caret + 1);
  const auto sign = rest.find_first_of("+-");
  const Integer exponent = plain_integer(rest.substr(0, sign));
  if (exponent < 0 || !exponent.fits_ulong_p()) bad_number(text);
  Integer value;
  mpz_pow_ui(value.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
  if (sign != std::string_view::npos) {
    const Integer offset = plain_integer(rest.substr(sign + 1));
    value = rest[sign] == '+' ? Integer(value + offset)
                              : Integer(value - offset);
  }
  return value;
}

Rational parse_rational(std::string_view text, bool* was_decimal) {
  text = trim(text);
  if (was_decimal) *was_decimal = false;
  if (text.empty()) bad_number(text);
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const Integer num = plain_integer(text.substr(0, slash));
    const Integer den = plain_integer(text.substr(slash + 1));
    if (den == 0) bad_number(text);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  const auto mark = text.find_first_of(".eE");
  if (mark == std::string_view::npos) return Rational(plain_integer(text));

  if (was_decimal) *was_decimal = true;
  std::string_view mantissa = text;
  long exponent = 0;
  const auto e = text.find_first_of("eE");
  if (e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    const Integer ex = plain_integer(text.substr(e + 1));
    if (!ex.fits_slong_p()) bad_number(text);
    exponent = ex.get_si();
  }
  std::string digits;
  bool negative = false;
  bool seen_digit = false;
  long fraction_digits = 0;
  bool after_point = false;
  for (std::size_t i = 0; i < mantissa.size(); ++i) {
    const char ch = mantissa[i];
    if (i == 0 && (ch == '-' || ch == '+')) {
      negative = ch == '-';
    } else if (ch == '.' && !after_point) {
      after_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      seen_digit = true;
      if (after_point) ++fraction_digits;
    } else {
      bad_number(text);
    }
  }
  if (!seen_digit) bad_number(text);
  Rational q{Integer(digits, 10)};
  const long scale = exponent - fraction_digits;
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  if (scale >= 0) {
    q *= power;
  } else {
    q /= power;
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  Rational q(value);
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

double to_double(const Integer& value) { return value.get_d(); }

double to_double(const Rational& value) {
  // mpq_get_d truncates; go through mpf for correct rounding on long inputs.
  const Integer& num = value.get_num();
  const Integer& den = value.get_den();
  const long shift = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) -
                     static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) + 64;
  Integer scaled = num;
  if (shift > 0) {
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), shift);
  } else {
    mpz_fdiv_q_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), -shift);
  }
  Integer quotient;
  mpz_tdiv_q(quotient.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, quotient.get_mpz_t());
  return std::ldexp(mantissa, static_cast<int>(exp - shift));
}

bool fits_int64(const Integer& value) { return value.fits_slong_p(); }

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p())
    throw Error(ErrorCode::InvalidArgument,
                "integer does not fit in 64 bits: " + to_string(value));
  return value.get_si();
}

std::size_t decimal_digits(const Integer& value) {
  Integer magnitude = abs(value);
  if (magnitude == 0) return 1;
  std::size_t digits = mpz_sizeinbase(magnitude.get_mpz_t(), 10);
  // sizeinbase may overshoot by one; compare against 10^(digits-1).
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, digits - 1);
  if (magnitude < power) --digits;
  return digits;
}

Integer falling_factorial(const Integer& x, unsigned s) {
  Integer result = 1;
  for (unsigned i = 0; i < s; ++i) result *= x - i;
  return result;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

std::vector<Integer> stirling2_row(unsigned r) {
  std::vector<Integer> row(r + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= r; ++i) {
    for (unsigned j = i; j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row;
}

Integer isqrt(const Integer& value) {
  Integer root;
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  return root;
}

Integer ceil_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace orthodice

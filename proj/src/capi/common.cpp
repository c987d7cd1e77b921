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

#include <cmath>
#include <cstring>

#include "internal.hpp"

namespace orthodice::capi {
namespace {

thread_local std::string last_error;

}  // namespace

void set_last_error(const std::string& message) { last_error = message; }
const char* last_error_message() { return last_error.c_str(); }

od_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexNotInI: return OD_INDEX_NOT_IN_I;
    case ErrorCode::InvalidSideCount: return OD_INVALID_SIDE_COUNT;
    case ErrorCode::InvalidSupport: return OD_INVALID_SUPPORT;
    case ErrorCode::DomainTooSmall: return OD_DOMAIN_TOO_SMALL;
    case ErrorCode::SupportTooLarge: return OD_SUPPORT_TOO_LARGE;
    case ErrorCode::DegenerateMomentMatrix: return OD_DEGENERATE_MOMENT_MATRIX;
    case ErrorCode::InvalidPartition: return OD_INVALID_PARTITION;
    case ErrorCode::TimeOutOfRange: return OD_TIME_OUT_OF_RANGE;
    case ErrorCode::SingularEvaluationPoint: return OD_SINGULAR_EVALUATION_POINT;
    case ErrorCode::InvalidArgument: return OD_INVALID_ARGUMENT;
  }
  return OD_INTERNAL;
}

const od_options& resolve(const od_options* o) {
  static const od_options defaults;
  return o != nullptr ? *o : defaults;
}

EngineOptions engine(const od_options& o) { return {o.threads}; }

Json integer(const Integer& value, const od_options& o) {
  if (fits_int64(value)) return to_int64(value);
  // sizeinbase may overshoot by one; only pay for the exact count when the
  // value is near or past the summary limit.
  const std::size_t rough = mpz_sizeinbase(value.get_mpz_t(), 10);
  if (o.max_digits == 0 || rough <= o.max_digits) return to_string(value);
  const std::size_t digits = decimal_digits(value);
  if (digits <= o.max_digits) return to_string(value);
  Integer modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), 10, 20);
  Integer low;
  mpz_tdiv_r(low.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  std::string tail = to_string(Integer(abs(low)));
  tail.insert(0, 20 - tail.size(), '0');
  Json j = Json::object();
  j["digits"] = digits;
  j["tail"] = tail;
  if (value < 0) j["negative"] = true;
  return j;
}

Json rational(const Rational& value) {
  Json j = Json::object();
  j["rational"] = to_string(value);
  j["decimal"] = to_double(value);
  return j;
}

Json report(const EstimateReport& r) {
  Json j = Json::object();
  j["estimate"] = r.point_estimate;
  j["std_error"] = r.std_error;
  j["replicates"] = r.n_replicates;
  j["seed"] = r.seed;
  return j;
}

Json table(std::initializer_list<const char*> columns) {
  Json j = Json::object();
  j["columns"] = Json::array();
  for (const char* c : columns) j["columns"].push_back(c);
  j["rows"] = Json::array();
  return j;
}

Json table(const std::vector<std::string>& columns) {
  Json j = Json::object();
  j["columns"] = columns;
  j["rows"] = Json::array();
  return j;
}

void set_tables(Json& payload, const char* default_table) {
  payload["default_table"] = default_table;
}

Integer arg_integer(const char* text, const char* what) {
  if (text == nullptr) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
  }
  try {
    return parse_integer(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + ": " + e.what());
  }
}

Rational arg_rational(const char* text, const char* what, Output& out) {
  if (text == nullptr) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
  }
  bool decimal = false;
  Rational value;
  try {
    value = parse_rational(text, &decimal);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + ": " + e.what());
  }
  if (decimal) {
    out.warnings.push_back(std::string(what) + " '" + text +
                           "' given as a decimal; using the exact value " +
                           to_string(value));
  }
  return value;
}

std::vector<Integer> arg_integers(const char* const* items, std::size_t n,
                                  const char* what) {
  if (n > 0 && items == nullptr) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
  }
  std::vector<Integer> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(arg_integer(items[i], what));
  return out;
}

}  // namespace orthodice::capi

using namespace orthodice::capi;

extern "C" {

const char* od_version(void) { return "1.0.0"; }

const char* od_status_name(od_status status) {
  if (status == OD_OK) return "OK";
  if (status == OD_INTERNAL) return "Internal";
  if (status >= OD_INDEX_NOT_IN_I && status <= OD_INVALID_ARGUMENT) {
    // error_name views string literals, so data() is NUL-terminated.
    return orthodice::error_name(static_cast<orthodice::ErrorCode>(status - 1))
        .data();
  }
  return "Unknown";
}

const char* od_last_error_message(void) {
  return orthodice::capi::last_error_message();
}

od_status od_options_create(od_options** out) {
  if (out == nullptr) return OD_INVALID_ARGUMENT;
  *out = new (std::nothrow) od_options;
  return *out != nullptr ? OD_OK : OD_INTERNAL;
}

void od_options_destroy(od_options* options) { delete options; }

#define OD_REQUIRE(cond, message)          \
  do {                                     \
    if (!(cond)) {                         \
      set_last_error(message);             \
      return OD_INVALID_ARGUMENT;          \
    }                                      \
  } while (0)

od_status od_options_set_threads(od_options* o, unsigned threads) {
  OD_REQUIRE(o != nullptr, "options handle is NULL");
  OD_REQUIRE(threads >= 1, "threads must be >= 1");
  o->threads = threads;
  return OD_OK;
}

od_status od_options_set_tail_tol(od_options* o, double tol) {
  OD_REQUIRE(o != nullptr, "options handle is NULL");
  OD_REQUIRE(tol > 0.0 && tol < 1.0, "tail tolerance must lie in (0, 1)");
  o->tail_tol = tol;
  return OD_OK;
}

od_status od_options_set_grid_size(od_options* o, size_t size) {
  OD_REQUIRE(o != nullptr, "options handle is NULL");
  OD_REQUIRE(size >= 2, "grid needs at least 2 points");
  o->grid_size = size;
  return OD_OK;
}

od_status od_options_set_support_cap(od_options* o, int64_t cap) {
  OD_REQUIRE(o != nullptr, "options handle is NULL");
  OD_REQUIRE(cap >= 1, "support cap must be positive");
  o->support_cap = cap;
  return OD_OK;
}

od_status od_options_set_samples(od_options* o, uint64_t samples) {
  OD_REQUIRE(o != nullptr, "options handle is NULL");
  OD_REQUIRE(samples == 0 || samples >= 2, "need 0 (quadrature) or >= 2 samples");
  o->samples = samples;
  return OD_OK;
}

od_status od_options_set_full_integers(od_options* o, uint64_t max_digits) {
  OD_REQUIRE(o != nullptr, "options handle is NULL");
  o->max_digits = max_digits;
  return OD_OK;
}

const char* od_result_json(const od_result* result) {
  return result != nullptr ? result->json.c_str() : nullptr;
}

size_t od_result_warning_count(const od_result* result) {
  return result != nullptr ? result->warnings.size() : 0;
}

const char* od_result_warning(const od_result* result, size_t i) {
  if (result == nullptr || i >= result->warnings.size()) return nullptr;
  return result->warnings[i].c_str();
}

void od_result_destroy(od_result* result) { delete result; }

}  // extern "C"

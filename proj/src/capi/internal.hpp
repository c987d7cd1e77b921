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

// Shared plumbing for the extern "C" layer: handle definitions, JSON
// encoders for exact values and the exception-to-status trap.

#include <cstdint>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orthodice/error.hpp"
#include "orthodice/goe.hpp"
#include "orthodice/law.hpp"
#include "orthodice/numeric.hpp"
#include "orthodice/orthodice.h"

struct od_options {
  unsigned threads = 1;
  double tail_tol = orthodice::kDefaultTailTol;
  std::size_t grid_size = orthodice::kDefaultGridSize;
  std::int64_t support_cap = orthodice::kDefaultSupportCap;
  std::uint64_t samples = orthodice::goe::kDefaultSamples;
  std::uint64_t max_digits = 1000;
};

struct od_result {
  std::string json;
  std::vector<std::string> warnings;
};

namespace orthodice::capi {

using Json = nlohmann::ordered_json;

// What an operation produces before it is serialized.
struct Output {
  Json payload = Json::object();
  std::vector<std::string> warnings;
};

const od_options& resolve(const od_options* o);
EngineOptions engine(const od_options& o);

Json integer(const Integer& value, const od_options& o);
Json rational(const Rational& value);
Json report(const EstimateReport& r);

// {"columns": [...], "rows": []}; rows are appended by the caller.
Json table(std::initializer_list<const char*> columns);
Json table(const std::vector<std::string>& columns);
void set_tables(Json& payload, const char* default_table);

Integer arg_integer(const char* text, const char* what);
// Decimal input is accepted but recorded as a warning.
Rational arg_rational(const char* text, const char* what, Output& out);
std::vector<Integer> arg_integers(const char* const* items, std::size_t n,
                                  const char* what);

void set_last_error(const std::string& message);
const char* last_error_message();
od_status status_of(ErrorCode code);

template <class Body>
od_status run(od_result** out, Body&& body) {
  if (out == nullptr) {
    set_last_error("output pointer is NULL");
    return OD_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    Output produced = body();
    auto* result = new od_result;
    result->json = produced.payload.dump();
    result->warnings = std::move(produced.warnings);
    *out = result;
    set_last_error("");
    return OD_OK;
  } catch (const Error& e) {
    set_last_error(e.what());
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    set_last_error("out of memory");
    return OD_INTERNAL;
  } catch (const std::exception& e) {
    set_last_error(e.what());
    return OD_INTERNAL;
  }
}

// Scalar entry points: body returns nothing and writes through pointers.
template <class Body>
od_status run_scalar(Body&& body) {
  try {
    body();
    set_last_error("");
    return OD_OK;
  } catch (const Error& e) {
    set_last_error(e.what());
    return status_of(e.code());
  } catch (const std::exception& e) {
    set_last_error(e.what());
    return OD_INTERNAL;
  }
}

}  // namespace orthodice::capi

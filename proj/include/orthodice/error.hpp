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

#include <stdexcept>
#include <string>
#include <string_view>

namespace orthodice {

enum class ErrorCode {
  IndexNotInI,
  InvalidSideCount,
  InvalidSupport,
  DomainTooSmall,
  SupportTooLarge,
  DegenerateMomentMatrix,
  InvalidPartition,
  TimeOutOfRange,
  SingularEvaluationPoint,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code) noexcept;

// Domain error raised by every module. The code is stable and maps one to one
// onto the C API status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orthodice

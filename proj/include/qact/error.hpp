// Copyright 2026 The qact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qact {

enum class ErrorCode {
  DivisionByZero,
  InvalidQ,
  ParseError,
  Singular,
  DimensionMismatch,
  NotTriangular,
  GridTooLarge,
  MalformedExpression,
  RelationViolated,
  DeterminantSingular,
  DeterminantNotCentral,
  AntipodeIdentityFailed,
  A11Singular,
  R22Singular,
  DNotInvariant,
  DSingular,
  MSingular,
  ModuleAlgebraViolated,
  Lemma1Mismatch,
  Unsupported,
  ConstraintViolated,
  InvalidFormParameter,
  VerificationFailure,
  UnexpectedEquivalence,
  CorollaryViolated,
  UnknownEntry,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// All library failures surface as this exception; `code()` identifies the
/// condition and `position()` is set for text-parsing failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qact

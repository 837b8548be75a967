// Copyright 2026 the loewy developers
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

#ifndef LOEWY_ERRORS_HPP
#define LOEWY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace loewy {

enum class Errc {
  NotPrime,
  ReduciblePolynomial,
  SyntaxError,
  DivisionByZeroDenominator,
  ZeroInverse,
  FieldMismatch,
  DimensionMismatch,
  FieldError,
  RadicalNotComputable,
  SplitFieldRequired,
  SplitFailure,
  InvalidCocycle,
  ShapeMismatch,
  NotAPivot,
  BadRootOfUnity,
  MalformedParams,
  FieldExtensionRequired,
  NotOneDimensional,
  NotInvertible,
  NoConsistentScalar,
  NotWellDefinedOnCohomology,
  StarConventionViolation,
  SizeBudgetExceeded,
  IndexOutOfRange,
  ParseError,
  ValidationError,
  Internal,
};

const char* errc_name(Errc c);

/// All library failures surface as this exception; `code` selects the
/// machine-readable class, `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

}  // namespace loewy

#endif

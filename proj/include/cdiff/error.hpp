// Copyright 2026 The cdifflab Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdiff {

enum class Errc {
  // field construction and arithmetic
  NonPrime,
  FieldTooLarge,
  DivisionByZero,
  FieldMismatch,
  BadTowerParameters,
  ZeroElement,
  BadDivisor,
  // function model
  NotAPermutation,
  ParseError,
  // analyzer
  CEqualsOne,
  // constructions
  ForbiddenU,
  BadParameters,
  ZeroGamma,
  WrongCharacteristic,
  GammaNotDthRoot,
  CoeffOutsideSubfield,
  BadGamma,
  EvenQuotient,
  DegenerateCoefficients,
  ZeroT,
  BadU,
  PhiOneZero,
  GNotSubfieldPermutation,
  BadN,
  GEscapesSubfield,
  BadDivisorList,
  // criteria
  ZeroA,
  HRangeViolation,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::BadTowerParameters: return "BadTowerParameters";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::BadDivisor: return "BadDivisor";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::ParseError: return "ParseError";
    case Errc::CEqualsOne: return "CEqualsOne";
    case Errc::ForbiddenU: return "ForbiddenU";
    case Errc::BadParameters: return "BadParameters";
    case Errc::ZeroGamma: return "ZeroGamma";
    case Errc::WrongCharacteristic: return "WrongCharacteristic";
    case Errc::GammaNotDthRoot: return "GammaNotDthRoot";
    case Errc::CoeffOutsideSubfield: return "CoeffOutsideSubfield";
    case Errc::BadGamma: return "BadGamma";
    case Errc::EvenQuotient: return "EvenQuotient";
    case Errc::DegenerateCoefficients: return "DegenerateCoefficients";
    case Errc::ZeroT: return "ZeroT";
    case Errc::BadU: return "BadU";
    case Errc::PhiOneZero: return "PhiOneZero";
    case Errc::GNotSubfieldPermutation: return "GNotSubfieldPermutation";
    case Errc::BadN: return "BadN";
    case Errc::GEscapesSubfield: return "GEscapesSubfield";
    case Errc::BadDivisorList: return "BadDivisorList";
    case Errc::ZeroA: return "ZeroA";
    case Errc::HRangeViolation: return "HRangeViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cdiff

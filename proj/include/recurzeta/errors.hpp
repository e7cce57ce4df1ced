// Copyright 2026 the recurzeta authors
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

namespace recurzeta {

/// Base class of all library errors. `code()` is a stable machine-readable
/// identifier that the CLI surfaces in its error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define RECURZETA_ERROR(NAME, CODE)                                  \
  class NAME : public Error {                                        \
   public:                                                           \
    explicit NAME(const std::string& what) : Error(CODE, what) {}    \
  }

// lrs
RECURZETA_ERROR(ZeroSequence, "zero_sequence");
RECURZETA_ERROR(InternalInconsistency, "internal_inconsistency");
RECURZETA_ERROR(UnknownName, "unknown_name");

// spectral
RECURZETA_ERROR(PrecisionExhausted, "precision_exhausted");
RECURZETA_ERROR(RepeatedRoots, "repeated_roots");
RECURZETA_ERROR(IllConditioned, "ill_conditioned");
RECURZETA_ERROR(HypothesesNotMet, "hypotheses_not_met");

// continuation
RECURZETA_ERROR(DivergentRegion, "divergent_region");
RECURZETA_ERROR(PoleProximity, "pole_proximity");
RECURZETA_ERROR(TruncationFailure, "truncation_failure");

// poles
RECURZETA_ERROR(WindowTooLarge, "window_too_large");
RECURZETA_ERROR(UnsupportedFormat, "unsupported_format");

// special values
RECURZETA_ERROR(IsPole, "is_pole");
RECURZETA_ERROR(ZeroDenominator, "zero_denominator");
RECURZETA_ERROR(NotAnInteger, "not_an_integer");
RECURZETA_ERROR(ReconstructionFailed, "reconstruction_failed");
RECURZETA_ERROR(NotQuadratic, "not_quadratic");
RECURZETA_ERROR(NonRationalResult, "non_rational_result");

// cli
RECURZETA_ERROR(ParseError, "parse_error");
RECURZETA_ERROR(ValidationError, "validation_error");

// ball arithmetic domain violations (log of nonpositive interval, division
// by an interval containing zero, branch-cut crossing, ...)
RECURZETA_ERROR(DomainError, "domain_error");

#undef RECURZETA_ERROR

}  // namespace recurzeta

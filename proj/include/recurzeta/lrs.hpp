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

#include <gmpxx.h>

#include <string>
#include <vector>

namespace recurzeta {

/// Integer linear recurrence a_{n+d} = c_{d-1} a_{n+d-1} + ... + c_0 a_n with
/// initial terms a_1..a_d. Coefficients are stored in ascending order
/// (c_0 first), matching the JSON input schema.
struct RecurrenceSpec {
  int order = 0;
  std::vector<mpz_class> coeffs;
  std::vector<mpz_class> initial;
  std::string label;

  /// Throws ValidationError on structural problems (order < 1, length
  /// mismatches).
  void validate() const;
  /// The monic annihilator Q(x) = x^d - c_{d-1} x^{d-1} - ... - c_0 implied
  /// by the recurrence, ascending coefficients.
  std::vector<mpz_class> annihilator() const;
};

/// Monic polynomial over Z, ascending coefficients, coeffs.back() == 1.
struct IntegerPolynomial {
  std::vector<mpz_class> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  /// Render like "x^2 - x - 1".
  std::string to_string() const;
};

struct SequenceWindow {
  long start_index = 1;  // index of terms.front(), 1-based
  std::vector<mpz_class> terms;
};

/// First `count` terms a_1..a_count, exact.
SequenceWindow generate_terms(const RecurrenceSpec& spec, long count);

/// Unique monic generator of the annihilator ideal over Z. Decided by exact
/// Hankel linear algebra over Q on 2d terms, smallest consistent degree,
/// re-verified against 3d further terms.
IntegerPolynomial minimal_polynomial(const RecurrenceSpec& spec);

/// Registry: fibonacci, lucas, tribonacci, nbonacci(N) for N >= 2.
RecurrenceSpec builtin_sequence(const std::string& name);

}  // namespace recurzeta

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

#include <vector>

#include "recurzeta/spectral.hpp"

namespace recurzeta {

/// Multi-index beta = (beta_1, ..., beta_r) with |beta| = m.
struct BetaIndex {
  std::vector<long> beta;
};

/// Enumerates all beta with r slots and |beta| = m (deterministic order).
std::vector<BetaIndex> beta_indices(int r, long m);

struct CertificationRecord {
  Prec precision_used = 0;  // 0 marks the exact symbolic path
  bool verified_at_double_precision = false;
  double integer_rounding_radius = 0.0;
};

/// Exact rational with a record of how the reconstruction was verified.
/// Canonical: denominator > 0, gcd(num, den) = 1.
struct RationalValue {
  mpq_class value;
  CertificationRecord certification;

  mpz_class numerator() const { return value.get_num(); }
  mpz_class denominator() const { return value.get_den(); }
};

struct NegIntPoleCheck {
  bool is_pole = false;
  bool ambiguous = false;
  explicit operator bool() const { return is_pole; }
};

/// Conservative pole test at s = -m via enumeration in a small window.
NegIntPoleCheck is_negative_integer_pole(const NormalizedSequence& ns, long m);

/// D = prod_{|beta|=m} (1 - alpha^beta), a rational integer by symmetry;
/// certified rounding, escalating precision until the radius is < 1/2.
mpz_class denominator_integer(const NormalizedSequence& ns, long m);

/// phi(-m) as an exact rational (Dirichlet prefix plus the finite beta sum),
/// by certified evaluation + continued-fraction reconstruction, verified at
/// doubled precision.
RationalValue phi_negative_integer(const NormalizedSequence& ns, long m);

/// Independent exact oracle for degree-2 spectra: computes phi(-m) in the
/// quadratic extension Q(sqrt(disc)) with exact rational pairs; the
/// irrational component must vanish.
RationalValue quadratic_exact_value(const RecurrenceSpec& spec, long m,
                                    long min_shift = 0);

/// Simplest rational (smallest denominator, then smallest numerator) in the
/// closed interval [lo, hi]. Exposed for reuse in tests.
mpq_class simplest_rational_in(const mpq_class& lo, const mpq_class& hi);

}  // namespace recurzeta

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

#include <optional>
#include <string>
#include <vector>

#include "recurzeta/ball.hpp"
#include "recurzeta/lrs.hpp"

namespace recurzeta {

/// Certified root enclosures ordered by decreasing modulus, ties broken by
/// increasing principal argument. Certified-real roots carry an exactly zero
/// imaginary part. Distinct roots have pairwise disjoint enclosures.
struct RootSet {
  std::vector<BallComplex> roots;
  std::vector<int> multiplicities;  // exact, from squarefree decomposition
  Prec precision_bits = 0;

  int count() const { return static_cast<int>(roots.size()); }
  bool separable() const;
};

struct BinetData {
  std::vector<BallComplex> lambdas;  // aligned with RootSet order
};

enum class MonotonicityClass {
  EventuallyIncreasing,
  NegatedEventuallyIncreasing,
  InfiniteSignChanges,
  Inconclusive,
};

std::string to_string(MonotonicityClass m);

struct DominanceReport {
  bool dominant_is_real = false;
  bool dominant_gt_one = false;
  // multiplicity one AND certified strict modulus gap over every other root
  bool dominant_simple = false;
  bool separable = false;
  bool lambda1_positive = false;
  MonotonicityClass monotonicity_class = MonotonicityClass::Inconclusive;
  double q_ratio_at_shift = 0.0;       // q at n = n0+1 when hypotheses hold
  std::optional<double> norm_abs;      // |alpha_1 * ... * alpha_r|
  std::optional<double> theta;         // arg of the second root when complex
  std::optional<double> sigma_c;       // 0 under the hypotheses
  std::string diagnosis;               // empty when hypotheses hold
};

/// Shifted view a_{n+n0} on which the continuation formulas are valid:
/// terms strictly increasing and >= 1, q-ratio certified < 1 and decreasing.
struct NormalizedSequence {
  RecurrenceSpec spec;
  IntegerPolynomial min_poly;
  long shift_n0 = 0;
  std::vector<mpz_class> prefix;  // a_1..a_{n0}, exact
  RootSet roots;
  BinetData binet;    // lambda_i of the original sequence
  BinetData shifted;  // lambda_i' = lambda_i * alpha_i^{n0}
  BallReal q1;        // q at shifted n = 1, certified < 1
  Prec precision_bits = 0;
};

/// Certified enclosures of all complex roots of P with multiplicity.
/// Escalates its working precision internally (doubling) until enclosures
/// are pairwise disjoint and has radius <= 2^-precision_bits relative scale;
/// throws PrecisionExhausted at the cap.
RootSet find_roots(const IntegerPolynomial& p, Prec precision_bits);

/// Solves the Binet linear system in certified arithmetic. Requires a
/// separable spectrum (throws RepeatedRoots) with no zero root.
BinetData binet_coefficients(const RootSet& roots, const RecurrenceSpec& spec);

/// Certifies the dominant-root hypotheses and classifies monotonicity.
/// When `spec` is provided the shift-dependent report fields are filled.
DominanceReport check_hypotheses(const RootSet& roots, const BinetData& binet,
                                 const RecurrenceSpec* spec = nullptr);

/// Smallest valid shift n0 (>= min_shift) with certified tail behavior.
NormalizedSequence normalize_shift(const RecurrenceSpec& spec, const RootSet& roots,
                                   const BinetData& binet, long min_shift = 0);

struct SpectralData {
  IntegerPolynomial min_poly;
  RootSet roots;
  BinetData binet;
  DominanceReport report;
};

/// minimal polynomial -> roots -> Binet -> hypotheses, with precision
/// escalation until the report flags are certified or the cap is reached.
SpectralData analyze_spectrum(const RecurrenceSpec& spec, Prec precision_bits);

/// Full pipeline through normalize_shift; throws HypothesesNotMet unless the
/// sequence is certified EventuallyIncreasing.
NormalizedSequence normalize(const RecurrenceSpec& spec, Prec precision_bits,
                             long min_shift = 0);

/// Escalation cap: RECURZETA_MAX_PRECISION env var, default 8192 bits.
Prec max_precision_cap();

}  // namespace recurzeta

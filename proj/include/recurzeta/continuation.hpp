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
#include <vector>

#include "recurzeta/ball.hpp"
#include "recurzeta/spectral.hpp"

namespace recurzeta {

/// Nested summation index (k_1, ..., k_{r-1}) with k_1 >= 0 and
/// 0 <= k_i <= k_{i-1}; empty for r = 1.
struct MultiIndex {
  std::vector<long> k;
};

/// Exponents (e_2, ..., e_r) of the non-dominant roots in the term indexed
/// by `k`: e_i = k_{i-1} - k_i for i < r and e_r = k_{r-1}. Validates the
/// multi-index shape for a spectrum of r roots.
std::vector<long> multi_index_exponents(const MultiIndex& k, int r);

struct EvalParams {
  Prec precision_bits = 128;
  long k_max = 400;
  double target_radius = 1e-12;
  double pole_guard = 1e-6;
  /// Test hook: force the truncation depth instead of solving for it. The
  /// reported radius still includes the honest tail bound at that depth.
  std::optional<long> force_k;
};

/// Truncated Dirichlet sum with a certified geometric tail bound.
/// Requires Re(s) >= margin > 0.
BallComplex phi_direct(const NormalizedSequence& ns, const BallComplex& s,
                       long terms, double margin = 0.25);

/// The coefficient Lambda_k(s): product of binomials times the Binet
/// coefficient powers (principal branch for the dominant one). Uses the
/// unshifted coefficients of the original sequence.
BallComplex lambda_term(const NormalizedSequence& ns, const BallComplex& s,
                        const MultiIndex& k);

/// Same with the shifted coefficients lambda_i' = lambda_i alpha_i^{n0};
/// this is the variant the continued series and the residues are built on.
BallComplex lambda_term_shifted(const NormalizedSequence& ns, const BallComplex& s,
                                const MultiIndex& k);

/// Analytic continuation: exact prefix plus the multi-index series, truncated
/// with a certified tail bound below params.target_radius.
BallComplex phi_continued(const NormalizedSequence& ns, const BallComplex& s,
                          const EvalParams& params);

}  // namespace recurzeta

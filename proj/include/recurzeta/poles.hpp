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

#include <string>
#include <vector>

#include "recurzeta/continuation.hpp"
#include "recurzeta/spectral.hpp"

namespace recurzeta {

struct PoleTuple {
  long n = 0;
  MultiIndex k;
};

enum class Classification { SimplePole, RemovableCandidate };

std::string to_string(Classification c);

/// A pole location with every parameter tuple mapping to it (tau(s0)), the
/// summed residue enclosure and a conservative classification.
struct PoleGroup {
  BallComplex location;
  std::vector<PoleTuple> tuples;
  BallComplex residue;
  Classification classification = Classification::SimplePole;
};

struct Window {
  double re_min = 0, re_max = 0, im_min = 0, im_max = 0;
};

/// Closed-form location of the pole indexed by (n, k). Arguments of the
/// individual roots are summed exactly (principal values times exponents,
/// no modular reduction); the 2*pi*n parameter absorbs branch ambiguity.
BallComplex pole_location(const RootSet& roots, const PoleTuple& t);

/// Complete list of pole groups intersecting the window, coinciding tuples
/// merged within merge_tol, residues computed and classified.
std::vector<PoleGroup> enumerate_poles(const NormalizedSequence& ns, const Window& w,
                                       double merge_tol = 1e-9,
                                       long max_tuples = 200000);

/// Residue at the group location: sum over tau(s0) of Lambda'_k(s0)/log(alpha_1).
BallComplex residue(const NormalizedSequence& ns, const PoleGroup& g);

/// RemovableCandidate iff the residue enclosure comes within zero_tol of 0.
Classification classify_singularity(const PoleGroup& g, double zero_tol = 0.0);

enum class MapFormat { CSV, SVG };

std::string export_pole_map(const std::vector<PoleGroup>& groups, MapFormat format);

}  // namespace recurzeta

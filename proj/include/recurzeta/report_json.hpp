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

#include <json.hpp>

#include "recurzeta/poles.hpp"
#include "recurzeta/special_values.hpp"
#include "recurzeta/spectral.hpp"

namespace recurzeta {

using Json = nlohmann::ordered_json;

/// Enclosure as {"mid_re", "mid_im", "radius"} decimal strings.
Json enclosure_json(const BallComplex& z, int digits);

Json spec_json(const RecurrenceSpec& spec);
RecurrenceSpec spec_from_json(const Json& j);
/// Parses a JSON byte stream into a validated spec (ParseError /
/// ValidationError).
RecurrenceSpec parse_input(const std::string& bytes);

Json dominance_json(const DominanceReport& rep);
Json rootset_json(const RootSet& roots, int digits);
Json binet_json(const BinetData& binet, int digits);
Json rational_json(const RationalValue& v);
Json pole_group_json(const PoleGroup& g, int digits);

/// Display digits for a given working precision.
int digits_for(Prec bits);

}  // namespace recurzeta

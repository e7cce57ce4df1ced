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

#include "recurzeta/report_json.hpp"

#include <algorithm>

#include "recurzeta/errors.hpp"

namespace recurzeta {

int digits_for(Prec bits) {
  return std::clamp<int>(static_cast<int>(bits * 0.30103) + 2, 17, 120);
}

Json enclosure_json(const BallComplex& z, int digits) {
  Json j;
  j["mid_re"] = z.re.mid_str(digits);
  j["mid_im"] = z.im.mid_str(digits);
  j["radius"] = z.disk_radius().mid_str(3);
  return j;
}

Json spec_json(const RecurrenceSpec& spec) {
  Json j;
  j["order"] = spec.order;
  Json cs = Json::array(), in = Json::array();
  for (const auto& c : spec.coeffs) cs.push_back(c.get_str());
  for (const auto& a : spec.initial) in.push_back(a.get_str());
  j["coeffs"] = cs;
  j["initial"] = in;
  if (!spec.label.empty()) j["label"] = spec.label;
  return j;
}

namespace {

mpz_class mpz_from_json(const Json& v) {
  if (v.is_number_integer()) return mpz_class(v.get<long>());
  if (v.is_string()) {
    try {
      return mpz_class(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ValidationError("not an integer: " + v.get<std::string>());
    }
  }
  throw ValidationError("expected an integer or integer string");
}

}  // namespace

RecurrenceSpec spec_from_json(const Json& j) {
  RecurrenceSpec spec;
  if (!j.is_object()) throw ValidationError("spec must be a JSON object");
  if (!j.contains("order") || !j["order"].is_number_integer())
    throw ValidationError("spec requires an integer \"order\"");
  spec.order = j["order"].get<int>();
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw ValidationError("spec requires a \"coeffs\" array");
  if (!j.contains("initial") || !j["initial"].is_array())
    throw ValidationError("spec requires an \"initial\" array");
  for (const auto& v : j["coeffs"]) spec.coeffs.push_back(mpz_from_json(v));
  for (const auto& v : j["initial"]) spec.initial.push_back(mpz_from_json(v));
  if (j.contains("label")) spec.label = j["label"].get<std::string>();
  spec.validate();
  return spec;
}

RecurrenceSpec parse_input(const std::string& bytes) {
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON at byte ") + std::to_string(e.byte) +
                     ": " + e.what());
  }
  return spec_from_json(j);
}

Json dominance_json(const DominanceReport& rep) {
  Json j;
  j["dominant_is_real"] = rep.dominant_is_real;
  j["dominant_gt_one"] = rep.dominant_gt_one;
  j["dominant_simple"] = rep.dominant_simple;
  j["separable"] = rep.separable;
  j["lambda1_positive"] = rep.lambda1_positive;
  j["monotonicity_class"] = to_string(rep.monotonicity_class);
  j["q_ratio_at_shift"] = rep.q_ratio_at_shift;
  if (rep.norm_abs) j["norm_abs"] = *rep.norm_abs;
  if (rep.theta) j["theta"] = *rep.theta;
  if (rep.sigma_c)
    j["sigma_c"] = *rep.sigma_c;
  else
    j["sigma_c"] = nullptr;
  if (!rep.diagnosis.empty()) j["diagnosis"] = rep.diagnosis;
  return j;
}

Json rootset_json(const RootSet& roots, int digits) {
  Json arr = Json::array();
  for (int i = 0; i < roots.count(); ++i) {
    Json r = enclosure_json(roots.roots[i], digits);
    r["multiplicity"] = roots.multiplicities[i];
    r["real"] = roots.roots[i].is_real_exact();
    arr.push_back(r);
  }
  return arr;
}

Json binet_json(const BinetData& binet, int digits) {
  Json arr = Json::array();
  for (const auto& l : binet.lambdas) arr.push_back(enclosure_json(l, digits));
  return arr;
}

Json rational_json(const RationalValue& v) {
  Json j;
  j["num"] = v.numerator().get_str();
  j["den"] = v.denominator().get_str();
  j["certified"] = v.certification.verified_at_double_precision;
  j["precision_used"] = static_cast<long>(v.certification.precision_used);
  return j;
}

Json pole_group_json(const PoleGroup& g, int digits) {
  Json j;
  j["location"] = enclosure_json(g.location, digits);
  j["residue"] = enclosure_json(g.residue, digits);
  j["classification"] = to_string(g.classification);
  Json tuples = Json::array();
  for (const auto& t : g.tuples) {
    Json tj;
    tj["n"] = t.n;
    tj["k"] = t.k.k;
    tuples.push_back(tj);
  }
  j["tuples"] = tuples;
  return j;
}

}  // namespace recurzeta

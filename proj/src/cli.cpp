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

#include "recurzeta/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "recurzeta/continuation.hpp"
#include "recurzeta/errors.hpp"
#include "recurzeta/poles.hpp"
#include "recurzeta/report_json.hpp"
#include "recurzeta/selftest.hpp"
#include "recurzeta/special_values.hpp"

namespace recurzeta {

mpq_class parse_decimal(const std::string& text) {
  std::string t = text;
  if (t.empty()) throw ValidationError("empty number");
  std::string mant = t;
  long expo = 0;
  size_t epos = t.find_first_of("eE");
  if (epos != std::string::npos) {
    mant = t.substr(0, epos);
    try {
      size_t used = 0;
      expo = std::stol(t.substr(epos + 1), &used);
      if (used != t.size() - epos - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ValidationError("bad exponent in number: " + text);
    }
  }
  bool neg = false;
  size_t i = 0;
  if (i < mant.size() && (mant[i] == '+' || mant[i] == '-')) neg = mant[i++] == '-';
  std::string digits;
  long frac_len = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < mant.size(); ++i) {
    char c = mant[i];
    if (c == '.') {
      if (seen_dot) throw ValidationError("bad number: " + text);
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_len;
    } else {
      throw ValidationError("bad number: " + text);
    }
  }
  if (!seen_digit) throw ValidationError("bad number: " + text);
  mpz_class num(digits.empty() ? std::string("0") : digits, 10);
  if (neg) num = -num;
  mpq_class q(num);
  long p10 = expo - frac_len;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(p10 < 0 ? -p10 : p10));
  if (p10 >= 0)
    q *= mpq_class(scale);
  else
    q /= mpq_class(scale);
  q.canonicalize();
  return q;
}

RecurrenceSpec resolve_builtin(const std::string& name) {
  if (name.rfind("geometric(", 0) == 0 && name.back() == ')') {
    std::string args = name.substr(10, name.size() - 11);
    size_t comma = args.find(',');
    if (comma == std::string::npos)
      throw UnknownName("geometric needs two arguments: geometric(c,b)");
    mpz_class c, b;
    try {
      c = mpz_class(args.substr(0, comma));
      b = mpz_class(args.substr(comma + 1));
    } catch (const std::invalid_argument&) {
      throw UnknownName("bad geometric arguments: " + args);
    }
    RecurrenceSpec s;
    s.order = 1;
    s.coeffs = {b};
    s.initial = {c * b};  // a_1 = c b
    s.label = name;
    return s;
  }
  if (name.rfind("nbonacci(", 0) == 0) {
    RecurrenceSpec s = builtin_sequence(name);
    if (s.order > 12) throw UnknownName("CLI registry caps nbonacci at N = 12");
    return s;
  }
  return builtin_sequence(name);
}

namespace {

struct CommonOpts {
  std::string input_path;
  std::string builtin;
  long precision_bits = 128;
  bool text_summary = false;
};

RecurrenceSpec load_spec(const CommonOpts& c) {
  if (c.input_path.empty() == c.builtin.empty())
    throw ValidationError("exactly one of --input or --builtin is required");
  if (!c.builtin.empty()) return resolve_builtin(c.builtin);
  std::ifstream f(c.input_path, std::ios::binary);
  if (!f) throw ValidationError("cannot open input file: " + c.input_path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_input(buf.str());
}

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--input", c.input_path, "JSON file with the recurrence spec");
  cmd->add_option("--builtin", c.builtin,
                  "builtin name: fibonacci, lucas, tribonacci, nbonacci(N), geometric(c,b)");
  cmd->add_option("--precision", c.precision_bits, "working precision in bits")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--text", c.text_summary, "also print a plain-text summary to stderr");
}

BallComplex make_s(const mpq_class& re, const mpq_class& im, Prec prec) {
  return {BallReal::from_mpq(re, prec), BallReal::from_mpq(im, prec)};
}

int analyze_cmd(const CommonOpts& c, std::ostream& out, std::ostream& err) {
  RecurrenceSpec spec = load_spec(c);
  SpectralData sd = analyze_spectrum(spec, c.precision_bits);
  int digits = digits_for(sd.roots.precision_bits);
  Json j;
  j["spec"] = spec_json(spec);
  j["precision_bits"] = static_cast<long>(sd.roots.precision_bits);
  j["minimal_polynomial"] = sd.min_poly.to_string();
  j["roots"] = rootset_json(sd.roots, digits);
  j["binet"] = binet_json(sd.binet, digits);
  j["dominance"] = dominance_json(sd.report);
  bool ok = sd.report.monotonicity_class == MonotonicityClass::EventuallyIncreasing;
  if (ok) {
    NormalizedSequence ns = normalize_shift(spec, sd.roots, sd.binet);
    Json nj;
    nj["n0"] = ns.shift_n0;
    nj["q1"] = ns.q1.mid_str(8);
    Json prefix = Json::array();
    for (const auto& a : ns.prefix) prefix.push_back(a.get_str());
    nj["prefix"] = prefix;
    j["normalization"] = nj;
  } else {
    j["error"] = {{"code", "hypotheses_not_met"}, {"message", sd.report.diagnosis}};
  }
  out << j.dump(2) << "\n";
  if (c.text_summary) {
    err << "minimal polynomial: " << sd.min_poly.to_string() << "\n"
        << "monotonicity: " << to_string(sd.report.monotonicity_class) << "\n";
  }
  return ok ? 0 : 2;
}

int eval_cmd(const CommonOpts& c, const std::string& re_s, const std::string& im_s,
             long terms, long k_max, double target_radius, double pole_guard,
             std::ostream& out, std::ostream& err) {
  RecurrenceSpec spec = load_spec(c);
  NormalizedSequence ns = normalize(spec, c.precision_bits);
  Prec prec = std::max<Prec>(ns.precision_bits + 64, 128);
  mpq_class re = parse_decimal(re_s), im = parse_decimal(im_s);
  BallComplex s = make_s(re, im, prec);
  EvalParams params;
  params.precision_bits = c.precision_bits;
  params.k_max = k_max;
  params.target_radius = target_radius;
  params.pole_guard = pole_guard;
  BallComplex phi = phi_continued(ns, s, params);
  int digits = digits_for(ns.precision_bits);
  Json j;
  j["spec"] = spec_json(spec);
  j["s"] = enclosure_json(s, digits);
  j["phi"] = enclosure_json(phi, digits);
  j["n0"] = ns.shift_n0;
  if (re > mpq_class(1, 4)) {
    BallComplex direct = phi_direct(ns, s, terms);
    Json dj;
    dj["phi"] = enclosure_json(direct, digits);
    dj["consistent"] = phi.re.overlaps(direct.re) && phi.im.overlaps(direct.im);
    j["direct_check"] = dj;
  }
  out << j.dump(2) << "\n";
  if (c.text_summary)
    err << "phi(s) ~ " << phi.re.mid_str(12) << " + " << phi.im.mid_str(12) << " i\n";
  return 0;
}

int poles_cmd(const CommonOpts& c, const std::vector<double>& window, double merge_tol,
              long max_tuples, const std::string& map_format,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
  RecurrenceSpec spec = load_spec(c);
  NormalizedSequence ns = normalize(spec, c.precision_bits);
  Window w{window[0], window[1], window[2], window[3]};
  auto groups = enumerate_poles(ns, w, merge_tol, max_tuples);
  int digits = digits_for(ns.precision_bits);
  Json j;
  j["spec"] = spec_json(spec);
  j["window"] = {{"re_min", w.re_min}, {"re_max", w.re_max},
                 {"im_min", w.im_min}, {"im_max", w.im_max}};
  j["merge_tol"] = merge_tol;
  Json arr = Json::array();
  for (const auto& g : groups) arr.push_back(pole_group_json(g, digits));
  j["groups"] = arr;
  if (!map_format.empty()) {
    MapFormat fmt;
    if (map_format == "csv")
      fmt = MapFormat::CSV;
    else if (map_format == "svg")
      fmt = MapFormat::SVG;
    else
      throw UnsupportedFormat("unknown map format: " + map_format);
    std::string bytes = export_pole_map(groups, fmt);
    if (out_path.empty()) throw ValidationError("--map requires --out PATH");
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ValidationError("cannot write: " + out_path);
    f << bytes;
    j["map_written"] = out_path;
  }
  out << j.dump(2) << "\n";
  if (c.text_summary) err << groups.size() << " pole group(s) in window\n";
  return 0;
}

int special_cmd(const CommonOpts& c, long m_max, std::ostream& out, std::ostream& err) {
  RecurrenceSpec spec = load_spec(c);
  NormalizedSequence ns = normalize(spec, c.precision_bits);
  Json j;
  j["spec"] = spec_json(spec);
  j["m_max"] = m_max;
  Json vals = Json::array();
  for (long m = 1; m <= m_max; ++m) {
    Json vj;
    vj["m"] = m;
    NegIntPoleCheck pc = is_negative_integer_pole(ns, m);
    if (pc.is_pole) {
      vj["is_pole"] = true;
      if (pc.ambiguous) vj["ambiguous"] = true;
    } else {
      RationalValue v = phi_negative_integer(ns, m);
      vj["is_pole"] = false;
      vj["value"] = rational_json(v);
    }
    vals.push_back(vj);
  }
  j["values"] = vals;
  out << j.dump(2) << "\n";
  if (c.text_summary) err << "computed " << m_max << " value(s)\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"recurrence Dirichlet series: continuation, poles, special values"};
  app.require_subcommand(1);

  CommonOpts copt;
  std::vector<std::string> s_parts{"2", "0"};
  long terms = 400, k_max = 400, m_max = 5, max_tuples = 200000;
  double target_radius = 1e-12, pole_guard = 1e-6, merge_tol = 1e-9;
  std::vector<double> window{-1, 1, -1, 1};
  std::string map_format, out_path;

  CLI::App* analyze = app.add_subcommand("analyze", "minimal polynomial, spectrum, hypotheses");
  add_common(analyze, copt);

  CLI::App* eval = app.add_subcommand("eval", "evaluate the continuation at s");
  add_common(eval, copt);
  eval->add_option("--s", s_parts, "s as RE IM")->expected(2);
  eval->add_option("--terms", terms, "direct-sum cross-check terms");
  eval->add_option("--k-max", k_max, "truncation cap for k1");
  eval->add_option("--target-radius", target_radius, "requested enclosure radius");
  eval->add_option("--pole-guard", pole_guard, "minimum distance to the pole set");

  CLI::App* poles = app.add_subcommand("poles", "enumerate poles in a window");
  add_common(poles, copt);
  poles->add_option("--window", window, "RE_MIN RE_MAX IM_MIN IM_MAX")->expected(4);
  poles->add_option("--merge-tol", merge_tol, "coincidence merge tolerance");
  poles->add_option("--max-tuples", max_tuples, "tuple cap before WindowTooLarge");
  poles->add_option("--map", map_format, "emit a pole map: csv or svg");
  poles->add_option("--out", out_path, "map output path");

  CLI::App* special = app.add_subcommand("special", "rational values at negative integers");
  add_common(special, copt);
  special->add_option("--m-max", m_max, "compute phi(-m) for m = 1..M");

  CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance fixture suite");
  add_common(selftest, copt);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help() << "\n";
      return 0;
    }
    Json j;
    j["error"] = {{"code", "usage"}, {"message", e.what()}};
    out << j.dump(2) << "\n";
    return 1;
  }

  try {
    if (analyze->parsed()) return analyze_cmd(copt, out, err);
    if (eval->parsed())
      return eval_cmd(copt, s_parts[0], s_parts[1], terms, k_max, target_radius,
                      pole_guard, out, err);
    if (poles->parsed())
      return poles_cmd(copt, window, merge_tol, max_tuples, map_format, out_path, out, err);
    if (special->parsed()) return special_cmd(copt, m_max, out, err);
    if (selftest->parsed()) {
      int failures = run_acceptance(out);
      Json j;
      j["failed_criteria"] = failures;
      out << j.dump(2) << "\n";
      return failures == 0 ? 0 : 1;
    }
  } catch (const HypothesesNotMet& e) {
    Json j;
    j["error"] = {{"code", e.code()}, {"message", e.what()}};
    out << j.dump(2) << "\n";
    return 2;
  } catch (const Error& e) {
    Json j;
    j["error"] = {{"code", e.code()}, {"message", e.what()}};
    out << j.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = {{"code", "internal"}, {"message", e.what()}};
    out << j.dump(2) << "\n";
    return 1;
  }
  return 1;
}

}  // namespace recurzeta

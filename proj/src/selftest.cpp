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

#include "recurzeta/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "recurzeta/cli.hpp"
#include "recurzeta/continuation.hpp"
#include "recurzeta/errors.hpp"
#include "recurzeta/poles.hpp"
#include "recurzeta/special_values.hpp"

namespace recurzeta {

namespace {

constexpr Prec kBits = 256;
constexpr unsigned long kSeed = 20260810ul;

struct Reporter {
  std::ostream& out;
  int failures = 0;

  void line(int idx, const std::string& name, bool pass, const std::string& detail) {
    out << (pass ? "PASS" : "FAIL") << "  criterion " << idx << ": " << name;
    if (!detail.empty()) out << "  (" << detail << ")";
    out << "\n";
    out.flush();
    if (!pass) ++failures;
  }
};

RecurrenceSpec spec_2n() { return resolve_builtin("geometric(1,2)"); }

RecurrenceSpec spec_2n3n() {
  RecurrenceSpec s;
  s.order = 2;
  s.coeffs = {mpz_class(-6), mpz_class(5)};
  s.initial = {mpz_class(5), mpz_class(13)};
  s.label = "2^n+3^n";
  return s;
}

mpq_class q_of(double d) {
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), d);
  return q;
}

BallComplex point_s(double re, double im, Prec prec) {
  return {BallReal::from_mpq(q_of(re), prec), BallReal::from_mpq(q_of(im), prec)};
}

bool intersect(const BallComplex& a, const BallComplex& b) {
  return a.re.overlaps(b.re) && a.im.overlaps(b.im);
}

long direct_terms_for(const NormalizedSequence& ns, double sigma_min) {
  double a1 = ns.roots.roots[0].re.mid_d();
  double need = 14.0 * std::log(10.0) / (sigma_min * std::log(a1));
  return static_cast<long>(need) + ns.shift_n0 + 24;
}

// Draw random points in the box, skipping draws that fall inside the pole
// guard. Deterministic for a fixed seed.
template <typename F>
int sample_points(std::mt19937_64& rng, int want, double re_lo, double re_hi,
                  double im_lo, double im_hi, F&& try_point) {
  std::uniform_real_distribution<double> ure(re_lo, re_hi), uim(im_lo, im_hi);
  int done = 0, bad = 0, attempts = 0;
  while (done < want && attempts < want * 40) {
    ++attempts;
    double re = ure(rng), im = uim(rng);
    try {
      if (try_point(re, im)) ++done;
      else ++bad;
    } catch (const PoleProximity&) {
      continue;  // resample
    }
  }
  return (done == want && bad == 0) ? done : -(bad + (want - done));
}

// --- criterion 1 -----------------------------------------------------------

void criterion_1(Reporter& rep) {
  try {
    NormalizedSequence ns = normalize(spec_2n(), kBits);
    EvalParams params;
    params.precision_bits = kBits;
    std::mt19937_64 rng(kSeed);
    const Prec prec = kBits + 64;
    int pts = sample_points(rng, 20, -10, 10, -10, 10, [&](double re, double im) {
      BallComplex s = point_s(re, im, prec);
      BallComplex phi = phi_continued(ns, s, params);
      BallReal two = BallReal::from_si(2, prec);
      BallComplex w = cpow(two, -s);
      BallComplex closed = w / (BallComplex::from_si(1, 0, prec) - w);
      return intersect(phi, closed);
    });
    bool pass_pts = pts == 20;

    auto groups = enumerate_poles(ns, Window{-0.1, 0.1, -30, 30});
    bool pass_poles = true;
    int expected_n = 0;
    {
      // 2 pi |n| / log 2 <= 30
      double spacing = 2 * M_PI / std::log(2.0);
      expected_n = static_cast<int>(std::floor(30.0 / spacing));
    }
    if (static_cast<int>(groups.size()) != 2 * expected_n + 1) pass_poles = false;
    const Prec ref_prec = 2 * kBits;
    BallReal log2 = log(BallReal::from_si(2, ref_prec));
    BallReal inv_log2 = BallReal::from_si(1, ref_prec) / log2;
    BallReal two_pi = BallReal::pi(ref_prec) + BallReal::pi(ref_prec);
    for (const auto& g : groups) {
      if (g.tuples.size() != 1) pass_poles = false;
      long n = g.tuples[0].n;
      BallComplex expect{BallReal(ref_prec), BallReal::from_si(n, ref_prec) * two_pi / log2};
      if (!intersect(g.location, expect)) pass_poles = false;
      if (!g.residue.re.overlaps(inv_log2) || !g.residue.im.contains_zero())
        pass_poles = false;
    }
    std::ostringstream d;
    d << "20 random s and " << groups.size() << " poles vs 2^{-s}/(1-2^{-s})";
    rep.line(1, "geometric closed form", pass_pts && pass_poles, d.str());
  } catch (const std::exception& e) {
    rep.line(1, "geometric closed form", false, e.what());
  }
}

// --- criterion 2 -----------------------------------------------------------

void criterion_2(Reporter& rep) {
  struct Fx {
    std::string name;
    RecurrenceSpec spec;
  };
  std::vector<Fx> fixtures = {{"fibonacci", builtin_sequence("fibonacci")},
                              {"tribonacci", builtin_sequence("tribonacci")},
                              {"nbonacci(4)", builtin_sequence("nbonacci(4)")},
                              {"2^n+3^n", spec_2n3n()}};
  bool pass = true;
  std::ostringstream detail;
  try {
    for (const auto& fx : fixtures) {
      NormalizedSequence ns = normalize(fx.spec, kBits);
      EvalParams params;
      params.precision_bits = kBits;
      params.target_radius = 1e-12;
      long terms = direct_terms_for(ns, 0.5);
      std::mt19937_64 rng(kSeed + 2);
      const Prec prec = kBits + 64;
      int pts = sample_points(rng, 20, 0.5, 4.0, -10, 10, [&](double re, double im) {
        BallComplex s = point_s(re, im, prec);
        BallComplex a = phi_continued(ns, s, params);
        BallComplex b = phi_direct(ns, s, terms);
        return intersect(a, b);
      });
      if (pts != 20) {
        pass = false;
        detail << fx.name << " failed; ";
      }
    }
  } catch (const std::exception& e) {
    pass = false;
    detail << e.what();
  }
  if (pass) detail << "4 fixtures x 20 random s, radius 1e-12";
  rep.line(2, "oracle equivalence direct vs continued", pass, detail.str());
}

// --- criterion 3 -----------------------------------------------------------

void criterion_3(Reporter& rep) {
  try {
    NormalizedSequence ns = normalize(builtin_sequence("fibonacci"), kBits);
    auto groups = enumerate_poles(ns, Window{-8.5, 0.5, -20, 20});
    bool pass = !groups.empty();
    // all real parts on the lines {0, -2, -4, -6, -8}
    for (const auto& g : groups) {
      double re = g.location.re.mid_d();
      double nearest = -2.0 * std::round(-re / 2.0);
      double rad = g.location.re.rad_d() + g.location.im.rad_d();
      if (std::abs(re - nearest) > rad + 1e-9) pass = false;
    }
    // residue at s = 0 encloses 1/log(phi)
    const Prec ref_prec = 2 * kBits;
    BallReal five = BallReal::from_si(5, ref_prec);
    BallReal phi_gold = (BallReal::from_si(1, ref_prec) + sqrt(five)) /
                        BallReal::from_si(2, ref_prec);
    BallReal ref = BallReal::from_si(1, ref_prec) / log(phi_gold);
    const PoleGroup* zero_group = nullptr;
    for (const auto& g : groups)
      if (g.location.contains_point_q(0, 0)) zero_group = &g;
    if (zero_group == nullptr) {
      pass = false;
    } else {
      if (!zero_group->residue.re.overlaps(ref)) pass = false;
      if (!zero_group->residue.im.contains_zero()) pass = false;
      // numeric limit s * phi(s) as s -> 0 along 1e-3..1e-6, Richardson
      EvalParams params;
      params.precision_bits = kBits;
      params.target_radius = 1e-30;
      params.pole_guard = 1e-8;
      const Prec prec = kBits + 64;
      std::vector<BallComplex> v;
      for (int j = 3; j <= 6; ++j) {
        mpz_class p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, j);
        mpq_class h(1, p10);
        BallComplex s{BallReal::from_mpq(h, prec), BallReal(prec)};
        v.push_back(BallComplex::from_real(BallReal::from_mpq(h, prec)) *
                    phi_continued(ns, s, params));
      }
      BallComplex ten = BallComplex::from_si(10, 0, prec);
      BallComplex nine = BallComplex::from_si(9, 0, prec);
      std::vector<BallComplex> r1;
      for (int j = 0; j < 3; ++j) r1.push_back((ten * v[j + 1] - v[j]) / nine);
      BallComplex hundred = BallComplex::from_si(100, 0, prec);
      BallComplex nn = BallComplex::from_si(99, 0, prec);
      BallComplex r2 = (hundred * r1[1] - r1[0]) / nn;
      BallComplex r3 = (hundred * r1[2] - r1[1]) / nn;
      // the raw offsets must approach the residue monotonically
      for (int j = 0; j + 1 < 4; ++j) {
        double d0 = std::abs(v[j].re.mid_d() - zero_group->residue.re.mid_d());
        double d1 = std::abs(v[j + 1].re.mid_d() - zero_group->residue.re.mid_d());
        if (!(d1 < d0)) pass = false;
      }
      // the extrapolated value carries an O(h^3) truncation error invisible
      // to ball arithmetic; bound it by the inter-level difference
      BallReal err_band =
          ((r3 - r2).abs() * BallReal::from_si(10, prec)).upper();
      BallComplex widened{BallReal::with_radius(r3.re, err_band),
                          BallReal::with_radius(r3.im, err_band)};
      if (!intersect(widened, zero_group->residue)) pass = false;
    }
    std::ostringstream d;
    d << groups.size() << " groups on Re in {0,-2,-4,-6,-8}; residue(0) ~ 2.0780869";
    rep.line(3, "Fibonacci pole structure", pass, d.str());
  } catch (const std::exception& e) {
    rep.line(3, "Fibonacci pole structure", false, e.what());
  }
}

// --- criterion 4 -----------------------------------------------------------

void criterion_4(Reporter& rep) {
  try {
    NormalizedSequence ns = normalize(builtin_sequence("tribonacci"), kBits);
    auto groups = enumerate_poles(ns, Window{-3.2, 0.5, 0, 30}, 1e-9);
    bool pass = !groups.empty();
    for (const auto& g : groups)
      if (g.tuples.size() != 1) pass = false;
    // the unit-circle normalization of the complex root satisfies the
    // degree-12 polynomial x^12 + 4x^10 + 11x^8 + 12x^6 + 11x^4 + 4x^2 + 1
    const BallComplex& a2 = ns.roots.roots[1];
    BallComplex unit = a2 / BallComplex::from_real(a2.abs());
    const Prec prec = unit.prec();
    long coeffs[13] = {1, 0, 4, 0, 11, 0, 12, 0, 11, 0, 4, 0, 1};
    BallComplex acc(prec);
    for (int i = 12; i >= 0; --i)
      acc = acc * unit + BallComplex::from_si(coeffs[i], 0, prec);
    if (!acc.contains_zero()) pass = false;
    std::ostringstream d;
    d << groups.size() << " singleton groups; p12(e^{i theta}) encloses 0";
    rep.line(4, "Tribonacci pole distinctness", pass, d.str());
  } catch (const std::exception& e) {
    rep.line(4, "Tribonacci pole distinctness", false, e.what());
  }
}

// --- criterion 5 -----------------------------------------------------------

void criterion_5(Reporter& rep) {
  struct Case {
    std::string name;
    RecurrenceSpec spec;
    std::vector<std::pair<long, mpq_class>> expect;  // non-pole m -> value
    std::vector<long> poles;
  };
  std::vector<Case> cases;
  cases.push_back({"fibonacci",
                   builtin_sequence("fibonacci"),
                   {{1, mpq_class(-1)}, {2, mpq_class(0)}, {3, mpq_class(1, 2)},
                    {5, mpq_class(-7, 22)}},
                   {4}});
  cases.push_back({"lucas",
                   builtin_sequence("lucas"),
                   {{1, mpq_class(-3)}, {2, mpq_class(-2)}, {3, mpq_class(3, 2)},
                    {5, mpq_class(-741, 22)}},
                   {4}});
  cases.push_back({"tribonacci",
                   builtin_sequence("tribonacci"),
                   {{1, mpq_class(-1, 2)}, {2, mpq_class(1, 4)}, {4, mpq_class(1, 16)},
                    {5, mpq_class(3, 44)}},
                   {3}});
  cases.push_back({"2^n+3^n",
                   spec_2n3n(),
                   {{1, mpq_class(-7, 2)}, {2, mpq_class(-583, 120)}},
                   {}});
  bool pass = true;
  std::ostringstream detail;
  try {
    for (const auto& c : cases) {
      NormalizedSequence ns = normalize(c.spec, kBits);
      NormalizedSequence ns2 = normalize(c.spec, 2 * kBits);
      for (long m = 1; m <= 5; ++m) {
        NegIntPoleCheck pc = is_negative_integer_pole(ns, m);
        bool expected_pole =
            std::find(c.poles.begin(), c.poles.end(), m) != c.poles.end();
        if (pc.is_pole != expected_pole) {
          pass = false;
          detail << c.name << " m=" << m << " pole mismatch; ";
          continue;
        }
        if (expected_pole) continue;
        RationalValue v = phi_negative_integer(ns, m);
        if (!v.certification.verified_at_double_precision) pass = false;
        RationalValue v2 = phi_negative_integer(ns2, m);
        if (v.value != v2.value) {
          pass = false;
          detail << c.name << " m=" << m << " precision mismatch; ";
        }
        for (const auto& [em, ev] : c.expect)
          if (em == m && v.value != ev) {
            pass = false;
            detail << c.name << " m=" << m << " value " << v.value.get_str()
                   << " != " << ev.get_str() << "; ";
          }
      }
    }
    // Fibonacci m = 1 agrees with the exact quadratic oracle
    RationalValue o = quadratic_exact_value(builtin_sequence("fibonacci"), 1);
    if (o.value != mpq_class(-1)) {
      pass = false;
      detail << "fib oracle m=1 != -1; ";
    }
  } catch (const std::exception& e) {
    pass = false;
    detail << e.what();
  }
  if (pass) detail << "fib/lucas/trib/2^n+3^n, m=1..5, double-precision reproduction";
  rep.line(5, "rationality at negative integers", pass, detail.str());
}

// --- criterion 6 -----------------------------------------------------------

void criterion_6(Reporter& rep) {
  std::mt19937_64 rng(kSeed + 6);
  std::uniform_int_distribution<int> coef(-9, 9), init(1, 9);
  int done = 0, tried = 0;
  bool pass = true;
  std::ostringstream detail;
  try {
    while (done < 10 && tried < 4000) {
      ++tried;
      RecurrenceSpec spec;
      spec.order = 2;
      spec.coeffs = {mpz_class(coef(rng)), mpz_class(coef(rng))};
      spec.initial = {mpz_class(init(rng)), mpz_class(init(rng))};
      spec.label = "random-quadratic";
      NormalizedSequence ns;
      try {
        IntegerPolynomial p = minimal_polynomial(spec);
        if (p.degree() != 2) continue;
        ns = normalize(spec, kBits);
      } catch (const Error&) {
        continue;
      }
      bool used = false;
      for (long m = 1; m <= 4; ++m) {
        if (is_negative_integer_pole(ns, m).is_pole) continue;
        RationalValue num = phi_negative_integer(ns, m);
        RationalValue oracle = quadratic_exact_value(spec, m);
        used = true;
        if (num.value != oracle.value) {
          pass = false;
          detail << "mismatch at m=" << m << " for coeffs (" << spec.coeffs[0].get_str()
                 << "," << spec.coeffs[1].get_str() << "); ";
        }
      }
      if (used) ++done;
    }
    if (done < 10) {
      pass = false;
      detail << "only " << done << " random specs accepted; ";
    }
  } catch (const std::exception& e) {
    pass = false;
    detail << e.what();
  }
  if (pass) detail << "10 random degree-2 specs, m=1..4";
  rep.line(6, "quadratic oracle agreement", pass, detail.str());
}

// --- criterion 7 -----------------------------------------------------------

void criterion_7(Reporter& rep) {
  try {
    bool pass = true;
    BallReal prev;
    bool have_prev = false;
    const Prec prec = kBits;
    BallReal one = BallReal::from_si(1, prec), two = BallReal::from_si(2, prec);
    std::ostringstream d;
    for (int n = 2; n <= 8; ++n) {
      SpectralData sd = analyze_spectrum(builtin_sequence("nbonacci(" + std::to_string(n) + ")"), kBits);
      BallReal root = sd.roots.roots[0].re;
      if (!root.certainly_gt(one) || !root.certainly_lt(two)) pass = false;
      if (have_prev && !prev.certainly_lt(root)) pass = false;
      prev = root;
      have_prev = true;
    }
    d << "1 < phi_2 < ... < phi_8 < 2 certified";
    rep.line(7, "N-bonacci dominant root chain", pass, d.str());
  } catch (const std::exception& e) {
    rep.line(7, "N-bonacci dominant root chain", false, e.what());
  }
}

// --- criterion 8 -----------------------------------------------------------

void criterion_8(Reporter& rep) {
  try {
    bool pass = true;
    std::ostringstream d;
    RecurrenceSpec sqrt2;
    sqrt2.order = 2;
    sqrt2.coeffs = {mpz_class(2), mpz_class(0)};
    sqrt2.initial = {mpz_class(1), mpz_class(2)};
    sqrt2.label = "x^2-2";
    SpectralData sd = analyze_spectrum(sqrt2, kBits);
    if (sd.report.monotonicity_class != MonotonicityClass::Inconclusive) pass = false;
    if (sd.report.diagnosis.find("no strictly dominant root") == std::string::npos)
      pass = false;
    bool threw = false;
    try {
      normalize(sqrt2, kBits);
    } catch (const HypothesesNotMet&) {
      threw = true;
    }
    if (!threw) pass = false;

    RecurrenceSpec neg2;
    neg2.order = 1;
    neg2.coeffs = {mpz_class(-2)};
    neg2.initial = {mpz_class(-2)};
    neg2.label = "(-2)^n";
    SpectralData sd2 = analyze_spectrum(neg2, kBits);
    if (sd2.report.monotonicity_class != MonotonicityClass::InfiniteSignChanges)
      pass = false;
    d << "x^2-2 rejected (no dominant root); (-2)^n InfiniteSignChanges";
    rep.line(8, "hypothesis gating", pass, d.str());
  } catch (const std::exception& e) {
    rep.line(8, "hypothesis gating", false, e.what());
  }
}

// --- criterion 9 -----------------------------------------------------------

void criterion_9(Reporter& rep) {
  struct Fx {
    std::string name;
    RecurrenceSpec spec;
  };
  std::vector<Fx> fixtures = {{"2^n", spec_2n()},
                              {"fibonacci", builtin_sequence("fibonacci")},
                              {"tribonacci", builtin_sequence("tribonacci")},
                              {"nbonacci(4)", builtin_sequence("nbonacci(4)")},
                              {"2^n+3^n", spec_2n3n()}};
  bool pass = true;
  std::ostringstream detail;
  try {
    for (const auto& fx : fixtures) {
      NormalizedSequence ns = normalize(fx.spec, kBits);
      EvalParams params;
      params.precision_bits = kBits;
      std::mt19937_64 rng(kSeed + 9);
      const Prec prec = kBits + 64;
      int pts = sample_points(rng, 20, -6, 6, -8, 8, [&](double re, double im) {
        BallComplex s = point_s(re, im, prec);
        BallComplex a = phi_continued(ns, {s.re, -s.im}, params);
        BallComplex b = phi_continued(ns, s, params).conj();
        return intersect(a, b);
      });
      if (pts != 20) {
        pass = false;
        detail << fx.name << " failed; ";
      }
    }
  } catch (const std::exception& e) {
    pass = false;
    detail << e.what();
  }
  if (pass) detail << "5 fixtures x 20 random s";
  rep.line(9, "Schwarz reflection", pass, detail.str());
}

}  // namespace

int run_acceptance(std::ostream& out) {
  Reporter rep{out};
  criterion_1(rep);
  criterion_2(rep);
  criterion_3(rep);
  criterion_4(rep);
  criterion_5(rep);
  criterion_6(rep);
  criterion_7(rep);
  criterion_8(rep);
  criterion_9(rep);
  out << (rep.failures == 0 ? "ALL ACCEPTANCE CRITERIA PASSED"
                            : "ACCEPTANCE FAILURES PRESENT")
      << " (" << (9 - rep.failures) << "/9)\n";
  return rep.failures;
}

}  // namespace recurzeta

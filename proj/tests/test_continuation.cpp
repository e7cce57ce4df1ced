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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "recurzeta/continuation.hpp"
#include "recurzeta/errors.hpp"

using namespace recurzeta;

namespace {

constexpr Prec kBits = 192;

RecurrenceSpec make(int d, std::vector<long> cs, std::vector<long> in,
                    const char* label = "") {
  RecurrenceSpec s;
  s.order = d;
  for (long c : cs) s.coeffs.emplace_back(c);
  for (long a : in) s.initial.emplace_back(a);
  s.label = label;
  return s;
}

RecurrenceSpec two_n() { return make(1, {2}, {2}, "2^n"); }
RecurrenceSpec fib() { return make(2, {1, 1}, {1, 1}, "fibonacci"); }
RecurrenceSpec two_three() { return make(2, {-6, 5}, {5, 13}, "2^n+3^n"); }

BallComplex s_at(double re, double im, Prec prec = kBits + 64) {
  mpq_class qre, qim;
  mpq_set_d(qre.get_mpq_t(), re);
  mpq_set_d(qim.get_mpq_t(), im);
  return {BallReal::from_mpq(qre, prec), BallReal::from_mpq(qim, prec)};
}

bool intersect(const BallComplex& a, const BallComplex& b) {
  return a.re.overlaps(b.re) && a.im.overlaps(b.im);
}

// decimal-literal reference squeezed into a high-precision ball with the
// stated uncertainty in the last digits
BallReal literal(const char* digits, const char* slack) {
  Prec p = 256;
  mpf_class f(digits, 200);
  mpq_class q(f);
  mpq_class e(mpf_class(slack, 64));
  return BallReal::with_radius(BallReal::from_mpq(q, p), BallReal::from_mpq(e, p));
}

}  // namespace

TEST_CASE("phi_direct geometric: sum of 4^-n is 1/3") {
  NormalizedSequence ns = normalize(two_n(), kBits);
  BallComplex v = phi_direct(ns, s_at(2, 0), 40);
  CHECK(v.re.contains(mpq_class(1, 3)));
  CHECK(v.im.contains(0));
  auto [lo, hi] = v.re.interval_q();
  CHECK(hi - lo < mpq_class(1, 1000000000000L));  // radius comfortably < 1e-12
}

TEST_CASE("phi_direct reciprocal Fibonacci squares") {
  // frozen from an independent high-precision summation:
  // sum 1/F_n^2 = 2.4263207511672411877415694129266203743...
  NormalizedSequence ns = normalize(fib(), kBits);
  BallComplex v = phi_direct(ns, s_at(2, 0), 200);
  BallReal ref = literal("2.4263207511672411877415694129266203743", "1e-30");
  CHECK(v.re.overlaps(ref));
}

TEST_CASE("phi_direct sum over 2^n + 3^n at s = 1, two precisions agree") {
  NormalizedSequence lo = normalize(two_three(), 128);
  NormalizedSequence hi = normalize(two_three(), 256);
  BallComplex a = phi_direct(lo, s_at(1, 0, 192), 120);
  BallComplex b = phi_direct(hi, s_at(1, 0, 320), 240);
  CHECK(intersect(a, b));
  BallReal ref = literal("0.32135438719750624899165047694695816386", "1e-30");
  CHECK(a.re.overlaps(ref));
}

TEST_CASE("phi_direct refuses the divergent region") {
  NormalizedSequence ns = normalize(two_n(), kBits);
  CHECK_THROWS_AS(phi_direct(ns, s_at(0.1, 0), 50), DivergentRegion);
  CHECK_THROWS_AS(phi_direct(ns, s_at(-1, 0), 50), DivergentRegion);
  // custom margin admits smaller sigma
  CHECK_NOTHROW(phi_direct(ns, s_at(0.1, 0), 400, 0.05));
}

TEST_CASE("lambda_term worked examples") {
  NormalizedSequence ns = normalize(fib(), kBits);
  const Prec p = kBits + 64;
  {
    // all-zero index at s = 0: empty products give 1
    BallComplex v = lambda_term(ns, BallComplex(p), MultiIndex{{0}});
    CHECK(v.re.contains(1));
    CHECK(v.im.contains(0));
  }
  {
    // s = -1, k = (1): binom(1,1) lambda_1^0 lambda_2^1 = -1/sqrt(5)
    BallComplex v = lambda_term(ns, s_at(-1, 0), MultiIndex{{1}});
    BallReal ref = -(BallReal::from_si(1, 2 * p) / sqrt(BallReal::from_si(5, 2 * p)));
    CHECK(v.re.overlaps(ref));
    CHECK(v.im.contains(0));
  }
  {
    // s = -1, k = (2): binom(1,2) = 0 exactly
    BallComplex v = lambda_term(ns, s_at(-1, 0), MultiIndex{{2}});
    CHECK(v.re.exact());
    CHECK(v.re.contains(0));
  }
  CHECK_THROWS_AS(lambda_term(ns, s_at(1, 0), MultiIndex{{1, 2}}), ValidationError);
}

TEST_CASE("phi_continued collapses to the geometric closed form for r = 1") {
  NormalizedSequence ns = normalize(two_n(), kBits);
  EvalParams params;
  params.precision_bits = kBits;
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-8, 8);
  const Prec p = kBits + 64;
  int done = 0;
  while (done < 20) {
    BallComplex s = s_at(u(rng), u(rng));
    try {
      BallComplex v = phi_continued(ns, s, params);
      BallComplex w = cpow(BallReal::from_si(2, p), -s);
      BallComplex closed = w / (BallComplex::from_si(1, 0, p) - w);
      CHECK(intersect(v, closed));
      ++done;
    } catch (const PoleProximity&) {
    }
  }
}

TEST_CASE("r = 1 closed form holds with a general coefficient") {
  // a_n = 3 * 2^n: phi(s) = 3^{-s} 2^{-s} / (1 - 2^{-s})
  NormalizedSequence ns = normalize(make(1, {2}, {6}, "3*2^n"), kBits);
  EvalParams params;
  params.precision_bits = kBits;
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> u(-6, 6);
  const Prec p = kBits + 64;
  int done = 0;
  while (done < 20) {
    BallComplex s = s_at(u(rng), u(rng));
    try {
      BallComplex v = phi_continued(ns, s, params);
      BallComplex w = cpow(BallReal::from_si(2, p), -s);
      BallComplex closed =
          cpow(BallReal::from_si(3, p), -s) * w / (BallComplex::from_si(1, 0, p) - w);
      CHECK(intersect(v, closed));
      ++done;
    } catch (const PoleProximity&) {
    }
  }
}

TEST_CASE("phi_continued agrees with phi_direct on the right half plane") {
  for (auto spec : {fib(), two_three()}) {
    NormalizedSequence ns = normalize(spec, kBits);
    EvalParams params;
    params.precision_bits = kBits;
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> ure(0.5, 4), uim(-10, 10);
    for (int i = 0; i < 12; ++i) {
      BallComplex s = s_at(ure(rng), uim(rng));
      BallComplex a = phi_continued(ns, s, params);
      BallComplex b = phi_direct(ns, s, 260);
      CHECK(intersect(a, b));
    }
  }
}

TEST_CASE("Schwarz reflection at sampled points") {
  NormalizedSequence ns = normalize(fib(), kBits);
  EvalParams params;
  params.precision_bits = kBits;
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(-5, 5);
  int done = 0;
  while (done < 10) {
    double re = u(rng), im = u(rng);
    try {
      BallComplex a = phi_continued(ns, s_at(re, -im), params);
      BallComplex b = phi_continued(ns, s_at(re, im), params).conj();
      CHECK(intersect(a, b));
      ++done;
    } catch (const PoleProximity&) {
    }
  }
}

TEST_CASE("truncation bound is sound: K and K + 5 agree") {
  NormalizedSequence ns = normalize(fib(), kBits);
  EvalParams a;
  a.precision_bits = kBits;
  a.force_k = 18;
  EvalParams b = a;
  b.force_k = 23;
  for (double re : {-3.1, 0.7, 2.3}) {
    BallComplex s = s_at(re, 1.7);
    CHECK(intersect(phi_continued(ns, s, a), phi_continued(ns, s, b)));
  }
}

TEST_CASE("doubling the precision keeps enclosures consistent") {
  NormalizedSequence lo = normalize(fib(), 128);
  NormalizedSequence hi = normalize(fib(), 256);
  EvalParams pa;
  pa.precision_bits = 128;
  EvalParams pb;
  pb.precision_bits = 256;
  for (double re : {-4.3, -1.2, 1.1, 3.7}) {
    BallComplex a = phi_continued(lo, s_at(re, 2.5, 192), pa);
    BallComplex b = phi_continued(hi, s_at(re, 2.5, 320), pb);
    CHECK(intersect(a, b));
  }
}

TEST_CASE("pole proximity and truncation failures are reported") {
  NormalizedSequence ns = normalize(fib(), kBits);
  EvalParams params;
  params.precision_bits = kBits;
  // s = 0 is a pole
  CHECK_THROWS_AS(phi_continued(ns, BallComplex(kBits), params), PoleProximity);
  // near-pole within the guard
  params.pole_guard = 1e-2;
  CHECK_THROWS_AS(phi_continued(ns, s_at(1e-3, 1e-3), params), PoleProximity);
  // absurdly small target with a tiny k cap
  EvalParams tight;
  tight.precision_bits = kBits;
  tight.k_max = 3;
  tight.target_radius = 1e-40;
  CHECK_THROWS_AS(phi_continued(ns, s_at(0.8, 0.3), tight), TruncationFailure);
}

TEST_CASE("sequences with nonpositive leading terms are refused") {
  // eventually increasing but a_1 = -1 <= 0: the Dirichlet series itself is
  // undefined, whatever the tail does
  RecurrenceSpec spec = make(2, {1, 1}, {-1, 3}, "negative head");
  NormalizedSequence ns = normalize(spec, kBits);
  CHECK(ns.shift_n0 >= 1);
  EvalParams params;
  params.precision_bits = kBits;
  CHECK_THROWS_AS(phi_continued(ns, s_at(2, 0), params), DomainError);
  CHECK_THROWS_AS(phi_direct(ns, s_at(2, 0), 50), DomainError);
}

TEST_CASE("multi-index exponent map") {
  CHECK(multi_index_exponents(MultiIndex{}, 1).empty());
  CHECK(multi_index_exponents(MultiIndex{{3}}, 2) == std::vector<long>{3});
  CHECK(multi_index_exponents(MultiIndex{{5, 2}}, 3) == std::vector<long>{3, 2});
  CHECK_THROWS_AS(multi_index_exponents(MultiIndex{{1, 2}}, 3), ValidationError);
  CHECK_THROWS_AS(multi_index_exponents(MultiIndex{{-1}}, 2), ValidationError);
}

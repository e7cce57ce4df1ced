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

#include <algorithm>
#include <cmath>

#include "recurzeta/continuation.hpp"
#include "recurzeta/errors.hpp"
#include "recurzeta/special_values.hpp"

using namespace recurzeta;

namespace {

constexpr Prec kBits = 192;

RecurrenceSpec make(int d, std::vector<long> cs, std::vector<long> in) {
  RecurrenceSpec s;
  s.order = d;
  for (long c : cs) s.coeffs.emplace_back(c);
  for (long a : in) s.initial.emplace_back(a);
  return s;
}

RecurrenceSpec two_n() { return make(1, {2}, {2}); }
RecurrenceSpec fib() { return make(2, {1, 1}, {1, 1}); }
RecurrenceSpec lucas() { return make(2, {1, 1}, {1, 3}); }
RecurrenceSpec trib() { return make(3, {1, 1, 1}, {1, 1, 2}); }
RecurrenceSpec two_three() { return make(2, {-6, 5}, {5, 13}); }

}  // namespace

TEST_CASE("beta index enumeration") {
  auto b = beta_indices(2, 3);
  REQUIRE(b.size() == 4);  // C(4, 1)
  CHECK(b[0].beta == std::vector<long>{0, 3});
  CHECK(b[3].beta == std::vector<long>{3, 0});
  CHECK(beta_indices(3, 5).size() == 21);  // C(7, 2)
  CHECK(beta_indices(1, 4).size() == 1);
}

TEST_CASE("simplest rational in an interval") {
  CHECK(simplest_rational_in(mpq_class(32, 100), mpq_class(34, 100)) == mpq_class(1, 3));
  CHECK(simplest_rational_in(mpq_class(-1, 10), mpq_class(1, 5)) == 0);
  CHECK(simplest_rational_in(mpq_class(-1, 2), mpq_class(-1, 4)) == mpq_class(-1, 2));
  CHECK(simplest_rational_in(mpq_class(3, 7), mpq_class(3, 7)) == mpq_class(3, 7));
  CHECK(simplest_rational_in(mpq_class(5, 2), mpq_class(7, 2)) == 3);
  CHECK_THROWS_AS(simplest_rational_in(mpq_class(1), mpq_class(0)), ValidationError);
}

TEST_CASE("negative-integer pole detection") {
  NormalizedSequence f = normalize(fib(), kBits);
  CHECK(!is_negative_integer_pole(f, 1).is_pole);
  CHECK(!is_negative_integer_pole(f, 2).is_pole);
  CHECK(!is_negative_integer_pole(f, 3).is_pole);
  CHECK(is_negative_integer_pole(f, 4).is_pole);  // s = -4 = s_{-1,2}

  NormalizedSequence g = normalize(two_n(), kBits);
  for (long m = 1; m <= 6; ++m) CHECK(!is_negative_integer_pole(g, m).is_pole);

  // totally positive unit dominant root: x^2 - 3x + 1, a_n = alpha^n + conj^n
  NormalizedSequence u = normalize(make(2, {-1, 3}, {3, 7}), kBits);
  CHECK(!is_negative_integer_pole(u, 1).is_pole);
  CHECK(is_negative_integer_pole(u, 2).is_pole);
  CHECK(!is_negative_integer_pole(u, 3).is_pole);
  CHECK(is_negative_integer_pole(u, 4).is_pole);
}

TEST_CASE("denominator integers") {
  NormalizedSequence g = normalize(two_n(), kBits);
  CHECK(denominator_integer(g, 1) == -1);  // 1 - 2
  CHECK(denominator_integer(g, 2) == -3);  // 1 - 4

  NormalizedSequence f = normalize(fib(), kBits);
  CHECK(denominator_integer(f, 1) == -1);  // P(1) = -1
  CHECK(denominator_integer(f, 2) == -2);  // 2 (1 - phi^2)(1 - psi^2)

  NormalizedSequence t = normalize(two_three(), kBits);
  CHECK(denominator_integer(t, 1) == 2);  // (1-2)(1-3)
}

TEST_CASE("denominator is invariant under root permutations") {
  for (auto spec : {fib(), two_three(), trib()}) {
    NormalizedSequence ns = normalize(spec, kBits);
    for (long m = 1; m <= 3; ++m) {
      mpz_class base;
      try {
        base = denominator_integer(ns, m);
      } catch (const ZeroDenominator&) {
        continue;
      }
      NormalizedSequence perm = ns;
      std::reverse(perm.roots.roots.begin(), perm.roots.roots.end());
      std::reverse(perm.roots.multiplicities.begin(), perm.roots.multiplicities.end());
      std::reverse(perm.binet.lambdas.begin(), perm.binet.lambdas.end());
      std::reverse(perm.shifted.lambdas.begin(), perm.shifted.lambdas.end());
      CHECK(denominator_integer(perm, m) == base);
    }
  }
}

TEST_CASE("phi at negative integers: frozen rational fixtures") {
  struct Case {
    RecurrenceSpec spec;
    long m;
    mpq_class want;
  };
  std::vector<Case> cases = {
      {two_n(), 1, mpq_class(-2)},        {two_n(), 2, mpq_class(-4, 3)},
      {two_n(), 3, mpq_class(-8, 7)},     {two_three(), 1, mpq_class(-7, 2)},
      {two_three(), 2, mpq_class(-583, 120)}, {fib(), 1, mpq_class(-1)},
      {fib(), 2, mpq_class(0)},           {fib(), 3, mpq_class(1, 2)},
      {fib(), 5, mpq_class(-7, 22)},      {lucas(), 1, mpq_class(-3)},
      {trib(), 1, mpq_class(-1, 2)},      {trib(), 2, mpq_class(1, 4)},
  };
  for (const auto& c : cases) {
    NormalizedSequence ns = normalize(c.spec, kBits);
    RationalValue v = phi_negative_integer(ns, c.m);
    CHECK(v.value == c.want);
    CHECK(v.certification.verified_at_double_precision);
    CHECK(v.value.get_den() > 0);
  }
}

TEST_CASE("phi at a pole raises IsPole") {
  NormalizedSequence f = normalize(fib(), kBits);
  CHECK_THROWS_AS(phi_negative_integer(f, 4), IsPole);
  NormalizedSequence t = normalize(trib(), kBits);
  CHECK_THROWS_AS(phi_negative_integer(t, 3), IsPole);
}

TEST_CASE("quadratic exact oracle on the worked examples") {
  CHECK(quadratic_exact_value(fib(), 1).value == mpq_class(-1));
  CHECK(quadratic_exact_value(fib(), 2).value == mpq_class(0));
  CHECK(quadratic_exact_value(fib(), 3).value == mpq_class(1, 2));
  CHECK(quadratic_exact_value(fib(), 5).value == mpq_class(-7, 22));
  // split algebra (disc = 1): rational roots 2, 3
  CHECK(quadratic_exact_value(two_three(), 1).value == mpq_class(-7, 2));
  CHECK(quadratic_exact_value(two_three(), 2).value == mpq_class(-583, 120));
  // Lucas regression value, frozen from this oracle
  CHECK(quadratic_exact_value(lucas(), 1).value == mpq_class(-3));
  CHECK(quadratic_exact_value(lucas(), 2).value == mpq_class(-2));
  // exact path is marked as such
  CHECK(quadratic_exact_value(fib(), 1).certification.precision_used == 0);
}

TEST_CASE("quadratic oracle errors") {
  CHECK_THROWS_AS(quadratic_exact_value(trib(), 1), NotQuadratic);
  CHECK_THROWS_AS(quadratic_exact_value(fib(), 4), IsPole);
  // repeated root: (x - 2)^2
  CHECK_THROWS_AS(quadratic_exact_value(make(2, {-4, 4}, {2, 8}), 1), RepeatedRoots);
  // no dominant root: x^2 - 2
  CHECK_THROWS_AS(quadratic_exact_value(make(2, {2, 0}, {1, 2}), 1), HypothesesNotMet);
}

TEST_CASE("numeric path and the exact oracle agree (spot check)") {
  for (auto spec : {fib(), lucas(), two_three(), make(2, {-1, 3}, {3, 7})}) {
    NormalizedSequence ns = normalize(spec, kBits);
    for (long m = 1; m <= 4; ++m) {
      if (is_negative_integer_pole(ns, m).is_pole) continue;
      CHECK(phi_negative_integer(ns, m).value == quadratic_exact_value(spec, m).value);
    }
  }
}

TEST_CASE("prefix consistency: a forced larger shift gives the same rational") {
  for (auto spec : {fib(), trib(), two_three()}) {
    NormalizedSequence ns = normalize(spec, kBits);
    NormalizedSequence forced = normalize(spec, kBits, ns.shift_n0 + 3);
    CHECK(forced.shift_n0 == ns.shift_n0 + 3);
    for (long m = 1; m <= 3; ++m) {
      if (is_negative_integer_pole(ns, m).is_pole) continue;
      CHECK(phi_negative_integer(ns, m).value == phi_negative_integer(forced, m).value);
    }
  }
  // same for the exact oracle
  CHECK(quadratic_exact_value(fib(), 1, 5).value == mpq_class(-1));
}

TEST_CASE("continuity link: phi near -m approaches the rational value") {
  NormalizedSequence ns = normalize(fib(), kBits);
  EvalParams params;
  params.precision_bits = kBits;
  params.pole_guard = 1e-9;
  const Prec p = kBits + 64;
  for (long m : {1L, 2L, 3L}) {
    RationalValue v = phi_negative_integer(ns, m);
    mpq_class h(1, 1000000);  // 1e-6
    auto at = [&](const mpq_class& x) {
      BallComplex s{BallReal::from_mpq(x, p), BallReal(p)};
      return phi_continued(ns, s, params);
    };
    BallComplex f1 = at(mpq_class(-m) + h);
    BallComplex f2 = at(mpq_class(-m) + 2 * h);
    double slope = std::abs((f2.re.mid_d() - f1.re.mid_d()) / 1e-6);
    double diff = std::abs(f1.re.mid_d() - v.value.get_d());
    CHECK(diff <= 100.0 * 1e-6 * (slope + 1.0));
  }
}

TEST_CASE("rationality certification reproduces across precisions") {
  for (auto spec : {fib(), trib()}) {
    NormalizedSequence a = normalize(spec, 160);
    NormalizedSequence b = normalize(spec, 320);
    for (long m = 1; m <= 5; ++m) {
      if (is_negative_integer_pole(a, m).is_pole) continue;
      RationalValue va = phi_negative_integer(a, m);
      RationalValue vb = phi_negative_integer(b, m);
      CHECK(va.value == vb.value);
    }
  }
}

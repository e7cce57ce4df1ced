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

#include "recurzeta/errors.hpp"
#include "recurzeta/spectral.hpp"

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

IntegerPolynomial poly(std::vector<long> ascending) {
  IntegerPolynomial p;
  for (long c : ascending) p.coeffs.emplace_back(c);
  return p;
}

// quadratic-formula oracle for x^2 + bx + c with real roots
std::pair<BallReal, BallReal> quadratic_roots(long b, long c, Prec prec) {
  BallReal bb = BallReal::from_si(b, prec), cc = BallReal::from_si(c, prec);
  BallReal disc = bb * bb - BallReal::from_si(4, prec) * cc;
  BallReal sq = sqrt(disc);
  BallReal two = BallReal::from_si(2, prec);
  return {(-bb + sq) / two, (-bb - sq) / two};
}

// bisection oracle: rational interval around the unique root of p in [lo, hi]
std::pair<mpq_class, mpq_class> bisect_root(const IntegerPolynomial& p,
                                            mpq_class lo, mpq_class hi, int steps) {
  auto eval = [&](const mpq_class& x) {
    mpq_class acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + mpq_class(p.coeffs[i]);
    return acc;
  };
  mpq_class flo = eval(lo);
  REQUIRE(flo * eval(hi) < 0);
  for (int i = 0; i < steps; ++i) {
    mpq_class mid = (lo + hi) / 2;
    mpq_class fm = eval(mid);
    if (fm == 0) return {mid, mid};
    if (sgn(fm) == sgn(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace

TEST_CASE("roots of x^2 - x - 1 against the quadratic formula") {
  RootSet rs = find_roots(poly({-1, -1, 1}), kBits);
  REQUIRE(rs.count() == 2);
  CHECK(rs.multiplicities == std::vector<int>{1, 1});
  auto [phi, psi] = quadratic_roots(-1, -1, 2 * kBits);
  // ordering: decreasing modulus
  CHECK(rs.roots[0].re.overlaps(phi));
  CHECK(rs.roots[0].is_real_exact());
  CHECK(rs.roots[1].re.overlaps(psi));
  CHECK(rs.roots[1].is_real_exact());
}

TEST_CASE("linear polynomial root is exact") {
  RootSet rs = find_roots(poly({-2, 1}), kBits);
  REQUIRE(rs.count() == 1);
  CHECK(rs.roots[0].re.exact());
  CHECK(rs.roots[0].re.contains(mpq_class(2)));
  CHECK(rs.roots[0].im.exact());
}

TEST_CASE("tribonacci cubic: dominant root and complex pair modulus") {
  IntegerPolynomial p = poly({-1, -1, -1, 1});
  RootSet rs = find_roots(p, kBits);
  REQUIRE(rs.count() == 3);
  // bisection oracle on [1, 2]
  auto [lo, hi] = bisect_root(p, 1, 2, 120);
  CHECK(rs.roots[0].is_real_exact());
  auto [rlo, rhi] = rs.roots[0].re.interval_q();
  CHECK(rhi >= lo);
  CHECK(rlo <= hi);
  // complex pair: |a2|^2 * a1 = |norm| = 1
  CHECK(!rs.roots[1].is_real_exact());
  CHECK(!rs.roots[2].is_real_exact());
  BallReal prod = rs.roots[1].abs() * rs.roots[2].abs() * rs.roots[0].abs();
  CHECK(prod.contains(mpq_class(1)));
  // conjugates: ordered by increasing argument (lower half first)
  CHECK(rs.roots[1].im.is_negative());
  CHECK(rs.roots[2].im.is_positive());
}

TEST_CASE("repeated roots carry exact multiplicities, Binet rejects them") {
  // a_n = n 2^n: minimal polynomial (x - 2)^2
  RecurrenceSpec spec = make(2, {-4, 4}, {2, 8});
  IntegerPolynomial p = minimal_polynomial(spec);
  CHECK(p.to_string() == "x^2 - 4x + 4");
  RootSet rs = find_roots(p, kBits);
  REQUIRE(rs.count() == 1);
  CHECK(rs.multiplicities == std::vector<int>{2});
  CHECK(rs.roots[0].re.contains(mpq_class(2)));
  CHECK_THROWS_AS(binet_coefficients(rs, spec), RepeatedRoots);
}

TEST_CASE("Binet coefficients on the worked examples") {
  {
    RecurrenceSpec spec = make(2, {1, 1}, {1, 1});
    RootSet rs = find_roots(minimal_polynomial(spec), kBits);
    BinetData b = binet_coefficients(rs, spec);
    // lambda = (1/sqrt5, -1/sqrt5)
    BallReal inv_sqrt5 = BallReal::from_si(1, 2 * kBits) / sqrt(BallReal::from_si(5, 2 * kBits));
    CHECK(b.lambdas[0].re.overlaps(inv_sqrt5));
    CHECK(b.lambdas[0].im.contains_zero());
    CHECK(b.lambdas[1].re.overlaps(-inv_sqrt5));
  }
  {
    RecurrenceSpec spec = make(2, {-6, 5}, {5, 13});
    RootSet rs = find_roots(minimal_polynomial(spec), kBits);
    REQUIRE(rs.count() == 2);
    // root order (3, 2) by decreasing modulus
    CHECK(rs.roots[0].re.contains(mpq_class(3)));
    CHECK(rs.roots[1].re.contains(mpq_class(2)));
    BinetData b = binet_coefficients(rs, spec);
    CHECK(b.lambdas[0].re.contains(mpq_class(1)));
    CHECK(b.lambdas[1].re.contains(mpq_class(1)));
  }
  {
    RecurrenceSpec spec = make(1, {2}, {2});
    RootSet rs = find_roots(minimal_polynomial(spec), kBits);
    BinetData b = binet_coefficients(rs, spec);
    REQUIRE(b.lambdas.size() == 1);
    CHECK(b.lambdas[0].re.contains(mpq_class(1)));
  }
}

TEST_CASE("Binet reconstruction encloses the exact terms") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> du(1, 4), dc(-6, 6), di(1, 6);
  int checked = 0;
  for (int it = 0; it < 40 && checked < 15; ++it) {
    int d = du(rng);
    std::vector<long> cs, in;
    for (int i = 0; i < d; ++i) {
      cs.push_back(dc(rng));
      in.push_back(di(rng));
    }
    RecurrenceSpec spec = make(d, cs, in);
    IntegerPolynomial p;
    RootSet rs;
    BinetData b;
    try {
      p = minimal_polynomial(spec);
      if (p.coeffs[0] == 0) continue;
      rs = find_roots(p, kBits);
      b = binet_coefficients(rs, spec);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    SequenceWindow w = generate_terms(spec, 3 * d);
    for (long n = 1; n <= 3 * d; ++n) {
      BallComplex acc(kBits);
      for (int i = 0; i < rs.count(); ++i)
        acc += b.lambdas[i] * pow_si(rs.roots[i], n);
      CHECK(acc.re.contains(mpq_class(w.terms[n - 1])));
      CHECK(acc.im.contains(mpq_class(0)));
    }
  }
  CHECK(checked >= 15);
}

TEST_CASE("hypothesis reports on the canonical cases") {
  {
    SpectralData sd = analyze_spectrum(make(2, {1, 1}, {1, 1}), kBits);
    CHECK(sd.report.monotonicity_class == MonotonicityClass::EventuallyIncreasing);
    CHECK(sd.report.dominant_is_real);
    CHECK(sd.report.dominant_gt_one);
    CHECK(sd.report.dominant_simple);
    CHECK(sd.report.separable);
    CHECK(sd.report.lambda1_positive);
    CHECK(sd.report.sigma_c.has_value());
    CHECK(*sd.report.sigma_c == 0.0);
    CHECK(sd.report.q_ratio_at_shift == doctest::Approx(0.145898).epsilon(1e-4));
  }
  {
    SpectralData sd = analyze_spectrum(make(2, {2, 0}, {1, 2}), kBits);
    CHECK(sd.report.monotonicity_class == MonotonicityClass::Inconclusive);
    CHECK(sd.report.diagnosis.find("no strictly dominant root") != std::string::npos);
  }
  {
    SpectralData sd = analyze_spectrum(make(1, {-2}, {-2}), kBits);
    CHECK(sd.report.monotonicity_class == MonotonicityClass::InfiniteSignChanges);
  }
  {
    // negated Fibonacci: lambda_1 < 0
    SpectralData sd = analyze_spectrum(make(2, {1, 1}, {-1, -1}), kBits);
    CHECK(sd.report.monotonicity_class == MonotonicityClass::NegatedEventuallyIncreasing);
  }
  {
    // constant sequence: dominant root exactly 1
    SpectralData sd = analyze_spectrum(make(1, {1}, {1}), kBits);
    CHECK(sd.report.monotonicity_class == MonotonicityClass::Inconclusive);
  }
  {
    // zero root: a junk head on a geometric tail
    SpectralData sd = analyze_spectrum(make(2, {0, 2}, {5, 2}), kBits);
    CHECK(sd.report.monotonicity_class == MonotonicityClass::Inconclusive);
    CHECK(sd.report.diagnosis.find("zero") != std::string::npos);
  }
}

TEST_CASE("normalize_shift picks the smallest valid shift") {
  {
    NormalizedSequence ns = normalize(make(2, {1, 1}, {1, 1}), kBits);
    CHECK(ns.shift_n0 == 1);  // F_1 = F_2 violates strictness
    CHECK(ns.prefix.size() == 1);
    CHECK(ns.q1.certainly_lt(BallReal::from_si(1, kBits)));
  }
  {
    NormalizedSequence ns = normalize(make(1, {2}, {2}), kBits);
    CHECK(ns.shift_n0 == 0);
    CHECK(ns.prefix.empty());
  }
  {
    NormalizedSequence ns = normalize(make(3, {1, 1, 1}, {1, 1, 2}), kBits);
    CHECK(ns.shift_n0 == 1);  // T_1 = T_2
  }
  {
    // min_shift is honored and shifted coefficients follow
    NormalizedSequence ns = normalize(make(2, {1, 1}, {1, 1}), kBits, 4);
    CHECK(ns.shift_n0 == 4);
    CHECK(ns.prefix.size() == 4);
    // lambda_1' = lambda_1 alpha_1^4
    BallComplex expect = ns.binet.lambdas[0] * pow_si(ns.roots.roots[0], 4);
    CHECK(ns.shifted.lambdas[0].re.overlaps(expect.re));
  }
  CHECK_THROWS_AS(normalize(make(2, {2, 0}, {1, 2}), kBits), HypothesesNotMet);
}

TEST_CASE("flags are stable under precision doubling (monotone refinement)") {
  for (auto spec : {make(2, {1, 1}, {1, 1}), make(3, {1, 1, 1}, {1, 1, 2}),
                    make(2, {-6, 5}, {5, 13}), make(1, {-2}, {-2})}) {
    SpectralData a = analyze_spectrum(spec, 128);
    SpectralData b = analyze_spectrum(spec, 256);
    CHECK(a.report.monotonicity_class == b.report.monotonicity_class);
    CHECK(a.report.dominant_is_real == b.report.dominant_is_real);
    CHECK(a.report.dominant_gt_one == b.report.dominant_gt_one);
    CHECK(a.report.dominant_simple == b.report.dominant_simple);
    CHECK(a.report.separable == b.report.separable);
    CHECK(a.report.lambda1_positive == b.report.lambda1_positive);
  }
}

TEST_CASE("root enclosures shrink with requested precision") {
  IntegerPolynomial p = poly({-1, -1, -1, 1});
  RootSet lo = find_roots(p, 128);
  RootSet hi = find_roots(p, 512);
  for (int i = 0; i < 3; ++i) {
    CHECK(lo.roots[i].abs().overlaps(hi.roots[i].abs()));
    CHECK(hi.roots[i].disk_radius().certainly_lt(lo.roots[i].disk_radius()));
  }
}

TEST_CASE("nbonacci roots are strictly increasing toward 2") {
  BallReal prev;
  bool have = false;
  for (int n = 2; n <= 6; ++n) {
    SpectralData sd =
        analyze_spectrum(builtin_sequence("nbonacci(" + std::to_string(n) + ")"), 160);
    BallReal root = sd.roots.roots[0].re;
    CHECK(root.certainly_gt(BallReal::from_si(1, 160)));
    CHECK(root.certainly_lt(BallReal::from_si(2, 160)));
    if (have) CHECK(prev.certainly_lt(root));
    prev = root;
    have = true;
  }
}

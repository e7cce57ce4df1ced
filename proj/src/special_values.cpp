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

#include "recurzeta/special_values.hpp"

#include <algorithm>

#include "recurzeta/errors.hpp"
#include "recurzeta/poles.hpp"

namespace recurzeta {

std::vector<BetaIndex> beta_indices(int r, long m) {
  std::vector<BetaIndex> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, int slot, long left) -> void {
    if (slot == r - 1) {
      cur.push_back(left);
      out.push_back(BetaIndex{cur});
      cur.pop_back();
      return;
    }
    for (long v = 0; v <= left; ++v) {
      cur.push_back(v);
      self(self, slot + 1, left - v);
      cur.pop_back();
    }
  };
  rec(rec, 0, m);
  return out;
}

namespace {

mpz_class multinomial(long m, const std::vector<long>& beta) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), m);
  for (long b : beta) {
    mpz_class d;
    mpz_fac_ui(d.get_mpz_t(), b);
    f /= d;
  }
  return f;
}

// prefix + sum_{|beta| = m} binom(m, beta) lambda'^beta alpha^beta / (1 - alpha^beta)
BallComplex beta_sum(const NormalizedSequence& ns, long m) {
  const int r = ns.roots.count();
  const Prec prec = std::max<Prec>(ns.precision_bits + 64, 128);
  // power tables up to m
  std::vector<std::vector<BallComplex>> apow(r), lpow(r);
  for (int i = 0; i < r; ++i) {
    apow[i].push_back(BallComplex::from_si(1, 0, prec));
    lpow[i].push_back(BallComplex::from_si(1, 0, prec));
    for (long j = 1; j <= m; ++j) {
      apow[i].push_back(apow[i][j - 1] * ns.roots.roots[i]);
      lpow[i].push_back(lpow[i][j - 1] * ns.shifted.lambdas[i]);
    }
  }
  BallComplex sum(prec);
  const BallComplex one = BallComplex::from_si(1, 0, prec);
  for (const auto& bi : beta_indices(r, m)) {
    BallComplex ab = one, lb = one;
    for (int i = 0; i < r; ++i) {
      ab = ab * apow[i][bi.beta[i]];
      lb = lb * lpow[i][bi.beta[i]];
    }
    BallComplex den = one - ab;
    if (den.contains_zero())
      throw IsPole("a denominator 1 - alpha^beta encloses zero at s = -m");
    sum += BallComplex::from_real(BallReal::from_mpz(multinomial(m, bi.beta), prec)) *
           lb * ab / den;
  }
  for (const auto& a : ns.prefix) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), a.get_mpz_t(), m);
    sum += BallComplex::from_real(BallReal::from_mpz(p, prec));
  }
  return sum;
}

mpz_class denominator_impl(const NormalizedSequence& ns, long m, double* radius_out) {
  const int r = ns.roots.count();
  const Prec prec = std::max<Prec>(ns.precision_bits + 64, 128);
  std::vector<std::vector<BallComplex>> apow(r);
  for (int i = 0; i < r; ++i) {
    apow[i].push_back(BallComplex::from_si(1, 0, prec));
    for (long j = 1; j <= m; ++j) apow[i].push_back(apow[i][j - 1] * ns.roots.roots[i]);
  }
  const BallComplex one = BallComplex::from_si(1, 0, prec);
  BallComplex prod = one;
  for (const auto& bi : beta_indices(r, m)) {
    BallComplex ab = one;
    for (int i = 0; i < r; ++i) ab = ab * apow[i][bi.beta[i]];
    prod = prod * (one - ab);
  }
  if (radius_out) *radius_out = prod.re.rad_d();
  mpz_class out;
  if (!prod.re.round_to_integer(out))
    throw NotAnInteger("denominator product radius does not isolate an integer");
  return out;
}

}  // namespace

NegIntPoleCheck is_negative_integer_pole(const NormalizedSequence& ns, long m) {
  if (m < 1) throw ValidationError("m must be >= 1");
  const double eps = 0.25;
  Window w{-static_cast<double>(m) - eps, -static_cast<double>(m) + eps, -eps, eps};
  const mpq_class target(-m);
  const mpq_class zero(0);
  Prec bits = ns.precision_bits;
  const Prec cap = max_precision_cap();
  const NormalizedSequence* cur = &ns;
  NormalizedSequence rebuilt;
  for (int attempt = 0; attempt < 3; ++attempt) {
    bool hit = false;
    for (const auto& g : enumerate_poles(*cur, w)) {
      if (g.location.contains_point_q(target, zero)) hit = true;
    }
    if (!hit) return {false, false};
    if (bits >= cap) break;
    bits = std::min<Prec>(bits * 2, cap);
    rebuilt = normalize(ns.spec, bits, ns.shift_n0);
    cur = &rebuilt;
  }
  return {true, true};
}

mpz_class denominator_integer(const NormalizedSequence& ns, long m) {
  if (m < 1) throw ValidationError("m must be >= 1");
  Prec bits = ns.precision_bits;
  const Prec cap = max_precision_cap();
  const NormalizedSequence* cur = &ns;
  NormalizedSequence rebuilt;
  while (true) {
    try {
      mpz_class d = denominator_impl(*cur, m, nullptr);
      if (d == 0)
        throw ZeroDenominator("denominator product is zero: s = -m is a pole");
      return d;
    } catch (const NotAnInteger&) {
      if (bits >= cap) throw;
      bits = std::min<Prec>(bits * 2, cap);
      rebuilt = normalize(ns.spec, bits, ns.shift_n0);
      cur = &rebuilt;
    }
  }
}

mpq_class simplest_rational_in(const mpq_class& lo, const mpq_class& hi) {
  if (lo > hi) throw ValidationError("empty interval");
  if (lo <= 0 && 0 <= hi) return mpq_class(0);
  if (hi < 0) return -simplest_rational_in(-hi, -lo);
  // 0 < lo <= hi
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  mpq_class f(fl);
  mpz_class cl;
  mpz_cdiv_q(cl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (mpq_class(cl) <= hi) return mpq_class(cl);  // an integer lies inside
  // interval inside (f, f+1)
  mpq_class r = simplest_rational_in(1 / (hi - f), 1 / (lo - f));
  return f + 1 / r;
}

RationalValue phi_negative_integer(const NormalizedSequence& ns, long m) {
  if (m < 1) throw ValidationError("m must be >= 1");
  NegIntPoleCheck pc = is_negative_integer_pole(ns, m);
  if (pc.is_pole)
    throw IsPole(pc.ambiguous ? "s = -m cannot be separated from the pole set"
                              : "s = -m is a pole");

  const Prec cap = max_precision_cap();
  Prec bits = std::max<Prec>(ns.precision_bits, 128);
  // denominator bound 10^(digits/4), squared on retry, two retries
  auto bound_for = [](Prec b) {
    unsigned long digits = static_cast<unsigned long>(b * 0.30103);
    mpz_class bd;
    mpz_ui_pow_ui(bd.get_mpz_t(), 10, std::max<unsigned long>(digits / 4, 8));
    return bd;
  };
  mpz_class den_bound = bound_for(bits);

  const NormalizedSequence* cur = &ns;
  NormalizedSequence rebuilt;
  for (int attempt = 0; attempt < 3; ++attempt) {
    try {
      double d_radius = 0;
      BallComplex v = beta_sum(*cur, m);
      if (!v.im.contains_zero())
        throw InternalInconsistency("phi(-m) enclosure has nonzero imaginary part");
      mpz_class d = denominator_impl(*cur, m, &d_radius);
      if (d == 0) throw ZeroDenominator("denominator product is zero");
      BallReal w = v.re * BallReal::from_mpz(d, v.re.prec());
      auto [lo, hi] = w.interval_q();
      mpq_class w_rat = simplest_rational_in(lo, hi);
      mpq_class cand = w_rat / mpq_class(d);
      cand.canonicalize();
      if (cand.get_den() <= den_bound && v.re.contains(cand)) {
        // verify against an independent recomputation at doubled precision
        Prec bits2 = std::min<Prec>(std::max<Prec>(bits, cur->precision_bits) * 2, cap);
        NormalizedSequence ns2 = normalize(ns.spec, bits2, ns.shift_n0);
        BallComplex v2 = beta_sum(ns2, m);
        if (v2.re.contains(cand)) {
          RationalValue out;
          out.value = cand;
          out.certification.precision_used = cur->precision_bits;
          out.certification.verified_at_double_precision = true;
          out.certification.integer_rounding_radius = d_radius;
          return out;
        }
      }
    } catch (const IsPole&) {
      // the pole check above said no: an enclosure is merely too wide
    } catch (const NotAnInteger&) {
    }
    if (bits >= cap) break;
    bits = std::min<Prec>(bits * 2, cap);
    den_bound = den_bound * den_bound;
    rebuilt = normalize(ns.spec, bits, ns.shift_n0);
    cur = &rebuilt;
  }
  throw ReconstructionFailed("no verified rational within the denominator bound");
}

// ---------------------------------------------------------------------------
// Exact arithmetic in Q[X]/(X^2 - disc): elements u + v sqrt(disc). For
// positive non-square disc this is the real quadratic field; for square disc
// it is the split algebra, where non-invertible denominators only arise when
// s = -m is a pole.

namespace {

struct QuadElem {
  mpq_class u, v;
};

struct QuadCtx {
  mpz_class disc;  // > 0

  QuadElem make(const mpq_class& u, const mpq_class& v) const { return {u, v}; }
  QuadElem from_q(const mpq_class& u) const { return {u, 0}; }

  QuadElem add(const QuadElem& a, const QuadElem& b) const {
    return {a.u + b.u, a.v + b.v};
  }
  QuadElem sub(const QuadElem& a, const QuadElem& b) const {
    return {a.u - b.u, a.v - b.v};
  }
  QuadElem mul(const QuadElem& a, const QuadElem& b) const {
    return {a.u * b.u + mpq_class(disc) * a.v * b.v, a.u * b.v + a.v * b.u};
  }
  mpq_class norm(const QuadElem& a) const {
    return a.u * a.u - mpq_class(disc) * a.v * a.v;
  }
  bool is_zero(const QuadElem& a) const { return a.u == 0 && a.v == 0; }
  bool invertible(const QuadElem& a) const { return norm(a) != 0; }
  QuadElem div(const QuadElem& a, const QuadElem& b) const {
    mpq_class n = norm(b);
    if (n == 0) throw DomainError("division by a non-invertible element");
    QuadElem conj{b.u, -b.v};
    QuadElem prod = mul(a, conj);
    return {prod.u / n, prod.v / n};
  }
  QuadElem pow(QuadElem base, long e) const {
    QuadElem acc = from_q(1);
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      e >>= 1;
      if (e > 0) base = mul(base, base);
    }
    return acc;
  }
  // sign under the real embedding sqrt(disc) > 0
  int sign(const QuadElem& a) const {
    int su = sgn(a.u), sv = sgn(a.v);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // opposite signs: compare u^2 vs disc v^2
    mpq_class d = a.u * a.u - mpq_class(disc) * a.v * a.v;
    int sd = sgn(d);
    return sd == 0 ? 0 : sd * su;
  }
  QuadElem abs(const QuadElem& a) const {
    return sign(a) < 0 ? QuadElem{-a.u, -a.v} : a;
  }
  bool less(const QuadElem& a, const QuadElem& b) const {
    return sign(sub(a, b)) < 0;
  }
};

}  // namespace

RationalValue quadratic_exact_value(const RecurrenceSpec& spec, long m, long min_shift) {
  if (m < 1) throw ValidationError("m must be >= 1");
  IntegerPolynomial p = minimal_polynomial(spec);
  if (p.degree() != 2) throw NotQuadratic("minimal polynomial degree is not 2");
  const mpz_class p1 = p.coeffs[1], p0 = p.coeffs[0];
  mpz_class disc = p1 * p1 - 4 * p0;
  if (disc == 0) throw RepeatedRoots("discriminant is zero");
  if (disc < 0) throw HypothesesNotMet("complex conjugate pair has no dominant root");
  if (p0 == 0) throw HypothesesNotMet("zero is a root of the minimal polynomial");

  QuadCtx F{disc};
  QuadElem a_plus = F.make(mpq_class(-p1) / 2, mpq_class(1, 2));
  QuadElem a_minus = F.make(mpq_class(-p1) / 2, mpq_class(-1, 2));
  // dominant root by exact modulus comparison
  int cmp_sq = F.sign(F.sub(F.mul(a_plus, a_plus), F.mul(a_minus, a_minus)));
  if (cmp_sq == 0) throw HypothesesNotMet("no strictly dominant root");
  QuadElem al1 = cmp_sq > 0 ? a_plus : a_minus;
  QuadElem al2 = cmp_sq > 0 ? a_minus : a_plus;
  if (!(F.sign(F.sub(al1, F.from_q(1))) > 0))
    throw HypothesesNotMet("dominant root not greater than 1");

  SequenceWindow w2 = generate_terms(spec, 2);
  QuadElem t1 = F.from_q(mpq_class(w2.terms[0]));
  QuadElem t2 = F.from_q(mpq_class(w2.terms[1]));
  // solve [al1 al2; al1^2 al2^2] [l1 l2]^T = [a1 a2]^T
  QuadElem det = F.mul(F.mul(al1, al2), F.sub(al2, al1));
  QuadElem l1 = F.div(F.sub(F.mul(t1, F.mul(al2, al2)), F.mul(t2, al2)), det);
  QuadElem l2 = F.div(F.sub(F.mul(t2, al1), F.mul(t1, F.mul(al1, al1))), det);
  if (!(F.sign(l1) > 0))
    throw HypothesesNotMet("leading Binet coefficient not positive");

  // exact shift: q-condition |l2 a2^{n+1}| < l1 a1^{n+1}, then the
  // strict-increase domination l1 a1^N (a1-1) > |l2 (a2-1)| |a2|^N
  const long iter_cap = 100000;
  QuadElem abs_a2 = F.abs(al2);
  QuadElem abs_l2 = F.abs(l2);
  long n_q = -1;
  {
    QuadElem lhs = F.mul(abs_l2, abs_a2);       // |l2| |a2|^{n+1} at n0 = 0
    QuadElem rhs = F.mul(l1, al1);              // l1 a1^{n+1}
    for (long n0 = 0; n0 <= iter_cap; ++n0) {
      if (F.less(lhs, rhs)) {
        n_q = n0;
        break;
      }
      lhs = F.mul(lhs, abs_a2);
      rhs = F.mul(rhs, al1);
    }
  }
  long n_star = -1;
  {
    QuadElem a1m1 = F.sub(al1, F.from_q(1));
    QuadElem m2 = F.mul(abs_l2, F.abs(F.sub(al2, F.from_q(1))));
    QuadElem lhs = F.mul(F.mul(l1, al1), a1m1);  // l1 a1^N (a1 - 1) at N = 1
    QuadElem rhs = F.mul(m2, abs_a2);            // |l2 (a2-1)| |a2|^N
    for (long n = 1; n <= iter_cap; ++n) {
      if (F.less(rhs, lhs)) {
        n_star = n;
        break;
      }
      lhs = F.mul(lhs, al1);
      rhs = F.mul(rhs, abs_a2);
    }
  }
  if (n_q < 0 || n_star < 0)
    throw InternalInconsistency("exact shift search did not terminate");

  SequenceWindow w = generate_terms(spec, n_star + 1);
  long n_terms = 0;
  for (long n = 1; n <= n_star; ++n) {
    if (w.terms[n - 1] < 1 || w.terms[n] <= w.terms[n - 1]) n_terms = n;
  }
  const long n0 = std::max({n_q, n_terms, min_shift});
  if (n0 + 1 > static_cast<long>(w.terms.size()))
    w = generate_terms(spec, n0 + 1);

  QuadElem lp1 = F.mul(l1, F.pow(al1, n0));
  QuadElem lp2 = F.mul(l2, F.pow(al2, n0));

  QuadElem total = F.from_q(0);
  for (long n = 1; n <= n0; ++n) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), mpz_class(w.terms[n - 1]).get_mpz_t(),
               static_cast<unsigned long>(m));
    total = F.add(total, F.from_q(mpq_class(pw)));
  }
  for (long b1 = 0; b1 <= m; ++b1) {
    long b2 = m - b1;
    QuadElem ab = F.mul(F.pow(al1, b1), F.pow(al2, b2));
    QuadElem den = F.sub(F.from_q(1), ab);
    if (F.is_zero(den) || !F.invertible(den))
      throw IsPole("1 - alpha^beta vanishes: s = -m is a pole");
    mpz_class bc;
    mpz_bin_uiui(bc.get_mpz_t(), m, b1);
    QuadElem lb = F.mul(F.pow(lp1, b1), F.pow(lp2, b2));
    total = F.add(total, F.mul(F.from_q(mpq_class(bc)), F.div(F.mul(lb, ab), den)));
  }
  if (total.v != 0)
    throw NonRationalResult("sqrt component of phi(-m) did not vanish");
  mpq_class value = total.u;
  value.canonicalize();
  RationalValue out;
  out.value = value;
  out.certification.precision_used = 0;  // exact path
  out.certification.verified_at_double_precision = true;
  out.certification.integer_rounding_radius = 0.0;
  return out;
}

}  // namespace recurzeta

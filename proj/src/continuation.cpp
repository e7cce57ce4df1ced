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

#include "recurzeta/continuation.hpp"

#include <algorithm>
#include <cmath>

#include "recurzeta/errors.hpp"

namespace recurzeta {

namespace {

mpq_class mpq_from_double(double v) {
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), v);
  return q;
}

void check_prefix_positive(const NormalizedSequence& ns) {
  for (const auto& a : ns.prefix)
    if (a < 1)
      throw DomainError(
          "sequence has a term < 1 before the shift; a^{-s} is undefined");
}

BallComplex upcast(const BallComplex& s, Prec prec) {
  if (s.prec() >= prec) return s;
  BallReal re(prec), im(prec);
  mpfr_set(re.mid_raw(), s.re.mid_raw(), MPFR_RNDN);
  mpfr_set(re.rad_raw(), s.re.rad_raw(), MPFR_RNDU);
  mpfr_set(im.mid_raw(), s.im.mid_raw(), MPFR_RNDN);
  mpfr_set(im.rad_raw(), s.im.rad_raw(), MPFR_RNDU);
  return {re, im};
}

// arg of a root enclosure; realified roots give exact 0 / pi
BallReal root_arg(const BallComplex& z, Prec prec) {
  try {
    if (z.is_real_exact()) {
      if (z.re.is_positive()) return BallReal(prec);
      if (z.re.is_negative()) return BallReal::pi(prec);
      throw DomainError("root enclosure contains zero");
    }
    return carg(z);
  } catch (const DomainError&) {
    throw PrecisionExhausted("root argument straddles the branch cut");
  }
}

}  // namespace

std::vector<long> multi_index_exponents(const MultiIndex& k, int r) {
  if (static_cast<int>(k.k.size()) != std::max(r - 1, 0))
    throw ValidationError("multi-index length must be r - 1");
  std::vector<long> e;
  if (r <= 1) return e;
  if (k.k[0] < 0) throw ValidationError("k_1 must be >= 0");
  for (size_t i = 1; i < k.k.size(); ++i)
    if (k.k[i] < 0 || k.k[i] > k.k[i - 1])
      throw ValidationError("multi-index must satisfy 0 <= k_i <= k_{i-1}");
  for (size_t i = 1; i < k.k.size(); ++i) e.push_back(k.k[i - 1] - k.k[i]);
  e.push_back(k.k.back());
  return e;
}

BallComplex phi_direct(const NormalizedSequence& ns, const BallComplex& s_in,
                       long terms, double margin) {
  const Prec prec = std::max<Prec>(ns.precision_bits + 64, s_in.prec());
  const BallComplex s = upcast(s_in, prec);
  if (margin <= 0) throw ValidationError("margin must be positive");
  if (s.re.interval_q().first < mpq_from_double(margin))
    throw DivergentRegion("Re(s) below the direct-summation margin");
  check_prefix_positive(ns);

  terms = std::max(terms, ns.shift_n0 + 1);
  SequenceWindow w = generate_terms(ns.spec, terms);
  BallComplex sum(prec);
  const BallComplex minus_s = -s;
  for (long n = 0; n < terms; ++n) {
    if (w.terms[n] < 1)
      throw DomainError("sequence term < 1 inside the summation window");
    sum += cpow(BallReal::from_mpz(w.terms[n], prec), minus_s);
  }

  // Tail: a_{n+n0} >= C alpha_1^n with C = lambda_1'(1 - q_1), so
  // sum_{n > terms} a_n^{-sigma} <= C^-sigma alpha^{-sigma(T+1)} / (1 - alpha^-sigma).
  const BallReal one = BallReal::from_si(1, prec);
  BallReal c = ns.shifted.lambdas[0].re * (one - ns.q1);
  if (!c.is_positive())
    throw PrecisionExhausted("tail constant not certified positive");
  const BallReal a1 = ns.roots.roots[0].re;
  const BallReal sigma = s.re;
  BallReal apow = exp(-(sigma * log(a1)));  // alpha_1^{-sigma}
  if (!apow.certainly_lt(one))
    throw PrecisionExhausted("geometric tail ratio not certified < 1");
  long tprime = terms - ns.shift_n0;
  BallReal tail = exp(-(sigma * log(c))) * pow_si(apow, tprime + 1) / (one - apow);
  BallReal tail_up = tail.upper();
  if (tail_up.is_negative()) tail_up = BallReal(prec);
  return {BallReal::with_radius(sum.re, tail_up),
          BallReal::with_radius(sum.im, tail_up)};
}

namespace {

BallComplex lambda_term_impl(const std::vector<BallComplex>& lambdas, int r,
                             Prec base_bits, const BallComplex& s_in,
                             const MultiIndex& k) {
  const Prec prec = std::max<Prec>(base_bits + 64, s_in.prec());
  const BallComplex s = upcast(s_in, prec);
  std::vector<long> e = multi_index_exponents(k, r);

  const long k1 = r > 1 ? k.k[0] : 0;
  // binom(-s, k1) as a falling-factorial product
  BallComplex bin = BallComplex::from_si(1, 0, prec);
  for (long j = 0; j < k1; ++j) {
    BallComplex f = (-s - BallComplex::from_si(j, 0, prec));
    bin = bin * f / BallComplex::from_si(j + 1, 0, prec);
  }
  // integer binomials binom(k_{i-1}, k_i)
  mpz_class zbin = 1;
  for (size_t i = 1; i < k.k.size(); ++i) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), k.k[i - 1], k.k[i]);
    zbin *= b;
  }
  const BallReal l1 = lambdas[0].re;
  BallComplex expo = -s - BallComplex::from_si(k1, 0, prec);
  BallComplex out = bin * BallComplex::from_real(BallReal::from_mpz(zbin, prec)) *
                    cpow(l1, expo);
  for (int i = 2; i <= r; ++i) out = out * pow_si(lambdas[i - 1], e[i - 2]);
  return out;
}

}  // namespace

BallComplex lambda_term(const NormalizedSequence& ns, const BallComplex& s,
                        const MultiIndex& k) {
  return lambda_term_impl(ns.binet.lambdas, ns.roots.count(), ns.precision_bits, s, k);
}

BallComplex lambda_term_shifted(const NormalizedSequence& ns, const BallComplex& s,
                                const MultiIndex& k) {
  return lambda_term_impl(ns.shifted.lambdas, ns.roots.count(), ns.precision_bits, s, k);
}

namespace {

// Completes a partial multi-index (k_1 fixed in k.front()) with all
// descending chains k_2 <= k_1, ..., and calls f on each full index.
template <typename F>
void complete_chains(int r, std::vector<long>& k, F&& f) {
  if (static_cast<int>(k.size()) == r - 1) {
    f(k);
    return;
  }
  for (long v = 0; v <= k.back(); ++v) {
    k.push_back(v);
    complete_chains(r, k, f);
    k.pop_back();
  }
}

}  // namespace

BallComplex phi_continued(const NormalizedSequence& ns, const BallComplex& s_in,
                          const EvalParams& params) {
  const int r = ns.roots.count();
  const Prec prec =
      std::max<Prec>(std::max(ns.precision_bits, params.precision_bits) + 64,
                     s_in.prec());
  const BallComplex s = upcast(s_in, prec);
  check_prefix_positive(ns);
  const BallReal one = BallReal::from_si(1, prec);
  const BallReal a1 = ns.roots.roots[0].re;
  const BallReal log_a1 = log(a1);
  const BallReal sigma = s.re;
  const BallReal l1 = ns.shifted.lambdas[0].re;
  const mpq_class sigma_lo = sigma.interval_q().first;

  // mu = max modulus of the non-dominant roots; t = mu / alpha_1 < 1
  BallReal mu(prec);
  for (int i = 1; i < r; ++i) mu = max_upper(mu, ns.roots.roots[i].abs());
  BallReal t = r > 1 ? mu / a1 : BallReal(prec);
  if (r > 1 && !t.certainly_lt(one))
    throw PrecisionExhausted("modulus gap not certified");

  // --- pole guard --------------------------------------------------------
  // Poles with Re <= -k1 * delta; only k1 with -k1 delta >= sigma_lo - guard
  // can come close. delta = 1 - log mu / log alpha_1 > 0.
  const mpq_class guard_q = mpq_from_double(params.pole_guard);
  {
    const BallReal two_pi = BallReal::pi(prec) + BallReal::pi(prec);
    std::vector<BallReal> logmods, args;
    for (int i = 1; i < r; ++i) {
      logmods.push_back(log(ns.roots.roots[i].abs()));
      args.push_back(root_arg(ns.roots.roots[i], prec));
    }
    auto check_tuple = [&](const std::vector<long>& kk) {
      MultiIndex mi{kk};
      std::vector<long> e = multi_index_exponents(mi, r);
      const long k1 = kk.empty() ? 0 : kk[0];
      BallReal lnum = BallReal::from_si(-k1, prec) * log_a1;
      BallReal anum(prec);
      for (int i = 0; i + 2 <= r; ++i) {
        lnum += BallReal::from_si(e[i], prec) * logmods[i];
        anum += BallReal::from_si(e[i], prec) * args[i];
      }
      BallReal re_pole = lnum / log_a1;
      // nearest lattice point in n
      double y = (s.im.mid_d() * log_a1.mid_d() - anum.mid_d()) / (2 * M_PI);
      long n_near = static_cast<long>(std::llround(y));
      for (long n = n_near - 1; n <= n_near + 1; ++n) {
        BallReal im_pole = (anum + BallReal::from_si(n, prec) * two_pi) / log_a1;
        BallReal dr = s.re - re_pole;
        BallReal di = s.im - im_pole;
        BallReal dist = sqrt(dr * dr + di * di).lower();
        if (!(dist.interval_q().first > guard_q))
          throw PoleProximity("s is within pole_guard of a pole of the continuation");
      }
    };
    if (r == 1) {
      std::vector<long> none;
      check_tuple(none);
    } else {
      BallReal delta = one - log(mu) / log_a1;
      double delta_lo = delta.lower().mid_d();
      if (delta_lo <= 0) throw PrecisionExhausted("pole line slope not certified");
      double k1_need = (params.pole_guard - mpq_class(sigma_lo).get_d()) / delta_lo;
      long k1_guard = std::min<long>(params.k_max,
                                     k1_need > 0 ? static_cast<long>(k1_need) + 1 : 0);
      for (long k1 = 0; k1 <= k1_guard; ++k1) {
        std::vector<long> chain{k1};
        complete_chains(r, chain, check_tuple);
      }
    }
  }

  // --- truncation depth ---------------------------------------------------
  const mpq_class target = mpq_from_double(params.target_radius);
  const BallReal abs_s = s.abs();
  long K = -1;
  BallReal tail_bound(prec);
  if (r == 1) {
    K = 0;
  } else if (params.force_k) {
    K = *params.force_k;
  }
  // running products: B(K+1) = prod_{j=0..K} (|s|+j)/(j+1), qpow = q1^{K+1}
  BallReal bprod = (abs_s + BallReal::from_si(0, prec)) / one;  // j = 0 term
  BallReal qpow = ns.q1;
  const BallReal half = BallReal::from_mpq(mpq_class(1, 2), prec);
  BallReal lead = exp(-(sigma * log(l1 * a1)));  // (lambda_1' alpha_1)^{-sigma}
  auto tail_at = [&](long kcur) -> std::pair<bool, BallReal> {
    // theta = q1 (|s| + K + 1) / (K + 2); valid bound needs theta < 1 and
    // sup |w| <= 1/2 beyond K.
    BallReal theta = ns.q1 * (abs_s + BallReal::from_si(kcur + 1, prec)) /
                     BallReal::from_si(kcur + 2, prec);
    if (!theta.certainly_lt(one)) return {false, BallReal(prec)};
    BallReal wmax = exp(-(sigma * log_a1)) * pow_si(t, kcur + 1);
    if (!wmax.certainly_lt(half)) return {false, BallReal(prec)};
    BallReal bound = BallReal::from_si(2, prec) * lead * bprod * qpow / (one - theta);
    return {true, bound.upper()};
  };
  if (r > 1 && !params.force_k) {
    for (long kcur = 0; kcur <= params.k_max; ++kcur) {
      auto [valid, bound] = tail_at(kcur);
      if (valid && !(bound.interval_q().second > target / 2)) {
        K = kcur;
        tail_bound = bound;
        break;
      }
      // advance running products to represent K+1 = kcur+2
      bprod = bprod * (abs_s + BallReal::from_si(kcur + 1, prec)) /
              BallReal::from_si(kcur + 2, prec);
      qpow = qpow * ns.q1;
    }
    if (K < 0)
      throw TruncationFailure("tail bound does not reach target_radius by k_max");
  } else if (r > 1 && params.force_k) {
    for (long kcur = 0; kcur < K; ++kcur) {
      bprod = bprod * (abs_s + BallReal::from_si(kcur + 1, prec)) /
              BallReal::from_si(kcur + 2, prec);
      qpow = qpow * ns.q1;
    }
    auto [valid, bound] = tail_at(K);
    if (!valid)
      throw TruncationFailure("forced truncation depth has no valid tail bound");
    tail_bound = bound;
  }

  // --- exact prefix --------------------------------------------------------
  BallComplex total(prec);
  const BallComplex minus_s = -s;
  for (const auto& a : ns.prefix)
    total += cpow(BallReal::from_mpz(a, prec), minus_s);

  // --- main sum -------------------------------------------------------------
  // power tables for alpha_i, lambda_i' (i >= 2) and inverse powers of the
  // dominant pair
  const long kmax_used = std::max<long>(K, 0);
  std::vector<std::vector<BallComplex>> apow(r), lpow(r);
  for (int i = 1; i < r; ++i) {
    apow[i].reserve(kmax_used + 1);
    lpow[i].reserve(kmax_used + 1);
    apow[i].push_back(BallComplex::from_si(1, 0, prec));
    lpow[i].push_back(BallComplex::from_si(1, 0, prec));
    for (long j = 1; j <= kmax_used; ++j) {
      apow[i].push_back(apow[i][j - 1] * ns.roots.roots[i]);
      lpow[i].push_back(lpow[i][j - 1] * ns.shifted.lambdas[i]);
    }
  }
  std::vector<BallReal> a1inv, l1inv;
  const BallReal a1r = one / a1, l1r = one / l1;
  a1inv.push_back(one);
  l1inv.push_back(one);
  for (long j = 1; j <= kmax_used; ++j) {
    a1inv.push_back(a1inv[j - 1] * a1r);
    l1inv.push_back(l1inv[j - 1] * l1r);
  }
  const BallComplex a1_pow_ms = cpow(a1, minus_s);
  const BallComplex l1_pow_ms = cpow(l1, minus_s);

  try {
    if (r == 1) {
      BallComplex w = a1_pow_ms;
      BallComplex f = l1_pow_ms * w / (BallComplex::from_si(1, 0, prec) - w);
      total += f;
    } else {
      BallComplex bin = BallComplex::from_si(1, 0, prec);  // binom(-s, k1)
      for (long k1 = 0; k1 <= K; ++k1) {
        if (k1 > 0) {
          BallComplex f = minus_s - BallComplex::from_si(k1 - 1, 0, prec);
          bin = bin * f / BallComplex::from_si(k1, 0, prec);
        }
        BallComplex pre = bin * (l1_pow_ms * BallComplex::from_real(l1inv[k1]));
        BallComplex w1 = a1_pow_ms * BallComplex::from_real(a1inv[k1]);
        std::vector<long> chain{k1};
        complete_chains(r, chain, [&](const std::vector<long>& kfull) {
          MultiIndex mi{kfull};
          std::vector<long> e = multi_index_exponents(mi, r);
          mpz_class zbin = 1;
          for (size_t i = 1; i < kfull.size(); ++i) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), kfull[i - 1], kfull[i]);
            zbin *= b;
          }
          BallComplex lprod = pre;
          BallComplex w = w1;
          for (int i = 0; i + 2 <= r; ++i) {
            lprod = lprod * lpow[i + 1][e[i]];
            w = w * apow[i + 1][e[i]];
          }
          BallComplex term = lprod *
                             BallComplex::from_real(BallReal::from_mpz(zbin, prec)) *
                             w / (BallComplex::from_si(1, 0, prec) - w);
          total += term;
        });
      }
    }
  } catch (const DomainError&) {
    throw PoleProximity("a series denominator enclosure contains zero");
  }

  BallReal tail_up = tail_bound.upper();
  return {BallReal::with_radius(total.re, tail_up),
          BallReal::with_radius(total.im, tail_up)};
}

}  // namespace recurzeta

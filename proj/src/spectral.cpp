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

#include "recurzeta/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <tuple>

#include "recurzeta/errors.hpp"

namespace recurzeta {

namespace {

// ---------------------------------------------------------------------------
// Exact polynomial arithmetic over Q (ascending coefficients).

using QPoly = std::vector<mpq_class>;

void q_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int q_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly q_derivative(const QPoly& p) {
  QPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  q_trim(d);
  return d;
}

void q_make_monic(QPoly& p) {
  q_trim(p);
  if (p.empty()) return;
  mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
}

// p mod q, destructive on p; q need not be monic
QPoly q_rem(QPoly p, const QPoly& q) {
  q_trim(p);
  while (q_deg(p) >= q_deg(q)) {
    mpq_class f = p.back() / q.back();
    int shift = q_deg(p) - q_deg(q);
    for (int i = 0; i <= q_deg(q); ++i) p[i + shift] -= f * q[i];
    p.pop_back();
    q_trim(p);
  }
  return p;
}

QPoly q_divexact(const QPoly& a, const QPoly& b) {
  QPoly rem = a;
  q_trim(rem);
  QPoly quot(std::max<int>(q_deg(rem) - q_deg(b) + 1, 0), mpq_class(0));
  while (q_deg(rem) >= q_deg(b) && !rem.empty()) {
    mpq_class f = rem.back() / b.back();
    int shift = q_deg(rem) - q_deg(b);
    quot[shift] = f;
    for (int i = 0; i <= q_deg(b); ++i) rem[i + shift] -= f * b[i];
    q_trim(rem);
  }
  if (!rem.empty())
    throw InternalInconsistency("inexact polynomial division in squarefree split");
  q_trim(quot);
  return quot;
}

QPoly q_gcd(QPoly a, QPoly b) {
  q_trim(a);
  q_trim(b);
  while (!b.empty()) {
    QPoly r = q_rem(a, b);
    a = std::move(b);
    b = std::move(r);
    q_make_monic(b);
  }
  q_make_monic(a);
  return a;
}

QPoly q_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  q_trim(a);
  return a;
}

// Yun's squarefree decomposition: P = prod A_e^e with A_e monic squarefree.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  QPoly dp = q_derivative(p);
  QPoly g = q_gcd(p, dp);
  if (q_deg(g) == 0) {
    out.emplace_back(p, 1);
    return out;
  }
  QPoly c = q_divexact(p, g);
  QPoly d = q_sub(q_divexact(dp, g), q_derivative(c));
  int e = 1;
  while (q_deg(c) > 0) {
    QPoly a = q_gcd(c, d);
    if (q_deg(a) > 0) out.emplace_back(a, e);
    c = q_divexact(c, a);
    d = q_sub(q_divexact(d, a), q_derivative(c));
    ++e;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Approximate root finding (Aberth) and certified enclosures (Weierstrass).

std::vector<std::complex<double>> aberth_double(const std::vector<double>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<std::complex<double>> z(d);
  double bound = 1.0;
  for (int i = 0; i < d; ++i) bound = std::max(bound, std::abs(c[i]));
  bound += 1.0;
  for (int k = 0; k < d; ++k) {
    double ang = 2.0 * M_PI * k / d + 0.4;
    z[k] = std::polar(bound * (0.5 + 0.5 * (k % 2)), ang);
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> v = 0;
    for (int i = d; i >= 0; --i) v = v * x + c[i];
    return v;
  };
  auto evald = [&](std::complex<double> x) {
    std::complex<double> v = 0;
    for (int i = d; i >= 1; --i) v = v * x + c[i] * static_cast<double>(i);
    return v;
  };
  for (int iter = 0; iter < 400; ++iter) {
    double worst = 0;
    for (int i = 0; i < d; ++i) {
      std::complex<double> p = eval(z[i]);
      std::complex<double> pd = evald(z[i]);
      std::complex<double> n = (pd != 0.0) ? p / pd : std::complex<double>(1e-3, 1e-3);
      std::complex<double> s = 0;
      for (int j = 0; j < d; ++j)
        if (j != i && z[i] != z[j]) s += 1.0 / (z[i] - z[j]);
      std::complex<double> den = 1.0 - n * s;
      std::complex<double> w = (den != 0.0) ? n / den : n;
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[i])));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

std::vector<BallComplex> coeff_balls(const QPoly& p, Prec prec) {
  std::vector<BallComplex> c;
  c.reserve(p.size());
  for (const auto& q : p)
    c.push_back(BallComplex::from_real(BallReal::from_mpq(q, prec)));
  return c;
}

BallComplex eval_poly(const std::vector<BallComplex>& c, const BallComplex& z) {
  BallComplex v(z.prec());
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * z + c[i];
  return v;
}

// One Aberth sweep on point approximations; returns the largest correction
// exponent relative to the iterate magnitude (rough digits gained).
long aberth_sweep(const std::vector<BallComplex>& c, const std::vector<BallComplex>& cd,
                  std::vector<BallComplex>& z) {
  const int d = static_cast<int>(z.size());
  long worst = mpfr_get_emin();
  for (int i = 0; i < d; ++i) {
    try {
      BallComplex p = eval_poly(c, z[i]);
      BallComplex pd = eval_poly(cd, z[i]);
      BallComplex n = p / pd;
      BallComplex s(z[i].prec());
      for (int j = 0; j < d; ++j)
        if (j != i) s += BallComplex::from_si(1, 0, z[i].prec()) / (z[i] - z[j]);
      BallComplex one = BallComplex::from_si(1, 0, z[i].prec());
      BallComplex w = n / (one - n * s);
      z[i] = (z[i] - w).midpoint();
      double wa = w.abs().mid_d();
      double za = 1.0 + z[i].abs().mid_d();
      long e = (wa > 0) ? static_cast<long>(std::ilogb(wa / za)) : mpfr_get_emin();
      worst = std::max(worst, e);
    } catch (const DomainError&) {
      // coincident iterates or a zero derivative: nudge deterministically
      BallComplex nudge = BallComplex::from_si(i + 1, 2 * i + 1, z[i].prec());
      BallComplex scale = BallComplex::from_real(
          pow_si(BallReal::from_si(2, z[i].prec()), -static_cast<long>(z[i].prec()) / 2));
      z[i] = (z[i] + nudge * scale).midpoint();
      worst = std::max(worst, 0L);
    }
  }
  return worst;
}

struct CertRoot {
  BallComplex point;   // exact approximation
  BallReal radius;     // certified inclusion radius (exact upper bound)
  int multiplicity = 1;
  bool real_certified = false;
};

// Weierstrass inclusion disks: for monic squarefree F with approximations
// z_1..z_d, every root of F lies in the union of disks
// D(z_i, d * |F(z_i) / prod_{j != i} (z_i - z_j)|), and pairwise disjoint
// disks contain exactly one root each.
std::vector<BallReal> weierstrass_radii(const std::vector<BallComplex>& c,
                                        const std::vector<BallComplex>& z) {
  const int d = static_cast<int>(z.size());
  std::vector<BallReal> radii;
  radii.reserve(d);
  for (int i = 0; i < d; ++i) {
    BallComplex num = eval_poly(c, z[i]);
    BallComplex den = BallComplex::from_si(1, 0, z[i].prec());
    for (int j = 0; j < d; ++j)
      if (j != i) den = den * (z[i] - z[j]);
    BallReal w = (num.abs().upper() / den.abs().lower()) * BallReal::from_si(d, z[i].prec());
    radii.push_back(w.upper());
  }
  return radii;
}

bool disks_disjoint(const BallComplex& a, const BallReal& ra, const BallComplex& b,
                    const BallReal& rb) {
  BallReal dist = (a - b).abs().lower();
  return dist.certainly_gt((ra + rb).upper());
}

bool radius_small_enough(const BallReal& rad, const BallComplex& z, Prec bits) {
  mpfr_t thr;
  mpfr_init2(thr, 64);
  mpfr_hypot(thr, z.re.mid_raw(), z.im.mid_raw(), MPFR_RNDD);
  if (mpfr_cmp_ui(thr, 1) < 0) mpfr_set_ui(thr, 1, MPFR_RNDD);
  mpfr_mul_2si(thr, thr, -bits, MPFR_RNDD);
  bool ok = mpfr_less_p(rad.mid_raw(), thr);
  mpfr_clear(thr);
  return ok;
}

double approx_arg(const BallComplex& z) {
  if (z.is_real_exact()) return (mpfr_sgn(z.re.mid_raw()) < 0) ? M_PI : 0.0;
  return std::atan2(z.im.mid_d(), z.re.mid_d());
}

}  // namespace

bool RootSet::separable() const {
  return std::all_of(multiplicities.begin(), multiplicities.end(),
                     [](int m) { return m == 1; });
}

std::string to_string(MonotonicityClass m) {
  switch (m) {
    case MonotonicityClass::EventuallyIncreasing: return "EventuallyIncreasing";
    case MonotonicityClass::NegatedEventuallyIncreasing: return "NegatedEventuallyIncreasing";
    case MonotonicityClass::InfiniteSignChanges: return "InfiniteSignChanges";
    case MonotonicityClass::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Prec max_precision_cap() {
  static Prec cap = [] {
    if (const char* env = std::getenv("RECURZETA_MAX_PRECISION")) {
      long v = std::atol(env);
      if (v >= 64) return static_cast<Prec>(v);
    }
    return static_cast<Prec>(8192);
  }();
  return cap;
}

RootSet find_roots(const IntegerPolynomial& p, Prec precision_bits) {
  if (p.degree() < 1) throw ValidationError("find_roots requires degree >= 1");
  QPoly qp;
  for (const auto& c : p.coeffs) qp.emplace_back(c);
  auto factors = squarefree_decomposition(qp);

  // Approximate roots per squarefree factor, in double precision.
  struct FactorState {
    QPoly poly;
    int multiplicity;
    std::vector<BallComplex> z;
  };
  std::vector<FactorState> fs;
  for (auto& [f, e] : factors) {
    FactorState st;
    st.poly = f;
    st.multiplicity = e;
    fs.push_back(std::move(st));
  }

  const Prec cap = max_precision_cap();
  const Prec working_cap = 2 * cap + 128;
  Prec working = std::max<Prec>(precision_bits + 64, 128);

  while (true) {
    std::vector<CertRoot> all;
    bool ok = true;
    for (auto& st : fs) {
      const int deg = q_deg(st.poly);
      if (deg == 1) {
        // root = -c0 exactly
        mpq_class root = -st.poly[0] / st.poly[1];
        CertRoot cr;
        cr.point = BallComplex::from_real(BallReal::from_mpq(root, working));
        cr.radius = cr.point.re.rad_q() == 0 ? BallReal(working)
                                             : BallReal::from_mpq(cr.point.re.rad_q(), 64);
        cr.multiplicity = st.multiplicity;
        cr.real_certified = true;
        cr.point = BallComplex{cr.point.re, BallReal(working)};
        all.push_back(std::move(cr));
        continue;
      }
      auto cb = coeff_balls(st.poly, working);
      auto cbd = [&] {
        QPoly d = q_derivative(st.poly);
        return coeff_balls(d, working);
      }();
      if (st.z.empty() || static_cast<Prec>(st.z[0].prec()) != working) {
        // (re)seed iterates at the new precision
        std::vector<std::complex<double>> seed;
        std::vector<double> cd(st.poly.size());
        bool fits = true;
        for (size_t i = 0; i < st.poly.size(); ++i) {
          cd[i] = st.poly[i].get_d();
          if (!std::isfinite(cd[i])) fits = false;
        }
        std::vector<BallComplex> z;
        if (!st.z.empty()) {
          for (auto& old : st.z) {
            BallComplex nz(working);
            mpfr_set(nz.re.mid_raw(), old.re.mid_raw(), MPFR_RNDN);
            mpfr_set(nz.im.mid_raw(), old.im.mid_raw(), MPFR_RNDN);
            z.push_back(std::move(nz));
          }
        } else if (fits) {
          seed = aberth_double(cd);
          for (auto& s : seed) {
            BallComplex nz(working);
            mpfr_set_d(nz.re.mid_raw(), s.real(), MPFR_RNDN);
            mpfr_set_d(nz.im.mid_raw(), s.imag(), MPFR_RNDN);
            z.push_back(std::move(nz));
          }
        } else {
          for (int k = 0; k < deg; ++k) {
            double ang = 2.0 * M_PI * k / deg + 0.4;
            BallComplex nz(working);
            mpfr_set_d(nz.re.mid_raw(), 2.0 * std::cos(ang), MPFR_RNDN);
            mpfr_set_d(nz.im.mid_raw(), 2.0 * std::sin(ang), MPFR_RNDN);
            z.push_back(std::move(nz));
          }
        }
        st.z = std::move(z);
      }
      // Aberth sweeps until the corrections stall at the working precision.
      for (int sweep = 0; sweep < 500; ++sweep) {
        long gain = aberth_sweep(cb, cbd, st.z);
        if (gain < -(static_cast<long>(working) - 8)) break;
      }
      auto radii = weierstrass_radii(cb, st.z);
      for (int i = 0; i < deg; ++i) {
        CertRoot cr;
        cr.point = st.z[i];
        cr.radius = radii[i];
        cr.multiplicity = st.multiplicity;
        all.push_back(std::move(cr));
      }
    }

    // Global checks: pairwise disjoint disks, target radii met.
    const int n = static_cast<int>(all.size());
    for (int i = 0; ok && i < n; ++i) {
      if (!radius_small_enough(all[i].radius, all[i].point, precision_bits)) ok = false;
      for (int j = i + 1; ok && j < n; ++j)
        if (!disks_disjoint(all[i].point, all[i].radius, all[j].point, all[j].radius))
          ok = false;
    }
    // Realness: a root is real iff its conjugate disk meets only itself.
    if (ok) {
      for (int i = 0; ok && i < n; ++i) {
        if (all[i].real_certified) continue;
        BallComplex conj_pt = all[i].point.conj();
        int hits = 0, hit = -1;
        for (int j = 0; j < n; ++j) {
          if (!disks_disjoint(conj_pt, all[i].radius, all[j].point, all[j].radius)) {
            ++hits;
            hit = j;
          }
        }
        if (hits == 1 && hit == i)
          all[i].real_certified = true;
        else if (hits != 1)
          ok = false;  // ambiguous pairing; refine
      }
    }

    if (ok) {
      RootSet rs;
      rs.precision_bits = precision_bits;
      // Build final enclosures: disk -> rectangle; certified reals get an
      // exactly zero imaginary part.
      std::vector<std::pair<std::tuple<double, double, double, double>, int>> order;
      std::vector<BallComplex> enc;
      for (int i = 0; i < n; ++i) {
        const BallReal& r = all[i].radius;
        BallReal re = BallReal::with_radius(all[i].point.re, r);
        BallReal im = all[i].real_certified ? BallReal(working)
                                            : BallReal::with_radius(all[i].point.im, r);
        enc.push_back(BallComplex{re, im});
      }
      for (int i = 0; i < n; ++i) {
        double mod = enc[i].abs().mid_d();
        order.push_back({{-mod, approx_arg(enc[i]), enc[i].re.mid_d(), enc[i].im.mid_d()}, i});
      }
      std::sort(order.begin(), order.end());
      for (auto& [key, i] : order) {
        rs.roots.push_back(enc[i]);
        rs.multiplicities.push_back(all[i].multiplicity);
      }
      return rs;
    }
    if (working >= working_cap)
      throw PrecisionExhausted("root enclosures not separable at the precision cap");
    working *= 2;
  }
}

BinetData binet_coefficients(const RootSet& roots, const RecurrenceSpec& spec) {
  if (!roots.separable())
    throw RepeatedRoots("repeated roots: constant-coefficient Binet expansion undefined");
  for (const auto& z : roots.roots)
    if (z.contains_zero())
      throw IllConditioned("zero root: Binet system is singular");

  const int r = roots.count();
  const Prec prec = std::max<Prec>(roots.precision_bits + 64, 128);
  SequenceWindow w = generate_terms(spec, r);

  // rows n = 1..r:  sum_i alpha_i^n lambda_i = a_n
  std::vector<std::vector<BallComplex>> m(r, std::vector<BallComplex>());
  std::vector<BallComplex> rhs;
  for (int n = 0; n < r; ++n) {
    for (int i = 0; i < r; ++i) m[n].push_back(pow_si(roots.roots[i], n + 1));
    rhs.push_back(BallComplex::from_real(BallReal::from_mpz(w.terms[n], prec)));
  }
  // Gaussian elimination, pivot by largest midpoint magnitude.
  std::vector<int> perm(r);
  for (int i = 0; i < r; ++i) perm[i] = i;
  try {
    for (int col = 0; col < r; ++col) {
      int piv = col;
      double best = -1;
      for (int i = col; i < r; ++i) {
        double mag = std::abs(m[i][col].re.mid_d()) + std::abs(m[i][col].im.mid_d());
        if (mag > best) {
          best = mag;
          piv = i;
        }
      }
      std::swap(m[piv], m[col]);
      std::swap(rhs[piv], rhs[col]);
      for (int i = col + 1; i < r; ++i) {
        BallComplex f = m[i][col] / m[col][col];
        for (int j = col; j < r; ++j) m[i][j] = m[i][j] - f * m[col][j];
        rhs[i] = rhs[i] - f * rhs[col];
      }
    }
    BinetData out;
    out.lambdas.assign(r, BallComplex(prec));
    for (int i = r - 1; i >= 0; --i) {
      BallComplex v = rhs[i];
      for (int j = i + 1; j < r; ++j) v = v - m[i][j] * out.lambdas[j];
      out.lambdas[i] = v / m[i][i];
    }
    return out;
  } catch (const DomainError&) {
    throw IllConditioned("Binet system pivot enclosure contains zero");
  }
}

namespace {

struct ShiftResult {
  long n0 = 0;
  BallReal q1;
};

// q_n = sum_{i>=2} |lambda_i alpha_i^n| / (lambda_1 alpha_1^n)
BallReal q_at(const RootSet& roots, const BinetData& binet, long n) {
  const Prec prec = std::max<Prec>(roots.precision_bits + 64, 128);
  const int r = roots.count();
  BallReal num(prec);
  for (int i = 1; i < r; ++i)
    num += binet.lambdas[i].abs() * pow_si(roots.roots[i].abs(), n);
  BallReal den = binet.lambdas[0].re * pow_si(roots.roots[0].re, n);
  if (r == 1) return BallReal(prec);  // exact 0
  return num / den;
}

ShiftResult compute_shift(const RecurrenceSpec& spec, const RootSet& roots,
                          const BinetData& binet, long min_shift) {
  const Prec prec = std::max<Prec>(roots.precision_bits + 64, 128);
  const int r = roots.count();
  const BallReal one = BallReal::from_si(1, prec);

  long n_q = 0;
  long n_star = 1;
  if (r > 1) {
    // M = max_{i>=2} |alpha_i - 1| (upper bound)
    BallReal big_m(prec);
    for (int i = 1; i < r; ++i) {
      BallComplex d = roots.roots[i] - BallComplex::from_si(1, 0, prec);
      big_m = max_upper(big_m, d.abs());
    }
    BallReal a1m1 = roots.roots[0].re - one;

    // advance q_n incrementally
    std::vector<BallReal> num_terms;
    for (int i = 1; i < r; ++i)
      num_terms.push_back(binet.lambdas[i].abs() * roots.roots[i].abs());
    BallReal den = binet.lambdas[0].re * roots.roots[0].re;

    const long iter_cap = 100000;
    long n = 1;
    bool found_q = false, found_star = false;
    while (n <= iter_cap && !(found_q && found_star)) {
      BallReal q(prec);
      for (auto& t : num_terms) q += t;
      q = q / den;
      if (!found_q && q.certainly_lt(one)) {
        n_q = n - 1;  // q_{n} < 1  =>  shift n-1 suffices for the q condition
        found_q = true;
      }
      if (found_q && !found_star && (q * big_m).certainly_lt(a1m1)) {
        n_star = n;
        found_star = true;
      }
      for (size_t i = 0; i < num_terms.size(); ++i)
        num_terms[i] = num_terms[i] * roots.roots[i + 1].abs();
      den = den * roots.roots[0].re;
      ++n;
    }
    if (!(found_q && found_star))
      throw PrecisionExhausted("shift search did not certify the q-ratio conditions");
  }

  // Exact term scan: last violation of (a_n >= 1 and a_{n+1} > a_n) in [1, N*].
  SequenceWindow w = generate_terms(spec, n_star + 1);
  long n_terms = 0;
  for (long n = 1; n <= n_star; ++n) {
    const mpz_class& an = w.terms[n - 1];
    const mpz_class& an1 = w.terms[n];
    if (an < 1 || an1 <= an) n_terms = n;
  }
  ShiftResult sr;
  sr.n0 = std::max({n_q, n_terms, min_shift});
  sr.q1 = q_at(roots, binet, sr.n0 + 1);
  if (r > 1 && !sr.q1.certainly_lt(one))
    throw PrecisionExhausted("q-ratio at the chosen shift not certified < 1");
  return sr;
}

}  // namespace

DominanceReport check_hypotheses(const RootSet& roots, const BinetData& binet,
                                 const RecurrenceSpec* spec) {
  DominanceReport rep;
  const int r = roots.count();
  const Prec prec = std::max<Prec>(roots.precision_bits, 128);
  const BallReal one = BallReal::from_si(1, prec);
  rep.separable = roots.separable();

  const BallComplex& a1 = roots.roots[0];
  rep.dominant_is_real = a1.is_real_exact();
  rep.dominant_gt_one = rep.dominant_is_real && a1.re.certainly_gt(one);

  bool strict_gap = true;
  for (int i = 1; i < r; ++i)
    if (!a1.abs().certainly_gt(roots.roots[i].abs())) strict_gap = false;
  rep.dominant_simple = roots.multiplicities[0] == 1 && strict_gap;

  bool lambda1_real = rep.dominant_is_real &&
                      static_cast<int>(binet.lambdas.size()) == r &&
                      binet.lambdas[0].im.contains_zero();
  BallReal l1 = lambda1_real ? binet.lambdas[0].re : BallReal(prec);
  rep.lambda1_positive = lambda1_real && l1.is_positive();

  // display fields
  BallReal prod = one;
  for (int i = 0; i < r; ++i) prod = prod * roots.roots[i].abs();
  rep.norm_abs = prod.mid_d();
  if (r >= 2 && !roots.roots[1].is_real_exact())
    rep.theta = approx_arg(roots.roots[1]);

  if (!rep.dominant_simple || !rep.dominant_is_real) {
    rep.monotonicity_class = MonotonicityClass::Inconclusive;
    rep.diagnosis = !strict_gap ? "no strictly dominant root"
                                : (!rep.dominant_is_real ? "dominant root is not real"
                                                         : "dominant root is not simple");
    return rep;
  }
  if (rep.dominant_gt_one) {
    if (rep.lambda1_positive) {
      rep.monotonicity_class = MonotonicityClass::EventuallyIncreasing;
      rep.sigma_c = 0.0;
      if (spec != nullptr) {
        ShiftResult sr = compute_shift(*spec, roots, binet, 0);
        rep.q_ratio_at_shift = sr.q1.mid_d();
      }
    } else if (lambda1_real && l1.is_negative()) {
      rep.monotonicity_class = MonotonicityClass::NegatedEventuallyIncreasing;
      rep.diagnosis = "leading Binet coefficient is negative";
    } else {
      rep.monotonicity_class = MonotonicityClass::Inconclusive;
      rep.diagnosis = "sign of the leading Binet coefficient not certified";
    }
    return rep;
  }
  // dominant real, simple, strictly dominant, but not > 1
  BallReal minus_one = BallReal::from_si(-1, prec);
  if (a1.re.certainly_lt(minus_one)) {
    if (lambda1_real && !l1.contains_zero()) {
      rep.monotonicity_class = MonotonicityClass::InfiniteSignChanges;
      rep.diagnosis = "dominant root below -1: terms change sign infinitely often";
    } else {
      rep.monotonicity_class = MonotonicityClass::Inconclusive;
      rep.diagnosis = "dominant Binet coefficient not certified nonzero";
    }
  } else {
    rep.monotonicity_class = MonotonicityClass::Inconclusive;
    rep.diagnosis = "dominant root modulus not certified greater than 1";
  }
  return rep;
}

NormalizedSequence normalize_shift(const RecurrenceSpec& spec, const RootSet& roots,
                                   const BinetData& binet, long min_shift) {
  DominanceReport rep = check_hypotheses(roots, binet, nullptr);
  if (rep.monotonicity_class != MonotonicityClass::EventuallyIncreasing)
    throw HypothesesNotMet(rep.diagnosis.empty() ? to_string(rep.monotonicity_class)
                                                 : rep.diagnosis);
  ShiftResult sr = compute_shift(spec, roots, binet, min_shift);
  NormalizedSequence ns;
  ns.spec = spec;
  ns.min_poly = minimal_polynomial(spec);
  ns.shift_n0 = sr.n0;
  if (sr.n0 > 0) {
    SequenceWindow w = generate_terms(spec, sr.n0);
    ns.prefix = w.terms;
  }
  ns.roots = roots;
  ns.binet = binet;
  for (int i = 0; i < roots.count(); ++i)
    ns.shifted.lambdas.push_back(binet.lambdas[i] * pow_si(roots.roots[i], sr.n0));
  ns.q1 = sr.q1;
  ns.precision_bits = roots.precision_bits;
  return ns;
}

SpectralData analyze_spectrum(const RecurrenceSpec& spec, Prec precision_bits) {
  IntegerPolynomial p = minimal_polynomial(spec);
  const Prec cap = max_precision_cap();
  Prec bits = std::max<Prec>(precision_bits, 64);

  SpectralData sd;
  sd.min_poly = p;
  if (p.coeffs[0] == 0 && p.degree() >= 1) {
    // zero root: the constant-coefficient Binet basis cannot represent the
    // sequence, so the continuation hypotheses fail outright
    sd.roots = find_roots(p, bits);
    sd.report.separable = sd.roots.separable();
    sd.report.monotonicity_class = MonotonicityClass::Inconclusive;
    sd.report.diagnosis = "zero is a root of the minimal polynomial";
    return sd;
  }

  while (true) {
    sd.roots = find_roots(p, bits);
    bool binet_ok = true;
    try {
      sd.binet = binet_coefficients(sd.roots, spec);
    } catch (const IllConditioned&) {
      binet_ok = false;
      if (bits >= cap) throw;
    }
    if (binet_ok) {
      sd.report = check_hypotheses(sd.roots, sd.binet, &spec);
      if (sd.report.monotonicity_class != MonotonicityClass::Inconclusive || bits >= cap)
        return sd;
    }
    bits = std::min<Prec>(bits * 2, cap);
  }
}

NormalizedSequence normalize(const RecurrenceSpec& spec, Prec precision_bits,
                             long min_shift) {
  const Prec cap = max_precision_cap();
  Prec bits = std::max<Prec>(precision_bits, 64);
  while (true) {
    SpectralData sd = analyze_spectrum(spec, bits);
    if (sd.report.monotonicity_class != MonotonicityClass::EventuallyIncreasing)
      throw HypothesesNotMet(sd.report.diagnosis.empty()
                                 ? to_string(sd.report.monotonicity_class)
                                 : sd.report.diagnosis);
    try {
      NormalizedSequence ns = normalize_shift(spec, sd.roots, sd.binet, min_shift);
      ns.min_poly = sd.min_poly;
      return ns;
    } catch (const PrecisionExhausted&) {
      if (bits >= cap) throw;
      bits = std::min<Prec>(bits * 2, cap);
    }
  }
}

}  // namespace recurzeta

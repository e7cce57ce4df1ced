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

#include "recurzeta/ball.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "recurzeta/errors.hpp"

namespace recurzeta {

namespace {

constexpr Prec kRadiusPrec = 32;
constexpr Prec kDefaultPrec = 128;

// Adds an upper bound for the midpoint rounding error of the last RNDN
// operation (ternary value t) to rad. One full ulp of `mid` is added, which
// safely covers the <= 0.5 ulp round-to-nearest error.
void add_round_err(mpfr_ptr rad, mpfr_srcptr mid, int t) {
  if (t == 0) return;
  mpfr_t u;
  mpfr_init2(u, kRadiusPrec);
  if (mpfr_zero_p(mid) || !mpfr_number_p(mid)) {
    // Result underflowed to zero (or worse). Use the smallest representable
    // magnitude as a crude but valid bound.
    mpfr_set_ui_2exp(u, 1, mpfr_get_emin(), MPFR_RNDU);
  } else {
    mpfr_exp_t e = mpfr_get_exp(mid);
    mpfr_set_ui_2exp(u, 1, e - mpfr_get_prec(mid), MPFR_RNDU);
  }
  mpfr_add(rad, rad, u, MPFR_RNDU);
  mpfr_clear(u);
}

void check_finite(mpfr_srcptr x) {
  if (!mpfr_number_p(x)) throw DomainError("non-finite value in ball arithmetic");
}

}  // namespace

BallReal::BallReal() : BallReal(kDefaultPrec) {}

BallReal::BallReal(Prec prec) {
  mpfr_init2(mid_, std::max<Prec>(prec, MPFR_PREC_MIN));
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_set_ui(mid_, 0, MPFR_RNDN);
  mpfr_set_ui(rad_, 0, MPFR_RNDU);
}

BallReal::BallReal(const BallReal& o) {
  mpfr_init2(mid_, mpfr_get_prec(o.mid_));
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

BallReal::BallReal(BallReal&& o) noexcept {
  mpfr_init2(mid_, MPFR_PREC_MIN);
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
}

BallReal& BallReal::operator=(const BallReal& o) {
  if (this != &o) {
    mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
  }
  return *this;
}

BallReal& BallReal::operator=(BallReal&& o) noexcept {
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
  return *this;
}

BallReal::~BallReal() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

BallReal BallReal::from_si(long v, Prec prec) {
  BallReal r(prec);
  int t = mpfr_set_si(r.mid_, v, MPFR_RNDN);
  add_round_err(r.rad_, r.mid_, t);
  return r;
}

BallReal BallReal::from_mpz(const mpz_class& v, Prec prec) {
  BallReal r(prec);
  int t = mpfr_set_z(r.mid_, v.get_mpz_t(), MPFR_RNDN);
  add_round_err(r.rad_, r.mid_, t);
  return r;
}

BallReal BallReal::from_mpq(const mpq_class& v, Prec prec) {
  BallReal r(prec);
  int t = mpfr_set_q(r.mid_, v.get_mpq_t(), MPFR_RNDN);
  add_round_err(r.rad_, r.mid_, t);
  return r;
}

BallReal BallReal::pi(Prec prec) {
  BallReal r(prec);
  int t = mpfr_const_pi(r.mid_, MPFR_RNDN);
  add_round_err(r.rad_, r.mid_, t);
  return r;
}

BallReal BallReal::with_radius(const BallReal& mid, const BallReal& extra) {
  if (mpfr_sgn(extra.mid_) < 0) throw DomainError("negative radius");
  BallReal r(mid);
  mpfr_t e;
  mpfr_init2(e, kRadiusPrec);
  // upper bound of extra = mid + rad
  mpfr_add(e, extra.mid_, extra.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, e, MPFR_RNDU);
  mpfr_clear(e);
  return r;
}

BallReal BallReal::from_interval(const BallReal& lo, const BallReal& hi, Prec prec) {
  mpfr_t l, h;
  mpfr_init2(l, prec);
  mpfr_init2(h, prec);
  mpfr_sub(l, lo.mid_, lo.rad_, MPFR_RNDD);
  mpfr_add(h, hi.mid_, hi.rad_, MPFR_RNDU);
  if (mpfr_greater_p(l, h)) mpfr_swap(l, h);
  BallReal r(prec);
  int t = mpfr_add(r.mid_, l, h, MPFR_RNDN);
  t = mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN) || t;
  // rad = max(h - mid, mid - l) rounded up, plus midpoint rounding slack
  mpfr_t d1, d2;
  mpfr_init2(d1, kRadiusPrec);
  mpfr_init2(d2, kRadiusPrec);
  mpfr_sub(d1, h, r.mid_, MPFR_RNDU);
  mpfr_sub(d2, r.mid_, l, MPFR_RNDU);
  mpfr_max(r.rad_, d1, d2, MPFR_RNDU);
  if (mpfr_sgn(r.rad_) < 0) mpfr_set_ui(r.rad_, 0, MPFR_RNDU);
  add_round_err(r.rad_, r.mid_, t);
  mpfr_clears(l, h, d1, d2, nullptr);
  return r;
}

BallReal BallReal::midpoint() const {
  BallReal r(*this);
  mpfr_set_ui(r.rad_, 0, MPFR_RNDU);
  return r;
}

bool BallReal::contains_zero() const {
  mpfr_t a;
  mpfr_init2(a, kRadiusPrec);
  mpfr_abs(a, mid_, MPFR_RNDD);  // lower bound of |mid|
  bool r = mpfr_lessequal_p(a, rad_);
  mpfr_clear(a);
  return r;
}

bool BallReal::is_positive() const {
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(mid_));
  mpfr_sub(t, mid_, rad_, MPFR_RNDD);
  bool r = mpfr_sgn(t) > 0;
  mpfr_clear(t);
  return r;
}

bool BallReal::is_negative() const {
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(mid_));
  mpfr_add(t, mid_, rad_, MPFR_RNDU);
  bool r = mpfr_sgn(t) < 0;
  mpfr_clear(t);
  return r;
}

bool BallReal::contains(const mpq_class& v) const {
  auto [lo, hi] = interval_q();
  return cmp(lo, v) <= 0 && cmp(v, hi) <= 0;
}

bool BallReal::certainly_lt(const BallReal& o) const {
  mpfr_t a, b;
  mpfr_init2(a, mpfr_get_prec(mid_));
  mpfr_init2(b, mpfr_get_prec(o.mid_));
  mpfr_add(a, mid_, rad_, MPFR_RNDU);
  mpfr_sub(b, o.mid_, o.rad_, MPFR_RNDD);
  bool r = mpfr_less_p(a, b);
  mpfr_clears(a, b, nullptr);
  return r;
}

bool BallReal::certainly_gt(const BallReal& o) const { return o.certainly_lt(*this); }

bool BallReal::overlaps(const BallReal& o) const {
  return !certainly_lt(o) && !certainly_gt(o);
}

BallReal BallReal::upper() const {
  BallReal r(prec());
  mpfr_add(r.mid_, mid_, rad_, MPFR_RNDU);
  return r;
}

BallReal BallReal::lower() const {
  BallReal r(prec());
  mpfr_sub(r.mid_, mid_, rad_, MPFR_RNDD);
  return r;
}

BallReal BallReal::abs_upper() const {
  BallReal r(prec());
  mpfr_abs(r.mid_, mid_, MPFR_RNDU);
  mpfr_add(r.mid_, r.mid_, rad_, MPFR_RNDU);
  return r;
}

BallReal BallReal::abs_lower() const {
  BallReal r(prec());
  mpfr_abs(r.mid_, mid_, MPFR_RNDD);
  mpfr_sub(r.mid_, r.mid_, rad_, MPFR_RNDD);
  if (mpfr_sgn(r.mid_) < 0) mpfr_set_ui(r.mid_, 0, MPFR_RNDN);
  return r;
}

double BallReal::mid_d() const { return mpfr_get_d(mid_, MPFR_RNDN); }
double BallReal::rad_d() const { return mpfr_get_d(rad_, MPFR_RNDU); }

mpq_class BallReal::mid_q() const {
  if (!mpfr_number_p(mid_)) throw DomainError("non-finite midpoint");
  if (mpfr_zero_p(mid_)) return mpq_class(0);
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), mid_);
  return q;
}

mpq_class BallReal::rad_q() const {
  if (mpfr_zero_p(rad_)) return mpq_class(0);
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), rad_);
  return q;
}

std::pair<mpq_class, mpq_class> BallReal::interval_q() const {
  mpq_class m = mid_q(), r = rad_q();
  return {m - r, m + r};
}

bool BallReal::round_to_integer(mpz_class& out) const {
  auto [lo, hi] = interval_q();
  // unique integer in [lo, hi] iff ceil(lo) == floor(hi)
  mpz_class zlo, zhi;
  mpz_cdiv_q(zlo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  mpz_fdiv_q(zhi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
  if (zlo != zhi) return false;
  out = zlo;
  return true;
}

std::string BallReal::mid_str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", digits, mid_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string BallReal::rad_str() const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.3Re", rad_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

BallReal BallReal::operator-() const {
  BallReal r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);  // exact
  return r;
}

BallReal operator+(const BallReal& a, const BallReal& b) {
  BallReal r(std::max(a.prec(), b.prec()));
  int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  add_round_err(r.rad_, r.mid_, t);
  check_finite(r.mid_);
  return r;
}

BallReal operator-(const BallReal& a, const BallReal& b) {
  BallReal r(std::max(a.prec(), b.prec()));
  int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  add_round_err(r.rad_, r.mid_, t);
  check_finite(r.mid_);
  return r;
}

BallReal operator*(const BallReal& a, const BallReal& b) {
  BallReal r(std::max(a.prec(), b.prec()));
  int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  // rad = |a|*rb + |b|*ra + ra*rb
  mpfr_t am, bm, u;
  mpfr_init2(am, kRadiusPrec);
  mpfr_init2(bm, kRadiusPrec);
  mpfr_init2(u, kRadiusPrec);
  mpfr_abs(am, a.mid_, MPFR_RNDU);
  mpfr_abs(bm, b.mid_, MPFR_RNDU);
  mpfr_mul(u, am, b.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, u, MPFR_RNDU);
  mpfr_mul(u, bm, a.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, u, MPFR_RNDU);
  mpfr_mul(u, a.rad_, b.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, u, MPFR_RNDU);
  add_round_err(r.rad_, r.mid_, t);
  mpfr_clears(am, bm, u, nullptr);
  check_finite(r.mid_);
  return r;
}

BallReal operator/(const BallReal& a, const BallReal& b) {
  // |x/y - am/bm| <= (|am|*rb + |bm|*ra) / (|bm| * (|bm| - rb))
  mpfr_t bl;
  mpfr_init2(bl, kRadiusPrec);
  mpfr_abs(bl, b.mid_, MPFR_RNDD);
  mpfr_sub(bl, bl, b.rad_, MPFR_RNDD);
  if (mpfr_sgn(bl) <= 0) {
    mpfr_clear(bl);
    throw DomainError("division by an interval containing zero");
  }
  BallReal r(std::max(a.prec(), b.prec()));
  int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_t am, bm, num, den;
  mpfr_init2(am, kRadiusPrec);
  mpfr_init2(bm, kRadiusPrec);
  mpfr_init2(num, kRadiusPrec);
  mpfr_init2(den, kRadiusPrec);
  mpfr_abs(am, a.mid_, MPFR_RNDU);
  mpfr_abs(bm, b.mid_, MPFR_RNDU);
  mpfr_mul(num, am, b.rad_, MPFR_RNDU);
  mpfr_mul(am, bm, a.rad_, MPFR_RNDU);
  mpfr_add(num, num, am, MPFR_RNDU);
  mpfr_abs(bm, b.mid_, MPFR_RNDD);
  mpfr_mul(den, bm, bl, MPFR_RNDD);
  mpfr_div(num, num, den, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, num, MPFR_RNDU);
  add_round_err(r.rad_, r.mid_, t);
  mpfr_clears(bl, am, bm, num, den, nullptr);
  check_finite(r.mid_);
  return r;
}

BallReal& BallReal::operator+=(const BallReal& o) { return *this = *this + o; }
BallReal& BallReal::operator-=(const BallReal& o) { return *this = *this - o; }
BallReal& BallReal::operator*=(const BallReal& o) { return *this = *this * o; }

BallReal abs(const BallReal& a) {
  BallReal r(a);
  mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);  // exact
  return r;
}

BallReal sqrt(const BallReal& a) {
  Prec p = a.prec();
  mpfr_t lo, hi;
  mpfr_init2(lo, p);
  mpfr_init2(hi, p);
  mpfr_sub(lo, a.mid_, a.rad_, MPFR_RNDD);
  mpfr_add(hi, a.mid_, a.rad_, MPFR_RNDU);
  if (mpfr_sgn(hi) < 0) {
    mpfr_clears(lo, hi, nullptr);
    throw DomainError("sqrt of a negative interval");
  }
  // Clamp tiny negative lower ends (e.g. |z|^2 of an enclosure around 0).
  if (mpfr_sgn(lo) < 0) mpfr_set_ui(lo, 0, MPFR_RNDN);
  mpfr_sqrt(lo, lo, MPFR_RNDD);
  mpfr_sqrt(hi, hi, MPFR_RNDU);
  BallReal l(p), h(p);
  mpfr_set(l.mid_raw(), lo, MPFR_RNDN);
  mpfr_set(h.mid_raw(), hi, MPFR_RNDN);
  mpfr_clears(lo, hi, nullptr);
  return BallReal::from_interval(l, h, p);
}

BallReal exp(const BallReal& a) {
  Prec p = a.prec();
  mpfr_t lo, hi;
  mpfr_init2(lo, p);
  mpfr_init2(hi, p);
  mpfr_sub(lo, a.mid_, a.rad_, MPFR_RNDD);
  mpfr_add(hi, a.mid_, a.rad_, MPFR_RNDU);
  mpfr_exp(lo, lo, MPFR_RNDD);
  mpfr_exp(hi, hi, MPFR_RNDU);
  check_finite(hi);
  BallReal l(p), h(p);
  mpfr_set(l.mid_raw(), lo, MPFR_RNDN);
  mpfr_set(h.mid_raw(), hi, MPFR_RNDN);
  mpfr_clears(lo, hi, nullptr);
  return BallReal::from_interval(l, h, p);
}

BallReal log(const BallReal& a) {
  Prec p = a.prec();
  mpfr_t lo, hi;
  mpfr_init2(lo, p);
  mpfr_init2(hi, p);
  mpfr_sub(lo, a.mid_, a.rad_, MPFR_RNDD);
  mpfr_add(hi, a.mid_, a.rad_, MPFR_RNDU);
  if (mpfr_sgn(lo) <= 0) {
    mpfr_clears(lo, hi, nullptr);
    throw DomainError("log of an interval touching (-inf, 0]");
  }
  mpfr_log(lo, lo, MPFR_RNDD);
  mpfr_log(hi, hi, MPFR_RNDU);
  BallReal l(p), h(p);
  mpfr_set(l.mid_raw(), lo, MPFR_RNDN);
  mpfr_set(h.mid_raw(), hi, MPFR_RNDN);
  mpfr_clears(lo, hi, nullptr);
  return BallReal::from_interval(l, h, p);
}

BallReal sin(const BallReal& a) {
  // |sin x - sin m| <= |x - m|, so the radius transfers unchanged.
  BallReal r(a.prec());
  int t = mpfr_sin(r.mid_raw(), a.mid_, MPFR_RNDN);
  mpfr_set(r.rad_raw(), a.rad_, MPFR_RNDU);
  add_round_err(r.rad_raw(), r.mid_raw(), t);
  return r;
}

BallReal cos(const BallReal& a) {
  BallReal r(a.prec());
  int t = mpfr_cos(r.mid_raw(), a.mid_, MPFR_RNDN);
  mpfr_set(r.rad_raw(), a.rad_, MPFR_RNDU);
  add_round_err(r.rad_raw(), r.mid_raw(), t);
  return r;
}

BallReal pow_si(const BallReal& a, long e) {
  if (e == 0) return BallReal::from_si(1, a.prec());
  bool inv = e < 0;
  unsigned long n = inv ? static_cast<unsigned long>(-(e + 1)) + 1ul
                        : static_cast<unsigned long>(e);
  BallReal acc = BallReal::from_si(1, a.prec());
  BallReal base = a;
  while (n > 0) {
    if (n & 1ul) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  if (inv) return BallReal::from_si(1, a.prec()) / acc;
  return acc;
}

BallReal atan2_ball(const BallReal& y, const BallReal& x) {
  Prec p = std::max(x.prec(), y.prec());
  // Exact-real special cases keep negative reals on the principal branch.
  if (y.exact() && y.contains_zero()) {
    if (x.is_positive()) return BallReal(p);  // exact 0
    if (x.is_negative()) return BallReal::pi(p);
    throw DomainError("arg of an interval containing zero");
  }
  if (x.contains_zero() && y.contains_zero())
    throw DomainError("arg of an interval containing zero");
  if (x.is_negative() && y.contains_zero())
    throw DomainError("arg across the branch cut");
  // Smooth region. |grad arg| = 1/|z|; bound the perturbation by
  // (rx + ry) / max(0, |z_mid| - rx - ry).
  BallReal r(p);
  int t = mpfr_atan2(r.mid_raw(), y.mid_raw(), x.mid_raw(), MPFR_RNDN);
  mpfr_t h, dr, lowm;
  mpfr_init2(h, kRadiusPrec);
  mpfr_init2(dr, kRadiusPrec);
  mpfr_init2(lowm, p);
  // |z_mid| lower bound via hypot rounded down
  mpfr_hypot(lowm, x.mid_raw(), y.mid_raw(), MPFR_RNDD);
  mpfr_add(dr, x.rad_raw(), y.rad_raw(), MPFR_RNDU);
  mpfr_sub(lowm, lowm, dr, MPFR_RNDD);
  if (mpfr_sgn(lowm) <= 0) {
    mpfr_clears(h, dr, lowm, nullptr);
    throw DomainError("arg of an interval containing zero");
  }
  mpfr_div(h, dr, lowm, MPFR_RNDU);
  // asin(t) <= t * pi/2 on [0,1]; use factor 2 as a simple safe bound
  mpfr_mul_ui(h, h, 2, MPFR_RNDU);
  mpfr_add(r.rad_raw(), r.rad_raw(), h, MPFR_RNDU);
  add_round_err(r.rad_raw(), r.mid_raw(), t);
  mpfr_clears(h, dr, lowm, nullptr);
  return r;
}

BallReal ball_union(const BallReal& a, const BallReal& b) {
  Prec p = std::max(a.prec(), b.prec());
  BallReal lo(p), hi(p);
  mpfr_t t1, t2;
  mpfr_init2(t1, p);
  mpfr_init2(t2, p);
  mpfr_sub(t1, a.mid_, a.rad_, MPFR_RNDD);
  mpfr_sub(t2, b.mid_, b.rad_, MPFR_RNDD);
  mpfr_min(lo.mid_, t1, t2, MPFR_RNDD);
  mpfr_add(t1, a.mid_, a.rad_, MPFR_RNDU);
  mpfr_add(t2, b.mid_, b.rad_, MPFR_RNDU);
  mpfr_max(hi.mid_, t1, t2, MPFR_RNDU);
  mpfr_clears(t1, t2, nullptr);
  return BallReal::from_interval(lo, hi, p);
}

BallReal max_upper(const BallReal& a, const BallReal& b) {
  return a.upper().certainly_lt(b.upper()) ? b.upper() : a.upper();
}

// ---------------------------------------------------------------------------
// BallComplex

BallComplex BallComplex::from_real(const BallReal& r) {
  return {r, BallReal(r.prec())};
}

BallComplex BallComplex::from_si(long r, long i, Prec prec) {
  return {BallReal::from_si(r, prec), BallReal::from_si(i, prec)};
}

BallComplex BallComplex::conj() const { return {re, -im}; }
BallComplex BallComplex::operator-() const { return {-re, -im}; }

BallComplex operator+(const BallComplex& a, const BallComplex& b) {
  return {a.re + b.re, a.im + b.im};
}
BallComplex operator-(const BallComplex& a, const BallComplex& b) {
  return {a.re - b.re, a.im - b.im};
}
BallComplex operator*(const BallComplex& a, const BallComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
BallComplex operator/(const BallComplex& a, const BallComplex& b) {
  BallReal n = b.re * b.re + b.im * b.im;
  BallComplex num = a * b.conj();
  return {num.re / n, num.im / n};
}
BallComplex& BallComplex::operator+=(const BallComplex& o) { return *this = *this + o; }
BallComplex& BallComplex::operator*=(const BallComplex& o) { return *this = *this * o; }

BallReal BallComplex::abs() const { return sqrt(re * re + im * im); }

BallReal BallComplex::disk_radius() const {
  BallReal r(re.prec());
  mpfr_add(r.mid_raw(), re.rad_raw(), im.rad_raw(), MPFR_RNDU);
  return r;
}

bool BallComplex::certainly_disjoint(const BallComplex& o) const {
  // Disjoint if midpoint distance certifiably exceeds the sum of the
  // rectangle-covering disk radii.
  BallComplex d{re.midpoint() - o.re.midpoint(), im.midpoint() - o.im.midpoint()};
  BallReal dist = d.abs().lower();
  BallReal rr = disk_radius() + o.disk_radius();
  return dist.certainly_gt(rr.upper());
}

bool BallComplex::overlaps(const BallComplex& o) const {
  return re.overlaps(o.re) && im.overlaps(o.im);
}

bool BallComplex::contains_point_q(const mpq_class& x, const mpq_class& y) const {
  return re.contains(x) && im.contains(y);
}

BallComplex pow_si(const BallComplex& z, long e) {
  Prec p = z.prec();
  if (e == 0) return BallComplex::from_si(1, 0, p);
  bool inv = e < 0;
  unsigned long n = inv ? static_cast<unsigned long>(-(e + 1)) + 1ul
                        : static_cast<unsigned long>(e);
  BallComplex acc = BallComplex::from_si(1, 0, p);
  BallComplex base = z;
  while (n > 0) {
    if (n & 1ul) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  if (inv) return BallComplex::from_si(1, 0, p) / acc;
  return acc;
}

BallComplex cexp(const BallComplex& z) {
  BallReal m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

BallComplex cpow(const BallReal& base, const BallComplex& expo) {
  if (!base.is_positive()) throw DomainError("cpow requires a certified positive base");
  BallReal lg = log(base);
  return cexp({expo.re * lg, expo.im * lg});
}

BallReal carg(const BallComplex& z) { return atan2_ball(z.im, z.re); }

BallReal distance_upper(const BallComplex& a, const BallComplex& b) {
  BallComplex d = a - b;
  return d.abs().upper() + (a.disk_radius() + b.disk_radius()).upper();
}

}  // namespace recurzeta

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

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace recurzeta {

using Prec = mpfr_prec_t;

/// Certified real enclosure: an MPFR midpoint at working precision plus a
/// nonnegative error radius kept at a small fixed precision with upward
/// rounding. Every operation returns a ball that contains the exact result
/// for all inputs inside the operand balls (midpoint rounding included).
class BallReal {
 public:
  BallReal();                    // exact 0 at default precision
  explicit BallReal(Prec prec);  // exact 0
  BallReal(const BallReal& o);
  BallReal(BallReal&& o) noexcept;
  BallReal& operator=(const BallReal& o);
  BallReal& operator=(BallReal&& o) noexcept;
  ~BallReal();

  static BallReal from_si(long v, Prec prec);
  static BallReal from_mpz(const mpz_class& v, Prec prec);
  static BallReal from_mpq(const mpq_class& v, Prec prec);
  static BallReal pi(Prec prec);
  /// Ball centered at `mid`'s midpoint whose radius additionally covers
  /// mid's own radius plus `extra` (an upper bound, must be >= 0).
  static BallReal with_radius(const BallReal& mid, const BallReal& extra);
  /// Enclosure of the interval [lo.lower(), hi.upper()].
  static BallReal from_interval(const BallReal& lo, const BallReal& hi, Prec prec);

  Prec prec() const { return mpfr_get_prec(mid_); }
  bool exact() const { return mpfr_zero_p(rad_); }

  /// Exact point ball at this ball's midpoint. Discards the radius; used by
  /// approximation loops (root iteration), never as an enclosure.
  BallReal midpoint() const;

  bool contains_zero() const;
  bool is_positive() const;  // certified: mid - rad > 0
  bool is_negative() const;  // certified: mid + rad < 0
  bool contains(const mpq_class& v) const;
  bool certainly_lt(const BallReal& o) const;
  bool certainly_gt(const BallReal& o) const;
  bool overlaps(const BallReal& o) const;

  /// Exact point balls bounding this enclosure from above/below.
  BallReal upper() const;
  BallReal lower() const;
  BallReal abs_upper() const;
  BallReal abs_lower() const;  // max(0, |mid| - rad)

  double mid_d() const;
  double rad_d() const;  // rounded up
  mpq_class mid_q() const;
  mpq_class rad_q() const;
  std::pair<mpq_class, mpq_class> interval_q() const;  // exact [lo, hi]

  /// If the enclosure pins a unique integer (radius < 1/2 around it),
  /// store it and return true.
  bool round_to_integer(mpz_class& out) const;

  std::string mid_str(int digits) const;
  std::string rad_str() const;

  BallReal operator-() const;
  friend BallReal operator+(const BallReal& a, const BallReal& b);
  friend BallReal operator-(const BallReal& a, const BallReal& b);
  friend BallReal operator*(const BallReal& a, const BallReal& b);
  friend BallReal operator/(const BallReal& a, const BallReal& b);
  BallReal& operator+=(const BallReal& o);
  BallReal& operator-=(const BallReal& o);
  BallReal& operator*=(const BallReal& o);

  friend BallReal abs(const BallReal& a);
  friend BallReal sqrt(const BallReal& a);
  friend BallReal exp(const BallReal& a);
  friend BallReal log(const BallReal& a);
  friend BallReal sin(const BallReal& a);
  friend BallReal cos(const BallReal& a);
  friend BallReal pow_si(const BallReal& a, long e);
  friend BallReal atan2_ball(const BallReal& y, const BallReal& x);
  friend BallReal ball_union(const BallReal& a, const BallReal& b);
  friend BallReal max_upper(const BallReal& a, const BallReal& b);

  mpfr_srcptr mid_raw() const { return mid_; }
  mpfr_srcptr rad_raw() const { return rad_; }
  mpfr_ptr mid_raw() { return mid_; }
  mpfr_ptr rad_raw() { return rad_; }

 private:
  mpfr_t mid_;
  mpfr_t rad_;
};

/// Rectangular complex enclosure (independent real/imaginary balls).
/// Serialized externally as a disk: midpoint plus radius re.rad + im.rad.
struct BallComplex {
  BallReal re, im;

  BallComplex() = default;
  explicit BallComplex(Prec prec) : re(prec), im(prec) {}
  BallComplex(BallReal r, BallReal i) : re(std::move(r)), im(std::move(i)) {}
  static BallComplex from_real(const BallReal& r);
  static BallComplex from_si(long r, long i, Prec prec);

  Prec prec() const { return re.prec(); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool is_real_exact() const { return im.exact() && im.contains_zero(); }
  BallComplex midpoint() const { return {re.midpoint(), im.midpoint()}; }

  BallComplex conj() const;
  BallComplex operator-() const;
  friend BallComplex operator+(const BallComplex& a, const BallComplex& b);
  friend BallComplex operator-(const BallComplex& a, const BallComplex& b);
  friend BallComplex operator*(const BallComplex& a, const BallComplex& b);
  friend BallComplex operator/(const BallComplex& a, const BallComplex& b);
  BallComplex& operator+=(const BallComplex& o);
  BallComplex& operator*=(const BallComplex& o);

  /// |z| as a real ball.
  BallReal abs() const;
  /// Disk radius covering the whole rectangle from the midpoint.
  BallReal disk_radius() const;
  /// Certified upper bound on the distance |this.mid - o.mid| minus radii
  /// is positive, i.e. the enclosures are disjoint.
  bool certainly_disjoint(const BallComplex& o) const;
  bool overlaps(const BallComplex& o) const;
  /// True if the point (x, y) lies inside the rectangle enclosure.
  bool contains_point_q(const mpq_class& x, const mpq_class& y) const;
};

BallComplex pow_si(const BallComplex& z, long e);
/// exp(z) via e^re * (cos im, sin im).
BallComplex cexp(const BallComplex& z);
/// base^expo for a certified-positive real base: exp(expo * log base).
BallComplex cpow(const BallReal& base, const BallComplex& expo);
/// Principal argument. Requires an enclosure that excludes the origin and,
/// unless exactly real, does not straddle the branch cut (-inf, 0].
BallReal carg(const BallComplex& z);
BallReal distance_upper(const BallComplex& a, const BallComplex& b);

}  // namespace recurzeta

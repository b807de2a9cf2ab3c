#pragma once

#include <mpfr.h>

#include <complex>
#include <string>

#include "adedefect/numbers/rational.hpp"

namespace ade {

/// Complex ball: midpoint a + bi at a fixed binary precision plus an upper
/// bound on the distance to the represented value.
///
/// Every arithmetic operation rounds the midpoint to nearest and folds the
/// rounding error into the radius, so containment survives any sequence of
/// operations. Results take the larger precision of the two operands.
class Ball {
 public:
  static constexpr mpfr_prec_t kRadiusBits = 53;

  explicit Ball(mpfr_prec_t precision = 64);
  Ball(const Ball& other);
  Ball(Ball&& other) noexcept;
  Ball& operator=(const Ball& other);
  Ball& operator=(Ball&& other) noexcept;
  ~Ball();

  static Ball from_rational(const Rational& q, mpfr_prec_t precision);
  static Ball from_rational(const Rational& re, const Rational& im, mpfr_prec_t precision);
  static Ball from_double(std::complex<double> z, mpfr_prec_t precision);
  /// Midpoint taken from mpfr values; rounding into the target precision is accounted for.
  static Ball from_mpfr(mpfr_srcptr re, mpfr_srcptr im, mpfr_prec_t precision);

  mpfr_prec_t precision() const { return prec_; }
  mpfr_srcptr re() const { return re_; }
  mpfr_srcptr im() const { return im_; }
  mpfr_srcptr rad() const { return rad_; }

  bool is_exact() const { return mpfr_zero_p(rad_) != 0; }
  bool is_real() const { return mpfr_zero_p(im_) != 0; }

  /// Upper bound on |z| for every z in the ball (stored at kRadiusBits).
  void abs_upper(mpfr_ptr out) const;
  /// Lower bound on |z| for every z in the ball, clamped at zero.
  void abs_lower(mpfr_ptr out) const;
  /// Upper bound on |re| + |im| of the midpoint.
  void mid_l1_upper(mpfr_ptr out) const;

  bool contains_zero() const;
  bool excludes_zero() const { return !contains_zero(); }
  /// True when |mid| + rad < 2^exponent.
  bool below(long exponent) const;

  /// Enlarges the radius by a nonnegative amount, rounding upward.
  void add_error(mpfr_srcptr err);
  void add_error_2exp(long exponent);
  void set_radius(mpfr_srcptr r);
  void set_radius_2exp(long exponent);
  /// Drops the midpoint to fewer bits, keeping containment.
  Ball rounded(mpfr_prec_t precision) const;

  Ball operator-() const;
  Ball& operator+=(const Ball& o);
  Ball& operator-=(const Ball& o);
  Ball& operator*=(const Ball& o);
  Ball& operator/=(const Ball& o);

  /// Throws DivisionByProvableZero when the ball contains zero.
  Ball inverse() const;
  Ball pow(long exponent) const;
  Ball mul_rational(const Rational& q) const;

  std::complex<double> mid_double() const;
  double rad_double() const;
  std::string to_string(int digits = 20) const;

 private:
  void init(mpfr_prec_t precision);
  void clear();
  void add_rounding_error();

  mpfr_prec_t prec_ = 0;
  mpfr_t re_;
  mpfr_t im_;
  mpfr_t rad_;
  bool live_ = false;
};

Ball operator+(Ball a, const Ball& b);
Ball operator-(Ball a, const Ball& b);
Ball operator*(Ball a, const Ball& b);
Ball operator/(Ball a, const Ball& b);

/// Sum of products x_i * y_i with a single accumulated error bound.
Ball dot(const Ball* x, const Ball* y, std::size_t n, std::size_t stride_y = 1);

/// Scratch mpfr value for radius-style computations.
class Scratch {
 public:
  explicit Scratch(mpfr_prec_t precision = Ball::kRadiusBits) { mpfr_init2(v_, precision); mpfr_set_zero(v_, 1); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  ~Scratch() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  operator mpfr_ptr() { return v_; }
  operator mpfr_srcptr() const { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace ade

#include "adedefect/numbers/ball.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "adedefect/error.hpp"

namespace ade {

namespace {

constexpr mpfr_prec_t kR = Ball::kRadiusBits;

// out = |re| + |im| rounded up.
void l1_upper(mpfr_ptr out, mpfr_srcptr re, mpfr_srcptr im) {
  Scratch t;
  mpfr_abs(out, re, MPFR_RNDU);
  mpfr_abs(t, im, MPFR_RNDU);
  mpfr_add(out, out, t, MPFR_RNDU);
}

void raise_precision(mpfr_ptr x, mpfr_prec_t p) {
  if (mpfr_get_prec(x) < p) mpfr_prec_round(x, p, MPFR_RNDN);
}

}  // namespace

void Ball::init(mpfr_prec_t precision) {
  prec_ = precision;
  mpfr_init2(re_, precision);
  mpfr_init2(im_, precision);
  mpfr_init2(rad_, kR);
  mpfr_set_zero(re_, 1);
  mpfr_set_zero(im_, 1);
  mpfr_set_zero(rad_, 1);
  live_ = true;
}

void Ball::clear() {
  if (live_) {
    mpfr_clear(re_);
    mpfr_clear(im_);
    mpfr_clear(rad_);
    live_ = false;
  }
}

Ball::Ball(mpfr_prec_t precision) { init(precision); }

Ball::Ball(const Ball& other) {
  init(other.prec_);
  mpfr_set(re_, other.re_, MPFR_RNDN);
  mpfr_set(im_, other.im_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& other) noexcept {
  init(other.prec_);
  mpfr_swap(re_, other.re_);
  mpfr_swap(im_, other.im_);
  mpfr_swap(rad_, other.rad_);
}

Ball& Ball::operator=(const Ball& other) {
  if (this == &other) return *this;
  if (prec_ != other.prec_) {
    mpfr_set_prec(re_, other.prec_);
    mpfr_set_prec(im_, other.prec_);
    prec_ = other.prec_;
  }
  mpfr_set(re_, other.re_, MPFR_RNDN);
  mpfr_set(im_, other.im_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
  return *this;
}

Ball& Ball::operator=(Ball&& other) noexcept {
  if (this == &other) return *this;
  mpfr_swap(re_, other.re_);
  mpfr_swap(im_, other.im_);
  mpfr_swap(rad_, other.rad_);
  std::swap(prec_, other.prec_);
  return *this;
}

Ball::~Ball() { clear(); }

Ball Ball::from_rational(const Rational& q, mpfr_prec_t precision) {
  Ball b(precision);
  if (mpfr_set_q(b.re_, q.get_mpq_t(), MPFR_RNDN) != 0) {
    Scratch t;
    mpfr_abs(t, b.re_, MPFR_RNDU);
    mpfr_mul_2si(t, t, 1 - precision, MPFR_RNDU);
    mpfr_set(b.rad_, t.get(), MPFR_RNDU);
  }
  return b;
}

Ball Ball::from_rational(const Rational& re, const Rational& im, mpfr_prec_t precision) {
  Ball b = from_rational(re, precision);
  if (mpfr_set_q(b.im_, im.get_mpq_t(), MPFR_RNDN) != 0) {
    Scratch t;
    mpfr_abs(t, b.im_, MPFR_RNDU);
    mpfr_mul_2si(t, t, 1 - precision, MPFR_RNDU);
    mpfr_add(b.rad_, b.rad_, t, MPFR_RNDU);
  }
  return b;
}

Ball Ball::from_double(std::complex<double> z, mpfr_prec_t precision) {
  Ball b(std::max<mpfr_prec_t>(precision, 53));
  mpfr_set_d(b.re_, z.real(), MPFR_RNDN);
  mpfr_set_d(b.im_, z.imag(), MPFR_RNDN);
  if (b.prec_ != precision) return b.rounded(precision);
  return b;
}

Ball Ball::from_mpfr(mpfr_srcptr re, mpfr_srcptr im, mpfr_prec_t precision) {
  Ball b(precision);
  int t1 = mpfr_set(b.re_, re, MPFR_RNDN);
  int t2 = mpfr_set(b.im_, im, MPFR_RNDN);
  if (t1 != 0 || t2 != 0) b.add_rounding_error();
  return b;
}

void Ball::abs_upper(mpfr_ptr out) const {
  mpfr_hypot(out, re_, im_, MPFR_RNDU);
  mpfr_add(out, out, rad_, MPFR_RNDU);
}

void Ball::abs_lower(mpfr_ptr out) const {
  mpfr_hypot(out, re_, im_, MPFR_RNDD);
  mpfr_sub(out, out, rad_, MPFR_RNDD);
  if (mpfr_sgn(out) < 0) mpfr_set_zero(out, 1);
}

void Ball::mid_l1_upper(mpfr_ptr out) const { l1_upper(out, re_, im_); }

bool Ball::contains_zero() const {
  Scratch m;
  mpfr_hypot(m, re_, im_, MPFR_RNDD);
  return mpfr_lessequal_p(m, rad_) != 0;
}

bool Ball::below(long exponent) const {
  Scratch m;
  abs_upper(m);
  Scratch bound;
  mpfr_set_ui_2exp(bound, 1, exponent, MPFR_RNDN);
  return mpfr_less_p(m, bound) != 0;
}

void Ball::add_error(mpfr_srcptr err) { mpfr_add(rad_, rad_, err, MPFR_RNDU); }

void Ball::add_error_2exp(long exponent) {
  Scratch t;
  mpfr_set_ui_2exp(t, 1, exponent, MPFR_RNDU);
  mpfr_add(rad_, rad_, t, MPFR_RNDU);
}

void Ball::set_radius(mpfr_srcptr r) { mpfr_set(rad_, r, MPFR_RNDU); }

void Ball::set_radius_2exp(long exponent) { mpfr_set_ui_2exp(rad_, 1, exponent, MPFR_RNDU); }

Ball Ball::rounded(mpfr_prec_t precision) const {
  Ball b(precision);
  int t1 = mpfr_set(b.re_, re_, MPFR_RNDN);
  int t2 = mpfr_set(b.im_, im_, MPFR_RNDN);
  mpfr_set(b.rad_, rad_, MPFR_RNDU);
  if (t1 != 0 || t2 != 0) b.add_rounding_error();
  return b;
}

void Ball::add_rounding_error() {
  // |RN(x) - x| <= 2^-p |x| <= 2^(1-p) |RN(x)| for each component.
  Scratch t;
  l1_upper(t, re_, im_);
  mpfr_mul_2si(t, t, 1 - prec_, MPFR_RNDU);
  mpfr_add(rad_, rad_, t, MPFR_RNDU);
}

Ball Ball::operator-() const {
  Ball b(*this);
  mpfr_neg(b.re_, b.re_, MPFR_RNDN);
  mpfr_neg(b.im_, b.im_, MPFR_RNDN);
  return b;
}

Ball& Ball::operator+=(const Ball& o) {
  if (o.prec_ > prec_) {
    raise_precision(re_, o.prec_);
    raise_precision(im_, o.prec_);
    prec_ = o.prec_;
  }
  int t1 = mpfr_add(re_, re_, o.re_, MPFR_RNDN);
  int t2 = mpfr_add(im_, im_, o.im_, MPFR_RNDN);
  mpfr_add(rad_, rad_, o.rad_, MPFR_RNDU);
  if (t1 != 0 || t2 != 0) add_rounding_error();
  return *this;
}

Ball& Ball::operator-=(const Ball& o) {
  if (o.prec_ > prec_) {
    raise_precision(re_, o.prec_);
    raise_precision(im_, o.prec_);
    prec_ = o.prec_;
  }
  int t1 = mpfr_sub(re_, re_, o.re_, MPFR_RNDN);
  int t2 = mpfr_sub(im_, im_, o.im_, MPFR_RNDN);
  mpfr_add(rad_, rad_, o.rad_, MPFR_RNDU);
  if (t1 != 0 || t2 != 0) add_rounding_error();
  return *this;
}

Ball& Ball::operator*=(const Ball& o) {
  mpfr_prec_t p = std::max(prec_, o.prec_);
  // Propagated error |x| r_y + r_x |y| + r_x r_y, using l1 bounds of the midpoints.
  Scratch err, t, mx, my;
  l1_upper(mx, re_, im_);
  l1_upper(my, o.re_, o.im_);
  mpfr_mul(err, mx, o.rad_, MPFR_RNDU);
  mpfr_mul(t, my, rad_, MPFR_RNDU);
  mpfr_add(err, err, t, MPFR_RNDU);
  mpfr_mul(t, rad_, o.rad_, MPFR_RNDU);
  mpfr_add(err, err, t, MPFR_RNDU);

  mpfr_t re, im;
  mpfr_init2(re, p);
  mpfr_init2(im, p);
  int t1, t2;
  if (mpfr_zero_p(im_) && mpfr_zero_p(o.im_)) {
    t1 = mpfr_mul(re, re_, o.re_, MPFR_RNDN);
    mpfr_set_zero(im, 1);
    t2 = 0;
  } else {
    t1 = mpfr_fmms(re, re_, o.re_, im_, o.im_, MPFR_RNDN);
    t2 = mpfr_fmma(im, re_, o.im_, im_, o.re_, MPFR_RNDN);
  }
  if (p != prec_) {
    mpfr_set_prec(re_, p);
    mpfr_set_prec(im_, p);
    prec_ = p;
  }
  mpfr_swap(re_, re);
  mpfr_swap(im_, im);
  mpfr_clear(re);
  mpfr_clear(im);
  mpfr_set(rad_, err.get(), MPFR_RNDU);
  if (t1 != 0 || t2 != 0) add_rounding_error();
  return *this;
}

Ball Ball::inverse() const {
  if (contains_zero())
    throw Error(ErrorCode::DivisionByProvableZero, "divisor ball contains zero");
  Ball b(prec_);
  mpfr_t n;
  mpfr_init2(n, prec_ + 8);
  mpfr_fmma(n, re_, re_, im_, im_, MPFR_RNDN);
  mpfr_div(b.re_, re_, n, MPFR_RNDN);
  mpfr_div(b.im_, im_, n, MPFR_RNDN);
  mpfr_neg(b.im_, b.im_, MPFR_RNDN);
  mpfr_clear(n);
  // midpoint error: at most 4 * 2^-p relative per component
  Scratch t;
  l1_upper(t, b.re_, b.im_);
  mpfr_mul_2si(t, t, 2 - prec_, MPFR_RNDU);
  mpfr_set(b.rad_, t.get(), MPFR_RNDU);
  if (!is_exact()) {
    // |1/x - 1/m| <= r / (|m| (|m| - r))
    Scratch lo, denom;
    mpfr_hypot(lo, re_, im_, MPFR_RNDD);
    mpfr_sub(denom, lo, rad_, MPFR_RNDD);
    mpfr_mul(denom, denom, lo, MPFR_RNDD);
    mpfr_div(t, rad_, denom, MPFR_RNDU);
    mpfr_add(b.rad_, b.rad_, t, MPFR_RNDU);
  }
  return b;
}

Ball& Ball::operator/=(const Ball& o) { return *this *= o.inverse(); }

Ball Ball::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Ball result = Ball::from_rational(Rational(1), prec_);
  Ball base(*this);
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Ball Ball::mul_rational(const Rational& q) const { return *this * Ball::from_rational(q, prec_); }

std::complex<double> Ball::mid_double() const {
  return {mpfr_get_d(re_, MPFR_RNDN), mpfr_get_d(im_, MPFR_RNDN)};
}

double Ball::rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

std::string Ball::to_string(int digits) const {
  auto fmt = [digits](mpfr_srcptr x) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, x);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  };
  std::ostringstream os;
  os << "[" << fmt(re_) << " + " << fmt(im_) << "i +/- " << fmt(rad_) << "]";
  return os.str();
}

Ball operator+(Ball a, const Ball& b) { return a += b; }
Ball operator-(Ball a, const Ball& b) { return a -= b; }
Ball operator*(Ball a, const Ball& b) { return a *= b; }
Ball operator/(Ball a, const Ball& b) { return a /= b; }

Ball dot(const Ball* x, const Ball* y, std::size_t n, std::size_t stride_y) {
  mpfr_prec_t p = 0;
  for (std::size_t i = 0; i < n; ++i) p = std::max({p, x[i].precision(), y[i * stride_y].precision()});
  if (p == 0) p = 64;
  Ball acc(p);
  if (n == 0) return acc;

  mpfr_t pr, pi, sr, si;
  mpfr_init2(pr, p);
  mpfr_init2(pi, p);
  mpfr_init2(sr, p);
  mpfr_init2(si, p);
  mpfr_set_zero(sr, 1);
  mpfr_set_zero(si, 1);
  Scratch err, rnd, t, mx, my;
  for (std::size_t i = 0; i < n; ++i) {
    const Ball& a = x[i];
    const Ball& b = y[i * stride_y];
    l1_upper(mx, a.re(), a.im());
    l1_upper(my, b.re(), b.im());
    mpfr_mul(t, mx, b.rad(), MPFR_RNDU);
    mpfr_add(err, err, t, MPFR_RNDU);
    mpfr_mul(t, my, a.rad(), MPFR_RNDU);
    mpfr_add(err, err, t, MPFR_RNDU);
    mpfr_mul(t, a.rad(), b.rad(), MPFR_RNDU);
    mpfr_add(err, err, t, MPFR_RNDU);

    int t1 = mpfr_fmms(pr, a.re(), b.re(), a.im(), b.im(), MPFR_RNDN);
    int t2 = mpfr_fmma(pi, a.re(), b.im(), a.im(), b.re(), MPFR_RNDN);
    if (t1 != 0 || t2 != 0) {
      l1_upper(t, pr, pi);
      mpfr_add(rnd, rnd, t, MPFR_RNDU);
    }
    t1 = mpfr_add(sr, sr, pr, MPFR_RNDN);
    t2 = mpfr_add(si, si, pi, MPFR_RNDN);
    if (t1 != 0 || t2 != 0) {
      l1_upper(t, sr, si);
      mpfr_add(rnd, rnd, t, MPFR_RNDU);
    }
  }
  mpfr_mul_2si(rnd, rnd, 1 - p, MPFR_RNDU);
  mpfr_add(err, err, rnd, MPFR_RNDU);
  Ball out = Ball::from_mpfr(sr, si, p);
  out.add_error(err);
  mpfr_clear(pr);
  mpfr_clear(pi);
  mpfr_clear(sr);
  mpfr_clear(si);
  return out;
}

}  // namespace ade

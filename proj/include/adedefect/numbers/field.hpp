#pragma once

#include "adedefect/error.hpp"
#include "adedefect/numbers/algebraic.hpp"
#include "adedefect/numbers/ball.hpp"
#include "adedefect/numbers/rational.hpp"

namespace ade {

// Coefficient policies for algorithms that run either exactly or on balls.
// Both expose the same small vocabulary: from(q), state(x), inv(x), and
// abs_greater(a, b) for pivot selection.

struct ExactField {
  using value_type = Rational;

  value_type from(const Rational& q) const { return q; }
  value_type zero() const { return Rational(0); }
  ZeroState state(const value_type& x) const { return x == 0 ? ZeroState::Zero : ZeroState::NonZero; }
  value_type inv(const value_type& x) const {
    if (x == 0) throw Error(ErrorCode::DivisionByProvableZero, "exact division by zero");
    return Rational(1 / x);
  }
  bool abs_greater(const value_type& a, const value_type& b) const { return cmp(abs(a), abs(b)) > 0; }
  /// Replaces a value decided to be zero by an exact zero.
  value_type flush(const value_type& x) const { return x; }
  bool exact_zero(const value_type& x) const { return x == 0; }
};

struct BallField {
  using value_type = Ball;

  long precision = 256;

  value_type from(const Rational& q) const { return Ball::from_rational(q, precision); }
  value_type zero() const { return Ball(precision); }
  ZeroState state(const value_type& x) const { return ball_zero_state(x, precision); }
  value_type inv(const value_type& x) const { return x.inverse(); }
  bool abs_greater(const value_type& a, const value_type& b) const {
    Scratch x(64), y(64);
    mpfr_hypot(x, a.re(), a.im(), MPFR_RNDN);
    mpfr_hypot(y, b.re(), b.im(), MPFR_RNDN);
    return mpfr_greater_p(x, y) != 0;
  }
  value_type flush(const value_type& x) const { return state(x) == ZeroState::Zero ? zero() : x; }
  bool exact_zero(const value_type& x) const {
    return mpfr_zero_p(x.re()) && mpfr_zero_p(x.im()) && mpfr_zero_p(x.rad());
  }
};

}  // namespace ade

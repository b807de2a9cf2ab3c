#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "adedefect/numbers/ball.hpp"
#include "adedefect/numbers/rational.hpp"

namespace ade {

/// Univariate polynomial with rational coefficients, lowest degree first.
using UniPoly = std::vector<Rational>;

/// Certified refinement of the simple root of a monic polynomial near `seed`.
///
/// The returned ball has radius exactly 2^-target_bits (zero for linear
/// polynomials with a representable root). The root itself is known to within
/// 2^-(target_bits+8) of the midpoint, so balls for increasing targets nest.
Ball refine_root(const UniPoly& monic, std::complex<double> seed, long target_bits);
Ball refine_root(const UniPoly& monic, const Rational& seed_re, const Rational& seed_im,
                 long target_bits);

enum class ZeroState { Zero, NonZero, Undecided };

const char* to_string(ZeroState z);

/// An exact rational or an algebraic number described by a recipe.
///
/// Values are immutable handles onto a shared expression DAG. Operations on
/// two rational values fold to a rational immediately.
class AlgebraicValue {
 public:
  enum class Kind { Rational, RootOf, Expr };
  enum class Op { Add, Sub, Mul, Div, Pow };

  struct Node;

  AlgebraicValue();
  AlgebraicValue(const Rational& q);  // NOLINT(google-explicit-constructor)
  AlgebraicValue(long n);             // NOLINT(google-explicit-constructor)
  AlgebraicValue(int n) : AlgebraicValue(static_cast<long>(n)) {}  // NOLINT

  /// The unique root of `monic` inside the disk |t - seed| < radius.
  /// Throws NonIsolating unless exactly one root lies in the disk.
  static AlgebraicValue root_of(UniPoly monic, const Rational& seed_re, const Rational& seed_im,
                                const Rational& radius);
  /// Convenience overload: seed and radius given in double precision.
  static AlgebraicValue root_of(UniPoly monic, std::complex<double> seed, double radius);

  Kind kind() const;
  bool is_rational() const { return kind() == Kind::Rational; }
  /// Throws InvalidInput unless the value is rational.
  const Rational& rational() const;
  const Node& node() const { return *node_; }
  const std::shared_ptr<const Node>& node_ptr() const { return node_; }

  AlgebraicValue operator-() const;
  friend AlgebraicValue operator+(const AlgebraicValue& a, const AlgebraicValue& b);
  friend AlgebraicValue operator-(const AlgebraicValue& a, const AlgebraicValue& b);
  friend AlgebraicValue operator*(const AlgebraicValue& a, const AlgebraicValue& b);
  friend AlgebraicValue operator/(const AlgebraicValue& a, const AlgebraicValue& b);
  AlgebraicValue& operator+=(const AlgebraicValue& o) { return *this = *this + o; }
  AlgebraicValue& operator-=(const AlgebraicValue& o) { return *this = *this - o; }
  AlgebraicValue& operator*=(const AlgebraicValue& o) { return *this = *this * o; }
  AlgebraicValue pow(long exponent) const;

  bool is_exact_zero() const { return is_rational() && rational() == 0; }
  bool is_exact_one() const { return is_rational() && rational() == 1; }

 private:
  explicit AlgebraicValue(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static AlgebraicValue make_expr(Op op, std::vector<AlgebraicValue> args, long exponent);

  std::shared_ptr<const Node> node_;
};

struct AlgebraicValue::Node {
  Kind kind = Kind::Rational;
  Rational value;  // Kind::Rational
  // Kind::RootOf
  UniPoly poly;
  Rational seed_re, seed_im, radius;
  // Kind::Expr
  Op op = Op::Add;
  std::vector<std::shared_ptr<const Node>> args;
  long exponent = 0;

  // Refinements of a root, keyed by target bits. Guarded because values are shared.
  mutable std::mutex cache_mutex;
  mutable std::map<long, Ball> root_cache;
};

/// Evaluates many values at one working precision, sharing common subtrees.
class Evaluator {
 public:
  explicit Evaluator(long working_bits) : bits_(working_bits) {}
  Ball eval(const AlgebraicValue& v);
  long bits() const { return bits_; }

 private:
  Ball eval_node(const AlgebraicValue::Node* n);

  long bits_;
  std::unordered_map<const AlgebraicValue::Node*, Ball> memo_;
};

/// Ball of radius <= 2^-precision containing v. Working precision is doubled
/// up to four times before PrecisionExhausted is raised.
Ball eval_value(const AlgebraicValue& v, long precision);

/// Joint evaluation: every returned ball has radius <= 2^-precision.
std::vector<Ball> eval_values(const std::vector<AlgebraicValue>& vs, long precision);

/// Exact for rationals. Otherwise NonZero if the ball at `precision` (or at
/// twice that) excludes zero, Zero if |mid| + rad < 2^(-precision/2) at both
/// precisions, Undecided otherwise.
ZeroState is_zero_heuristic(const AlgebraicValue& v, long precision);

/// Zero test for a ball evaluated at `precision`: NonZero if certified,
/// Zero below the 2^(-precision/2) tolerance, else Undecided.
ZeroState ball_zero_state(const Ball& b, long precision);

// Univariate helpers over the rationals.
UniPoly uni_derivative(const UniPoly& p);
UniPoly uni_gcd(UniPoly a, UniPoly b);
Ball uni_eval(const UniPoly& p, const Ball& x);

}  // namespace ade

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adedefect/numbers/algebraic.hpp"
#include "adedefect/numbers/ball.hpp"
#include "adedefect/numbers/rational.hpp"

namespace ade {

constexpr int kMaxVars = 5;

using Exponent = std::array<std::uint8_t, kMaxVars>;

int total_degree(const Exponent& e);

/// Graded-lex order with y0 > y1 > ...; `operator()` is true when a precedes b,
/// i.e. a is the larger monomial.
struct GrlexDesc {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const;
};

/// Polynomial in 1..5 variables with rational coefficients. No stored
/// coefficient is zero; iteration runs in graded-lex order, largest first.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexDesc>;

  explicit MultiPoly(int nvars = 4);
  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int index);
  static MultiPoly monomial(int nvars, const Exponent& e, const Rational& c = Rational(1));

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Largest total degree of a term; -1 for the zero polynomial.
  int degree() const;
  /// Common total degree when homogeneous (zero counts as homogeneous of any degree).
  std::optional<int> homogeneous_degree() const;
  Rational coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  MultiPoly pow(unsigned exponent) const;

  /// Formal partial derivative in variable `index`.
  MultiPoly derive(int index) const;

  /// Replaces variable i by subs[i]; subs.size() must equal nvars().
  MultiPoly substitute(const std::vector<MultiPoly>& subs) const;
  /// Same polynomial viewed in `n` variables (n >= nvars()).
  MultiPoly with_nvars(int n) const;

  Rational evaluate(const std::vector<Rational>& point) const;
  Ball evaluate(const std::vector<Ball>& point) const;
  /// Expression tree for F(point); powers of each coordinate are shared nodes.
  AlgebraicValue evaluate_symbolic(const std::vector<AlgebraicValue>& point) const;

  /// Canonical text: graded-lex order, explicit '*' and '^'.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  TermMap terms_;
};

/// Quotient and remainder of division by a single divisor, rewriting terms
/// divisible by the divisor's leading monomial.
std::pair<MultiPoly, MultiPoly> divide(const MultiPoly& dividend, const MultiPoly& divisor);

/// Monomials of the given degree, graded-lex descending.
std::vector<Exponent> monomial_exponents(int nvars, int degree);
std::vector<MultiPoly> monomial_basis(int nvars, int degree);

std::vector<std::string> default_variable_names(int nvars);

}  // namespace ade

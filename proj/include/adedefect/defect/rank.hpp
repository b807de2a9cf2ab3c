#pragma once

#include <string>

#include "adedefect/defect/condition.hpp"
#include "adedefect/numbers/matrix.hpp"

namespace ade {

enum class Backend { Exact, Numeric, Auto };
const char* to_string(Backend b);
Backend parse_backend(const std::string& text);

struct RankResult {
  long rank = 0;
  Backend backend = Backend::Exact;
  /// Exact ranks are always certified. Numeric ranks are certified when they
  /// agree at p and 2p and both certificates below hold.
  bool certified = false;
  long precision = 0;
};

/// Fraction-free elimination over the integers after clearing column denominators.
long rank_exact(const Matrix<Rational>& m);

/// Numeric rank of a ball matrix at one precision: complete-pivoting
/// elimination on midpoints, then a certificate that the leading block is
/// invertible and every Schur complement entry contains zero.
struct NumericRank {
  long rank = 0;
  bool certified = false;
};
NumericRank rank_numeric_once(const Matrix<Ball>& m, long precision);

RankResult rank(const ConditionMatrix& m, Backend backend = Backend::Auto, long precision = 256);
RankResult rank(const Matrix<Rational>& m, Backend backend, long precision = 256);

}  // namespace ade

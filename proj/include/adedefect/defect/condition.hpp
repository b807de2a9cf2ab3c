#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adedefect/numbers/algebraic.hpp"
#include "adedefect/numbers/matrix.hpp"
#include "adedefect/poly/multipoly.hpp"
#include "adedefect/poly/point.hpp"
#include "adedefect/singular/classify.hpp"

namespace ade {

enum class ConditionTag { Value, AlongV1, AlongV2, AlongFiber };
const char* to_string(ConditionTag tag);

/// One column: the functional m -> j! [t^j] m(P + t w) on degree-d forms.
struct ColumnSpec {
  int point = 0;
  ConditionTag tag = ConditionTag::Value;
  int order = 0;
  std::vector<AlgebraicValue> base;
  std::vector<AlgebraicValue> direction;
};

enum class Specialization { TripleCusp, DoubleAChain, QuinticA3, GeneralLinearFrame };
const char* to_string(Specialization s);
Specialization parse_specialization(const std::string& text);

class ConditionMatrix {
 public:
  ConditionMatrix(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<Exponent>& row_monomials() const { return rows_; }
  const std::vector<ColumnSpec>& columns() const { return columns_; }
  /// Set when some column direction came from a caller-supplied frame.
  bool frame_dependent() const { return frame_dependent_; }
  void set_frame_dependent(bool v) { frame_dependent_ = v; }

  void add_column(ColumnSpec c);
  /// Reorders the monomial basis: new row i is old row perm[i].
  ConditionMatrix permuted_rows(const std::vector<std::size_t>& perm) const;

  bool is_rational() const;
  std::optional<Matrix<Rational>> realize_exact() const;
  Matrix<Ball> realize(long precision) const;

 private:
  int nvars_;
  int degree_;
  std::vector<Exponent> rows_;
  std::vector<ColumnSpec> columns_;
  bool frame_dependent_ = false;
};

/// One value column per point over the degree-d monomials.
ConditionMatrix build_vanishing_matrix(int degree, const std::vector<ProjectivePoint>& points, int nvars = 4);

/// Columns of the pointwise conditions for the given specialization.
/// Errors: MissingFrame, UnsupportedSpecialization, DimensionMismatch.
ConditionMatrix build_condition_matrix(int degree, const std::vector<SingularPointRecord>& records,
                                       Specialization specialization, int nvars = 4);

}  // namespace ade

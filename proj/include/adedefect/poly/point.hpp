#pragma once

#include <optional>
#include <vector>

#include "adedefect/numbers/algebraic.hpp"
#include "adedefect/numbers/matrix.hpp"
#include "adedefect/poly/multipoly.hpp"

namespace ade {

/// Affine representative of a projective point. Never normalized implicitly.
class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  explicit ProjectivePoint(std::vector<AlgebraicValue> coords);
  static ProjectivePoint from_rationals(const std::vector<Rational>& coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<AlgebraicValue>& coords() const { return coords_; }
  const AlgebraicValue& operator[](int i) const { return coords_[i]; }
  bool is_rational() const;
  std::vector<Rational> rational_coords() const;
  std::vector<Ball> balls(long precision) const;
  /// Same point with every coordinate multiplied by `lambda`.
  ProjectivePoint scaled(const AlgebraicValue& lambda) const;

 private:
  std::vector<AlgebraicValue> coords_;
};

/// Throws InvalidInput unless some coordinate is certified nonzero.
void require_nonzero(const ProjectivePoint& p, long precision);

/// Zero when all 2x2 minors vanish by the zero heuristic (same projective
/// point), NonZero when some minor is certified nonzero.
ZeroState proportional(const std::vector<AlgebraicValue>& a, const std::vector<AlgebraicValue>& b, long precision);
ZeroState proportional(const std::vector<Ball>& a, const std::vector<Ball>& b, long precision);

struct ScalarValue {
  bool exact = false;
  Rational q;
  Ball ball;
};

/// F at the given representative; exact when every coordinate is rational.
ScalarValue evaluate(const MultiPoly& f, const ProjectivePoint& p, long precision);

struct HessianValue {
  bool exact = false;
  Matrix<Rational> q;
  Matrix<Ball> ball;
};

/// Second partials at P, computed on the upper triangle and mirrored.
HessianValue hessian(const MultiPoly& f, const ProjectivePoint& p, long precision);
Matrix<AlgebraicValue> hessian_symbolic(const MultiPoly& f, const ProjectivePoint& p);
std::vector<MultiPoly> hessian_polys(const MultiPoly& f);

/// Coefficients of F(P + t v), lowest degree first. DegenerateDirection if v is
/// proportional to P.
std::vector<AlgebraicValue> restrict_to_line(const MultiPoly& f, const ProjectivePoint& p,
                                             const std::vector<AlgebraicValue>& v, long precision = 256);
/// Ball version without the degeneracy check; `order` truncates the expansion.
std::vector<Ball> restrict_to_line(const MultiPoly& f, const std::vector<Ball>& p, const std::vector<Ball>& v,
                                   int order);

}  // namespace ade

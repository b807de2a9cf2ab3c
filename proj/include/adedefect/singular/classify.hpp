#pragma once

#include <optional>
#include <vector>

#include "adedefect/numbers/algebraic.hpp"
#include "adedefect/poly/multipoly.hpp"
#include "adedefect/poly/point.hpp"
#include "adedefect/singular/ade.hpp"

namespace ade {

enum class Singularity { Singular, Smooth, Undecided };
const char* to_string(Singularity s);

/// Singular when F and every first partial vanish at P by the zero heuristic;
/// Smooth when some partial is certified nonzero.
Singularity is_singular(const MultiPoly& f, const ProjectivePoint& p, long precision = 256);

struct ClassifyOptions {
  /// Truncation order of the local series.
  int max_order = 12;
  /// Ball precision for points with irrational coordinates.
  long precision = 256;
};

struct Classification {
  ADEType type;
  /// Coordinate set to 1 when passing to the affine chart.
  int chart = 0;
  /// Corank of the quadratic part of the germ.
  int corank = 0;
  /// Truncation order at which the type was decided.
  int order = 0;
  /// Exact arithmetic was used (rational point).
  bool exact = false;
};

/// Recognizes the A-D-E type of the double point P of V(F) by corank and
/// splitting. Rational points run in exact arithmetic, others on balls.
/// Errors: NotSingular, NotDoublePoint, CorankTooHigh, NotSimple,
/// TruncationInsufficient, Undecided.
Classification classify(const MultiPoly& f, const ProjectivePoint& p, const ClassifyOptions& options = {});

/// Linear: computed from the Hessian. Supplied: given by the caller.
enum class FrameKind { Linear, Supplied, Unavailable };

struct SingularPointRecord {
  ProjectivePoint point;
  ADEType ade;
  std::optional<std::vector<AlgebraicValue>> v1;
  std::optional<std::vector<AlgebraicValue>> v2;
  FrameKind frame_kind = FrameKind::Unavailable;
};

/// Directions for the derivative conditions at P. A_m (m >= 2): v1 spans the
/// Hessian kernel together with P. D_4: v1, v2 span the kernel modulo P.
/// A_1 needs no direction. Deeper D and E types get FrameKind::Unavailable.
SingularPointRecord adapted_frame(const MultiPoly& f, const ProjectivePoint& p, const ADEType& ade,
                                  long precision = 256);

/// Record with a caller-supplied frame; checks that the directions are not
/// proportional to P (DegenerateDirection otherwise).
SingularPointRecord supplied_frame(const ProjectivePoint& p, const ADEType& ade, std::vector<AlgebraicValue> v1,
                                   std::optional<std::vector<AlgebraicValue>> v2, long precision = 256);

}  // namespace ade

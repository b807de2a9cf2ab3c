#pragma once

#include <string>
#include <vector>

#include "adedefect/defect/defect.hpp"
#include "adedefect/hodge/hodge.hpp"
#include "adedefect/poly/multipoly.hpp"
#include "adedefect/poly/point.hpp"
#include "adedefect/singular/classify.hpp"

namespace ade {

struct DirectSurface {
  MultiPoly surface;
  long predicted_cusps = 0;
};

/// S_1 ... S_k - S^3 with sum deg S_i = 3 deg S. The cusp prediction counts
/// deg S * deg S_i * deg S_j points on each triple intersection. Errors: DegreeMismatch.
DirectSurface build_direct(const std::vector<MultiPoly>& factors, const MultiPoly& s);

/// (S_1 S_2 S_3 - S^3) / R for cubics S_i, S, R. Errors: DegreeMismatch, NonzeroRemainder.
MultiPoly build_residual(const MultiPoly& s1, const MultiPoly& s2, const MultiPoly& s3, const MultiPoly& s,
                         const MultiPoly& r);

/// Rewrites the quadric in the coordinates z_i = forms[i] and substitutes z_i^n.
/// Errors: DependentForms.
MultiPoly build_power_pullback(const MultiPoly& quadric, const std::vector<MultiPoly>& forms, int n);

struct LinePoints {
  ProjectivePoint first;
  ProjectivePoint second;
  /// The line is tangent to the quadric; both points coincide.
  bool tangent = false;
};

/// Intersection of the line l1 = l2 = 0 with the quadric Q. Coordinates are
/// rational or involve one square root. Errors: DegenerateLine, LineInQuadric.
LinePoints line_quadric_points(const MultiPoly& l1, const MultiPoly& l2, const MultiPoly& q);

/// Checks each record locally (singular, classified type, no duplicates) and
/// recomputes the adapted frames. Global completeness is not checked.
/// Errors: NotSingular, TypeMismatch, DuplicatePoint.
std::vector<SingularPointRecord> verify_inventory(const MultiPoly& b, const std::vector<SingularPointRecord>& records,
                                                  long precision = 256);

/// Roots of t^n = c, ordered by argument in [0, 2 pi); rational roots are exact.
std::vector<AlgebraicValue> roots_of_power(const Rational& c, int n);

struct Expected {
  long nu = 0;
  std::vector<long> ranks;
  long h11 = 0;
  long h12 = 0;
  /// Where the numbers come from.
  std::string source;
};

struct ExampleBundle {
  std::string name;
  std::string title;
  MultiPoly surface;
  int cover_degree = 0;
  int nvars = 4;
  std::vector<ProjectivePoint> points;
  ADEType type;
  long predicted = -1;
  Expected expected;
};

std::vector<std::string> example_names();
/// Errors: UnknownExample.
ExampleBundle load_example(const std::string& name);

/// The 30 points where the lines F_i = F_j = 0 meet the quadric of the six-plane sextic.
std::vector<ProjectivePoint> six_plane_points();

struct ExampleReport {
  std::string name;
  std::string title;
  long nu = 0;
  std::vector<SingularPointRecord> records;
  std::vector<NamedRank> ranks;
  DefectResult defect;
  HodgeReport small;
  HodgeReport big;
  Expected expected;
  bool has_small = true;
  bool matches_expected = false;
  double seconds = 0;
};

struct RunOptions {
  RankOptions rank;
  long precision = 256;
};

ExampleReport run_example(const std::string& name, const RunOptions& options = {});
ExampleReport run_bundle(const ExampleBundle& bundle, const RunOptions& options = {});

/// Condition matrices of a verified example, for invariance checks.
std::vector<ConditionMatrix> example_matrices(const ExampleBundle& bundle,
                                              const std::vector<SingularPointRecord>& records);

}  // namespace ade

#include <functional>

#include "adedefect/error.hpp"
#include "adedefect/gallery/gallery.hpp"
#include "adedefect/poly/parser.hpp"
#include "doctest.h"

using namespace ade;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidInput;
}

const std::vector<std::string> kY = {"y0", "y1", "y2", "y3"};
MultiPoly y(const std::string& s) { return parse_poly(s, kY); }

const MultiPoly kS = y("y0*y1 - y2*y3");
const std::vector<MultiPoly> kF = {y("y0"),
                                   y("y1"),
                                   y("4*y0 + y1 - 2*y2 - 2*y3"),
                                   y("y0 + 4*y1 - 2*y2 - 2*y3"),
                                   y("y0 + y1 + y2 + y3"),
                                   y("y0 + y1 - y2 - y3")};

// a = c b for a nonzero rational c
bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto& [e, ca] = *a.terms().begin();
  Rational c = ca / b.coefficient(e);
  if (c == 0) return false;
  return a == b * c;
}

SingularPointRecord claim(const ProjectivePoint& p, ADEType t) {
  return {p, t, std::nullopt, std::nullopt, FrameKind::Unavailable};
}

}  // namespace

TEST_CASE("build_direct: cusp predictions") {
  DirectSurface six = build_direct(kF, kS);
  CHECK(six.predicted_cusps == 30);
  CHECK(six.surface.homogeneous_degree() == 6);
  CHECK(six.surface == load_example("sextic30").surface);

  MultiPoly s23456 = kF[1] * kF[2] * kF[3] * kF[4] * kF[5] + y("y0 + 4*y1 + 2*y2 + 3*y3") * kS *
                                                               y("y0^2 + y1^2 + y2^2 + y3^2");
  DirectSurface row1 = build_direct({kF[0], s23456}, kS);
  CHECK(row1.predicted_cusps == 10);
  CHECK(row1.surface == load_example("table72_row1").surface);

  CHECK(build_direct({kS.pow(3) + kF[0].pow(6)}, kS).predicted_cusps == 0);
  CHECK(code_of([] { build_direct({kF[0], kF[1]}, kS); }) == ErrorCode::DegreeMismatch);
  CHECK(code_of([] { build_direct({}, kS); }) == ErrorCode::DegreeMismatch);
  CHECK(code_of([] { build_direct({kF[0] + kS}, kS); }) == ErrorCode::DegreeMismatch);
}

TEST_CASE("build_residual: the Fermat cubic example") {
  MultiPoly r = y("y0^3 + y1^3 + y2^3 + y3^3");
  MultiPoly s1 = y("y1^3") + r, s2 = y("y2^3") + r, s3 = y("y3^3") + r, s = y("y1*y2*y3");
  MultiPoly q = build_residual(s1, s2, s3, s, r);
  CHECK(q.homogeneous_degree() == 6);
  CHECK(q * r == s1 * s2 * s3 - s.pow(3));
  CHECK(proportional(q, load_example("residual27").surface));

  CHECK(code_of([&] { build_residual(s1, s2, s3, s, y("y0^3 + y1^3 + y2^3 + 2*y3^3")); }) ==
        ErrorCode::NonzeroRemainder);
  CHECK(code_of([&] { build_residual(s, s, s, s, r); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { build_residual(s1, s2, s3, y("y1*y2"), r); }) == ErrorCode::DegreeMismatch);
}

TEST_CASE("build_power_pullback: identity, the 36-cusp sextic and the octic") {
  std::vector<MultiPoly> z = {y("y0"), y("y1"), y("y0 + y1 - y2 - y3"), y("8*y0 + 8*y1 - 64*y2 - y3")};
  CHECK(build_power_pullback(kS, z, 1) == kS);

  // the expansion in z, with z_i replaced by the tangent forms
  std::vector<std::string> zn = {"z0", "z1", "z2", "z3"};
  MultiPoly shown =
      parse_poly("(z0*z1)^3 - (8/9*z0^3 + 8/9*z1^3 - 64/63*z2^3 + 1/63*z3^3)*(1/9*z0^3 + 1/9*z1^3 + 1/63*z2^3 - "
                 "1/63*z3^3)",
                 zn);
  MultiPoly sextic = build_power_pullback(kS, z, 3);
  CHECK(sextic.homogeneous_degree() == 6);
  CHECK(proportional(sextic, shown.substitute(z)));
  CHECK(sextic == load_example("cusp36").surface);

  MultiPoly octic = build_power_pullback(kS, z, 4);
  CHECK(octic.homogeneous_degree() == 8);
  CHECK(octic == load_example("octic64").surface);

  CHECK(code_of([&] { build_power_pullback(kS, {z[0], z[1], z[0] + z[1], z[3]}, 3); }) ==
        ErrorCode::DependentForms);
  CHECK(code_of([&] { build_power_pullback(kS, {z[0], z[1], z[2]}, 3); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("line_quadric_points: coordinate lines and tangency") {
  LinePoints p = line_quadric_points(y("y0"), y("y1"), kS);
  auto e2 = ProjectivePoint::from_rationals({0, 0, 1, 0}).coords();
  auto e3 = ProjectivePoint::from_rationals({0, 0, 0, 1}).coords();
  auto same = [](const ProjectivePoint& a, const std::vector<AlgebraicValue>& b) {
    return proportional(a.coords(), b, 128) == ZeroState::Zero;
  };
  CHECK(((same(p.first, e2) && same(p.second, e3)) || (same(p.first, e3) && same(p.second, e2))));
  CHECK_FALSE(p.tangent);

  LinePoints t = line_quadric_points(y("y0"), y("y2 - y3"), kS);
  CHECK(t.tangent);
  CHECK(proportional(t.first.coords(), ProjectivePoint::from_rationals({0, 1, 0, 0}).coords(), 128) ==
        ZeroState::Zero);
  CHECK(proportional(t.second.coords(), t.first.coords(), 128) == ZeroState::Zero);

  CHECK(code_of([] { line_quadric_points(y("y0"), y("2*y0"), kS); }) == ErrorCode::DegenerateLine);
  CHECK(code_of([] { line_quadric_points(y("y0"), y("y2"), kS); }) == ErrorCode::LineInQuadric);
  CHECK(code_of([] { line_quadric_points(y("y0"), y("y1"), y("y0")); }) == ErrorCode::DegreeMismatch);
}

TEST_CASE("line_quadric_points: irrational intersections lie on both planes and the quadric") {
  LinePoints p = line_quadric_points(y("y0 - y1"), y("y2"), y("y0^2 - 2*y3^2 + y1*y3"));
  for (const auto* q : {&p.first, &p.second}) {
    CHECK(is_zero_heuristic(y("y0 - y1").evaluate_symbolic(q->coords()), 256) == ZeroState::Zero);
    CHECK(is_zero_heuristic(y("y2").evaluate_symbolic(q->coords()), 256) == ZeroState::Zero);
    CHECK(is_zero_heuristic(y("y0^2 - 2*y3^2 + y1*y3").evaluate_symbolic(q->coords()), 256) == ZeroState::Zero);
  }
  CHECK(proportional(p.first.coords(), p.second.coords(), 256) == ZeroState::NonZero);
}

TEST_CASE("six planes: 15 lines give 30 distinct singular points of the sextic") {
  MultiPoly b = load_example("sextic30").surface;
  std::vector<ProjectivePoint> pts;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      LinePoints lp = line_quadric_points(kF[i], kF[j], kS);
      CHECK_FALSE(lp.tangent);
      pts.push_back(lp.first);
      pts.push_back(lp.second);
    }
  REQUIRE(pts.size() == 30);
  for (const auto& p : pts) CHECK(is_singular(b, p) == Singularity::Singular);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      CHECK(proportional(pts[i].coords(), pts[j].coords(), 128) == ZeroState::NonZero);
  CHECK(six_plane_points().size() == 30);
}

TEST_CASE("table rows: points are the singular subset of the thirty, matching the prediction") {
  auto all = six_plane_points();
  for (int row = 1; row <= 9; ++row) {
    ExampleBundle b = load_example("table72_row" + std::to_string(row));
    long singular = 0;
    for (const auto& p : all) singular += is_singular(b.surface, p) == Singularity::Singular;
    CHECK(static_cast<long>(b.points.size()) == singular);
    CHECK(singular == b.expected.nu);
    CHECK(b.predicted == singular);
    for (const auto& p : b.points) {
      bool found = false;
      for (const auto& q : all) found = found || proportional(p.coords(), q.coords(), 128) == ZeroState::Zero;
      CHECK(found);
    }
  }
}

TEST_CASE("roots_of_power") {
  auto cube = roots_of_power(Rational(-1, 3), 3);
  REQUIRE(cube.size() == 3);
  for (const auto& r : cube) CHECK(is_zero_heuristic(r.pow(3) + AlgebraicValue(Rational(1, 3)), 256) == ZeroState::Zero);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(is_zero_heuristic(cube[i] - cube[j], 128) == ZeroState::NonZero);

  auto four = roots_of_power(Rational(16), 4);
  REQUIRE(four.size() == 4);
  CHECK(four[0].is_rational());
  CHECK(four[0].rational() == 2);
  CHECK(four[2].is_rational());
  CHECK(four[2].rational() == -2);
  CHECK_FALSE(four[1].is_rational());
  CHECK(is_zero_heuristic(four[1] * four[1] + AlgebraicValue(4), 256) == ZeroState::Zero);

  CHECK(roots_of_power(Rational(0), 3).size() == 1);
  CHECK(roots_of_power(Rational(5), 1)[0].rational() == 5);
  CHECK(code_of([] { roots_of_power(Rational(2), 0); }) == ErrorCode::InvalidInput);
}

TEST_CASE("verify_inventory: the 36 cusps") {
  ExampleBundle b = load_example("cusp36");
  std::vector<SingularPointRecord> recs;
  for (const auto& p : b.points) recs.push_back(claim(p, ADEType::make(Family::A, 2)));
  REQUIRE(recs.size() == 36);
  auto verified = verify_inventory(b.surface, recs);
  CHECK(verified.size() == 36);
  for (const auto& r : verified) {
    CHECK(r.frame_kind == FrameKind::Linear);
    CHECK(r.v1.has_value());
  }
}

TEST_CASE("verify_inventory: errors") {
  ExampleBundle b = load_example("sextic30");
  const ADEType a1 = ADEType::make(Family::A, 1), a2 = ADEType::make(Family::A, 2);
  // (1:1:1:1) is not on the six-plane sextic
  CHECK(code_of([&] { verify_inventory(b.surface, {claim(ProjectivePoint::from_rationals({1, 1, 1, 1}), a1)}); }) ==
        ErrorCode::NotSingular);
  // a smooth point of the sextic
  MultiPoly cubic = y("y0^3 + y1^3 + y2^3 + y3^3");
  CHECK(code_of([&] { verify_inventory(cubic, {claim(ProjectivePoint::from_rationals({1, -1, 0, 0}), a1)}); }) ==
        ErrorCode::NotSingular);
  CHECK(code_of([&] { verify_inventory(b.surface, {claim(b.points[0], a1)}); }) == ErrorCode::TypeMismatch);
  CHECK(code_of([&] {
          verify_inventory(b.surface, {claim(b.points[0], a2), claim(b.points[0].scaled(AlgebraicValue(3)), a2)});
        }) == ErrorCode::DuplicatePoint);
  CHECK(verify_inventory(b.surface, {claim(b.points[0], a2), claim(b.points[1], a2)}).size() == 2);
}

TEST_CASE("examples: names and bundles") {
  auto names = example_names();
  CHECK(names.size() == 14);
  for (const auto& n : names) CHECK(load_example(n).name == n);
  CHECK(code_of([] { load_example("sextic31"); }) == ErrorCode::UnknownExample);
  ExampleBundle q = load_example("quintic_template");
  CHECK(q.nvars == 5);
  CHECK(q.cover_degree == 0);
  CHECK(q.surface.homogeneous_degree() == 5);
}

TEST_CASE("run_example: six-plane sextic and the last table row") {
  ExampleReport s = run_example("sextic30");
  CHECK(s.nu == 30);
  CHECK(s.ranks[0].result.rank == 25);
  CHECK(s.ranks[1].result.rank == 55);
  CHECK(s.small.h11 == 11);
  CHECK(*s.small.h12 == 23);
  CHECK(s.matches_expected);
  for (const auto& c : s.small.checks) CHECK(c.pass);

  ExampleReport r9 = run_example("table72_row9");
  CHECK(r9.nu == 28);
  CHECK(r9.ranks[0].result.rank == 24);
  CHECK(r9.ranks[1].result.rank == 52);
  CHECK(r9.small.h11 == 9);
  CHECK(*r9.small.h12 == 27);
}

TEST_CASE("run_example: 36 cusps") {
  ExampleReport r = run_example("cusp36");
  CHECK(r.nu == 36);
  CHECK(r.ranks[0].result.rank == 30);
  CHECK(r.ranks[1].result.rank == 66);
  CHECK(r.ranks[0].result.certified);
  CHECK(r.ranks[1].result.certified);
  CHECK(r.small.h11 == 13);
  CHECK(*r.small.h12 == 7);
}

TEST_CASE("run_example: the quintic template") {
  ExampleReport r = run_example("quintic_template");
  CHECK(r.nu == 1);
  CHECK_FALSE(r.has_small);
  CHECK(r.big.h11 == 1 + 4 * r.nu - r.ranks[0].result.rank);
  CHECK(*r.big.h12 == 101 - r.ranks[0].result.rank);
  CHECK(r.matches_expected);
}

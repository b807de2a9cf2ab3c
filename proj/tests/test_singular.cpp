#include <map>

#include "adedefect/error.hpp"
#include "adedefect/poly/parser.hpp"
#include "adedefect/singular/ade.hpp"
#include "adedefect/singular/classify.hpp"
#include "doctest.h"
#include "support/ade_samples.hpp"

using namespace ade;

namespace {

const std::vector<std::string> kY4 = {"y0", "y1", "y2", "y3"};
const std::vector<std::string> kY5 = {"y0", "y1", "y2", "y3", "y4"};

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidInput;
}

ProjectivePoint origin(int n) {
  std::vector<Rational> c(n, Rational(0));
  c[0] = 1;
  return ProjectivePoint::from_rationals(c);
}

}  // namespace

TEST_CASE("ADEType: parse and format") {
  for (std::string s : {"A1", "A3", "A17", "D4", "D9", "E6", "E7", "E8"}) CHECK(ADEType::parse(s).to_string() == s);
  CHECK(code_of([] { ADEType::parse("D3"); }) == ErrorCode::InvalidIndex);
  CHECK(code_of([] { ADEType::parse("E9"); }) == ErrorCode::InvalidIndex);
  CHECK(code_of([] { ADEType::parse("A0"); }) == ErrorCode::InvalidIndex);
  CHECK(code_of([] { ADEType::parse("X9"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { ADEType::parse("A"); }) == ErrorCode::InvalidInput);
}

TEST_CASE("mu_and_near_points: examples") {
  CHECK(mu_and_near_points({{ADEType::make(Family::D, 4), 30}}).mu == 120);
  CHECK(mu_and_near_points({{ADEType::make(Family::A, 3), 64}}).mu == 128);
  CHECK(mu_and_near_points({}).mu == 0);
  MuReport mixed = mu_and_near_points({{ADEType::make(Family::A, 1), 5}, {ADEType::make(Family::E, 7), 2}});
  CHECK(mixed.mu == 5 + 14);
  CHECK(mixed.near_points == 12);
  CHECK(mixed.terms.size() == 2);
  CHECK(code_of([] { mu_and_near_points({{ADEType{Family::D, 2}, 1}}); }) == ErrorCode::InvalidIndex);
  CHECK(code_of([] { mu_and_near_points({{ADEType::make(Family::A, 2), -1}}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("mu_and_near_points: singleton minus one is the infinitely near count") {
  auto near = [](const ADEType& t) {
    switch (t.family) {
      case Family::A: return (t.index + 1) / 2 - 1;
      case Family::D: return 2 * (t.index / 2) - 1;
      case Family::E: return t.index == 6 ? 3 : t.index == 7 ? 6 : 7;
    }
    return -1;
  };
  std::vector<ADEType> types;
  for (int m = 1; m <= 20; ++m) types.push_back(ADEType::make(Family::A, m));
  for (int m = 4; m <= 20; ++m) types.push_back(ADEType::make(Family::D, m));
  for (int m = 6; m <= 8; ++m) types.push_back(ADEType::make(Family::E, m));
  for (const auto& t : types) {
    CHECK(mu_and_near_points({{t, 1}}).mu - 1 == near(t));
    CHECK(mu_and_near_points({{t, 1}}).near_points == near(t));
  }
}

TEST_CASE("lift_type: examples and identities") {
  CHECK(lift_type(ADEType::make(Family::A, 1), 4) == ADEType::make(Family::A, 3));
  CHECK(lift_type(ADEType::make(Family::A, 2), 3) == ADEType::make(Family::D, 4));
  CHECK(lift_type(ADEType::make(Family::A, 5), 2) == ADEType::make(Family::A, 5));
  CHECK(lift_type(ADEType::make(Family::A, 1), 2) == ADEType::make(Family::A, 1));
  for (auto t : {ADEType::make(Family::D, 6), ADEType::make(Family::E, 7)}) CHECK(lift_type(t, 2) == t);
  CHECK(code_of([] { lift_type(ADEType::make(Family::A, 3), 3); }) == ErrorCode::UnsupportedLift);
  CHECK(code_of([] { lift_type(ADEType::make(Family::E, 6), 4); }) == ErrorCode::UnsupportedLift);
  CHECK(code_of([] { lift_type(ADEType::make(Family::A, 1), 1); }) == ErrorCode::UnsupportedLift);
}

TEST_CASE("is_singular: examples") {
  MultiPoly fermat = parse_poly("y0^4 + y1^4 + y2^4 + y3^4", kY4);
  CHECK(is_singular(fermat, ProjectivePoint::from_rationals({1, 1, 1, 1})) == Singularity::Smooth);
  MultiPoly cone = parse_poly("y0*y1 - y2*y3", kY4);
  CHECK(is_singular(cone, ProjectivePoint::from_rationals({1, 0, 0, 0})) == Singularity::Smooth);
  MultiPoly cusp = parse_poly("y1^3 + y0*y2^2 + y0*y3^2", kY4);
  CHECK(is_singular(cusp, origin(4)) == Singularity::Singular);
  // the same surface seen through an algebraic point: y1 -> y1 - sqrt2 y0
  AlgebraicValue r2 = AlgebraicValue::root_of({Rational(-2), 0, 1}, {1.41, 0.0}, 0.1);
  MultiPoly moved = parse_poly("(y1 - y0)^3 + y0*y2^2 + y0*y3^2", kY4);
  CHECK(is_singular(moved, ProjectivePoint({AlgebraicValue(1L), AlgebraicValue(1L), AlgebraicValue(0L),
                                            AlgebraicValue(0L)})) == Singularity::Singular);
  CHECK(is_singular(moved, ProjectivePoint({AlgebraicValue(1L), r2, AlgebraicValue(0L), AlgebraicValue(0L)})) ==
        Singularity::Smooth);
}

TEST_CASE("classify: normal form examples") {
  CHECK(classify(parse_poly("y1^3 + y0*y2^2 + y0*y3^2", kY4), origin(4)).type.to_string() == "A2");
  CHECK(classify(parse_poly("y1*y2^2 + y1^3 + y0*y3^2", kY4), origin(4)).type.to_string() == "D4");
  CHECK(classify(parse_poly("y0*y1^2 + y0*y2^2 + y0*y3^2 + y1^3", kY4), origin(4)).type.to_string() == "A1");
  CHECK(classify(parse_poly("y1^4 + y0^2*y2^2 + y0^2*y3^2", kY4), origin(4)).type.to_string() == "A3");
  CHECK(classify(parse_poly("y1^4 + y0*y2^3 + y0^2*y3^2", kY4), origin(4)).type.to_string() == "E6");
  CHECK(classify(parse_poly("y1^3*y2 + y0*y2^3 + y0^2*y3^2", kY4), origin(4)).type.to_string() == "E7");
  CHECK(classify(parse_poly("y1^5 + y0^2*y2^3 + y0^3*y3^2", kY4), origin(4)).type.to_string() == "E8");
  CHECK(classify(parse_poly("y0^2*y1*y2^2 + y1^5 + y0^3*y3^2", kY4), origin(4)).type.to_string() == "D6");
  // threefold germ x1^4 + x2^2 + x3^2 + x4^2
  CHECK(classify(parse_poly("y1^4 + y0^2*(y2^2 + y3^2 + y4^2)", kY5), origin(5)).type.to_string() == "A3");
}

TEST_CASE("classify: error codes") {
  MultiPoly cubic_cone = parse_poly("y1^3 + y2^3 + y3^3", kY4);
  CHECK(code_of([&] { classify(cubic_cone, origin(4)); }) == ErrorCode::NotDoublePoint);
  MultiPoly corank3 = parse_poly("y0*y4^2 + y1^3 + y2^3 + y3^3", kY5);
  CHECK(code_of([&] { classify(corank3, origin(5)); }) == ErrorCode::CorankTooHigh);
  MultiPoly x9 = parse_poly("y1^4 + y2^4 + y0^2*y3^2", kY4);
  CHECK(code_of([&] { classify(x9, origin(4)); }) == ErrorCode::NotSimple);
  MultiPoly j10 = parse_poly("y0^3*y1^3 + y2^6 + y0^4*y3^2", kY4);
  CHECK(code_of([&] { classify(j10, origin(4)); }) == ErrorCode::NotSimple);
  MultiPoly a20 = parse_poly("y1^21 + y0^19*y2^2 + y0^19*y3^2", kY4);
  CHECK(code_of([&] { classify(a20, origin(4)); }) == ErrorCode::TruncationInsufficient);
  CHECK(classify(a20, origin(4), ClassifyOptions{24, 256}).type.to_string() == "A20");
  MultiPoly smooth = parse_poly("y0^2*y1 + y2^3 + y3^3", kY4);
  CHECK(code_of([&] { classify(smooth, origin(4)); }) == ErrorCode::NotSingular);
}

TEST_CASE("classify: algebraic points run on balls") {
  // cusp moved to (1 : sqrt2 : 0 : 0) and a node at (1 : 0 : 0 : cube root of 2)
  AlgebraicValue r2 = AlgebraicValue::root_of({Rational(-2), 0, 1}, {1.41, 0.0}, 0.1);
  AlgebraicValue c2 = AlgebraicValue::root_of({Rational(-2), 0, 0, 1}, {1.26, 0.0}, 0.1);
  // (y1^2 - 2 y0^2) vanishes doubly only along y1 = +-sqrt2 y0
  MultiPoly cusp = parse_poly("(y1^2 - 2*y0^2)^3 + y0^4*y2^2 + y0^4*y3^2", kY4);
  Classification c = classify(cusp, ProjectivePoint({AlgebraicValue(1L), r2, AlgebraicValue(0L), AlgebraicValue(0L)}));
  CHECK(!c.exact);
  CHECK(c.type.to_string() == "A2");
  MultiPoly node = parse_poly("(y3^3 - 2*y0^3)^2 + y0^4*y1^2 + y0^4*y2^2", kY4);
  c = classify(node, ProjectivePoint({AlgebraicValue(1L), AlgebraicValue(0L), AlgebraicValue(0L), c2}));
  CHECK(c.type.to_string() == "A1");
  CHECK(c.chart == 3);
}

TEST_CASE("adapted_frame: A2 kernel and failure for a node") {
  MultiPoly cusp = parse_poly("y1^3 + y0*y2^2 + y0*y3^2", kY4);
  SingularPointRecord rec = adapted_frame(cusp, origin(4), ADEType::make(Family::A, 2));
  REQUIRE(rec.v1.has_value());
  CHECK(rec.frame_kind == FrameKind::Linear);
  CHECK(!rec.v2.has_value());
  // the kernel of the Hessian at the origin is spanned by e0, e1
  std::vector<Ball> v = eval_values(*rec.v1, 128);
  CHECK(v[2].contains_zero());
  CHECK(v[3].contains_zero());
  CHECK(v[1].excludes_zero());

  MultiPoly node = parse_poly("y0*y1^2 + y0*y2^2 + y0*y3^2 + y1^3", kY4);
  CHECK(code_of([&] { adapted_frame(node, origin(4), ADEType::make(Family::A, 2)); }) ==
        ErrorCode::KernelDimensionUnexpected);
  CHECK(adapted_frame(node, origin(4), ADEType::make(Family::A, 1)).frame_kind == FrameKind::Linear);
  MultiPoly e6 = parse_poly("y1^4 + y0*y2^3 + y0^2*y3^2", kY4);
  CHECK(adapted_frame(e6, origin(4), ADEType::make(Family::E, 6)).frame_kind == FrameKind::Unavailable);

  MultiPoly d4 = parse_poly("y1*y2^2 + y1^3 + y0*y3^2", kY4);
  SingularPointRecord r4 = adapted_frame(d4, origin(4), ADEType::make(Family::D, 4));
  CHECK(r4.v1.has_value());
  CHECK(r4.v2.has_value());
}

TEST_CASE("property: Hessian annihilates P and v1 at A_m points") {
  testing::SampleGenerator gen(404);
  auto rows = testing::normal_form_rows();
  for (const auto& row : rows) {
    if (row.type.family != Family::A || row.type.index < 2) continue;
    for (int k = 0; k < 3; ++k) {
      testing::Sample s = gen.draw(row, true);
      SingularPointRecord rec = adapted_frame(s.f, s.point, row.type);
      REQUIRE(rec.v1.has_value());
      HessianValue h = hessian(s.f, s.point, 256);
      std::vector<Ball> v = eval_values(*rec.v1, 256);
      std::vector<Ball> p = s.point.balls(256);
      for (int i = 0; i < 5; ++i) {
        Ball hp(256), hv(256);
        for (int j = 0; j < 5; ++j) {
          hp += h.ball(i, j) * p[j];
          hv += h.ball(i, j) * v[j];
        }
        CHECK(hp.contains_zero());
        CHECK(hv.contains_zero());
      }
      CHECK(proportional(v, p, 256) == ZeroState::NonZero);
    }
  }
}

TEST_CASE("property: semiquasihomogeneous perturbations keep their type") {
  testing::SampleGenerator gen(20240611);
  std::map<std::string, int> truncated;
  int total = 0, wrong = 0, cut = 0;
  for (const auto& row : testing::normal_form_rows()) {
    for (int k = 0; k < 50; ++k) {
      testing::Sample s = gen.draw(row, k % 2 == 1);
      ++total;
      try {
        Classification c = classify(s.f, s.point);
        if (c.type != row.type) {
          ++wrong;
          MESSAGE("misclassified " << row.type.to_string() << " as " << c.type.to_string() << ": " << s.germ.to_string());
        }
      } catch (const Error& e) {
        if (e.code() == ErrorCode::TruncationInsufficient) {
          ++cut;
          ++truncated[row.type.to_string()];
        } else {
          ++wrong;
          MESSAGE(row.type.to_string() << " raised " << e.what() << ": " << s.germ.to_string());
        }
      }
    }
  }
  CHECK(wrong == 0);
  CHECK(cut * 20 < total);
}

TEST_CASE("property: ball path agrees on algebraically rescaled representatives") {
  testing::SampleGenerator gen(77);
  AlgebraicValue r2 = AlgebraicValue::root_of({Rational(-2), 0, 1}, {1.41, 0.0}, 0.1);
  for (const auto& row : testing::normal_form_rows()) {
    for (int k = 0; k < 3; ++k) {
      testing::Sample s = gen.draw(row, true);
      ProjectivePoint scaled = s.point.scaled(r2);
      REQUIRE(!scaled.is_rational());
      Classification c = classify(s.f, scaled);
      CHECK(!c.exact);
      CHECK(c.type == row.type);
    }
  }
}

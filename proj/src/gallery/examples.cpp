#include <chrono>
#include <functional>
#include <map>

#include "adedefect/error.hpp"
#include "adedefect/gallery/gallery.hpp"
#include "adedefect/poly/parser.hpp"

namespace ade {

namespace {

const std::vector<std::string>& y_names() {
  static const std::vector<std::string> names{"y0", "y1", "y2", "y3"};
  return names;
}

MultiPoly y(const std::string& text) { return parse_poly(text, y_names(), {true}); }

// Ingredients shared by the six-plane sextic and the table rows.
struct SixPlanes {
  MultiPoly s = y("y0*y1 - y2*y3");
  std::vector<MultiPoly> f{y("y0"),
                           y("y1"),
                           y("4*y0 - 2*y2 - 2*y3 + y1"),
                           y("y0 - 2*y2 - 2*y3 + 4*y1"),
                           y("y0 + y2 + y3 + y1"),
                           y("y0 - y2 - y3 + y1")};
  MultiPoly r = y("y0^2 + y1^2 + y2^2 + y3^2");
  MultiPoly r1 = y("y0 + 2*y2 + 3*y3 + 4*y1");
  MultiPoly r2 = y("4*y0 + 3*y2 + 2*y3 + y1");

  MultiPoly F(int i) const { return f[i - 1]; }
  MultiPoly pair(int i, int j) const { return F(i) * F(j) + s * Rational(2); }
  MultiPoly s123() const { return F(1) * F(2) * F(3) + s * r1; }
  MultiPoly s456() const { return F(4) * F(5) * F(6) + s * r2; }
  MultiPoly s3456() const { return F(3) * F(4) * F(5) * F(6) + s * r; }
  MultiPoly s23456() const { return F(2) * F(3) * F(4) * F(5) * F(6) + r1 * s * r; }
};

struct TableRow {
  std::string title;
  std::function<std::vector<MultiPoly>(const SixPlanes&)> factors;
  Expected expected;
};

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows{
      {"F1*S23456 - S^3", [](const SixPlanes& k) { return std::vector<MultiPoly>{k.F(1), k.s23456()}; },
       {10, {9, 19}, 3, 75, "table row 1"}},
      {"S12*S3456 - S^3", [](const SixPlanes& k) { return std::vector<MultiPoly>{k.pair(1, 2), k.s3456()}; },
       {16, {15, 31}, 3, 57, "table row 2"}},
      {"S123*S456 - S^3", [](const SixPlanes& k) { return std::vector<MultiPoly>{k.s123(), k.s456()}; },
       {18, {17, 35}, 3, 51, "table row 3"}},
      {"F1*F2*S3456 - S^3", [](const SixPlanes& k) { return std::vector<MultiPoly>{k.F(1), k.F(2), k.s3456()}; },
       {18, {16, 34}, 5, 53, "table row 4"}},
      {"F1*S23*S456 - S^3",
       [](const SixPlanes& k) { return std::vector<MultiPoly>{k.F(1), k.pair(2, 3), k.s456()}; },
       {22, {20, 42}, 5, 41, "table row 5"}},
      {"S12*S34*S56 - S^3",
       [](const SixPlanes& k) { return std::vector<MultiPoly>{k.pair(1, 2), k.pair(3, 4), k.pair(5, 6)}; },
       {24, {22, 46}, 5, 35, "table row 6"}},
      {"F1*F2*F3*S456 - S^3",
       [](const SixPlanes& k) { return std::vector<MultiPoly>{k.F(1), k.F(2), k.F(3), k.s456()}; },
       {24, {21, 45}, 7, 37, "table row 7"}},
      {"F1*F2*S34*S56 - S^3",
       [](const SixPlanes& k) { return std::vector<MultiPoly>{k.F(1), k.F(2), k.pair(3, 4), k.pair(5, 6)}; },
       {26, {23, 49}, 7, 31, "table row 8"}},
      {"F1*F2*F3*F4*S56 - S^3",
       [](const SixPlanes& k) { return std::vector<MultiPoly>{k.F(1), k.F(2), k.F(3), k.F(4), k.pair(5, 6)}; },
       {28, {24, 52}, 9, 27, "table row 9"}},
  };
  return rows;
}

// Tangent planes of the quadric at (0:1:0:0), (1:0:0:0), (1:1:1:1), (8:8:1:64).
std::vector<MultiPoly> tangent_forms() {
  return {y("y0"), y("y1"), y("y0 + y1 - y2 - y3"), y("8*y0 + 8*y1 - 64*y2 - y3")};
}

// Preimages under z -> z^n of the four images of the singular points, mapped back to y.
std::vector<ProjectivePoint> power_preimages(int n) {
  const std::vector<std::vector<Rational>> images{
      {0, 1, 1, 8}, {1, 0, 1, 8}, {1, 1, 0, -49}, {8, 8, -49, 0}};
  // y = A^{-1} z with A the coefficient matrix of the tangent forms
  Matrix<Rational> inv(4, 4, Rational(0));
  {
    auto forms = tangent_forms();
    Matrix<Rational> aug(4, 8, Rational(0));
    for (int i = 0; i < 4; ++i) {
      for (const auto& [e, c] : forms[i].terms())
        for (int v = 0; v < 4; ++v)
          if (e[v] == 1) aug(i, v) = c;
      aug(i, 4 + i) = 1;
    }
    for (int c = 0; c < 4; ++c) {
      int p = c;
      while (aug(p, c) == 0) ++p;
      for (int j = 0; j < 8; ++j) std::swap(aug(p, j), aug(c, j));
      Rational d = aug(c, c);
      for (int j = 0; j < 8; ++j) aug(c, j) /= d;
      for (int i = 0; i < 4; ++i) {
        if (i == c || aug(i, c) == 0) continue;
        Rational f = aug(i, c);
        for (int j = 0; j < 8; ++j) aug(i, j) -= f * aug(c, j);
      }
    }
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) inv(i, j) = aug(i, 4 + j);
  }

  std::vector<ProjectivePoint> out;
  for (const auto& img : images) {
    // fix the first nonzero coordinate's root to be rational after scaling
    int lead = 0;
    while (img[lead] == 0) ++lead;
    std::vector<std::vector<AlgebraicValue>> choices(4);
    for (int i = 0; i < 4; ++i) {
      if (img[i] == 0)
        choices[i] = {AlgebraicValue(0)};
      else if (i == lead)
        choices[i] = {AlgebraicValue(1)};
      else {
        Rational ratio = img[i] / img[lead];
        ratio.canonicalize();
        choices[i] = roots_of_power(ratio, n);
      }
    }
    std::function<void(int, std::vector<AlgebraicValue>&)> rec = [&](int i, std::vector<AlgebraicValue>& z) {
      if (i == 4) {
        std::vector<AlgebraicValue> yv;
        for (int r = 0; r < 4; ++r) {
          AlgebraicValue acc(0);
          for (int c = 0; c < 4; ++c)
            if (inv(r, c) != 0 && !z[c].is_exact_zero()) acc = acc + AlgebraicValue(inv(r, c)) * z[c];
          yv.push_back(acc);
        }
        out.emplace_back(std::move(yv));
        return;
      }
      for (const auto& v : choices[i]) {
        z.push_back(v);
        rec(i + 1, z);
        z.pop_back();
      }
    };
    std::vector<AlgebraicValue> z;
    rec(0, z);
  }
  return out;
}

std::vector<ProjectivePoint> singular_subset(const MultiPoly& b, const std::vector<ProjectivePoint>& pool) {
  std::vector<ProjectivePoint> out;
  for (const auto& p : pool)
    if (is_singular(b, p) == Singularity::Singular) out.push_back(p);
  return out;
}

ExampleBundle sextic30() {
  SixPlanes k;
  DirectSurface d = build_direct(k.f, k.s);
  ExampleBundle b;
  b.name = "sextic30";
  b.title = "F1*...*F6 - S^3";
  b.surface = d.surface;
  b.cover_degree = 3;
  b.points = singular_subset(b.surface, six_plane_points());
  b.type = ADEType::make(Family::A, 2);
  b.predicted = d.predicted_cusps;
  b.expected = {30, {25, 55}, 11, 23, "six-plane sextic"};
  return b;
}

ExampleBundle table_row(int i) {
  SixPlanes k;
  const TableRow& row = table_rows().at(i - 1);
  DirectSurface d = build_direct(row.factors(k), k.s);
  ExampleBundle b;
  b.name = "table72_row" + std::to_string(i);
  b.title = row.title;
  b.surface = d.surface;
  b.cover_degree = 3;
  b.points = singular_subset(b.surface, six_plane_points());
  b.type = ADEType::make(Family::A, 2);
  b.predicted = d.predicted_cusps;
  b.expected = row.expected;
  return b;
}

ExampleBundle residual27() {
  MultiPoly r = y("y0^3 + y1^3 + y2^3 + y3^3");
  MultiPoly s1 = y("y1^3") + r, s2 = y("y2^3") + r, s3 = y("y3^3") + r;
  ExampleBundle b;
  b.name = "residual27";
  b.title = "(S1*S2*S3 - S^3)/R, Fermat cubic R";
  b.surface = build_residual(s1, s2, s3, y("y1*y2*y3"), r);
  b.cover_degree = 3;
  b.type = ADEType::make(Family::A, 2);
  // eps runs over the cube roots of -1/3
  auto eps = roots_of_power(Rational(-1, 3), 3);
  for (int zero = 1; zero <= 3; ++zero)
    for (const auto& a : eps)
      for (const auto& c : eps) {
        std::vector<AlgebraicValue> v{AlgebraicValue(1)};
        const AlgebraicValue* next[2] = {&a, &c};
        int used = 0;
        for (int i = 1; i <= 3; ++i) v.push_back(i == zero ? AlgebraicValue(0) : *next[used++]);
        b.points.emplace_back(std::move(v));
      }
  b.expected = {27, {24, 51}, 7, 28, "residual sextic"};
  return b;
}

ExampleBundle cusp36() {
  ExampleBundle b;
  b.name = "cusp36";
  b.title = "pull-back of y0*y1 - y2*y3 under the cube map";
  b.surface = build_power_pullback(y("y0*y1 - y2*y3"), tangent_forms(), 3);
  b.cover_degree = 3;
  b.type = ADEType::make(Family::A, 2);
  b.points = power_preimages(3);
  b.expected = {36, {30, 66}, 13, 7, "36-cusp sextic"};
  return b;
}

ExampleBundle octic64() {
  ExampleBundle b;
  b.name = "octic64";
  b.title = "pull-back of y0*y1 - y2*y3 under the fourth-power map";
  b.surface = build_power_pullback(y("y0*y1 - y2*y3"), tangent_forms(), 4);
  b.cover_degree = 2;
  b.type = ADEType::make(Family::A, 3);
  b.points = power_preimages(4);
  b.expected = {64, {122}, 7, 27, "64-A3 octic"};
  return b;
}

// A space quintic with a node at (1:0:0:0) and the plane y0 + y1 + y2 + y3,
// giving the threefold S5 + y4^4 * L with an A3 point over the node.
ExampleBundle quintic_template() {
  const std::vector<std::string> names{"y0", "y1", "y2", "y3", "y4"};
  ExampleBundle b;
  b.name = "quintic_template";
  b.title = "S5 + y4^4*L, S5 = y0^3*(y1^2+y2^2+y3^2) + y1^5 + 2*y2^5 + 3*y3^5";
  b.surface = parse_poly("y0^3*(y1^2 + y2^2 + y3^2) + y1^5 + 2*y2^5 + 3*y3^5 + y4^4*(y0 + y1 + y2 + y3)", names,
                         {true});
  b.cover_degree = 0;
  b.nvars = 5;
  b.type = ADEType::make(Family::A, 3);
  b.points.push_back(ProjectivePoint::from_rationals({1, 0, 0, 0, 0}));
  b.expected = {1, {2}, 3, 99, "derived: one node, 126 x 2 matrix of full rank"};
  return b;
}

}  // namespace

std::vector<ProjectivePoint> six_plane_points() {
  SixPlanes k;
  std::vector<ProjectivePoint> out;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      LinePoints lp = line_quadric_points(k.f[i], k.f[j], k.s);
      out.push_back(lp.first);
      if (!lp.tangent) out.push_back(lp.second);
    }
  return out;
}

std::vector<std::string> example_names() {
  std::vector<std::string> names{"sextic30"};
  for (int i = 1; i <= 9; ++i) names.push_back("table72_row" + std::to_string(i));
  for (const char* n : {"residual27", "cusp36", "octic64", "quintic_template"}) names.emplace_back(n);
  return names;
}

ExampleBundle load_example(const std::string& name) {
  if (name == "sextic30") return sextic30();
  if (name.rfind("table72_row", 0) == 0 && name.size() == 12 && name[11] >= '1' && name[11] <= '9')
    return table_row(name[11] - '0');
  if (name == "residual27") return residual27();
  if (name == "cusp36") return cusp36();
  if (name == "octic64") return octic64();
  if (name == "quintic_template") return quintic_template();
  throw Error(ErrorCode::UnknownExample, "no bundled example '" + name + "'");
}

std::vector<ConditionMatrix> example_matrices(const ExampleBundle& bundle,
                                              const std::vector<SingularPointRecord>& records) {
  const int d = bundle.surface.degree();
  std::vector<ProjectivePoint> pts;
  for (const auto& r : records) pts.push_back(r.point);
  switch (bundle.cover_degree) {
    case 3:
      return {build_vanishing_matrix(4 * d / 3 - 4, pts),
              build_condition_matrix(5 * d / 3 - 4, records, Specialization::TripleCusp)};
    case 2: return {build_condition_matrix(3 * d / 2 - 4, records, Specialization::DoubleAChain)};
    default: return {build_condition_matrix(5, records, Specialization::QuinticA3, 5)};
  }
}

ExampleReport run_bundle(const ExampleBundle& bundle, const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  ExampleReport rep;
  rep.name = bundle.name;
  rep.title = bundle.title;
  rep.expected = bundle.expected;
  std::vector<SingularPointRecord> claimed;
  for (const auto& p : bundle.points)
    claimed.push_back({p, bundle.type, std::nullopt, std::nullopt, FrameKind::Unavailable});
  rep.records = verify_inventory(bundle.surface, claimed, options.precision);
  rep.nu = static_cast<long>(rep.records.size());
  const int d = bundle.surface.degree();
  Inventory inv{{bundle.type, rep.nu}};

  if (bundle.cover_degree == 3 || bundle.cover_degree == 2) {
    CoverSpec spec = CoverSpec::from_inventory(d, bundle.cover_degree, inv);
    rep.defect = bundle.cover_degree == 3 ? defect_triple(d, rep.records, options.rank)
                                          : defect_double(d, rep.records, options.rank);
    rep.ranks = rep.defect.ranks;
    rep.small = hodge_small(spec, rep.ranks);
    rep.big = hodge_big_cover(spec, rep.defect.delta);
    rep.big.rank_inputs = rep.ranks;
    rep.small.checks.push_back(euler_check(rep.small, spec));
    rep.small.checks.push_back(path_independence(rep.big, rep.small, spec));
  } else {
    // hypersurface in P4 with A3 points: delta = dim V - C(2d-1, 4) + mu
    rep.has_small = false;
    ConditionMatrix m = build_condition_matrix(2 * d - 5, rep.records, Specialization::QuinticA3, 5);
    rep.ranks.push_back(named_rank("quintic_A3", m, options.rank));
    const long mu = mu_and_near_points(inv).mu;
    const long rk = rep.ranks[0].result.rank;
    const long dim_v = binomial_ll(2 * d - 1, 4) - rk;
    rep.defect.formula = "quintic_A3";
    rep.defect.delta = dim_v - binomial_ll(2 * d - 1, 4) + mu;
    rep.defect.components = {{"mu", mu}, {"rank", rk}, {"dim_V", dim_v}};
    rep.defect.ranks = rep.ranks;
    rep.defect.certified = rep.ranks[0].result.certified;
    rep.big = hodge_big_general(toric_inputs_p4(d), mu, rep.defect.delta);
    rep.big.rank_inputs = rep.ranks;
  }

  const HodgeReport& shown = rep.has_small ? rep.small : rep.big;
  bool ok = rep.nu == bundle.expected.nu && rep.ranks.size() == bundle.expected.ranks.size() &&
            shown.h11 == bundle.expected.h11 && shown.h12 == bundle.expected.h12;
  for (std::size_t i = 0; ok && i < rep.ranks.size(); ++i) ok = rep.ranks[i].result.rank == bundle.expected.ranks[i];
  rep.matches_expected = ok;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

ExampleReport run_example(const std::string& name, const RunOptions& options) {
  return run_bundle(load_example(name), options);
}

}  // namespace ade

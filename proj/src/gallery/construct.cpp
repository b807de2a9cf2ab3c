#include <cmath>
#include <complex>
#include <numbers>

#include "adedefect/error.hpp"
#include "adedefect/gallery/gallery.hpp"

namespace ade {

namespace {

int degree_of(const MultiPoly& f, const char* what) {
  auto d = f.homogeneous_degree();
  if (!d || f.is_zero()) throw Error(ErrorCode::DegreeMismatch, std::string(what) + " is not a nonzero form");
  return *d;
}

// Row i holds the coefficients of the linear form i.
Matrix<Rational> linear_coefficients(const std::vector<MultiPoly>& forms, int nvars) {
  Matrix<Rational> a(forms.size(), nvars, Rational(0));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].nvars() != nvars) throw Error(ErrorCode::DimensionMismatch, "forms in different rings");
    for (const auto& [e, c] : forms[i].terms()) {
      if (total_degree(e) != 1) throw Error(ErrorCode::DegreeMismatch, "expected a linear form");
      for (int v = 0; v < nvars; ++v)
        if (e[v] == 1) a(i, v) = c;
    }
  }
  return a;
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix<Rational>& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  Rational out(n, d);
  out.canonicalize();
  return out;
}

// Exact integer n-th root of |q| when it exists.
std::optional<Rational> rational_root(const Rational& q, int n) {
  Integer num = abs(q.get_num()), den = q.get_den(), rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0) return std::nullopt;
  Rational out(rn, rd);
  out.canonicalize();
  return out;
}

}  // namespace

DirectSurface build_direct(const std::vector<MultiPoly>& factors, const MultiPoly& s) {
  if (factors.empty()) throw Error(ErrorCode::DegreeMismatch, "no factors");
  const int ds = degree_of(s, "S");
  std::vector<long> deg;
  long total = 0;
  MultiPoly prod = MultiPoly::constant(s.nvars(), Rational(1));
  for (const auto& f : factors) {
    deg.push_back(degree_of(f, "factor"));
    total += deg.back();
    prod = prod * f;
  }
  if (total != 3 * ds)
    throw Error(ErrorCode::DegreeMismatch, "factor degrees sum to " + std::to_string(total) + ", need " +
                                               std::to_string(3 * ds));
  long pairs = 0;
  for (std::size_t i = 0; i < deg.size(); ++i)
    for (std::size_t j = i + 1; j < deg.size(); ++j) pairs += deg[i] * deg[j];
  return {prod - s.pow(3), ds * pairs};
}

MultiPoly build_residual(const MultiPoly& s1, const MultiPoly& s2, const MultiPoly& s3, const MultiPoly& s,
                         const MultiPoly& r) {
  for (const MultiPoly* f : {&s1, &s2, &s3, &s, &r})
    if (degree_of(*f, "ingredient") != 3) throw Error(ErrorCode::DegreeMismatch, "residual ingredients are cubics");
  MultiPoly top = s1 * s2 * s3 - s.pow(3);
  if (top.is_zero()) throw Error(ErrorCode::InvalidInput, "S1 S2 S3 equals S^3; the quotient is empty");
  auto [q, rem] = divide(top, r);
  if (!rem.is_zero()) throw Error(ErrorCode::NonzeroRemainder, "R does not divide S1 S2 S3 - S^3");
  return q;
}

MultiPoly build_power_pullback(const MultiPoly& quadric, const std::vector<MultiPoly>& forms, int n) {
  const int nv = quadric.nvars();
  if (static_cast<int>(forms.size()) != nv) throw Error(ErrorCode::DimensionMismatch, "need one form per variable");
  if (n < 1) throw Error(ErrorCode::InvalidInput, "power must be positive");
  Matrix<Rational> a = linear_coefficients(forms, nv);
  // invert through [A | I]
  Matrix<Rational> aug(nv, 2 * nv, Rational(0));
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j) aug(i, j) = a(i, j);
    aug(i, nv + i) = 1;
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < nv || piv[nv - 1] != static_cast<std::size_t>(nv - 1))
    throw Error(ErrorCode::DependentForms, "the linear forms are dependent");
  // y = A^{-1} z, then z_i -> forms[i]^n
  std::vector<MultiPoly> powered;
  for (const auto& f : forms) powered.push_back(f.pow(n));
  std::vector<MultiPoly> y;
  for (int i = 0; i < nv; ++i) {
    MultiPoly yi(nv);
    for (int j = 0; j < nv; ++j)
      if (aug(i, nv + j) != 0) yi += powered[j] * aug(i, nv + j);
    y.push_back(yi);
  }
  return quadric.substitute(y);
}

LinePoints line_quadric_points(const MultiPoly& l1, const MultiPoly& l2, const MultiPoly& q) {
  const int nv = q.nvars();
  if (degree_of(q, "Q") != 2) throw Error(ErrorCode::DegreeMismatch, "Q must be a quadric");
  Matrix<Rational> a = linear_coefficients({l1, l2}, nv);
  auto piv = rref(a);
  if (piv.size() < 2) throw Error(ErrorCode::DegenerateLine, "the two planes coincide");
  // kernel basis from the free columns
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < nv; ++f) {
    if (std::find(piv.begin(), piv.end(), static_cast<std::size_t>(f)) != piv.end()) continue;
    std::vector<Rational> v(nv, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(r, f);
    basis.push_back(v);
  }
  const auto& p = basis[0];
  const auto& u = basis[1];
  // Q(s p + t u) = A s^2 + B s t + C t^2
  auto at = [&](const Rational& s, const Rational& t) {
    std::vector<Rational> x(nv);
    for (int i = 0; i < nv; ++i) x[i] = s * p[i] + t * u[i];
    return q.evaluate(x);
  };
  const Rational qa = at(1, 0), qc = at(0, 1), qb = at(1, 1) - qa - qc;
  if (qa == 0 && qb == 0 && qc == 0) throw Error(ErrorCode::LineInQuadric, "the line lies on the quadric");

  auto combo = [&](const AlgebraicValue& s, const AlgebraicValue& t) {
    std::vector<AlgebraicValue> x;
    for (int i = 0; i < nv; ++i) x.push_back(s * AlgebraicValue(p[i]) + t * AlgebraicValue(u[i]));
    return ProjectivePoint(std::move(x));
  };
  if (qa == 0) {
    // t = 0 is a root; the other one solves B s + C t = 0
    LinePoints out{combo(1, 0), combo(AlgebraicValue(Rational(-qc)), qb), qb == 0};
    if (qb == 0) out.second = out.first;
    return out;
  }
  Rational disc = qb * qb - 4 * qa * qc;
  AlgebraicValue root;
  if (auto r = rational_sqrt(disc)) {
    root = *r;
  } else {
    double mag = std::sqrt(std::abs(disc.get_d()));
    std::complex<double> seed = disc > 0 ? std::complex<double>(mag, 0) : std::complex<double>(0, mag);
    root = AlgebraicValue::root_of({-disc, Rational(0), Rational(1)}, seed, mag / 2);
  }
  // s = (-B +- root) / (2A) with t = 1
  AlgebraicValue s1 = (AlgebraicValue(-qb) + root) / AlgebraicValue(2 * qa);
  AlgebraicValue s2 = (AlgebraicValue(-qb) - root) / AlgebraicValue(2 * qa);
  return {combo(s1, 1), combo(s2, 1), disc == 0};
}

std::vector<AlgebraicValue> roots_of_power(const Rational& c, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "root order must be positive");
  if (c == 0) return std::vector<AlgebraicValue>(1, AlgebraicValue(0));
  const double r = std::pow(std::abs(c.get_d()), 1.0 / n);
  const double base = c > 0 ? 0.0 : std::numbers::pi;
  auto exact = rational_root(c, n);
  UniPoly poly(n + 1, Rational(0));
  poly[0] = -c;
  poly[n] = 1;
  std::vector<AlgebraicValue> out;
  for (int k = 0; k < n; ++k) {
    double theta = (base + 2 * std::numbers::pi * k) / n;
    std::complex<double> z = std::polar(r, theta);
    bool real = std::abs(z.imag()) < 1e-9 * r;
    if (exact && real) {
      out.push_back(z.real() > 0 ? *exact : Rational(-*exact));
      continue;
    }
    if (real) z = {z.real(), 0};
    // adjacent roots are 2 r sin(pi/n) apart
    double radius = n == 1 ? r / 2 + 1 : r * std::sin(std::numbers::pi / n) / 2;
    out.push_back(AlgebraicValue::root_of(poly, z, radius));
  }
  return out;
}

std::vector<SingularPointRecord> verify_inventory(const MultiPoly& b, const std::vector<SingularPointRecord>& records,
                                                  long precision) {
  std::vector<std::vector<Ball>> seen;
  std::vector<SingularPointRecord> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    const std::string where = "point " + std::to_string(i);
    if (is_singular(b, rec.point, precision) != Singularity::Singular)
      throw Error(ErrorCode::NotSingular, where + " is not a singular point");
    Classification c = classify(b, rec.point, {12, precision});
    if (c.type != rec.ade)
      throw Error(ErrorCode::TypeMismatch, where + " is " + c.type.to_string() + ", expected " + rec.ade.to_string());
    std::vector<Ball> balls = rec.point.balls(precision);
    for (const auto& other : seen)
      if (proportional(balls, other, precision) != ZeroState::NonZero)
        throw Error(ErrorCode::DuplicatePoint, where + " repeats an earlier point");
    seen.push_back(balls);
    if (rec.frame_kind == FrameKind::Supplied) {
      out.push_back(rec);
    } else {
      out.push_back(adapted_frame(b, rec.point, rec.ade, precision));
    }
  }
  return out;
}

}  // namespace ade

#include "adedefect/poly/point.hpp"

#include "adedefect/error.hpp"

namespace ade {

ProjectivePoint::ProjectivePoint(std::vector<AlgebraicValue> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorCode::InvalidInput, "point without coordinates");
  bool all_zero = true;
  for (const auto& c : coords_)
    if (!c.is_exact_zero()) all_zero = false;
  if (all_zero) throw Error(ErrorCode::InvalidInput, "all coordinates are zero");
}

ProjectivePoint ProjectivePoint::from_rationals(const std::vector<Rational>& coords) {
  std::vector<AlgebraicValue> v;
  for (const auto& q : coords) v.emplace_back(q);
  return ProjectivePoint(std::move(v));
}

bool ProjectivePoint::is_rational() const {
  for (const auto& c : coords_)
    if (!c.is_rational()) return false;
  return true;
}

std::vector<Rational> ProjectivePoint::rational_coords() const {
  std::vector<Rational> out;
  for (const auto& c : coords_) out.push_back(c.rational());
  return out;
}

std::vector<Ball> ProjectivePoint::balls(long precision) const { return eval_values(coords_, precision); }

ProjectivePoint ProjectivePoint::scaled(const AlgebraicValue& lambda) const {
  std::vector<AlgebraicValue> v;
  for (const auto& c : coords_) v.push_back(c * lambda);
  return ProjectivePoint(std::move(v));
}

void require_nonzero(const ProjectivePoint& p, long precision) {
  for (const auto& c : p.coords())
    if (is_zero_heuristic(c, precision) == ZeroState::NonZero) return;
  throw Error(ErrorCode::InvalidInput, "no coordinate is certified nonzero");
}

ZeroState proportional(const std::vector<Ball>& a, const std::vector<Ball>& b, long precision) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vectors of different length");
  bool undecided = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      Ball m = a[i] * b[j] - a[j] * b[i];
      ZeroState s = ball_zero_state(m, precision);
      if (s == ZeroState::NonZero) return ZeroState::NonZero;
      if (s == ZeroState::Undecided) undecided = true;
    }
  return undecided ? ZeroState::Undecided : ZeroState::Zero;
}

ZeroState proportional(const std::vector<AlgebraicValue>& a, const std::vector<AlgebraicValue>& b, long precision) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vectors of different length");
  std::vector<AlgebraicValue> all(a);
  all.insert(all.end(), b.begin(), b.end());
  std::vector<Ball> lo = eval_values(all, precision);
  std::vector<Ball> hi = eval_values(all, 2 * precision);
  std::size_t n = a.size();
  ZeroState s1 = proportional(std::vector<Ball>(lo.begin(), lo.begin() + n), std::vector<Ball>(lo.begin() + n, lo.end()),
                              precision);
  if (s1 == ZeroState::NonZero) return s1;
  ZeroState s2 = proportional(std::vector<Ball>(hi.begin(), hi.begin() + n), std::vector<Ball>(hi.begin() + n, hi.end()),
                              2 * precision);
  if (s2 == ZeroState::NonZero) return s2;
  return (s1 == ZeroState::Zero && s2 == ZeroState::Zero) ? ZeroState::Zero : ZeroState::Undecided;
}

ScalarValue evaluate(const MultiPoly& f, const ProjectivePoint& p, long precision) {
  if (p.dim() != f.nvars()) throw Error(ErrorCode::DimensionMismatch, "point and polynomial dimensions differ");
  ScalarValue out;
  if (p.is_rational()) {
    out.exact = true;
    out.q = f.evaluate(p.rational_coords());
    out.ball = Ball::from_rational(out.q, precision);
    return out;
  }
  out.ball = f.evaluate(p.balls(precision + 16));
  return out;
}

std::vector<MultiPoly> hessian_polys(const MultiPoly& f) {
  int n = f.nvars();
  std::vector<MultiPoly> out(n * n, MultiPoly(n));
  for (int i = 0; i < n; ++i) {
    MultiPoly fi = f.derive(i);
    for (int j = i; j < n; ++j) {
      out[i * n + j] = fi.derive(j);
      out[j * n + i] = out[i * n + j];
    }
  }
  return out;
}

HessianValue hessian(const MultiPoly& f, const ProjectivePoint& p, long precision) {
  if (p.dim() != f.nvars()) throw Error(ErrorCode::DimensionMismatch, "point and polynomial dimensions differ");
  int n = f.nvars();
  std::vector<MultiPoly> h = hessian_polys(f);
  HessianValue out;
  if (p.is_rational()) {
    out.exact = true;
    out.q = Matrix<Rational>(n, n);
    std::vector<Rational> x = p.rational_coords();
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) out.q(i, j) = out.q(j, i) = h[i * n + j].evaluate(x);
  }
  out.ball = Matrix<Ball>(n, n, Ball(precision));
  std::vector<Ball> x = p.balls(precision + 16);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      out.ball(i, j) = h[i * n + j].evaluate(x);
      out.ball(j, i) = out.ball(i, j);
    }
  return out;
}

Matrix<AlgebraicValue> hessian_symbolic(const MultiPoly& f, const ProjectivePoint& p) {
  int n = f.nvars();
  std::vector<MultiPoly> h = hessian_polys(f);
  Matrix<AlgebraicValue> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out(i, j) = out(j, i) = h[i * n + j].evaluate_symbolic(p.coords());
  return out;
}

namespace {

template <class T>
std::vector<T> uni_mul(const std::vector<T>& a, const std::vector<T>& b, std::size_t order, const T& zero) {
  std::size_t n = std::min(order + 1, a.size() + b.size() - 1);
  std::vector<T> r(n, zero);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

template <class T, class FromRational>
std::vector<T> line_expand(const MultiPoly& f, const std::vector<T>& p, const std::vector<T>& v, std::size_t order,
                           const T& zero, FromRational from) {
  int n = f.nvars();
  std::vector<std::vector<std::vector<T>>> powers(n);
  for (int i = 0; i < n; ++i) powers[i].push_back({from(Rational(1))});
  std::vector<T> acc(order + 1, zero);
  for (const auto& [e, c] : f.terms()) {
    std::vector<T> t{from(c)};
    for (int i = 0; i < n; ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i])
        powers[i].push_back(uni_mul(powers[i].back(), std::vector<T>{p[i], v[i]}, order, zero));
      if (e[i] > 0) t = uni_mul(t, powers[i][e[i]], order, zero);
    }
    for (std::size_t k = 0; k < t.size(); ++k) acc[k] = acc[k] + t[k];
  }
  return acc;
}

}  // namespace

std::vector<AlgebraicValue> restrict_to_line(const MultiPoly& f, const ProjectivePoint& p,
                                             const std::vector<AlgebraicValue>& v, long precision) {
  if (p.dim() != f.nvars() || static_cast<int>(v.size()) != f.nvars())
    throw Error(ErrorCode::DimensionMismatch, "point, direction and polynomial dimensions differ");
  if (proportional(p.coords(), v, precision) != ZeroState::NonZero)
    throw Error(ErrorCode::DegenerateDirection, "direction is proportional to the point");
  std::size_t order = static_cast<std::size_t>(std::max(0, f.degree()));
  auto out = line_expand<AlgebraicValue>(f, p.coords(), v, order, AlgebraicValue(),
                                         [](const Rational& q) { return AlgebraicValue(q); });
  while (out.size() > 1 && out.back().is_exact_zero()) out.pop_back();
  return out;
}

std::vector<Ball> restrict_to_line(const MultiPoly& f, const std::vector<Ball>& p, const std::vector<Ball>& v,
                                   int order) {
  if (static_cast<int>(p.size()) != f.nvars() || static_cast<int>(v.size()) != f.nvars())
    throw Error(ErrorCode::DimensionMismatch, "point, direction and polynomial dimensions differ");
  mpfr_prec_t prec = 64;
  for (const auto& b : p) prec = std::max(prec, b.precision());
  return line_expand<Ball>(f, p, v, static_cast<std::size_t>(order), Ball(prec),
                           [prec](const Rational& q) { return Ball::from_rational(q, prec); });
}

}  // namespace ade

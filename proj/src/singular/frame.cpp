#include <algorithm>
#include <functional>

#include "adedefect/error.hpp"
#include "adedefect/numbers/field.hpp"
#include "adedefect/singular/classify.hpp"

namespace ade {

namespace {

// Laplace expansion; sizes here never exceed 5.
template <class T>
T det(const Matrix<T>& m, const std::vector<int>& rows, const std::vector<int>& cols, const T& zero, const T& one) {
  if (rows.empty()) return one;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  T acc = zero;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const T& x = m(rows[0], cols[k]);
    std::vector<int> sub_cols;
    for (std::size_t t = 0; t < cols.size(); ++t)
      if (t != k) sub_cols.push_back(cols[t]);
    T term = x * det(m, sub_rows, sub_cols, zero, one);
    acc = (k % 2 == 0) ? T(acc + term) : T(acc - term);
  }
  return acc;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

double magnitude(const Ball& b) { return std::abs(b.mid_double()); }

// True when some maximal minor of the stacked vectors is certified nonzero.
bool independent(const std::vector<std::vector<Ball>>& vs, long precision) {
  int k = static_cast<int>(vs.size());
  int n = static_cast<int>(vs.front().size());
  Matrix<Ball> m(k, n, Ball(precision));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = vs[i][j];
  std::vector<int> rows(k);
  for (int i = 0; i < k; ++i) rows[i] = i;
  Ball zero(precision), one = Ball::from_rational(Rational(1), precision);
  for (const auto& cols : subsets(n, k))
    if (ball_zero_state(det(m, rows, cols, zero, one), precision) == ZeroState::NonZero) return true;
  return false;
}

}  // namespace

SingularPointRecord adapted_frame(const MultiPoly& f, const ProjectivePoint& p, const ADEType& ade, long precision) {
  if (p.dim() != f.nvars()) throw Error(ErrorCode::DimensionMismatch, "point and polynomial dimensions differ");
  SingularPointRecord rec{p, ade, std::nullopt, std::nullopt, FrameKind::Unavailable};
  if (ade.family == Family::A && ade.index == 1) {
    rec.frame_kind = FrameKind::Linear;
    return rec;
  }
  int wanted;
  if (ade.family == Family::A)
    wanted = 1;
  else if (ade.family == Family::D && ade.index == 4)
    wanted = 2;
  else
    return rec;

  const int n = f.nvars();
  const int rank = n - 1 - wanted;
  HessianValue h = hessian(f, p, precision);
  Ball bzero(precision), bone = Ball::from_rational(Rational(1), precision);

  // rank check: some rank-sized minor nonzero, every larger minor zero
  std::vector<int> best_rows, best_cols;
  double best = -1;
  for (const auto& rows : subsets(n, rank))
    for (const auto& cols : subsets(n, rank)) {
      ZeroState s;
      double mag;
      if (h.exact) {
        Rational d = det(h.q, rows, cols, Rational(0), Rational(1));
        s = d == 0 ? ZeroState::Zero : ZeroState::NonZero;
        mag = std::abs(d.get_d());
      } else {
        Ball d = det(h.ball, rows, cols, bzero, bone);
        s = ball_zero_state(d, precision);
        mag = magnitude(d);
      }
      if (s == ZeroState::NonZero && mag > best) {
        best = mag;
        best_rows = rows;
        best_cols = cols;
      }
    }
  if (best_rows.empty() && rank > 0)
    throw Error(ErrorCode::KernelDimensionUnexpected, "Hessian rank is below " + std::to_string(rank));
  for (const auto& rows : subsets(n, rank + 1))
    for (const auto& cols : subsets(n, rank + 1)) {
      bool zero = h.exact ? det(h.q, rows, cols, Rational(0), Rational(1)) == 0
                          : ball_zero_state(det(h.ball, rows, cols, bzero, bone), precision) == ZeroState::Zero;
      if (!zero) throw Error(ErrorCode::KernelDimensionUnexpected, "Hessian rank exceeds " + std::to_string(rank));
    }

  // kernel vectors by Cramer's rule on the chosen minor, one per free column
  Matrix<AlgebraicValue> hs = hessian_symbolic(f, p);
  AlgebraicValue azero(0L), aone(1L);
  AlgebraicValue base = det(hs, best_rows, best_cols, azero, aone);
  std::vector<std::vector<AlgebraicValue>> kernel;
  for (int free = 0; free < n; ++free) {
    if (std::find(best_cols.begin(), best_cols.end(), free) != best_cols.end()) continue;
    std::vector<AlgebraicValue> k(n, azero);
    k[free] = base;
    for (int t = 0; t < rank; ++t) {
      std::vector<int> cols = best_cols;
      cols[t] = free;
      k[best_cols[t]] = -det(hs, best_rows, cols, azero, aone);
    }
    kernel.push_back(std::move(k));
  }

  std::vector<std::vector<Ball>> span{p.balls(precision)};
  std::vector<std::vector<AlgebraicValue>> chosen;
  for (const auto& k : kernel) {
    if (static_cast<int>(chosen.size()) == wanted) break;
    std::vector<Ball> kb = eval_values(k, precision);
    span.push_back(kb);
    if (independent(span, precision))
      chosen.push_back(k);
    else
      span.pop_back();
  }
  if (static_cast<int>(chosen.size()) < wanted)
    throw Error(ErrorCode::KernelDimensionUnexpected, "Hessian kernel does not extend the point");
  rec.v1 = chosen[0];
  if (wanted == 2) rec.v2 = chosen[1];
  rec.frame_kind = FrameKind::Linear;
  return rec;
}

SingularPointRecord supplied_frame(const ProjectivePoint& p, const ADEType& ade, std::vector<AlgebraicValue> v1,
                                   std::optional<std::vector<AlgebraicValue>> v2, long precision) {
  if (static_cast<int>(v1.size()) != p.dim() || (v2 && static_cast<int>(v2->size()) != p.dim()))
    throw Error(ErrorCode::DimensionMismatch, "frame vectors must match the point dimension");
  std::vector<std::vector<Ball>> span{p.balls(precision), eval_values(v1, precision)};
  if (!independent(span, precision)) throw Error(ErrorCode::DegenerateDirection, "v1 is proportional to the point");
  if (v2) {
    span.push_back(eval_values(*v2, precision));
    if (!independent(span, precision))
      throw Error(ErrorCode::DegenerateDirection, "v2 lies in the span of the point and v1");
  }
  return SingularPointRecord{p, ade, std::move(v1), std::move(v2), FrameKind::Supplied};
}

}  // namespace ade

#include "adedefect/defect/condition.hpp"

#include "adedefect/error.hpp"

namespace ade {

const char* to_string(ConditionTag tag) {
  switch (tag) {
    case ConditionTag::Value: return "value";
    case ConditionTag::AlongV1: return "v1";
    case ConditionTag::AlongV2: return "v2";
    case ConditionTag::AlongFiber: return "fiber";
  }
  return "?";
}

const char* to_string(Specialization s) {
  switch (s) {
    case Specialization::TripleCusp: return "triple_cusp";
    case Specialization::DoubleAChain: return "double_A_chain";
    case Specialization::QuinticA3: return "quintic_A3";
    case Specialization::GeneralLinearFrame: return "general_linear_frame";
  }
  return "?";
}

Specialization parse_specialization(const std::string& text) {
  for (auto s : {Specialization::TripleCusp, Specialization::DoubleAChain, Specialization::QuinticA3,
                 Specialization::GeneralLinearFrame})
    if (text == to_string(s)) return s;
  throw Error(ErrorCode::UnsupportedSpecialization, "unknown specialization '" + text + "'");
}

ConditionMatrix::ConditionMatrix(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
  rows_ = monomial_exponents(nvars, degree);
}

void ConditionMatrix::add_column(ColumnSpec c) {
  if (static_cast<int>(c.base.size()) != nvars_ ||
      (c.order > 0 && static_cast<int>(c.direction.size()) != nvars_))
    throw Error(ErrorCode::DimensionMismatch, "column vectors must have " + std::to_string(nvars_) + " entries");
  columns_.push_back(std::move(c));
}

ConditionMatrix ConditionMatrix::permuted_rows(const std::vector<std::size_t>& perm) const {
  if (perm.size() != rows_.size()) throw Error(ErrorCode::DimensionMismatch, "permutation length");
  ConditionMatrix out(*this);
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || seen[perm[i]]) throw Error(ErrorCode::InvalidInput, "not a permutation");
    seen[perm[i]] = true;
    out.rows_[i] = rows_[perm[i]];
  }
  return out;
}

bool ConditionMatrix::is_rational() const {
  for (const auto& c : columns_) {
    for (const auto& x : c.base)
      if (!x.is_rational()) return false;
    if (c.order > 0)
      for (const auto& x : c.direction)
        if (!x.is_rational()) return false;
  }
  return true;
}

namespace {

Rational scaled(const Rational& x, const Rational& k) { return x * k; }
Ball scaled(const Ball& x, const Rational& k) { return x.mul_rational(k); }

template <class T>
using Uni = std::vector<T>;

// a * b truncated after t^order
template <class T>
Uni<T> mul_trunc(const Uni<T>& a, const Uni<T>& b, int order, const T& zero) {
  Uni<T> out(std::min<std::size_t>(a.size() + b.size() - 1, order + 1), zero);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// j! [t^j] m(P + t w) for every row monomial m
template <class T>
std::vector<T> column_values(const std::vector<Exponent>& rows, int nvars, int degree, const T* p, const T* w,
                             int order, const T& zero, const T& one) {
  std::vector<std::vector<Uni<T>>> powers(nvars);
  for (int i = 0; i < nvars; ++i) {
    Uni<T> lin{p[i]};
    if (order > 0) lin.push_back(w[i]);
    powers[i].push_back(Uni<T>{one});
    for (int k = 1; k <= degree; ++k) powers[i].push_back(mul_trunc(powers[i].back(), lin, order, zero));
  }
  Rational fact(1);
  for (int k = 2; k <= order; ++k) fact *= k;
  std::vector<T> out;
  out.reserve(rows.size());
  for (const auto& e : rows) {
    Uni<T> acc{one};
    for (int i = 0; i < nvars; ++i)
      if (e[i] != 0) acc = mul_trunc(acc, powers[i][e[i]], order, zero);
    out.push_back(static_cast<int>(acc.size()) > order ? scaled(acc[order], fact) : zero);
  }
  return out;
}

template <class T>
void fill_column(Matrix<T>& m, std::size_t c, const std::vector<T>& values) {
  for (std::size_t r = 0; r < values.size(); ++r) m(r, c) = values[r];
}

}  // namespace

std::optional<Matrix<Rational>> ConditionMatrix::realize_exact() const {
  if (!is_rational()) return std::nullopt;
  Matrix<Rational> m(rows(), cols(), Rational(0));
  auto rat = [](const std::vector<AlgebraicValue>& v) {
    std::vector<Rational> out;
    for (const auto& x : v) out.push_back(x.rational());
    return out;
  };
  for (std::size_t c = 0; c < cols(); ++c) {
    const ColumnSpec& col = columns_[c];
    auto p = rat(col.base);
    auto w = col.order > 0 ? rat(col.direction) : std::vector<Rational>(nvars_);
    fill_column(m, c, column_values<Rational>(rows_, nvars_, degree_, p.data(), w.data(), col.order, Rational(0),
                                              Rational(1)));
  }
  return m;
}

Matrix<Ball> ConditionMatrix::realize(long precision) const {
  // one joint evaluation so shared subexpressions are computed once
  std::vector<AlgebraicValue> values;
  for (const auto& col : columns_) {
    values.insert(values.end(), col.base.begin(), col.base.end());
    if (col.order > 0) values.insert(values.end(), col.direction.begin(), col.direction.end());
  }
  std::vector<Ball> balls = eval_values(values, precision);
  Ball zero(precision);
  Ball one = Ball::from_rational(Rational(1), precision);
  Matrix<Ball> m(rows(), cols(), zero);
  std::vector<Ball> none(nvars_, zero);
  std::size_t at = 0;
  for (std::size_t c = 0; c < cols(); ++c) {
    const ColumnSpec& col = columns_[c];
    const Ball* p = &balls[at];
    at += nvars_;
    const Ball* w = none.data();
    if (col.order > 0) {
      w = &balls[at];
      at += nvars_;
    }
    fill_column(m, c, column_values<Ball>(rows_, nvars_, degree_, p, w, col.order, zero, one));
  }
  return m;
}

ConditionMatrix build_vanishing_matrix(int degree, const std::vector<ProjectivePoint>& points, int nvars) {
  ConditionMatrix m(nvars, degree);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != nvars)
      throw Error(ErrorCode::DimensionMismatch, "point " + std::to_string(i) + " has the wrong dimension");
    m.add_column({static_cast<int>(i), ConditionTag::Value, 0, points[i].coords(), {}});
  }
  return m;
}

namespace {

const std::vector<AlgebraicValue>& need(const std::optional<std::vector<AlgebraicValue>>& v, std::size_t index,
                                        const char* which) {
  if (!v) throw Error(ErrorCode::MissingFrame, "point " + std::to_string(index) + " has no " + which);
  return *v;
}

void chain(ConditionMatrix& m, int point, const SingularPointRecord& rec, int top) {
  for (int j = 1; j <= top; ++j)
    m.add_column({point, ConditionTag::AlongV1, j, rec.point.coords(), need(rec.v1, point, "v1")});
}

}  // namespace

ConditionMatrix build_condition_matrix(int degree, const std::vector<SingularPointRecord>& records,
                                       Specialization specialization, int nvars) {
  if (specialization == Specialization::QuinticA3 && nvars != 5)
    throw Error(ErrorCode::DimensionMismatch, "quintic_A3 lives in 5 variables");
  ConditionMatrix m(nvars, degree);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const SingularPointRecord& rec = records[i];
    const int at = static_cast<int>(i);
    if (rec.point.dim() != nvars)
      throw Error(ErrorCode::DimensionMismatch, "point " + std::to_string(i) + " has the wrong dimension");
    const ADEType& t = rec.ade;
    auto refuse = [&] {
      throw Error(ErrorCode::UnsupportedSpecialization,
                  std::string(to_string(specialization)) + " does not accept " + t.to_string());
    };
    m.add_column({at, ConditionTag::Value, 0, rec.point.coords(), {}});
    switch (specialization) {
      case Specialization::TripleCusp:
        if (t != ADEType::make(Family::A, 2)) refuse();
        chain(m, at, rec, 1);
        break;
      case Specialization::DoubleAChain:
        if (t.family != Family::A) refuse();
        chain(m, at, rec, (t.index + 1) / 2 - 1);
        break;
      case Specialization::QuinticA3: {
        if (t != ADEType::make(Family::A, 3)) refuse();
        std::vector<AlgebraicValue> e4(5, AlgebraicValue(0));
        e4[4] = 1;
        m.add_column({at, ConditionTag::AlongFiber, 1, rec.point.coords(), e4});
        break;
      }
      case Specialization::GeneralLinearFrame:
        if (t.family == Family::A) {
          chain(m, at, rec, (t.index + 1) / 2 - 1);
        } else {
          m.add_column({at, ConditionTag::AlongV2, 1, rec.point.coords(), need(rec.v2, i, "v2")});
          chain(m, at, rec, t.family == Family::D ? t.index / 2 - 1 : t.index - 5);
          bool canonical = t == ADEType::make(Family::D, 4);
          if (rec.frame_kind == FrameKind::Supplied && !canonical) m.set_frame_dependent(true);
        }
        break;
    }
  }
  return m;
}

}  // namespace ade

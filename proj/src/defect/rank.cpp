#include "adedefect/defect/rank.hpp"

#include <mpfr.h>

#include <algorithm>

#include "adedefect/error.hpp"

namespace ade {

const char* to_string(Backend b) {
  switch (b) {
    case Backend::Exact: return "exact";
    case Backend::Numeric: return "numeric";
    case Backend::Auto: return "auto";
  }
  return "?";
}

Backend parse_backend(const std::string& text) {
  for (auto b : {Backend::Exact, Backend::Numeric, Backend::Auto})
    if (text == to_string(b)) return b;
  throw Error(ErrorCode::InvalidInput, "unknown backend '" + text + "'");
}

long rank_exact(const Matrix<Rational>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // clear denominators column by column; ranks are unchanged
  std::vector<Integer> a(rows * cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Integer l = 1;
    for (std::size_t r = 0; r < rows; ++r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t r = 0; r < rows; ++r) a[r * cols + c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * cols + c]; };

  // Bareiss: every entry stays a minor of the input, so the divisions are exact
  Integer prev = 1, t;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != rank)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(p, j), at(rank, j));
    const Integer& piv = at(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = piv * at(i, j) - at(i, c) * at(rank, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = piv;
    ++rank;
  }
  return static_cast<long>(rank);
}

namespace {

// Complex midpoints without radii, for the pivot search.
class MidMatrix {
 public:
  MidMatrix(std::size_t rows, std::size_t cols, long precision)
      : rows_(rows), cols_(cols), re_(rows * cols), im_(rows * cols) {
    for (std::size_t k = 0; k < rows * cols; ++k) {
      mpfr_init2(&re_[k], precision);
      mpfr_init2(&im_[k], precision);
      mpfr_set_zero(&re_[k], 1);
      mpfr_set_zero(&im_[k], 1);
    }
  }
  MidMatrix(const MidMatrix&) = delete;
  MidMatrix& operator=(const MidMatrix&) = delete;
  ~MidMatrix() {
    for (std::size_t k = 0; k < re_.size(); ++k) {
      mpfr_clear(&re_[k]);
      mpfr_clear(&im_[k]);
    }
  }
  mpfr_ptr re(std::size_t r, std::size_t c) { return &re_[r * cols_ + c]; }
  mpfr_ptr im(std::size_t r, std::size_t c) { return &im_[r * cols_ + c]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // a(i, j) -= f * a(r, j) for the given columns
  void axpy(std::size_t i, std::size_t r, mpfr_srcptr fr, mpfr_srcptr fi, const std::vector<std::size_t>& cols,
            bool real, mpfr_ptr t) {
    for (std::size_t j : cols) {
      if (real) {
        mpfr_mul(t, fr, re(r, j), MPFR_RNDN);
        mpfr_sub(re(i, j), re(i, j), t, MPFR_RNDN);
        continue;
      }
      mpfr_fmms(t, fr, re(r, j), fi, im(r, j), MPFR_RNDN);
      mpfr_sub(re(i, j), re(i, j), t, MPFR_RNDN);
      mpfr_fmma(t, fr, im(r, j), fi, re(r, j), MPFR_RNDN);
      mpfr_sub(im(i, j), im(i, j), t, MPFR_RNDN);
    }
  }

 private:
  std::size_t rows_, cols_;
  std::vector<__mpfr_struct> re_, im_;
};

void magnitude(mpfr_ptr out, mpfr_srcptr re, mpfr_srcptr im) { mpfr_hypot(out, re, im, MPFR_RNDN); }

// f = a / b for complex midpoints
void cdiv(mpfr_ptr fr, mpfr_ptr fi, mpfr_srcptr ar, mpfr_srcptr ai, mpfr_srcptr br, mpfr_srcptr bi, long precision) {
  Scratch den(precision), nr(precision), ni(precision);
  mpfr_fmma(den, br, br, bi, bi, MPFR_RNDN);
  mpfr_fmma(nr, ar, br, ai, bi, MPFR_RNDN);
  mpfr_fmms(ni, ai, br, ar, bi, MPFR_RNDN);
  mpfr_div(fr, nr, den, MPFR_RNDN);
  mpfr_div(fi, ni, den, MPFR_RNDN);
}

struct Pivots {
  std::vector<std::size_t> rows, cols;
};

// Complete pivoting on midpoints. Ties go to the lowest (row, column), because
// remaining indices are scanned in increasing order with a strict comparison.
Pivots eliminate(const Matrix<Ball>& m, long precision, bool real) {
  const std::size_t R = m.rows(), C = m.cols();
  MidMatrix a(R, C, precision);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      mpfr_set(a.re(i, j), m(i, j).re(), MPFR_RNDN);
      mpfr_set(a.im(i, j), m(i, j).im(), MPFR_RNDN);
    }

  Scratch mag(64), best(64), tol(64);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      magnitude(mag, a.re(i, j), a.im(i, j));
      if (mpfr_greater_p(mag, tol)) mpfr_set(tol, mag.get(), MPFR_RNDN);
    }
  mpfr_mul_2si(tol, tol, -precision / 2, MPFR_RNDN);

  std::vector<std::size_t> rows(R), cols(C);
  for (std::size_t i = 0; i < R; ++i) rows[i] = i;
  for (std::size_t j = 0; j < C; ++j) cols[j] = j;
  Pivots out;
  Scratch fr(precision), fi(precision), t(precision);
  while (!rows.empty() && !cols.empty()) {
    std::size_t bi = 0, bj = 0;
    mpfr_set_zero(best, 1);
    for (std::size_t ii = 0; ii < rows.size(); ++ii)
      for (std::size_t jj = 0; jj < cols.size(); ++jj) {
        magnitude(mag, a.re(rows[ii], cols[jj]), a.im(rows[ii], cols[jj]));
        if (mpfr_greater_p(mag, best)) {
          mpfr_set(best, mag.get(), MPFR_RNDN);
          bi = ii;
          bj = jj;
        }
      }
    if (!mpfr_greater_p(best, tol)) break;
    const std::size_t pr = rows[bi], pc = cols[bj];
    out.rows.push_back(pr);
    out.cols.push_back(pc);
    rows.erase(rows.begin() + static_cast<long>(bi));
    cols.erase(cols.begin() + static_cast<long>(bj));
    for (std::size_t i : rows) {
      if (mpfr_zero_p(a.re(i, pc)) && mpfr_zero_p(a.im(i, pc))) continue;
      cdiv(fr, fi, a.re(i, pc), a.im(i, pc), a.re(pr, pc), a.im(pr, pc), precision);
      a.axpy(i, pr, fr, fi, cols, real, t);
    }
  }
  return out;
}

// Midpoint inverse of a square ball matrix by Gauss-Jordan with partial
// pivoting. Returned entries are exact balls.
std::vector<Ball> midpoint_inverse(const std::vector<Ball>& a, std::size_t n, long precision) {
  MidMatrix w(n, 2 * n, precision);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpfr_set(w.re(i, j), a[i * n + j].re(), MPFR_RNDN);
      mpfr_set(w.im(i, j), a[i * n + j].im(), MPFR_RNDN);
    }
    mpfr_set_ui(w.re(i, n + i), 1, MPFR_RNDN);
  }
  std::vector<std::size_t> all(2 * n);
  for (std::size_t j = 0; j < 2 * n; ++j) all[j] = j;
  Scratch mag(64), best(64), fr(precision), fi(precision), t(precision);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    mpfr_set_zero(best, 1);
    for (std::size_t i = c; i < n; ++i) {
      magnitude(mag, w.re(i, c), w.im(i, c));
      if (mpfr_greater_p(mag, best)) {
        mpfr_set(best, mag.get(), MPFR_RNDN);
        p = i;
      }
    }
    if (mpfr_zero_p(best.get())) throw Error(ErrorCode::RankUndecided, "pivot block is singular at midpoint");
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) {
        mpfr_swap(w.re(p, j), w.re(c, j));
        mpfr_swap(w.im(p, j), w.im(c, j));
      }
    // scale the pivot row to a unit pivot
    Scratch one_r(precision), one_i(precision);
    mpfr_set_ui(one_r, 1, MPFR_RNDN);
    cdiv(fr, fi, one_r, one_i, w.re(c, c), w.im(c, c), precision);
    Scratch nr(precision), ni(precision);
    for (std::size_t j = 0; j < 2 * n; ++j) {
      mpfr_fmms(nr, w.re(c, j), fr, w.im(c, j), fi, MPFR_RNDN);
      mpfr_fmma(ni, w.re(c, j), fi, w.im(c, j), fr, MPFR_RNDN);
      mpfr_set(w.re(c, j), nr.get(), MPFR_RNDN);
      mpfr_set(w.im(c, j), ni.get(), MPFR_RNDN);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      mpfr_set(fr, w.re(i, c), MPFR_RNDN);
      mpfr_set(fi, w.im(i, c), MPFR_RNDN);
      if (mpfr_zero_p(fr.get()) && mpfr_zero_p(fi.get())) continue;
      w.axpy(i, c, fr, fi, all, false, t);
    }
  }
  std::vector<Ball> x;
  x.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x.push_back(Ball::from_mpfr(w.re(i, n + j), w.im(i, n + j), precision));
  return x;
}

std::vector<Ball> block(const Matrix<Ball>& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
  std::vector<Ball> out;
  out.reserve(rows.size() * cols.size());
  for (std::size_t r : rows)
    for (std::size_t c : cols) out.push_back(m(r, c));
  return out;
}

std::vector<Ball> multiply(const std::vector<Ball>& a, const std::vector<Ball>& b, std::size_t n, std::size_t k,
                           std::size_t mcols) {
  std::vector<Ball> out;
  out.reserve(n * mcols);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < mcols; ++j) out.push_back(dot(&a[i * k], &b[j], k, mcols));
  return out;
}

// Row-sum norm from certified upper bounds of the entries.
void inf_norm(mpfr_ptr out, const std::vector<Ball>& a, std::size_t rows, std::size_t cols) {
  Scratch row, e;
  mpfr_set_zero(out, 1);
  for (std::size_t i = 0; i < rows; ++i) {
    mpfr_set_zero(row, 1);
    for (std::size_t j = 0; j < cols; ++j) {
      a[i * cols + j].abs_upper(e);
      mpfr_add(row, row, e, MPFR_RNDU);
    }
    if (mpfr_greater_p(row, out)) mpfr_set(out, row.get(), MPFR_RNDU);
  }
}

bool is_real(const Matrix<Ball>& m) {
  for (const auto& b : m.data())
    if (!b.is_real()) return false;
  return true;
}

}  // namespace

// The certificate: with X a midpoint inverse of the pivot block A11 and
// E = I - X A11, ||E|| < 1/2 proves A11 invertible (rank >= r). The Schur
// complement A22 - A21 A11^-1 A12 is enclosed by A22 - A21 (X A12) widened by
// ||A21_i||_1 * ||A11^-1 - X|| * max|A12|, where
// ||A11^-1 - X|| <= ||E|| ||X|| / (1 - ||E||). All of it must contain zero.
NumericRank rank_numeric_once(const Matrix<Ball>& m, long precision) {
  const std::size_t R = m.rows(), C = m.cols();
  Pivots piv = eliminate(m, precision, is_real(m));
  const std::size_t r = piv.rows.size();
  NumericRank out{static_cast<long>(r), false};

  std::vector<std::size_t> rest_rows, rest_cols;
  for (std::size_t i = 0; i < R; ++i)
    if (std::find(piv.rows.begin(), piv.rows.end(), i) == piv.rows.end()) rest_rows.push_back(i);
  for (std::size_t j = 0; j < C; ++j)
    if (std::find(piv.cols.begin(), piv.cols.end(), j) == piv.cols.end()) rest_cols.push_back(j);

  if (r == 0) {
    out.certified = std::all_of(m.data().begin(), m.data().end(), [](const Ball& b) { return b.contains_zero(); });
    return out;
  }

  std::vector<Ball> a11 = block(m, piv.rows, piv.cols);
  std::vector<Ball> x = midpoint_inverse(a11, r, precision);
  std::vector<Ball> e = multiply(x, a11, r, r, r);
  Ball one = Ball::from_rational(Rational(1), precision);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) e[i * r + j] = (i == j ? one : Ball(precision)) - e[i * r + j];
  Scratch enorm, half;
  inf_norm(enorm, e, r, r);
  mpfr_set_d(half, 0.5, MPFR_RNDN);
  if (!mpfr_less_p(enorm, half)) return out;
  if (rest_rows.empty() || rest_cols.empty()) {
    out.certified = true;
    return out;
  }

  // eta bounds ||A11^-1 - X||
  Scratch xnorm, eta, t;
  inf_norm(xnorm, x, r, r);
  mpfr_mul(eta, enorm, xnorm, MPFR_RNDU);
  mpfr_ui_sub(t, 1, enorm, MPFR_RNDD);
  mpfr_div(eta, eta, t, MPFR_RNDU);

  const std::size_t nr = rest_rows.size(), nc = rest_cols.size();
  std::vector<Ball> a12 = block(m, piv.rows, rest_cols);
  std::vector<Ball> a21 = block(m, rest_rows, piv.cols);
  std::vector<Ball> y = multiply(x, a12, r, r, nc);
  std::vector<Scratch> colmax(nc);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < nc; ++j) {
      a12[k * nc + j].abs_upper(t);
      if (mpfr_greater_p(t, colmax[j])) mpfr_set(colmax[j], t.get(), MPFR_RNDU);
    }
  Scratch l1, extra;
  for (std::size_t i = 0; i < nr; ++i) {
    mpfr_set_zero(l1, 1);
    for (std::size_t k = 0; k < r; ++k) {
      a21[i * r + k].abs_upper(t);
      mpfr_add(l1, l1, t, MPFR_RNDU);
    }
    for (std::size_t j = 0; j < nc; ++j) {
      Ball s = m(rest_rows[i], rest_cols[j]) - dot(&a21[i * r], &y[j], r, nc);
      mpfr_mul(extra, l1, eta, MPFR_RNDU);
      mpfr_mul(extra, extra, colmax[j], MPFR_RNDU);
      s.add_error(extra);
      if (!s.contains_zero()) return out;
    }
  }
  out.certified = true;
  return out;
}

namespace {

template <class Realize>
RankResult rank_numeric(Realize realize, long precision) {
  long p = std::max(precision, 32L);
  for (int round = 0; round < 4; ++round, p *= 2) {
    NumericRank lo = rank_numeric_once(realize(p), p);
    NumericRank hi = rank_numeric_once(realize(2 * p), 2 * p);
    if (lo.rank == hi.rank) return {lo.rank, Backend::Numeric, lo.certified && hi.certified, 2 * p};
  }
  throw Error(ErrorCode::RankUndecided, "rank not stable up to " + std::to_string(p) + " bits");
}

}  // namespace

RankResult rank(const ConditionMatrix& m, Backend backend, long precision) {
  if (backend == Backend::Auto) backend = m.is_rational() ? Backend::Exact : Backend::Numeric;
  if (backend == Backend::Exact) {
    auto q = m.realize_exact();
    if (!q) throw Error(ErrorCode::InvalidInput, "exact backend needs rational points and directions");
    return {rank_exact(*q), Backend::Exact, true, 0};
  }
  return rank_numeric([&](long p) { return m.realize(p); }, precision);
}

RankResult rank(const Matrix<Rational>& m, Backend backend, long precision) {
  if (backend != Backend::Numeric) return {rank_exact(m), Backend::Exact, true, 0};
  return rank_numeric(
      [&](long p) {
        Matrix<Ball> b(m.rows(), m.cols(), Ball(p));
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = Ball::from_rational(m(i, j), p);
        return b;
      },
      precision);
}

}  // namespace ade

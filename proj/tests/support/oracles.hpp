#pragma once

// Independent references for the rank code: determinants by Laplace expansion
// over column subsets, and the rank by Kronecker's bordering theorem. No
// elimination is involved.

#include <algorithm>
#include <random>
#include <vector>

#include "adedefect/numbers/matrix.hpp"
#include "adedefect/numbers/rational.hpp"
#include "adedefect/poly/point.hpp"
#include "adedefect/singular/classify.hpp"

namespace ade::testing {

// det of the minor on rows[0..k) x cols[0..k); dp over the set of used columns.
inline Rational laplace_det(const Matrix<Rational>& m, const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return Rational(1);
  std::vector<Rational> dp(std::size_t(1) << k, Rational(0));
  dp[0] = 1;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask] == 0) continue;
    const std::size_t r = __builtin_popcountll(mask);
    if (r == k) continue;
    // expand row r over the unused columns; the sign counts used columns to the right
    for (std::size_t c = 0; c < k; ++c) {
      if (mask >> c & 1) continue;
      const Rational& a = m(rows[r], cols[c]);
      if (a == 0) continue;
      const int above = __builtin_popcountll(mask >> (c + 1));
      Rational term = dp[mask] * a;
      if (above % 2) term = -term;
      dp[mask | (std::size_t(1) << c)] += term;
    }
  }
  return dp.back();
}

// Grows a nonzero minor one row and column at a time. Once no bordering of an
// r x r nonzero minor is nonzero, the rank is r.
inline long minor_rank(const Matrix<Rational>& m) {
  std::vector<std::size_t> rows, cols;
  auto used = [](const std::vector<std::size_t>& v, std::size_t x) {
    for (auto y : v)
      if (y == x) return true;
    return false;
  };
  for (;;) {
    bool grown = false;
    for (std::size_t i = 0; i < m.rows() && !grown; ++i) {
      if (used(rows, i)) continue;
      for (std::size_t j = 0; j < m.cols() && !grown; ++j) {
        if (used(cols, j)) continue;
        auto r2 = rows, c2 = cols;
        r2.push_back(i);
        c2.push_back(j);
        if (laplace_det(m, r2, c2) != 0) {
          rows = r2;
          cols = c2;
          grown = true;
        }
      }
    }
    if (!grown) return static_cast<long>(rows.size());
  }
}

inline Rational small_rational(std::mt19937_64& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

// rows x cols with rank at most `target`, as a product of two random factors;
// sometimes a zero row or a repeated column is planted.
inline Matrix<Rational> random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t target) {
  Matrix<Rational> a(rows, target, Rational(0)), b(target, cols, Rational(0)), out(rows, cols, Rational(0));
  for (auto& x : a.data()) x = small_rational(rng, 3);
  for (auto& x : b.data()) x = small_rational(rng, 3);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < target; ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  std::uniform_int_distribution<int> pick(0, 5);
  if (rows > 1 && pick(rng) == 0)
    for (std::size_t j = 0; j < cols; ++j) out(rows - 1, j) = 0;
  if (cols > 1 && pick(rng) == 0)
    for (std::size_t i = 0; i < rows; ++i) out(i, 0) = out(i, cols - 1);
  return out;
}

inline Rational nonzero_rational(std::mt19937_64& rng) {
  Rational q;
  do q = small_rational(rng, 7);
  while (q == 0);
  return q;
}

// Every point representative multiplied by its own nonzero scalar.
inline std::vector<SingularPointRecord> rescale_points(std::vector<SingularPointRecord> recs, std::mt19937_64& rng) {
  for (auto& r : recs) r.point = r.point.scaled(AlgebraicValue(nonzero_rational(rng)));
  return recs;
}

// v1 -> alpha v1 + beta P with alpha != 0.
inline std::vector<SingularPointRecord> reframe(std::vector<SingularPointRecord> recs, std::mt19937_64& rng) {
  for (auto& r : recs) {
    if (!r.v1) continue;
    AlgebraicValue alpha(nonzero_rational(rng)), beta(small_rational(rng, 7));
    for (int i = 0; i < r.point.dim(); ++i) (*r.v1)[i] = alpha * (*r.v1)[i] + beta * r.point[i];
  }
  return recs;
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace ade::testing

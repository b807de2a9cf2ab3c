#include "adedefect/singular/classify.hpp"

#include <algorithm>
#include <map>

#include "adedefect/error.hpp"
#include "adedefect/numbers/field.hpp"

namespace ade {

const char* to_string(Singularity s) {
  switch (s) {
    case Singularity::Singular: return "Singular";
    case Singularity::Smooth: return "Smooth";
    case Singularity::Undecided: return "Undecided";
  }
  return "?";
}

Singularity is_singular(const MultiPoly& f, const ProjectivePoint& p, long precision) {
  if (p.dim() != f.nvars()) throw Error(ErrorCode::DimensionMismatch, "point and polynomial dimensions differ");
  std::vector<MultiPoly> checks{f};
  for (int i = 0; i < f.nvars(); ++i) checks.push_back(f.derive(i));
  bool undecided = false;
  for (const auto& g : checks) {
    ZeroState s = p.is_rational() ? (g.evaluate(p.rational_coords()) == 0 ? ZeroState::Zero : ZeroState::NonZero)
                                  : is_zero_heuristic(g.evaluate_symbolic(p.coords()), precision);
    if (s == ZeroState::NonZero) return Singularity::Smooth;
    if (s == ZeroState::Undecided) undecided = true;
  }
  return undecided ? Singularity::Undecided : Singularity::Singular;
}

namespace {

Exponent pair_exp(int i, int j) {
  Exponent e{};
  e[i] += 1;
  e[j] += 1;
  return e;
}

struct Truncated : Error {
  Truncated() : Error(ErrorCode::TruncationInsufficient, "type not determined within the truncation order") {}
};

[[noreturn]] void undecided(const std::string& what) { throw Error(ErrorCode::Undecided, what); }

// Germ recognition over a coefficient field (exact rationals or balls).
template <class Field>
class Recognizer {
 public:
  using T = typename Field::value_type;
  using Poly = std::map<Exponent, T, GrlexDesc>;

  Recognizer(Field field, int nlocal) : f_(std::move(field)), n_(nlocal) {}

  // g(x) = F(p + x) in the chart where coordinate `chart` is 1.
  Poly expand(const MultiPoly& F, const std::vector<T>& p, int chart) const {
    int n = F.nvars();
    std::vector<std::vector<T>> pw(n);
    for (int i = 0; i < n; ++i) pw[i].push_back(f_.from(Rational(1)));
    Poly g;
    struct Partial {
      Exponent e;
      T v;
    };
    for (const auto& [e, c] : F.terms()) {
      std::vector<Partial> acc{{Exponent{}, f_.from(c)}};
      for (int i = 0; i < n; ++i) {
        if (i == chart || e[i] == 0) continue;
        while (static_cast<int>(pw[i].size()) <= e[i]) pw[i].push_back(pw[i].back() * p[i]);
        int loc = i < chart ? i : i - 1;
        std::vector<Partial> next;
        for (const auto& part : acc)
          for (int t = 0; t <= e[i]; ++t) {
            const T& base = pw[i][e[i] - t];
            if (f_.exact_zero(base)) continue;
            Partial q{part.e, part.v * base * f_.from(Rational(binomial(e[i], t)))};
            q.e[loc] = static_cast<std::uint8_t>(t);
            next.push_back(std::move(q));
          }
        acc = std::move(next);
      }
      for (auto& part : acc) add(g, part.e, part.v);
    }
    return g;
  }

  Classification recognize(Poly g, int K) const {
    Classification out;
    out.order = K;
    // constant and linear parts must vanish
    for (auto it = g.begin(); it != g.end();) {
      if (total_degree(it->first) > 1) {
        ++it;
        continue;
      }
      ZeroState s = f_.state(it->second);
      if (s == ZeroState::NonZero) throw Error(ErrorCode::NotSingular, "the point is not a singular point");
      if (s == ZeroState::Undecided) undecided("cannot decide whether the gradient vanishes");
      it = g.erase(it);
    }

    std::vector<int> active(n_);
    for (int i = 0; i < n_; ++i) active[i] = i;
    std::vector<std::pair<int, T>> pivots;
    for (;;) {
      flush_quadratic(g);
      int best = -1;
      for (int i : active) {
        const T a = get(g, pair_exp(i, i));
        if (f_.state(a) != ZeroState::NonZero) continue;
        if (best < 0 || f_.abs_greater(a, get(g, pair_exp(best, best)))) best = i;
      }
      if (best >= 0) {
        T a = get(g, pair_exp(best, best));
        T half_inv = f_.inv(a + a);
        for (int j : active) {
          if (j == best) continue;
          T b = get(g, pair_exp(best, j));
          if (f_.exact_zero(b)) continue;
          g = shear(g, best, j, f_.zero() - b * half_inv);
          g.erase(pair_exp(best, j));
        }
        pivots.emplace_back(best, a);
        active.erase(std::find(active.begin(), active.end(), best));
        continue;
      }
      bool sheared = false;
      for (std::size_t s = 0; s < active.size() && !sheared; ++s)
        for (std::size_t t = s + 1; t < active.size() && !sheared; ++t)
          if (f_.state(get(g, pair_exp(active[s], active[t]))) == ZeroState::NonZero) {
            g = shear(g, active[s], active[t], f_.from(Rational(1)));
            sheared = true;
          }
      if (sheared) continue;
      for (const auto& [e, v] : g)
        if (total_degree(e) == 2 && f_.state(v) == ZeroState::Undecided) undecided("quadratic part has undecided entries");
      break;
    }
    if (pivots.empty()) throw Error(ErrorCode::NotDoublePoint, "the quadratic part vanishes");
    out.corank = static_cast<int>(active.size());
    if (out.corank == 0) {
      out.type = ADEType::make(Family::A, 1);
      return out;
    }
    if (out.corank > 2)
      throw Error(ErrorCode::CorankTooHigh, "corank " + std::to_string(out.corank) + " is not A-D-E");

    Series r = residual(g, pivots, active, K);
    if (out.corank == 1) {
      for (int k = 2; k <= K; ++k) {
        ZeroState s = f_.state(r.at(k, 0));
        if (s == ZeroState::Zero) continue;
        if (s == ZeroState::Undecided || k == 2) undecided("residual coefficient of order " + std::to_string(k));
        out.type = ADEType::make(Family::A, k - 1);
        return out;
      }
      throw Truncated();
    }
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; i + j <= 2; ++j)
        if (f_.state(r.at(i, j)) != ZeroState::Zero) undecided("residual has terms of order below three");
    T a = r.at(3, 0), b = r.at(2, 1), c = r.at(1, 2), d = r.at(0, 3);
    bool cubic_zero = true;
    for (const T* x : {&a, &b, &c, &d}) {
      ZeroState s = f_.state(*x);
      if (s == ZeroState::Undecided) undecided("cubic term of the residual");
      if (s == ZeroState::NonZero) cubic_zero = false;
    }
    if (cubic_zero) throw Error(ErrorCode::NotSimple, "corank 2 with vanishing cubic term");
    T disc = b * b * c * c - f_.from(Rational(4)) * a * c * c * c - f_.from(Rational(4)) * b * b * b * d -
             f_.from(Rational(27)) * a * a * d * d + f_.from(Rational(18)) * a * b * c * d;
    ZeroState ds = f_.state(disc);
    if (ds == ZeroState::Undecided) undecided("discriminant of the cubic term");
    if (ds == ZeroState::NonZero) {
      out.type = ADEType::make(Family::D, 4);
      return out;
    }
    long mu = milnor(r, K);
    if (mu > K - 1) throw Truncated();
    T h0 = b * b - f_.from(Rational(3)) * a * c;
    T h1 = b * c - f_.from(Rational(9)) * a * d;
    T h2 = c * c - f_.from(Rational(3)) * b * d;
    bool triple = true;
    for (const T* x : {&h0, &h1, &h2}) {
      ZeroState s = f_.state(*x);
      if (s == ZeroState::Undecided) undecided("Hessian covariant of the cubic term");
      if (s == ZeroState::NonZero) triple = false;
    }
    if (triple) {
      if (mu < 6 || mu > 8) throw Error(ErrorCode::NotSimple, "triple cubic root with Milnor number " + std::to_string(mu));
      out.type = ADEType::make(Family::E, static_cast<int>(mu));
      return out;
    }
    if (mu < 5) undecided("double cubic root with Milnor number " + std::to_string(mu));
    out.type = ADEType::make(Family::D, static_cast<int>(mu));
    return out;
  }

 private:
  // Dense series in at most two variables, truncated at total order K.
  struct Series {
    int K = 0;
    std::vector<T> c;
    Series(int order, const T& zero) : K(order), c(static_cast<std::size_t>((order + 1) * (order + 1)), zero) {}
    T& at(int i, int j) { return c[static_cast<std::size_t>(i * (K + 1) + j)]; }
    const T& at(int i, int j) const { return c[static_cast<std::size_t>(i * (K + 1) + j)]; }
  };

  using UExp = std::array<std::uint8_t, kMaxVars>;

  Field f_;
  int n_;

  void add(Poly& g, const Exponent& e, const T& v) const {
    if (f_.exact_zero(v)) return;
    auto [it, inserted] = g.try_emplace(e, v);
    if (!inserted) {
      it->second = it->second + v;
      if (f_.exact_zero(it->second)) g.erase(it);
    }
  }

  T get(const Poly& g, const Exponent& e) const {
    auto it = g.find(e);
    return it == g.end() ? f_.zero() : it->second;
  }

  void flush_quadratic(Poly& g) const {
    for (auto it = g.begin(); it != g.end();) {
      if (total_degree(it->first) == 2 && f_.state(it->second) == ZeroState::Zero)
        it = g.erase(it);
      else
        ++it;
    }
  }

  // x_k -> x_k + c x_j
  Poly shear(const Poly& g, int k, int j, const T& c) const {
    Poly out;
    std::vector<T> cp{f_.from(Rational(1))};
    for (const auto& [e, v] : g) {
      if (e[k] == 0) {
        add(out, e, v);
        continue;
      }
      while (static_cast<int>(cp.size()) <= e[k]) cp.push_back(cp.back() * c);
      for (int t = 0; t <= e[k]; ++t) {
        Exponent h = e;
        h[k] = static_cast<std::uint8_t>(e[k] - t);
        h[j] = static_cast<std::uint8_t>(e[j] + t);
        add(out, h, v * cp[t] * f_.from(Rational(binomial(e[k], t))));
      }
    }
    return out;
  }

  Series mul(const Series& a, const Series& b) const {
    int K = a.K;
    Series r(K, f_.zero());
    for (int i1 = 0; i1 <= K; ++i1)
      for (int j1 = 0; i1 + j1 <= K; ++j1) {
        const T& x = a.at(i1, j1);
        if (f_.exact_zero(x)) continue;
        for (int i2 = 0; i1 + i2 <= K; ++i2)
          for (int j2 = 0; i1 + j1 + i2 + j2 <= K; ++j2) {
            const T& y = b.at(i2, j2);
            if (f_.exact_zero(y)) continue;
            r.at(i1 + i2, j1 + j2) = r.at(i1 + i2, j1 + j2) + x * y;
          }
      }
    return r;
  }

  // Splits off the nondegenerate variables and returns the residual series
  // r(y) = g(phi(y), y), where phi solves dg/du = 0.
  Series residual(const Poly& g, const std::vector<std::pair<int, T>>& pivots, const std::vector<int>& kernel,
                  int K) const {
    const int nu = static_cast<int>(pivots.size());
    std::map<UExp, Series> groups;
    for (const auto& [e, v] : g) {
      UExp a{};
      int ua = 0;
      for (int i = 0; i < nu; ++i) {
        a[i] = e[pivots[i].first];
        ua += a[i];
      }
      int y1 = e[kernel[0]];
      int y2 = kernel.size() > 1 ? e[kernel[1]] : 0;
      if (2 * std::max(ua - 1, 0) + y1 + y2 > K) continue;
      if (y1 + y2 > K) continue;
      auto it = groups.try_emplace(a, Series(K, f_.zero())).first;
      it->second.at(y1, y2) = it->second.at(y1, y2) + v;
    }
    std::vector<Series> phi(nu, Series(K, f_.zero()));
    std::vector<T> inv2(nu, f_.zero());
    for (int i = 0; i < nu; ++i) inv2[i] = f_.inv(pivots[i].second + pivots[i].second);

    const int iterations = nu == 0 ? 0 : K / 2 + 1;
    for (int it = 0; it <= iterations; ++it) {
      std::map<UExp, Series> powers;
      auto power = [&](const UExp& a, auto&& self) -> const Series& {
        auto found = powers.find(a);
        if (found != powers.end()) return found->second;
        int i = 0;
        while (i < nu && a[i] == 0) ++i;
        Series s(K, f_.zero());
        if (i == nu) {
          s.at(0, 0) = f_.from(Rational(1));
        } else {
          UExp b = a;
          b[i] -= 1;
          s = mul(self(b, self), phi[i]);
        }
        return powers.emplace(a, std::move(s)).first->second;
      };
      if (it == iterations) {
        Series r(K, f_.zero());
        for (const auto& [a, G] : groups) {
          int ua = 0;
          for (int i = 0; i < nu; ++i) ua += a[i];
          if (2 * ua > K) continue;
          Series t = mul(power(a, power), G);
          for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = r.c[k] + t.c[k];
        }
        return r;
      }
      std::vector<Series> next = phi;
      for (int i = 0; i < nu; ++i) {
        Series D(K, f_.zero());
        for (const auto& [a, G] : groups) {
          if (a[i] == 0) continue;
          UExp b = a;
          b[i] -= 1;
          Series t = mul(power(b, power), G);
          T coef = f_.from(Rational(a[i]));
          for (std::size_t k = 0; k < D.c.size(); ++k)
            if (!f_.exact_zero(t.c[k])) D.c[k] = D.c[k] + coef * t.c[k];
        }
        for (std::size_t k = 0; k < D.c.size(); ++k)
          if (!f_.exact_zero(D.c[k])) next[i].c[k] = next[i].c[k] - D.c[k] * inv2[i];
        // phi vanishes to order two
        next[i].at(0, 0) = f_.zero();
        next[i].at(1, 0) = f_.zero();
        if (K >= 1) next[i].at(0, 1) = f_.zero();
      }
      phi = std::move(next);
    }
    return Series(K, f_.zero());
  }

  using Bi = std::map<std::pair<int, int>, T>;

  void bi_add(Bi& p, std::pair<int, int> e, const T& v) const {
    if (f_.exact_zero(v)) return;
    auto [it, inserted] = p.try_emplace(e, v);
    if (!inserted) {
      it->second = it->second + v;
      if (f_.exact_zero(it->second)) p.erase(it);
    }
  }

  void bi_clean(Bi& p) const {
    for (auto it = p.begin(); it != p.end();) {
      if (f_.state(it->second) == ZeroState::Zero)
        it = p.erase(it);
      else
        ++it;
    }
  }

  // Largest and smallest x-degree among the terms free of y; -1 when none.
  std::pair<int, int> x_axis(const Bi& p) const {
    int hi = -1, lo = -1;
    for (const auto& [e, v] : p) {
      if (e.second != 0) continue;
      if (lo < 0 || e.first < lo) lo = e.first;
      if (e.first > hi) hi = e.first;
    }
    return {hi, lo};
  }

  void require_nonzero(const Bi& p, std::pair<int, int> e) const {
    if (f_.state(p.at(e)) != ZeroState::NonZero) undecided("intersection multiplicity pivot");
  }

  // Drops terms of total degree above `degree`.
  static void bi_truncate(Bi& p, long degree) {
    for (auto it = p.begin(); it != p.end();) {
      if (it->first.first + it->first.second > degree)
        it = p.erase(it);
      else
        ++it;
    }
  }

  // Local intersection multiplicity at the origin (Fulton's algorithm);
  // returns cap + 1 once the count exceeds cap or the curves share a component.
  // If I(P, Q) <= c then m^c lies in (P, Q), so terms of degree > c never
  // change the answer; both inputs are cut there before every step.
  long intersection(Bi P, Bi Q, long cap) const {
    long acc = 0;
    for (int guard = 0; guard < 100000; ++guard) {
      bi_truncate(P, cap - acc);
      bi_truncate(Q, cap - acc);
      bi_clean(P);
      bi_clean(Q);
      if (P.count({0, 0}) || Q.count({0, 0})) {
        if (P.count({0, 0})) require_nonzero(P, {0, 0});
        if (Q.count({0, 0})) require_nonzero(Q, {0, 0});
        return acc;
      }
      if (P.empty() || Q.empty()) return cap + 1;
      auto [r, rlo] = x_axis(P);
      auto [s, slo] = x_axis(Q);
      if (r < 0 && s < 0) return cap + 1;
      if (r < 0 || s < 0) {
        if (r < 0) std::swap(P, Q);
        // Q = y Q1 here: I(P, y) + I(P, Q1)
        int ord = r < 0 ? slo : rlo;
        require_nonzero(P, {ord, 0});
        acc += ord;
        if (acc > cap) return cap + 1;
        Bi Q1;
        for (const auto& [e, v] : Q) Q1.emplace(std::make_pair(e.first, e.second - 1), v);
        Q = std::move(Q1);
        continue;
      }
      if (r > s) {
        std::swap(P, Q);
        std::swap(r, s);
      }
      require_nonzero(P, {r, 0});
      require_nonzero(Q, {s, 0});
      T factor = Q.at({s, 0}) * f_.inv(P.at({r, 0}));
      for (const auto& [e, v] : P) bi_add(Q, {e.first + s - r, e.second}, f_.zero() - factor * v);
      Q.erase({s, 0});
    }
    undecided("intersection multiplicity did not terminate");
  }

  long milnor(const Series& r, int K) const {
    Bi p1, p2;
    for (int i = 0; i <= K; ++i)
      for (int j = 0; i + j <= K; ++j) {
        const T& v = r.at(i, j);
        if (f_.exact_zero(v)) continue;
        if (i > 0) bi_add(p1, {i - 1, j}, v * f_.from(Rational(i)));
        if (j > 0) bi_add(p2, {i, j - 1}, v * f_.from(Rational(j)));
      }
    return intersection(std::move(p1), std::move(p2), K - 1);
  }
};

std::vector<int> order_levels(int K) {
  std::vector<int> levels;
  for (int k : {6, 9}) if (k < K) levels.push_back(k);
  levels.push_back(K);
  return levels;
}

template <class Field>
Classification run_levels(const Field& field, const MultiPoly& F, const std::vector<typename Field::value_type>& p,
                          int chart, int K) {
  Recognizer<Field> rec(field, F.nvars() - 1);
  auto germ = rec.expand(F, p, chart);
  std::vector<int> levels = order_levels(K);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    try {
      Classification c = rec.recognize(germ, levels[i]);
      c.chart = chart;
      return c;
    } catch (const Truncated&) {
      if (i + 1 == levels.size()) throw;
    }
  }
  throw Truncated();
}

}  // namespace

Classification classify(const MultiPoly& F, const ProjectivePoint& P, const ClassifyOptions& options) {
  if (P.dim() != F.nvars()) throw Error(ErrorCode::DimensionMismatch, "point and polynomial dimensions differ");
  if (F.nvars() < 2) throw Error(ErrorCode::DimensionMismatch, "need at least two homogeneous variables");
  if (!F.homogeneous_degree()) throw Error(ErrorCode::NonHomogeneous, "classify needs a homogeneous polynomial");
  if (options.max_order < 3) throw Error(ErrorCode::InvalidInput, "truncation order must be at least 3");
  const int n = F.nvars();
  if (P.is_rational()) {
    std::vector<Rational> q = P.rational_coords();
    int chart = 0;
    for (int i = 1; i < n; ++i)
      if (cmp(abs(q[i]), abs(q[chart])) > 0) chart = i;
    Rational lead = q[chart];
    for (auto& x : q) x /= lead;
    Classification c = run_levels(ExactField{}, F, q, chart, options.max_order);
    c.exact = true;
    return c;
  }
  std::vector<Ball> b = P.balls(options.precision);
  int chart = 0;
  double best = -1;
  for (int i = 0; i < n; ++i) {
    double m = std::abs(b[i].mid_double());
    if (m > best) {
      best = m;
      chart = i;
    }
  }
  std::vector<AlgebraicValue> affine;
  for (int i = 0; i < n; ++i) affine.push_back(i == chart ? AlgebraicValue(1L) : P[i] / P[chart]);
  std::vector<Ball> pb = eval_values(affine, options.precision + 64);
  BallField field{options.precision};
  return run_levels(field, F, pb, chart, options.max_order);
}

}  // namespace ade

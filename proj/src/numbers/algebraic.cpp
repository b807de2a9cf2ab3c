#include "adedefect/numbers/algebraic.hpp"

#include <algorithm>
#include <cmath>

#include "adedefect/error.hpp"

namespace ade {

namespace {

using Node = AlgebraicValue::Node;

void check_monic(const UniPoly& p) {
  if (p.size() < 2) throw Error(ErrorCode::InvalidInput, "root_of needs a polynomial of degree >= 1");
  if (p.back() != 1) throw Error(ErrorCode::InvalidInput, "root_of polynomial must be monic");
}

Ball point(const Ball& b) {
  Ball out(b);
  Scratch zero;
  out.set_radius(zero);
  return out;
}

long cauchy_bits(const UniPoly& p) {
  // log2 of 1 + max |c_i|, an upper bound for the modulus of every root.
  double m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, std::fabs(p[i].get_d()));
  return static_cast<long>(std::ceil(std::log2(1.0 + m))) + 1;
}

std::complex<double> newton_double(const UniPoly& p, std::complex<double> z, int iterations) {
  UniPoly dp = uni_derivative(p);
  for (int it = 0; it < iterations; ++it) {
    std::complex<double> v = 0, d = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * z + p[i].get_d();
    for (std::size_t i = dp.size(); i-- > 0;) d = d * z + dp[i].get_d();
    if (std::abs(d) == 0) break;
    std::complex<double> step = v / d;
    z -= step;
    if (std::abs(step) <= 1e-15 * (1 + std::abs(z))) break;
  }
  return z;
}

// Newton iteration on midpoints, doubling the precision up to `bits`.
Ball newton_mp(const UniPoly& p, const UniPoly& dp, Ball z, long bits) {
  long prec = 64;
  z = point(z.rounded(prec));
  for (int it = 0; it < 200; ++it) {
    Ball v = uni_eval(p, z);
    Ball d = uni_eval(dp, z);
    if (d.contains_zero()) break;
    Ball step = point(v / d);
    z = point(z - step);
    Scratch s, m;
    step.abs_upper(s);
    z.abs_upper(m);
    mpfr_add_ui(m, m, 1, MPFR_RNDU);
    mpfr_mul_2si(m, m, -50, MPFR_RNDU);
    if (mpfr_lessequal_p(s, m)) break;
  }
  while (prec < bits) {
    prec = std::min(bits, prec * 2);
    z = point(z.rounded(prec));
    for (int it = 0; it < 2; ++it) {
      Ball d = uni_eval(dp, z);
      if (d.contains_zero()) break;
      z = point(z - point(uni_eval(p, z) / d));
    }
  }
  for (int it = 0; it < 2; ++it) {
    Ball d = uni_eval(dp, z);
    if (d.contains_zero()) break;
    z = point(z - point(uni_eval(p, z) / d));
  }
  return z;
}

// Krawczyk test on the disk of radius 2^rho_exp around c. Returns the enclosure on success.
bool krawczyk(const UniPoly& p, const UniPoly& dp, const Ball& c, long rho_exp, Ball& out) {
  Ball dc = uni_eval(dp, c);
  if (dc.contains_zero()) return false;
  Ball y = point(dc.inverse());
  Ball disk(c);
  disk.set_radius_2exp(rho_exp);
  Ball dD = uni_eval(dp, disk);
  Ball one = Ball::from_rational(Rational(1), c.precision());
  Ball contraction = one - y * dD;
  Ball k = c - y * uni_eval(p, c);
  Scratch cu, rho;
  contraction.abs_upper(cu);
  mpfr_mul_2si(cu, cu, rho_exp, MPFR_RNDU);
  k.add_error(cu);
  Ball shift = k - c;
  Scratch reach;
  shift.abs_upper(reach);
  mpfr_set_ui_2exp(rho, 1, rho_exp, MPFR_RNDN);
  if (!mpfr_less_p(reach, rho)) return false;
  out = std::move(k);
  return true;
}

[[noreturn]] void report_failure(const UniPoly& p, std::complex<double> seed) {
  UniPoly g = uni_gcd(p, uni_derivative(p));
  if (g.size() >= 2) {
    std::complex<double> zp = newton_double(p, seed, 200);
    std::complex<double> zg = newton_double(g, seed, 200);
    if (std::abs(zp - zg) < 1e-6 * (1 + std::abs(zp)))
      throw Error(ErrorCode::MultipleRoot, "seed converges to a multiple root");
  }
  throw Error(ErrorCode::NonIsolating, "interval Newton contraction failed near the seed");
}

}  // namespace

const char* to_string(ZeroState z) {
  switch (z) {
    case ZeroState::Zero: return "Zero";
    case ZeroState::NonZero: return "NonZero";
    case ZeroState::Undecided: return "Undecided";
  }
  return "Undecided";
}

UniPoly uni_derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  return d;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  auto trim = [](UniPoly& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rational f = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      a.pop_back();
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Ball uni_eval(const UniPoly& p, const Ball& x) {
  mpfr_prec_t prec = x.precision();
  if (p.empty()) return Ball(prec);
  Ball acc = Ball::from_rational(p.back(), prec);
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    acc *= x;
    if (p[i] != 0) acc += Ball::from_rational(p[i], prec);
  }
  return acc;
}

Ball refine_root(const UniPoly& monic, std::complex<double> seed, long target_bits) {
  check_monic(monic);
  if (monic.size() == 2) {
    Rational root = -monic[0];
    long extra = cauchy_bits(monic);
    return Ball::from_rational(root, std::max<long>(64, target_bits + 2 + extra));
  }
  UniPoly dp = uni_derivative(monic);
  long bits = std::max<long>(64, target_bits + 40 + cauchy_bits(monic));
  Ball z = Ball::from_double(seed, 64);
  for (int attempt = 0; attempt < 2; ++attempt) {
    z = newton_mp(monic, dp, z, bits + 32 * attempt);
    Ball enclosure;
    if (krawczyk(monic, dp, z, -(target_bits + 9), enclosure)) {
      Ball out = point(enclosure);
      out.set_radius_2exp(-target_bits);
      return out;
    }
  }
  report_failure(monic, seed);
}

Ball refine_root(const UniPoly& monic, const Rational& seed_re, const Rational& seed_im,
                 long target_bits) {
  return refine_root(monic, {seed_re.get_d(), seed_im.get_d()}, target_bits);
}

AlgebraicValue::AlgebraicValue() : AlgebraicValue(Rational(0)) {}

AlgebraicValue::AlgebraicValue(const Rational& q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Rational;
  n->value = q;
  n->value.canonicalize();
  node_ = std::move(n);
}

AlgebraicValue::AlgebraicValue(long n) : AlgebraicValue(Rational(n)) {}

AlgebraicValue AlgebraicValue::root_of(UniPoly monic, const Rational& seed_re,
                                       const Rational& seed_im, const Rational& radius) {
  check_monic(monic);
  if (radius <= 0) throw Error(ErrorCode::InvalidInput, "isolation radius must be positive");
  for (auto& c : monic) c.canonicalize();
  if (monic.size() == 2) return AlgebraicValue(Rational(-monic[0]));

  // Locate the root, then count roots in the disk by deflating and showing
  // the quotient has no zero there (Rouche on its Taylor expansion at the seed).
  const long bits = 128;
  Ball z = refine_root(monic, seed_re, seed_im, bits);
  Ball s = Ball::from_rational(seed_re, seed_im, bits + 64);
  Scratch dist, r;
  (z - s).abs_upper(dist);
  mpfr_set_q(r, radius.get_mpq_t(), MPFR_RNDD);
  if (!mpfr_less_p(dist, r))
    throw Error(ErrorCode::NonIsolating, "no root inside the isolation disk");

  std::size_t n = monic.size() - 1;
  std::vector<Ball> q(n, Ball(bits + 64));
  // synthetic division by (t - z): q_{n-1} = 1, q_{k-1} = p_k + z q_k
  q[n - 1] = Ball::from_rational(Rational(1), bits + 64);
  for (std::size_t k = n - 1; k >= 1; --k) q[k - 1] = Ball::from_rational(monic[k], bits + 64) + z * q[k];
  // Taylor shift to the seed
  std::vector<Ball> b = q;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = b.size() - 1; j > i; --j) b[j - 1] += s * b[j];
  Scratch lower, upper, term, rpow;
  b[0].abs_lower(lower);
  mpfr_set_q(rpow, radius.get_mpq_t(), MPFR_RNDU);
  Scratch rr;
  mpfr_set(rr, rpow.get(), MPFR_RNDU);
  for (std::size_t k = 1; k < b.size(); ++k) {
    b[k].abs_upper(term);
    mpfr_mul(term, term, rpow, MPFR_RNDU);
    mpfr_add(upper, upper, term, MPFR_RNDU);
    mpfr_mul(rpow, rpow, rr, MPFR_RNDU);
  }
  if (!mpfr_greater_p(lower, upper))
    throw Error(ErrorCode::NonIsolating, "isolation disk may contain several roots");

  auto node = std::make_shared<Node>();
  node->kind = Kind::RootOf;
  node->poly = std::move(monic);
  node->seed_re = seed_re;
  node->seed_im = seed_im;
  node->radius = radius;
  node->root_cache.emplace(bits, std::move(z));
  return AlgebraicValue(std::shared_ptr<const Node>(std::move(node)));
}

AlgebraicValue AlgebraicValue::root_of(UniPoly monic, std::complex<double> seed, double radius) {
  return root_of(std::move(monic), Rational(seed.real()), Rational(seed.imag()), Rational(radius));
}

AlgebraicValue::Kind AlgebraicValue::kind() const { return node_->kind; }

const Rational& AlgebraicValue::rational() const {
  if (node_->kind != Kind::Rational) throw Error(ErrorCode::InvalidInput, "value is not rational");
  return node_->value;
}

AlgebraicValue AlgebraicValue::make_expr(Op op, std::vector<AlgebraicValue> args, long exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Expr;
  n->op = op;
  n->exponent = exponent;
  for (auto& a : args) n->args.push_back(a.node_);
  return AlgebraicValue(std::shared_ptr<const Node>(std::move(n)));
}

AlgebraicValue AlgebraicValue::operator-() const {
  if (is_rational()) return AlgebraicValue(Rational(-rational()));
  return make_expr(Op::Mul, {AlgebraicValue(-1L), *this}, 0);
}

AlgebraicValue operator+(const AlgebraicValue& a, const AlgebraicValue& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicValue(Rational(a.rational() + b.rational()));
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  return AlgebraicValue::make_expr(AlgebraicValue::Op::Add, {a, b}, 0);
}

AlgebraicValue operator-(const AlgebraicValue& a, const AlgebraicValue& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicValue(Rational(a.rational() - b.rational()));
  if (b.is_exact_zero()) return a;
  return AlgebraicValue::make_expr(AlgebraicValue::Op::Sub, {a, b}, 0);
}

AlgebraicValue operator*(const AlgebraicValue& a, const AlgebraicValue& b) {
  if (a.is_rational() && b.is_rational()) return AlgebraicValue(Rational(a.rational() * b.rational()));
  if (a.is_exact_zero() || b.is_exact_zero()) return AlgebraicValue();
  if (a.is_exact_one()) return b;
  if (b.is_exact_one()) return a;
  return AlgebraicValue::make_expr(AlgebraicValue::Op::Mul, {a, b}, 0);
}

AlgebraicValue operator/(const AlgebraicValue& a, const AlgebraicValue& b) {
  if (b.is_exact_zero()) throw Error(ErrorCode::DivisionByProvableZero, "division by exact zero");
  if (a.is_rational() && b.is_rational()) return AlgebraicValue(Rational(a.rational() / b.rational()));
  if (a.is_exact_zero()) return AlgebraicValue();
  if (b.is_exact_one()) return a;
  return AlgebraicValue::make_expr(AlgebraicValue::Op::Div, {a, b}, 0);
}

AlgebraicValue AlgebraicValue::pow(long exponent) const {
  if (is_rational()) {
    if (exponent < 0 && rational() == 0)
      throw Error(ErrorCode::DivisionByProvableZero, "negative power of zero");
    Rational r(1);
    Rational base = exponent < 0 ? Rational(1 / rational()) : rational();
    for (long i = 0; i < std::labs(exponent); ++i) r *= base;
    return AlgebraicValue(r);
  }
  if (exponent == 0) return AlgebraicValue(1L);
  if (exponent == 1) return *this;
  return make_expr(Op::Pow, {*this}, exponent);
}

Ball Evaluator::eval(const AlgebraicValue& v) { return eval_node(v.node_ptr().get()); }

Ball Evaluator::eval_node(const Node* n) {
  auto it = memo_.find(n);
  if (it != memo_.end()) return it->second;
  Ball out;
  switch (n->kind) {
    case AlgebraicValue::Kind::Rational:
      out = Ball::from_rational(n->value, bits_);
      break;
    case AlgebraicValue::Kind::RootOf: {
      std::unique_lock<std::mutex> lock(n->cache_mutex);
      auto c = n->root_cache.lower_bound(bits_);
      if (c != n->root_cache.end() && c->first == bits_) {
        out = c->second;
      } else {
        lock.unlock();
        Ball r = refine_root(n->poly, n->seed_re, n->seed_im, bits_);
        lock.lock();
        n->root_cache.emplace(bits_, r);
        out = std::move(r);
      }
      break;
    }
    case AlgebraicValue::Kind::Expr: {
      Ball a = eval_node(n->args[0].get());
      switch (n->op) {
        case AlgebraicValue::Op::Add: out = a + eval_node(n->args[1].get()); break;
        case AlgebraicValue::Op::Sub: out = a - eval_node(n->args[1].get()); break;
        case AlgebraicValue::Op::Mul: out = a * eval_node(n->args[1].get()); break;
        case AlgebraicValue::Op::Div: out = a / eval_node(n->args[1].get()); break;
        case AlgebraicValue::Op::Pow: out = a.pow(n->exponent); break;
      }
      break;
    }
  }
  memo_.emplace(n, out);
  return out;
}

std::vector<Ball> eval_values(const std::vector<AlgebraicValue>& vs, long precision) {
  Scratch target;
  mpfr_set_ui_2exp(target, 1, -precision, MPFR_RNDN);
  long w = precision + 32;
  for (int round = 0; round <= 4; ++round, w *= 2) {
    Evaluator ev(w);
    std::vector<Ball> out;
    out.reserve(vs.size());
    bool ok = true;
    try {
      for (const auto& v : vs) {
        out.push_back(ev.eval(v));
        if (mpfr_greater_p(out.back().rad(), target)) ok = false;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DivisionByProvableZero || round == 4) throw;
      ok = false;
    }
    if (ok) return out;
  }
  throw Error(ErrorCode::PrecisionExhausted,
              "radius target 2^-" + std::to_string(precision) + " not reached");
}

Ball eval_value(const AlgebraicValue& v, long precision) { return eval_values({v}, precision).front(); }

ZeroState ball_zero_state(const Ball& b, long precision) {
  if (b.excludes_zero()) return ZeroState::NonZero;
  if (b.below(-precision / 2)) return ZeroState::Zero;
  return ZeroState::Undecided;
}

ZeroState is_zero_heuristic(const AlgebraicValue& v, long precision) {
  if (v.is_rational()) return v.rational() == 0 ? ZeroState::Zero : ZeroState::NonZero;
  try {
    Ball lo = eval_value(v, precision);
    if (lo.excludes_zero()) return ZeroState::NonZero;
    Ball hi = eval_value(v, 2 * precision);
    if (hi.excludes_zero()) return ZeroState::NonZero;
    if (lo.below(-precision / 2) && hi.below(-precision)) return ZeroState::Zero;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DivisionByProvableZero && e.code() != ErrorCode::PrecisionExhausted) throw;
  }
  return ZeroState::Undecided;
}

}  // namespace ade

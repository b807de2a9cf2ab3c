#include "adedefect/poly/multipoly.hpp"

#include <sstream>
#include <unordered_map>

#include "adedefect/error.hpp"

namespace ade {

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GrlexDesc::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (int i = 0; i < kMaxVars; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

std::size_t ExponentHash::operator()(const Exponent& e) const {
  std::size_t h = 0;
  for (auto x : e) h = h * 131 + x;
  return h;
}

namespace {

void check_nvars(int n) {
  if (n < 1 || n > kMaxVars)
    throw Error(ErrorCode::DimensionMismatch, "variable count must be in 1.." + std::to_string(kMaxVars));
}

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (int i = 0; i < kMaxVars; ++i) {
    int s = a[i] + b[i];
    if (s > 255) throw Error(ErrorCode::InvalidInput, "exponent overflow");
    r[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

}  // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent{}, c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
  Exponent e{};
  e[index] = 1;
  return monomial(nvars, e);
}

MultiPoly MultiPoly::monomial(int nvars, const Exponent& e, const Rational& c) {
  MultiPoly p(nvars);
  for (int i = nvars; i < kMaxVars; ++i)
    if (e[i] != 0) throw Error(ErrorCode::DimensionMismatch, "exponent uses an absent variable");
  p.add_term(e, c);
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = total_degree(terms_.begin()->first);
  if (total_degree(terms_.rbegin()->first) != d) return std::nullopt;
  return d;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorCode::DimensionMismatch, "adding polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorCode::DimensionMismatch, "subtracting polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::DimensionMismatch, "multiplying polynomials in different rings");
  std::unordered_map<Exponent, Rational, ExponentHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[add_exponents(ea, eb)] += ca * cb;
  MultiPoly r(a.nvars_);
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace(e, std::move(c));
  return r;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(nvars_, Rational(1));
  MultiPoly base(*this);
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derive(int index) const {
  if (index < 0 || index >= nvars_) throw Error(ErrorCode::DimensionMismatch, "derivative index out of range");
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent f = e;
    f[index] -= 1;
    r.add_term(f, c * Rational(e[index]));
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& subs) const {
  if (static_cast<int>(subs.size()) != nvars_)
    throw Error(ErrorCode::DimensionMismatch, "substitution needs one polynomial per variable");
  int target = subs.empty() ? nvars_ : subs.front().nvars();
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) powers[i].push_back(constant(target, Rational(1)));
  MultiPoly r(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (int i = 0; i < nvars_; ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * subs[i]);
      if (e[i] > 0) t = t * powers[i][e[i]];
    }
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::with_nvars(int n) const {
  if (n < nvars_) throw Error(ErrorCode::DimensionMismatch, "cannot drop variables");
  MultiPoly r(n);
  r.terms_ = terms_;
  return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

Ball MultiPoly::evaluate(const std::vector<Ball>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  mpfr_prec_t prec = 64;
  for (const auto& b : point) prec = std::max(prec, b.precision());
  std::vector<std::vector<Ball>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) powers[i].push_back(Ball::from_rational(Rational(1), prec));
  Ball sum(prec);
  for (const auto& [e, c] : terms_) {
    Ball t = Ball::from_rational(c, prec);
    for (int i = 0; i < nvars_; ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * point[i]);
      if (e[i] > 0) t *= powers[i][e[i]];
    }
    sum += t;
  }
  return sum;
}

AlgebraicValue MultiPoly::evaluate_symbolic(const std::vector<AlgebraicValue>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  std::vector<std::vector<AlgebraicValue>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) powers[i].push_back(AlgebraicValue(1L));
  AlgebraicValue sum;
  for (const auto& [e, c] : terms_) {
    AlgebraicValue t(c);
    for (int i = 0; i < nvars_; ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(point[i].pow(static_cast<long>(powers[i].size())));
      if (e[i] > 0) t = t * powers[i][e[i]];
    }
    sum = sum + t;
  }
  return sum;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  std::vector<std::string> vars = names.empty() ? default_variable_names(nvars_) : names;
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool is_const = total_degree(e) == 0;
    bool wrote = false;
    if (a != 1 || is_const) {
      os << ade::to_string(a);
      wrote = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << vars[i];
      if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
      wrote = true;
    }
  }
  return os.str();
}

std::pair<MultiPoly, MultiPoly> divide(const MultiPoly& dividend, const MultiPoly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByProvableZero, "division by the zero polynomial");
  if (divisor.nvars() != dividend.nvars()) throw Error(ErrorCode::DimensionMismatch, "division across rings");
  int n = dividend.nvars();
  const auto& [lead_e, lead_c] = *divisor.terms().begin();
  MultiPoly q(n), rem(n), p(dividend);
  while (!p.is_zero()) {
    // largest term of p that the leading monomial divides
    bool found = false;
    for (const auto& [e, c] : p.terms()) {
      bool divisible = true;
      for (int i = 0; i < kMaxVars; ++i)
        if (e[i] < lead_e[i]) divisible = false;
      if (!divisible) continue;
      Exponent shift{};
      for (int i = 0; i < kMaxVars; ++i) shift[i] = static_cast<std::uint8_t>(e[i] - lead_e[i]);
      Rational f = c / lead_c;
      MultiPoly m = MultiPoly::monomial(n, shift, f);
      q += m;
      p -= m * divisor;
      found = true;
      break;
    }
    if (!found) {
      // nothing left is divisible: the rest is remainder
      rem += p;
      break;
    }
  }
  return {q, rem};
}

std::vector<Exponent> monomial_exponents(int nvars, int degree) {
  check_nvars(nvars);
  std::vector<Exponent> out;
  if (degree < 0) return out;
  Exponent e{};
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      e[var] = static_cast<std::uint8_t>(left);
      out.push_back(e);
      e[var] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = static_cast<std::uint8_t>(k);
      rec(var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(0, degree);
  return out;
}

std::vector<MultiPoly> monomial_basis(int nvars, int degree) {
  std::vector<MultiPoly> out;
  for (const auto& e : monomial_exponents(nvars, degree)) out.push_back(MultiPoly::monomial(nvars, e));
  return out;
}

std::vector<std::string> default_variable_names(int nvars) {
  std::vector<std::string> v;
  for (int i = 0; i < nvars; ++i) v.push_back("y" + std::to_string(i));
  return v;
}

}  // namespace ade

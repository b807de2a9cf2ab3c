#include "adedefect/poly/parser.hpp"

#include <cctype>

#include "adedefect/error.hpp"

namespace ade {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {
    if (vars.empty() || static_cast<int>(vars.size()) > kMaxVars)
      throw Error(ErrorCode::DimensionMismatch, "variable list must hold 1.." + std::to_string(kMaxVars) + " names");
  }

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  int nvars() const { return static_cast<int>(vars_.size()); }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        MultiPoly d = unary();
        if (d.degree() > 0) {
          pos_ = at;
          fail("division by a non-constant");
        }
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc *= Rational(1 / d.terms().begin()->second);
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 255) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MultiPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      std::string lit(s_.substr(start, pos_ - start));
      try {
        return MultiPoly::constant(nvars(), parse_rational(lit));
      } catch (const Error&) {
        pos_ = start;
        fail("malformed number '" + lit + "'");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (int i = 0; i < nvars(); ++i)
        if (vars_[i] == name) return MultiPoly::variable(nvars(), i);
      throw Error(ErrorCode::UnknownVariable, "'" + name + "' at position " + std::to_string(start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& variables, ParseOptions options) {
  MultiPoly p = Parser(text, variables).parse();
  if (options.require_homogeneous && !p.is_zero() && !p.homogeneous_degree())
    throw Error(ErrorCode::NonHomogeneous, "terms of different total degree");
  return p;
}

}  // namespace ade

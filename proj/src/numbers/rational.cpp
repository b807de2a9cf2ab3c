#include "adedefect/numbers/rational.hpp"

#include <cctype>

#include "adedefect/error.hpp"

namespace ade {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty rational literal");

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    bool negative = s[0] == '-';
    std::string body = (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
    dot = body.find('.');
    std::string digits = body.substr(0, dot) + body.substr(dot + 1);
    std::size_t scale = body.size() - dot - 1;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(ErrorCode::InvalidInput, "malformed decimal '" + std::string(text) + "'");
    }
    if (digits.empty()) throw Error(ErrorCode::InvalidInput, "malformed decimal");
    Integer num(digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    Rational q(num, den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  Rational q;
  std::string body = (s[0] == '+') ? s.substr(1) : s;
  if (q.set_str(body, 10) != 0)
    throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer binomial(long n, long k) {
  if (k < 0 || n < k || n < 0) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

long long binomial_ll(long long n, long long k) {
  if (k < 0 || n < k || n < 0) return 0;
  return binomial(static_cast<long>(n), static_cast<long>(k)).get_si();
}

}  // namespace ade

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ade {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "a/b" or a plain decimal such as "-0.125"; result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical "a/b" form, or "a" when the denominator is 1.
std::string to_string(const Rational& q);

Integer binomial(long n, long k);

/// Binomial coefficient with the convention C(n, k) = 0 whenever n < k or k < 0.
long long binomial_ll(long long n, long long k);

}  // namespace ade

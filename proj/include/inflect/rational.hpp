#pragma once

#include <gmpxx.h>

#include <string>

namespace inflect {

using Rational = mpq_class;
using Integer = mpz_class;

/// Binomial coefficient with the convention binom(n, k) = 0 for k < 0 or k > n >= 0.
/// Negative upper arguments follow the generalized definition n(n-1)...(n-k+1)/k!.
Integer binomial(long n, long k);

/// Parses "a", "-a" or "a/b" into a canonical rational.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

}  // namespace inflect

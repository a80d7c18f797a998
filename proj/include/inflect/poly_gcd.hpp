#pragma once

#include "inflect/polynomial.hpp"

#include <optional>
#include <vector>

namespace inflect {

/// f / g when g divides f exactly; std::nullopt otherwise. Throws InvalidInput for g = 0.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Largest monomial dividing every term (1 for the zero polynomial).
Polynomial monomial_content(const Polynomial& f);

/// Monic (leading coefficient 1 in lex order) gcd over Q. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

/// gcd of a list, stopping early once it reaches 1.
Polynomial gcd(const std::vector<Polynomial>& list);

/// Makes the lex-leading coefficient 1.
Polynomial make_monic(const Polynomial& f);

}  // namespace inflect

#include "inflect/rational.hpp"

#include "inflect/errors.hpp"

namespace inflect {

Integer binomial(long n, long k)
{
    if (k < 0)
        return 0;
    if (n >= 0) {
        if (k > n)
            return 0;
        Integer out;
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return out;
    }
    // binom(n, k) = (-1)^k binom(k - n - 1, k) for n < 0
    Integer out = binomial(k - n - 1, k);
    return (k % 2) ? Integer(-out) : out;
}

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw InvalidInput("not a rational number: '" + text + "'");
    if (q.get_den() == 0)
        throw InvalidInput("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

}  // namespace inflect

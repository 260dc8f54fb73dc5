#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace hurwitz {

using Rational = mpq_class;
using Integer = mpz_class;

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);

// Inverse of to_string; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

Integer factorial(int n);

/// num/den in canonical form (mpq_class's two-argument constructor does not
/// canonicalize).
template <typename N, typename D>
Rational ratio(const N& num, const D& den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_pow(const Rational& base, int exponent)
{
    Rational result = 1;
    for (int i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

} // namespace hurwitz

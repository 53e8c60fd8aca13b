#ifndef MZVKIT_RATIONAL_HPP
#define MZVKIT_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mzvkit
{

using Rational = mpq_class;
using Integer = mpz_class;

// "p" for integers, "p/q" otherwise; always in lowest terms.
std::string to_string(const Rational &q);

// Accepts "p" or "p/q" with an optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

// C(n, k) as an exact integer; zero when k < 0 or k > n.
Integer binomial(long n, long k);

Integer factorial(long n);

} // namespace mzvkit

#endif

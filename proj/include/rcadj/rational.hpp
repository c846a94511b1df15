#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rcadj {

// Exact rational. mpq_class arithmetic keeps values canonical: lowest terms,
// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q" or "p" with optional leading sign. Throws std::invalid_argument
// on malformed text or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace rcadj

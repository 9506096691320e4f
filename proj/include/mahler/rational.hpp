#ifndef MAHLER_RATIONAL_HPP
#define MAHLER_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace mahler {

// Exact arithmetic scalars. mpq_class keeps values canonical
// (reduced, positive denominator), which makes equality structural.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p" (base 10). Throws std::invalid_argument on malformed
// input or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical fraction string: "p/q", or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& x);

Rational pow(const Rational& base, unsigned long exp);
Integer pow(const Integer& base, unsigned long exp);

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// 2^e as an exact rational, e may be negative.
Rational pow2(long e);

// Number of bits in numerator plus denominator; a cheap size measure.
size_t bit_size(const Rational& x);

// Nearest multiple of 2^-bits (ties toward even); |result - x| <= 2^-(bits+1).
Rational round_to_dyadic(const Rational& x, unsigned long bits);

// Nearest integer (ties toward even).
Integer round_to_integer(const Rational& x);

// Fixed-point decimal rendering with `digits` places after the point,
// correctly rounded (ties toward even).
std::string decimal_string(const Rational& x, unsigned long digits);

}  // namespace mahler

#endif

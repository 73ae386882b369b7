#pragma once

#include <gmpxx.h>

#include <string>

namespace multispinal {

// Verdict paths use exact arithmetic only. GMP keeps mpq_class canonical
// (gcd 1, positive denominator) through arithmetic; construction from a raw
// numerator/denominator pair goes through make_rational so nothing
// uncanonical escapes.
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

// Canonical decimal forms: "896", "-3", "4/7" (denominator 1 is elided).
// Reports embed these strings verbatim.
std::string to_string(const BigInt& z);
std::string to_string(const Rational& q);

// Accept exactly what to_string produces, plus an explicit "p/1".
BigInt bigint_from_string(const std::string& s);
Rational rational_from_string(const std::string& s);

}  // namespace multispinal

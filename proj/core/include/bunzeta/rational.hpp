#pragma once

#include <gmpxx.h>

#include <string>

namespace bunzeta {

// Arbitrary-precision integers and rationals. Rationals are kept in
// canonical form (lowest terms, positive denominator) by construction;
// every helper below preserves that.
using Int = mpz_class;
using Rat = mpq_class;

Int int_pow(const Int& base, unsigned long exp);

// num/den, canonicalized. Throws std::invalid_argument on zero denominator.
Rat make_rat(const Int& num, const Int& den);

// base^exp, exp may be negative (then base must be nonzero).
Rat rat_pow(const Rat& base, long exp);

// base^exp for nonnegative big exponents (binary exponentiation).
Rat rat_pow(const Rat& base, const Int& exp);

// Canonical text form: "0", "-7", "3/4". Inverse of rat_from_string.
std::string rat_to_string(const Rat& v);

// Accepts "num" or "num/den" in base 10; canonicalizes.
Rat rat_from_string(const std::string& text);

// Decimal approximation with `digits` places, rounded half away from zero.
std::string decimal_string(const Rat& v, int digits);

double to_double(const Rat& v);

}  // namespace bunzeta

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace adf {

// All exact arithmetic in this project runs on GMP. mpq_class keeps values
// in lowest terms with a positive denominator, which is exactly the
// normal form we rely on when serializing and comparing.
using Int = mpz_class;
using Rat = mpq_class;

Int int_pow(const Int& base, unsigned long exp);
Rat rat_pow(const Rat& base, unsigned long exp);

// Canonical "num/den" form, e.g. "3/4", "-12/1", "0/1".
std::string rat_str(const Rat& q);

// Accepts "num/den" or a bare integer "num". Throws std::invalid_argument
// on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

// Decimal rendering with the given number of significant digits.
std::string rat_decimal(const Rat& q, int significant_digits = 50);

Int uint128_to_int(unsigned __int128 v);

int rat_sign(const Rat& q);

} // namespace adf

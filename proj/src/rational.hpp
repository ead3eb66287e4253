#pragma once

// Exact rational scalar used throughout the library. Backed by GMP's
// mpq_class: always in lowest terms with a positive denominator, so
// equality is plain value equality.

#include <gmpxx.h>

#include <optional>
#include <string>

namespace mg {

using Rat = mpq_class;
using Int = mpz_class;

// Canonical n/d. Throws std::invalid_argument on d == 0.
Rat rat(long num, long den = 1);

// Accepts "n" or "n/d" with an optional leading '-'. Rejects d == 0.
std::optional<Rat> parse_rat(const std::string& text);

// Canonical rendering: "n" when the denominator is 1, else "n/d".
std::string rat_str(const Rat& q);

// Fixed-point decimal with `digits` fractional digits, round-half-even.
std::string rat_decimal(const Rat& q, int digits);

// Largest integer <= q.
Int rat_floor(const Rat& q);

}  // namespace mg

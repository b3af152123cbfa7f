#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace qmasd {

using Integer = mpz_class;
/// GMP keeps mpq_class canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rat = mpq_class;

/// p-adic valuation with +infinity for zero.
using Valuation = std::int64_t;
inline constexpr Valuation kInfiniteValuation = std::numeric_limits<Valuation>::max();

/// num/den reduced to lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rat make_rat(const Integer& num, const Integer& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// "num/den" in lowest terms; the denominator is always printed.
std::string to_string(const Rat& r);
/// Accepts "num/den" or a bare integer.
Rat parse_rat(std::string_view text);

Valuation valuation(const Integer& n, std::uint64_t p);
Valuation valuation(const Rat& r, std::uint64_t p);

}  // namespace qmasd

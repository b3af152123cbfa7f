#pragma once

// Small integer number theory shared by every module.

#include <cstdint>
#include <vector>

namespace qmasd {

bool is_prime(std::uint64_t n);

/// Primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

/// Legendre symbol (a/p) for an odd prime p. Returns -1, 0 or +1.
int legendre(std::int64_t a, std::uint64_t p);

/// Exponent of p in n (n != 0).
int ord_p(std::int64_t n, std::uint64_t p);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Throws kInvalidPrime unless p is a prime >= 5.
void require_good_prime(std::uint64_t p);

}  // namespace qmasd

#pragma once

// Published characteristic polynomials of Frobenius on the new part and their
// factorizations, for the primes 5 <= p <= 29.

#include <cstdint>
#include <string>
#include <vector>

#include "qmasd/cyclo.hpp"

namespace qmasd {

struct GoldenRow {
  std::uint64_t p;
  long c1;
  long c2;
  bool squared;
  /// Quadratic factor x^2 - A x + B (one of the two conjugates when not squared).
  CycloNum A;
  long B;
};

const std::vector<GoldenRow>& golden_table();
/// nullptr when p has no published row.
const GoldenRow* golden_row(std::uint64_t p);

}  // namespace qmasd

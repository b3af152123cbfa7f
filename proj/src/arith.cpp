#include "qmasd/arith.hpp"

#include <string>

#include "qmasd/error.hpp"

namespace qmasd {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kUnrepresentableRadical: return "UnrepresentableRadical";
    case ErrorCode::kInvalidPrime: return "InvalidPrime";
    case ErrorCode::kNonUnitLeading: return "NonUnitLeading";
    case ErrorCode::kOffGridExponent: return "OffGridExponent";
    case ErrorCode::kPrecisionExceedsListedData: return "PrecisionExceedsListedData";
    case ErrorCode::kNoConsistentOffset: return "NoConsistentOffset";
    case ErrorCode::kInsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::kAmbiguousRecovery: return "AmbiguousRecovery";
    case ErrorCode::kNoSolution: return "NoSolution";
    case ErrorCode::kInsufficientUnitCoefficients: return "InsufficientUnitCoefficients";
    case ErrorCode::kNonIntegralAtP: return "NonIntegralAtP";
    case ErrorCode::kWeilBoundViolation: return "WeilBoundViolation";
    case ErrorCode::kNoQMFactorization: return "NoQMFactorization";
    case ErrorCode::kNoValidAssignment: return "NoValidAssignment";
    case ErrorCode::kBothAssignmentsPass: return "BothAssignmentsPass";
    case ErrorCode::kBadPrime: return "BadPrime";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

int legendre(std::int64_t a, std::uint64_t p) {
  const auto pp = static_cast<std::int64_t>(p);
  std::uint64_t x = static_cast<std::uint64_t>(((a % pp) + pp) % pp);
  if (x == 0) return 0;
  // Euler's criterion.
  std::uint64_t e = (p - 1) / 2, r = 1, b = x;
  while (e > 0) {
    if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % p);
    b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % p);
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

int ord_p(std::int64_t n, std::uint64_t p) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "ord_p of zero");
  const auto pp = static_cast<std::int64_t>(p);
  int v = 0;
  while (n % pp == 0) {
    n /= pp;
    ++v;
  }
  return v;
}

void require_good_prime(std::uint64_t p) {
  if (p < 5 || !is_prime(p)) {
    throw Error(ErrorCode::kInvalidPrime, "expected a prime p >= 5, got " + std::to_string(p));
  }
}

}  // namespace qmasd

#include "qmasd/rational.hpp"

#include <string>

#include "qmasd/error.hpp"

namespace qmasd {

std::string to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "not a rational: '" + s + "'");
  }
  if (r.get_den() == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Valuation valuation(const Integer& n, std::uint64_t p) {
  if (n == 0) return kInfiniteValuation;
  Integer m = n;
  Valuation v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

Valuation valuation(const Rat& r, std::uint64_t p) {
  if (r == 0) return kInfiniteValuation;
  return valuation(r.get_num(), p) - valuation(r.get_den(), p);
}

}  // namespace qmasd

#pragma once

// Reductions of Q(zeta_24) modulo p^k and valuations at a single prime above p.
//
// For p >= 5 the prime p is unramified in Q(zeta_24), so a prime P above p is
// fixed by choosing p-adic square roots of -1, 2 and 3 in the unramified ring
// Z_q (q = p or p^2), i.e. an embedding Q(zeta_24) -> Q_q. v_P(x) is then the
// p-adic valuation of the image of x.

#include <array>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "qmasd/cyclo.hpp"
#include "qmasd/rational.hpp"

namespace qmasd {

struct PrimePower {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t modulus = 1;

  /// Requires p prime >= 5, k >= 1 and p^k < 2^62.
  static PrimePower make(std::uint64_t p, unsigned k);
};

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}
inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + m - b;
}
/// Throws kDivisionByZero when a is not a unit mod m.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
std::uint64_t from_signed(std::int64_t a, std::uint64_t m);
std::uint64_t from_integer(const Integer& a, std::uint64_t m);

/// Image of a p-integral rational in Z/p^k; throws kNonIntegralAtP otherwise.
std::uint64_t reduce_rat(const Rat& r, const PrimePower& pk);

/// p-adic valuation of a residue mod p^k; kInfiniteValuation when it is 0 mod p^k.
Valuation valuation_mod(std::uint64_t x, const PrimePower& pk);

/// Hensel-lifted square root of a quadratic residue a mod p^k.
/// Picks the lift of the smallest root in [1, (p-1)/2].
std::uint64_t sqrt_mod_prime_power(std::int64_t a, const PrimePower& pk);

/// Coordinates of an element of Z[1/6][i, sqrt2, sqrt3] reduced mod p^k.
using CycloMod = std::array<std::uint64_t, CycloNum::kDim>;

CycloMod reduce_cyclo(const CycloNum& a, const PrimePower& pk);
CycloMod cm_add(const CycloMod& a, const CycloMod& b, std::uint64_t m);
CycloMod cm_sub(const CycloMod& a, const CycloMod& b, std::uint64_t m);
CycloMod cm_mul(const CycloMod& a, const CycloMod& b, std::uint64_t m);
CycloMod cm_scale(const CycloMod& a, std::uint64_t s, std::uint64_t m);
CycloMod cm_from_scalar(std::uint64_t s);
bool cm_is_zero(const CycloMod& a);
/// Minimum coordinate valuation (all primes above p at once), capped at k.
Valuation cm_coordinate_valuation(const CycloMod& a, const PrimePower& pk);

/// Element x + y*w of Z_q / p^k with w^2 = r.
struct ZqElem {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  friend bool operator==(const ZqElem&, const ZqElem&) = default;
};

class PrimeAbove {
 public:
  /// `flips` negates the chosen roots of -1, 2, 3 (CycloNum::Flip bits);
  /// flips = 0 is the canonical prime.
  PrimeAbove(std::uint64_t p, unsigned k, unsigned flips = 0);

  std::uint64_t p() const { return pk_.p; }
  unsigned k() const { return pk_.k; }
  const PrimePower& prime_power() const { return pk_; }
  unsigned flips() const { return flips_; }
  /// Residue degree of the prime: 1 when -1, 2, 3 are all squares mod p.
  unsigned degree() const { return degree_; }
  std::uint64_t nonresidue() const { return r_; }

  ZqElem mul(const ZqElem& a, const ZqElem& b) const;
  ZqElem add(const ZqElem& a, const ZqElem& b) const;

  ZqElem image(const CycloMod& a) const;
  ZqElem image(const CycloNum& a) const;
  const ZqElem& basis_image(unsigned b) const { return basis_[b]; }

  /// v_P of an element known mod p^k; kInfiniteValuation when its image vanishes mod p^k.
  Valuation valuation(const CycloMod& a) const;

  nlohmann::json describe() const;

 private:
  PrimePower pk_;
  unsigned flips_;
  unsigned degree_ = 1;
  std::uint64_t r_ = 0;
  std::array<ZqElem, CycloNum::kDim> basis_{};
};

/// Exact v_P(a) at the prime above p selected by `flips`; kInfiniteValuation for a = 0.
Valuation cyc_vp_at(const CycloNum& a, std::uint64_t p, unsigned flips = 0);

}  // namespace qmasd

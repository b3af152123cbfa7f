#pragma once

// Exact arithmetic in Q(zeta_24) = Q(i, sqrt2, sqrt3).
//
// Elements are stored in the fixed basis
//   (1, i, sqrt2, i*sqrt2, sqrt3, i*sqrt3, sqrt6, i*sqrt6).
// Basis index b encodes the monomial i^(b&1) * sqrt2^((b>>1)&1) * sqrt3^((b>>2)&1),
// so the product of two basis elements is basis element (x ^ y) times a small
// integer. Complex embedding: i = +sqrt(-1), real radicals positive.

#include <array>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "qmasd/rational.hpp"

namespace qmasd {

class CycloNum {
 public:
  static constexpr unsigned kDim = 8;

  enum Basis : unsigned {
    kOne = 0,
    kI = 1,
    kSqrt2 = 2,
    kISqrt2 = 3,
    kSqrt3 = 4,
    kISqrt3 = 5,
    kSqrt6 = 6,
    kISqrt6 = 7,
  };

  /// Generator masks for Galois flips (sign changes of i, sqrt2, sqrt3).
  enum Flip : unsigned {
    kFlipNone = 0,
    kFlipI = 1,
    kFlipSqrt2 = 2,
    kFlipSqrt3 = 4,
  };

  CycloNum() = default;
  CycloNum(const Rat& r) { c_[kOne] = r; }  // NOLINT: implicit embedding of Q
  CycloNum(long n) { c_[kOne] = n; }         // NOLINT
  explicit CycloNum(const std::array<Rat, kDim>& coords) : c_(coords) {}

  /// coeff * (basis element b).
  static CycloNum basis(unsigned b, const Rat& coeff = 1);
  /// e^(i*pi/3) = (1 + i*sqrt3)/2.
  static CycloNum sixth_root_of_unity();

  const Rat& operator[](unsigned b) const { return c_[b]; }
  const std::array<Rat, kDim>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
  friend bool operator==(const CycloNum& a, const CycloNum& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  CycloNum scaled(const Rat& r) const;

 private:
  std::array<Rat, kDim> c_{};
};

CycloNum cyc_add(const CycloNum& a, const CycloNum& b);
CycloNum cyc_mul(const CycloNum& a, const CycloNum& b);

/// Galois automorphism negating every generator in `flips`.
CycloNum cyc_conj(const CycloNum& a, unsigned flips);

/// Product of all eight conjugates; always rational.
Rat cyc_norm(const CycloNum& a);

/// Throws kDivisionByZero for a = 0.
CycloNum cyc_inv(const CycloNum& a);

/// |a|^2 under the fixed complex embedding, a * conj_i(a).
CycloNum cyc_abs2(const CycloNum& a);

/// Minimum p-adic valuation over the coordinates; p must be a prime >= 5.
/// For p >= 5 this is the minimum over all primes of Q(zeta_24) above p.
Valuation cyc_vp(const CycloNum& a, std::uint64_t p);

/// m*sqrt(d0) for d = m^2 * d0 with d0 in {1, -1, +-2, +-3, +-6}.
CycloNum sqrt_small(const Integer& d);

/// Flip mask that negates sqrt(d0) for the squarefree d0 in {-1, +-2, +-3, +-6}.
unsigned radical_flip(long d0);

std::string basis_name(unsigned b);

/// Compact human form such as "-1/2+1/2*i*sqrt3"; "0" for zero.
std::string format_compact(const CycloNum& a);

/// JSON array of 8 "num/den" strings in basis order.
nlohmann::json to_json(const CycloNum& a);
CycloNum cyclo_from_json(const nlohmann::json& j);

}  // namespace qmasd

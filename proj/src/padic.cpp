#include "qmasd/padic.hpp"

#include <string>

#include "qmasd/arith.hpp"
#include "qmasd/error.hpp"

namespace qmasd {

PrimePower PrimePower::make(std::uint64_t p, unsigned k) {
  require_good_prime(p);
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "prime power exponent must be >= 1");
  PrimePower pk{p, k, 1};
  for (unsigned i = 0; i < k; ++i) {
    if (pk.modulus > (std::uint64_t{1} << 62) / p) {
      throw Error(ErrorCode::kInsufficientPrecision,
                  std::to_string(p) + "^" + std::to_string(k) + " exceeds the machine-word fast path");
    }
    pk.modulus *= p;
  }
  return pk;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1, r = m, new_r = a % m;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    const __int128 tt = t - q * new_t;
    t = new_t;
    new_t = tt;
    const __int128 rr = r - q * new_r;
    r = new_r;
    new_r = rr;
  }
  if (r != 1) throw Error(ErrorCode::kDivisionByZero, "not a unit modulo " + std::to_string(m));
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t from_signed(std::int64_t a, std::uint64_t m) {
  const auto mm = static_cast<__int128>(m);
  __int128 r = static_cast<__int128>(a) % mm;
  if (r < 0) r += mm;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t from_integer(const Integer& a, std::uint64_t m) {
  Integer r;
  Integer mm;
  mpz_import(mm.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

std::uint64_t reduce_rat(const Rat& r, const PrimePower& pk) {
  if (mpz_divisible_ui_p(r.get_den().get_mpz_t(), pk.p)) {
    throw Error(ErrorCode::kNonIntegralAtP,
                to_string(r) + " is not integral at " + std::to_string(pk.p));
  }
  const std::uint64_t num = from_integer(r.get_num(), pk.modulus);
  const std::uint64_t den = from_integer(r.get_den(), pk.modulus);
  return mulmod(num, invmod(den, pk.modulus), pk.modulus);
}

Valuation valuation_mod(std::uint64_t x, const PrimePower& pk) {
  if (x == 0) return kInfiniteValuation;
  Valuation v = 0;
  while (x % pk.p == 0) {
    x /= pk.p;
    ++v;
  }
  return v;
}

namespace {

// Square root of a residue am mod p^k (am a unit square mod p).
std::uint64_t hensel_sqrt(std::uint64_t am, const PrimePower& pk) {
  const std::uint64_t m = pk.modulus;
  const std::uint64_t ap = am % pk.p;
  std::uint64_t s = 0;
  for (std::uint64_t x = 1; x <= (pk.p - 1) / 2; ++x) {
    if (x * x % pk.p == ap) {
      s = x;
      break;
    }
  }
  if (s == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "not a nonzero square mod " + std::to_string(pk.p));
  }
  // Newton: s <- s - (s^2 - a) / (2s); at least doubles the correct digits.
  for (unsigned it = 0; it <= pk.k; ++it) {
    const std::uint64_t f = submod(mulmod(s, s, m), am, m);
    if (f == 0) break;
    s = submod(s, mulmod(f, invmod(mulmod(2, s, m), m), m), m);
  }
  return s;
}

}  // namespace

std::uint64_t sqrt_mod_prime_power(std::int64_t a, const PrimePower& pk) {
  return hensel_sqrt(from_signed(a, pk.modulus), pk);
}

CycloMod reduce_cyclo(const CycloNum& a, const PrimePower& pk) {
  CycloMod r{};
  for (unsigned b = 0; b < CycloNum::kDim; ++b) {
    if (sgn(a[b]) != 0) r[b] = reduce_rat(a[b], pk);
  }
  return r;
}

CycloMod cm_add(const CycloMod& a, const CycloMod& b, std::uint64_t m) {
  CycloMod r;
  for (unsigned i = 0; i < CycloNum::kDim; ++i) r[i] = addmod(a[i], b[i], m);
  return r;
}

CycloMod cm_sub(const CycloMod& a, const CycloMod& b, std::uint64_t m) {
  CycloMod r;
  for (unsigned i = 0; i < CycloNum::kDim; ++i) r[i] = submod(a[i], b[i], m);
  return r;
}

CycloMod cm_mul(const CycloMod& a, const CycloMod& b, std::uint64_t m) {
  static constexpr int kScale[8] = {1, -1, 2, -2, 3, -3, 6, -6};
  CycloMod r{};
  for (unsigned x = 0; x < CycloNum::kDim; ++x) {
    if (a[x] == 0) continue;
    for (unsigned y = 0; y < CycloNum::kDim; ++y) {
      if (b[y] == 0) continue;
      const std::uint64_t t = mulmod(mulmod(a[x], b[y], m), from_signed(kScale[x & y], m), m);
      r[x ^ y] = addmod(r[x ^ y], t, m);
    }
  }
  return r;
}

CycloMod cm_scale(const CycloMod& a, std::uint64_t s, std::uint64_t m) {
  CycloMod r;
  for (unsigned i = 0; i < CycloNum::kDim; ++i) r[i] = mulmod(a[i], s, m);
  return r;
}

CycloMod cm_from_scalar(std::uint64_t s) {
  CycloMod r{};
  r[0] = s;
  return r;
}

bool cm_is_zero(const CycloMod& a) {
  for (auto x : a) {
    if (x != 0) return false;
  }
  return true;
}

Valuation cm_coordinate_valuation(const CycloMod& a, const PrimePower& pk) {
  Valuation v = kInfiniteValuation;
  for (auto x : a) {
    const Valuation w = valuation_mod(x, pk);
    if (w < v) v = w;
  }
  return v;
}

PrimeAbove::PrimeAbove(std::uint64_t p, unsigned k, unsigned flips)
    : pk_(PrimePower::make(p, k)), flips_(flips & 7u) {
  for (std::uint64_t x = 2; x < p; ++x) {
    if (legendre(static_cast<std::int64_t>(x), p) == -1) {
      r_ = x;
      break;
    }
  }
  const std::uint64_t m = pk_.modulus;
  const std::int64_t gens[3] = {-1, 2, 3};
  std::array<ZqElem, 3> root{};
  for (unsigned g = 0; g < 3; ++g) {
    if (legendre(gens[g], p) == 1) {
      root[g] = {sqrt_mod_prime_power(gens[g], pk_), 0};
    } else {
      // gens[g] / r is a residue, so sqrt(gens[g]) = w * sqrt(gens[g] / r).
      degree_ = 2;
      const std::uint64_t q = mulmod(from_signed(gens[g], m), invmod(r_, m), m);
      root[g] = {0, hensel_sqrt(q, pk_)};
    }
    if (flips_ & (1u << g)) root[g] = {submod(0, root[g].x, m), submod(0, root[g].y, m)};
  }
  for (unsigned b = 0; b < CycloNum::kDim; ++b) {
    ZqElem e{1 % m, 0};
    for (unsigned g = 0; g < 3; ++g) {
      if (b & (1u << g)) e = mul(e, root[g]);
    }
    basis_[b] = e;
  }
}

ZqElem PrimeAbove::mul(const ZqElem& a, const ZqElem& b) const {
  const std::uint64_t m = pk_.modulus;
  const std::uint64_t x = addmod(mulmod(a.x, b.x, m), mulmod(mulmod(a.y, b.y, m), r_ % m, m), m);
  const std::uint64_t y = addmod(mulmod(a.x, b.y, m), mulmod(a.y, b.x, m), m);
  return {x, y};
}

ZqElem PrimeAbove::add(const ZqElem& a, const ZqElem& b) const {
  return {addmod(a.x, b.x, pk_.modulus), addmod(a.y, b.y, pk_.modulus)};
}

ZqElem PrimeAbove::image(const CycloMod& a) const {
  const std::uint64_t m = pk_.modulus;
  ZqElem out;
  for (unsigned b = 0; b < CycloNum::kDim; ++b) {
    if (a[b] == 0) continue;
    out = add(out, {mulmod(a[b], basis_[b].x, m), mulmod(a[b], basis_[b].y, m)});
  }
  return out;
}

ZqElem PrimeAbove::image(const CycloNum& a) const { return image(reduce_cyclo(a, pk_)); }

Valuation PrimeAbove::valuation(const CycloMod& a) const {
  const ZqElem z = image(a);
  const Valuation vx = valuation_mod(z.x, pk_);
  const Valuation vy = valuation_mod(z.y, pk_);
  return vx < vy ? vx : vy;
}

nlohmann::json PrimeAbove::describe() const {
  nlohmann::json j;
  j["p"] = pk_.p;
  j["flips"] = flips_;
  j["residue_degree"] = degree_;
  if (degree_ == 2) j["w_squared"] = r_;
  // Images of i, sqrt2, sqrt3 modulo p as (x, y) for x + y*w.
  nlohmann::json roots = nlohmann::json::object();
  const char* names[3] = {"i", "sqrt2", "sqrt3"};
  for (unsigned g = 0; g < 3; ++g) {
    const ZqElem& e = basis_[1u << g];
    roots[names[g]] = {e.x % pk_.p, e.y % pk_.p};
  }
  j["roots_mod_p"] = roots;
  return j;
}

Valuation cyc_vp_at(const CycloNum& a, std::uint64_t p, unsigned flips) {
  if (a.is_zero()) return kInfiniteValuation;
  const Valuation m = cyc_vp(a, p);
  Rat shift = 1;
  {
    Integer pm;
    mpz_ui_pow_ui(pm.get_mpz_t(), p, static_cast<unsigned long>(m < 0 ? -m : m));
    shift = m < 0 ? Rat(pm) : Rat(1, 1) / Rat(pm);
  }
  const CycloNum unit_part = a.scaled(shift);
  // v_P(x) <= v_p(N(x)) for p-integral x, so p^(v_p(N)+1) separates the answer.
  const Valuation bound = valuation(cyc_norm(unit_part), p);
  const PrimeAbove prime(p, static_cast<unsigned>(bound + 1), flips);
  const ZqElem z = prime.image(unit_part);
  const Valuation vx = valuation_mod(z.x, prime.prime_power());
  const Valuation vy = valuation_mod(z.y, prime.prime_power());
  return m + (vx < vy ? vx : vy);
}

}  // namespace qmasd

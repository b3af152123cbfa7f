#include "qmasd/cyclo.hpp"

#include <string>

#include "qmasd/arith.hpp"
#include "qmasd/error.hpp"

namespace qmasd {

namespace {

// basis(x) * basis(y) = kProductScale[x & y] * basis(x ^ y)
constexpr int kProductScale[8] = {1, -1, 2, -2, 3, -3, 6, -6};

struct Support {
  unsigned idx[CycloNum::kDim];
  unsigned n = 0;
};

Support support_of(const CycloNum& a) {
  Support s;
  for (unsigned b = 0; b < CycloNum::kDim; ++b) {
    if (sgn(a[b]) != 0) s.idx[s.n++] = b;
  }
  return s;
}

unsigned parity(unsigned x) { return __builtin_popcount(x) & 1u; }

}  // namespace

CycloNum CycloNum::basis(unsigned b, const Rat& coeff) {
  if (b >= kDim) throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
  CycloNum r;
  r.c_[b] = coeff;
  return r;
}

CycloNum CycloNum::sixth_root_of_unity() {
  return basis(kOne, Rat(1, 2)) + basis(kISqrt3, Rat(1, 2));
}

bool CycloNum::is_zero() const {
  for (const auto& x : c_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool CycloNum::is_rational() const {
  for (unsigned b = 1; b < kDim; ++b) {
    if (sgn(c_[b]) != 0) return false;
  }
  return true;
}

CycloNum CycloNum::operator-() const {
  CycloNum r;
  for (unsigned b = 0; b < kDim; ++b) r.c_[b] = -c_[b];
  return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  for (unsigned b = 0; b < kDim; ++b) c_[b] += o.c_[b];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  for (unsigned b = 0; b < kDim; ++b) c_[b] -= o.c_[b];
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  *this = *this * o;
  return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  const Support sa = support_of(a);
  const Support sb = support_of(b);
  CycloNum r;
  Rat t;
  for (unsigned i = 0; i < sa.n; ++i) {
    const unsigned x = sa.idx[i];
    for (unsigned j = 0; j < sb.n; ++j) {
      const unsigned y = sb.idx[j];
      t = a.c_[x] * b.c_[y];
      const int scale = kProductScale[x & y];
      if (scale != 1) t *= scale;
      r.c_[x ^ y] += t;
    }
  }
  return r;
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) {
  if (b.is_rational()) {
    if (sgn(b[0]) == 0) throw Error(ErrorCode::kDivisionByZero, "CycloNum division by zero");
    return a.scaled(1 / b[0]);
  }
  return a * cyc_inv(b);
}

CycloNum CycloNum::scaled(const Rat& r) const {
  CycloNum out;
  for (unsigned b = 0; b < kDim; ++b) {
    if (sgn(c_[b]) != 0) out.c_[b] = c_[b] * r;
  }
  return out;
}

CycloNum cyc_add(const CycloNum& a, const CycloNum& b) { return a + b; }
CycloNum cyc_mul(const CycloNum& a, const CycloNum& b) { return a * b; }

CycloNum cyc_conj(const CycloNum& a, unsigned flips) {
  std::array<Rat, CycloNum::kDim> c = a.coords();
  for (unsigned b = 0; b < CycloNum::kDim; ++b) {
    if (parity(b & flips)) c[b] = -c[b];
  }
  return CycloNum(c);
}

namespace {

CycloNum product_of_nontrivial_conjugates(const CycloNum& a) {
  CycloNum prod(1);
  for (unsigned flips = 1; flips < 8; ++flips) prod *= cyc_conj(a, flips);
  return prod;
}

}  // namespace

Rat cyc_norm(const CycloNum& a) {
  const CycloNum n = a * product_of_nontrivial_conjugates(a);
  return n[CycloNum::kOne];
}

CycloNum cyc_inv(const CycloNum& a) {
  if (a.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (a.is_rational()) return CycloNum(1 / a[0]);
  const CycloNum rest = product_of_nontrivial_conjugates(a);
  const Rat norm = (a * rest)[CycloNum::kOne];
  return rest.scaled(1 / norm);
}

CycloNum cyc_abs2(const CycloNum& a) { return a * cyc_conj(a, CycloNum::kFlipI); }

Valuation cyc_vp(const CycloNum& a, std::uint64_t p) {
  require_good_prime(p);
  Valuation v = kInfiniteValuation;
  for (const auto& x : a.coords()) {
    const Valuation w = valuation(x, p);
    if (w < v) v = w;
  }
  return v;
}

CycloNum sqrt_small(const Integer& d) {
  if (d == 0) return CycloNum();
  const int sign = sgn(d);
  Integer r = abs(d);
  unsigned e2 = 0, e3 = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), 2)) { r /= 2; ++e2; }
  while (mpz_divisible_ui_p(r.get_mpz_t(), 3)) { r /= 3; ++e3; }
  if (!mpz_perfect_square_p(r.get_mpz_t())) {
    throw Error(ErrorCode::kUnrepresentableRadical,
                "sqrt(" + d.get_str() + ") does not lie in Q(zeta_24)");
  }
  Integer m;
  mpz_sqrt(m.get_mpz_t(), r.get_mpz_t());
  Integer pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), 2, e2 / 2);
  m *= pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), 3, e3 / 2);
  m *= pw;
  unsigned b = 0;
  if (sign < 0) b |= CycloNum::kI;
  if (e2 & 1) b |= CycloNum::kSqrt2;
  if (e3 & 1) b |= CycloNum::kSqrt3;
  return CycloNum::basis(b, Rat(m));
}

unsigned radical_flip(long d0) {
  switch (d0) {
    case -1: return CycloNum::kFlipI;
    case 2: return CycloNum::kFlipSqrt2;
    case -2: return CycloNum::kFlipI;
    case 3: return CycloNum::kFlipSqrt3;
    case -3: return CycloNum::kFlipI;
    case 6: return CycloNum::kFlipSqrt2;
    case -6: return CycloNum::kFlipI;
    default:
      throw Error(ErrorCode::kUnrepresentableRadical, "no radical flip for " + std::to_string(d0));
  }
}

std::string basis_name(unsigned b) {
  static const char* kNames[CycloNum::kDim] = {"1",     "i",       "sqrt2", "i*sqrt2",
                                               "sqrt3", "i*sqrt3", "sqrt6", "i*sqrt6"};
  return kNames[b];
}

std::string format_compact(const CycloNum& a) {
  std::string out;
  for (unsigned b = 0; b < CycloNum::kDim; ++b) {
    const Rat& x = a[b];
    if (sgn(x) == 0) continue;
    std::string term;
    Rat mag = abs(x);
    if (b == 0) {
      term = mag.get_str();
    } else if (mag == 1) {
      term = basis_name(b);
    } else {
      term = mag.get_str() + "*" + basis_name(b);
    }
    if (sgn(x) < 0) {
      out += "-" + term;
    } else {
      out += (out.empty() ? "" : "+") + term;
    }
  }
  return out.empty() ? "0" : out;
}

nlohmann::json to_json(const CycloNum& a) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : a.coords()) j.push_back(to_string(x));
  return j;
}

CycloNum cyclo_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != CycloNum::kDim) {
    throw Error(ErrorCode::kInvalidArgument, "CycloNum JSON must be an array of 8 strings");
  }
  std::array<Rat, CycloNum::kDim> c;
  for (unsigned b = 0; b < CycloNum::kDim; ++b) c[b] = parse_rat(j[b].get<std::string>());
  return CycloNum(c);
}

}  // namespace qmasd

#include "qmasd/mpoly.hpp"

#include <algorithm>
#include <vector>

#include "qmasd/error.hpp"

namespace qmasd {

CRing CRing::gen() {
  CRing r;
  r.c_[1] = CycloNum(1);
  return r;
}

bool CRing::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const CycloNum& x) { return x.is_zero(); });
}

int CRing::terms() const {
  return static_cast<int>(std::count_if(c_.begin(), c_.end(), [](const CycloNum& x) { return !x.is_zero(); }));
}

CRing CRing::operator-() const {
  CRing r;
  for (int k = 0; k < kDegree; ++k) r.c_[k] = -c_[k];
  return r;
}

CRing operator+(const CRing& a, const CRing& b) {
  CRing r;
  for (int k = 0; k < CRing::kDegree; ++k) r.c_[k] = a.c_[k] + b.c_[k];
  return r;
}

CRing operator-(const CRing& a, const CRing& b) {
  CRing r;
  for (int k = 0; k < CRing::kDegree; ++k) r.c_[k] = a.c_[k] - b.c_[k];
  return r;
}

CRing operator*(const CRing& a, const CRing& b) {
  CRing r;
  for (int i = 0; i < CRing::kDegree; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < CRing::kDegree; ++j) {
      if (b.c_[j].is_zero()) continue;
      const CycloNum t = a.c_[i] * b.c_[j];
      if (i + j < CRing::kDegree) {
        r.c_[i + j] += t;
      } else {
        r.c_[i + j - CRing::kDegree] += t.scaled(-8);
      }
    }
  }
  return r;
}

CRing CRing::term_inverse() const {
  if (terms() != 1) throw Error(ErrorCode::kDivisionByZero, "only single terms z c^k are inverted");
  for (int k = 0; k < kDegree; ++k) {
    if (c_[k].is_zero()) continue;
    // c^-k = c^(6-k) / (-8)
    CRing r;
    const CycloNum zi = cyc_inv(c_[k]);
    if (k == 0) {
      r.c_[0] = zi;
    } else {
      r.c_[kDegree - k] = zi.scaled(Rat(-1, 8));
    }
    return r;
  }
  throw Error(ErrorCode::kDivisionByZero, "zero in CRing");
}

std::string CRing::to_string() const {
  std::string out;
  for (int k = 0; k < kDegree; ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + format_compact(c_[k]) + ")";
    if (k > 0) out += "*c^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

LPoly::LPoly(const CRing& c) {
  if (!c.is_zero()) t_[{0, 0, 0}] = c;
}

LPoly::LPoly(long c) : LPoly(CRing(c)) {}

LPoly LPoly::monomial(const Exponent& e, const CRing& c) {
  LPoly p;
  p.add_term(e, c);
  return p;
}

LPoly LPoly::var(Var v, int power) {
  Exponent e{0, 0, 0};
  e[v] = power;
  return monomial(e);
}

void LPoly::add_term(const Exponent& e, const CRing& c) {
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) t_.erase(it);
}

Exponent LPoly::min_exponents() const {
  if (t_.empty()) return {0, 0, 0};
  Exponent m = t_.begin()->first;
  for (const auto& [e, c] : t_) {
    for (int v = 0; v < 3; ++v) m[v] = std::min(m[v], e[v]);
  }
  return m;
}

int LPoly::max_exponent(Var v) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : t_) {
    m = first ? e[v] : std::max(m, e[v]);
    first = false;
  }
  return m;
}

LPoly operator+(const LPoly& a, const LPoly& b) {
  LPoly r = a;
  for (const auto& [e, c] : b.t_) r.add_term(e, c);
  return r;
}

LPoly LPoly::operator-() const {
  LPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

LPoly operator-(const LPoly& a, const LPoly& b) { return a + (-b); }

LPoly operator*(const LPoly& a, const LPoly& b) {
  LPoly r;
  for (const auto& [ea, ca] : a.t_) {
    for (const auto& [eb, cb] : b.t_) {
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return r;
}

LPoly LPoly::pow(unsigned e) const {
  LPoly r(1);
  LPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

LPoly LPoly::monomial_inverse() const {
  if (!is_monomial()) throw Error(ErrorCode::kInvalidArgument, "only monomials are inverted: " + to_string());
  const auto& [e, c] = *t_.begin();
  return monomial({-e[0], -e[1], -e[2]}, c.term_inverse());
}

LPoly LPoly::shifted(const Exponent& s) const {
  LPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace(Exponent{e[0] + s[0], e[1] + s[1], e[2] + s[2]}, c);
  return r;
}

LPoly LPoly::substitute(const std::array<LPoly, 3>& values) const {
  // Power caches per variable, positive and negative.
  std::array<std::map<int, LPoly>, 3> cache;
  const auto power = [&](int v, int k) -> const LPoly& {
    auto it = cache[v].find(k);
    if (it != cache[v].end()) return it->second;
    LPoly val = k >= 0 ? values[v].pow(static_cast<unsigned>(k)) : values[v].monomial_inverse().pow(static_cast<unsigned>(-k));
    return cache[v].emplace(k, std::move(val)).first->second;
  };
  LPoly r;
  for (const auto& [e, c] : t_) {
    LPoly term(c);
    for (int v = 0; v < 3; ++v) {
      if (e[v] != 0) term = term * power(v, e[v]);
    }
    r = r + term;
  }
  return r;
}

std::string LPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  static const char* kNames[3] = {"X", "Y", "S"};
  for (const auto& [e, c] : t_) {
    if (!out.empty()) out += " + ";
    out += "[" + c.to_string() + "]";
    for (int v = 0; v < 3; ++v) {
      if (e[v] != 0) out += std::string("*") + kNames[v] + "^" + std::to_string(e[v]);
    }
  }
  return out;
}

LPoly Curve::cubic() const {
  const LPoly x = LPoly::var(kX);
  return x.pow(3) + a * x.pow(2) + b * x;
}

LPoly Curve::equation() const { return LPoly::var(kY, 2) - cubic(); }

LPoly reduce_mod_curve(const LPoly& f, const Curve& curve) {
  const LPoly cub = curve.cubic();
  std::vector<LPoly> cub_pow{LPoly(1)};
  LPoly r;
  for (const auto& [e, c] : f.terms()) {
    if (e[kY] < 0) throw Error(ErrorCode::kInvalidArgument, "negative power of Y cannot be reduced");
    const int half = e[kY] / 2;
    while (static_cast<int>(cub_pow.size()) <= half) cub_pow.push_back(cub_pow.back() * cub);
    r = r + LPoly::monomial({e[kX], e[kY] % 2, e[kS]}, c) * cub_pow[static_cast<std::size_t>(half)];
  }
  return r;
}

bool vanishes_on_curve(const LPoly& f, const Curve& curve) {
  const Exponent m = f.min_exponents();
  const Exponent shift{std::max(0, -m[0]), std::max(0, -m[1]), std::max(0, -m[2])};
  return reduce_mod_curve(f.shifted(shift), curve).is_zero();
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
  return {outer[0].substitute(inner), outer[1].substitute(inner), outer[2].substitute(inner)};
}

bool maps_agree_on_curve(const RationalMap& f, const RationalMap& g, const Curve& curve) {
  for (int i = 0; i < 3; ++i) {
    if (!vanishes_on_curve(f[i] - g[i], curve)) return false;
  }
  return true;
}

}  // namespace qmasd

#include "qmasd/modseries.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "qmasd/error.hpp"

namespace qmasd {

namespace {

std::vector<std::size_t> support(const ModVec& a, std::size_t n) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < std::min(n, a.size()); ++i) {
    if (a[i] != 0) idx.push_back(i);
  }
  return idx;
}

// prod_k (1 - q^(dk)) to n terms: Euler's pentagonal series in q^d.
ModVec pentagonal(int d, std::size_t n, std::uint64_t m) {
  ModVec c(n, 0);
  const std::uint64_t minus_one = m - 1;
  for (std::int64_t k = 0;; ++k) {
    bool any = false;
    for (std::int64_t kk : {k, -k}) {
      const std::uint64_t idx = static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(kk * (3 * kk - 1) / 2);
      if (idx < n) {
        c[idx] = (k % 2 == 0) ? 1 % m : minus_one;
        any = true;
      }
      if (k == 0) break;
    }
    if (!any) break;
  }
  return c;
}

}  // namespace

ModVec mod_mul(const ModVec& a, const ModVec& b, std::size_t n, std::uint64_t m) {
  ModVec r(n, 0);
  const auto sa = support(a, n);
  const std::size_t nb = std::min(n, b.size());
  if (m <= (std::uint64_t{1} << 32)) {
    // Row-wise accumulation in 64 bits; fold back below m before overflow is possible.
    const std::uint64_t limit = m <= 1 ? 1 : (std::numeric_limits<std::uint64_t>::max() - m) / ((m - 1) * (m - 1));
    std::uint64_t pending = 0;
    for (std::size_t i : sa) {
      const std::uint64_t ai = a[i];
      const std::size_t len = std::min(nb, n - i);
      std::uint64_t* out = r.data() + i;
      const std::uint64_t* bp = b.data();
      for (std::size_t j = 0; j < len; ++j) out[j] += ai * bp[j];
      if (++pending >= limit) {
        for (auto& x : r) x %= m;
        pending = 0;
      }
    }
    for (auto& x : r) x %= m;
    return r;
  }
  for (std::size_t i : sa) {
    for (std::size_t j = 0; j < std::min(nb, n - i); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], m), m);
  }
  return r;
}

ModVec mod_divide(const ModVec& a, const ModVec& s, std::size_t n, std::uint64_t m) {
  if (s.empty()) throw Error(ErrorCode::kDivisionByZero, "division by an empty series");
  const std::uint64_t inv0 = invmod(s[0], m);
  const auto ss = support(s, n);
  ModVec r(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned __int128 acc = i < a.size() ? a[i] : 0;
    unsigned __int128 neg = 0;
    for (std::size_t k : ss) {
      if (k == 0) continue;
      if (k > i) break;
      neg += static_cast<unsigned __int128>(s[k]) * r[i - k];
      if (neg >> 126) neg %= m;
    }
    const std::uint64_t pos = static_cast<std::uint64_t>(acc % m);
    r[i] = mulmod(submod(pos, static_cast<std::uint64_t>(neg % m), m), inv0, m);
  }
  return r;
}

ModVec mod_inv_root(const ModVec& h, unsigned d, std::size_t n, std::uint64_t m) {
  if (h.empty() || h[0] != 1 % m) throw Error(ErrorCode::kNonUnitLeading, "inverse root needs h[0] = 1");
  const std::uint64_t inv_d = invmod(d, m);
  ModVec y{1 % m};
  std::size_t prec = 1;
  while (prec < n) {
    prec = std::min(n, 2 * prec);
    y.resize(prec, 0);
    // y <- y + y (1 - h y^d) / d
    ModVec yd{1 % m};
    ModVec base = y;
    for (unsigned e = d; e > 0; e >>= 1) {
      if (e & 1) yd = mod_mul(yd, base, prec, m);
      if (e > 1) base = mod_mul(base, base, prec, m);
    }
    ModVec err = mod_mul(h, yd, prec, m);
    for (auto& x : err) x = submod(0, x, m);
    err[0] = addmod(err[0], 1 % m, m);
    const ModVec corr = mod_mul(err, y, prec, m);
    for (std::size_t i = 0; i < prec; ++i) y[i] = addmod(y[i], mulmod(corr[i], inv_d, m), m);
  }
  y.resize(n, 0);
  return y;
}

ModVec mod_eta_product(const std::vector<std::pair<int, int>>& factors, std::size_t n, std::uint64_t m) {
  ModVec r(n, 0);
  if (n > 0) r[0] = 1 % m;
  for (const auto& [d, e] : factors) {
    const ModVec pd = pentagonal(d, n, m);
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r = e > 0 ? mod_mul(pd, r, n, m) : mod_divide(r, pd, n, m);
  }
  return r;
}

FamilyMod::FamilyMod(std::uint64_t p, unsigned k, std::int64_t max_index, std::initializer_list<int> which)
    : pk_(PrimePower::make(p, k)), max_index_(max_index) {
  if (max_index < 0) throw Error(ErrorCode::kInvalidArgument, "max_index must be >= 0");
  const std::uint64_t m = pk_.modulus;
  // a_j(j + 6t) is the q^t coefficient of the inner series.
  const auto n = static_cast<std::size_t>(max_index / 6 + 1);
  const ModVec g = mod_eta_product({{1, 4}, {2, 1}, {6, 5}, {3, -4}}, n, m);
  const ModVec h = mod_eta_product({{2, 3}, {3, 9}, {1, -3}, {6, -9}}, n, m);
  const ModVec y = mod_inv_root(h, 6, n, m);
  const ModVec hg = mod_mul(h, g, n, m);
  std::array<ModVec, 6> ypow;
  ypow[1] = y;
  for (int j : which) {
    if (j < 1 || j > 5) throw Error(ErrorCode::kInvalidArgument, "F_j needs 1 <= j <= 5");
    for (int e = 2; e <= j; ++e) {
      if (ypow[e].empty()) ypow[e] = mod_mul(ypow[e / 2], ypow[e - e / 2], n, m);
    }
    inner_[j - 1] = mod_mul(hg, ypow[j], n, m);
  }
}

std::uint64_t FamilyMod::coefficient(int j, std::int64_t n) const {
  if (!has(j)) throw Error(ErrorCode::kInvalidArgument, "F" + std::to_string(j) + " was not built");
  if (n > max_index_) {
    throw Error(ErrorCode::kInsufficientPrecision,
                "a(" + std::to_string(n) + ") requested, family built to " + std::to_string(max_index_));
  }
  if (n < j || (n - j) % 6 != 0) return 0;
  const auto t = static_cast<std::size_t>((n - j) / 6);
  return t < inner_[j - 1].size() ? inner_[j - 1][t] : 0;
}

}  // namespace qmasd

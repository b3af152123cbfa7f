#include "qmasd/qseries.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "qmasd/arith.hpp"
#include "qmasd/error.hpp"

namespace qmasd {

namespace {

std::vector<std::size_t> nonzero_indices(const std::vector<CycloNum>& c) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) idx.push_back(i);
  }
  return idx;
}

}  // namespace

QSeries::QSeries(std::int64_t lead, std::vector<CycloNum> coeffs) : lead_(lead) {
  std::size_t first = 0;
  while (first < coeffs.size() && coeffs[first].is_zero()) ++first;
  lead_ += static_cast<std::int64_t>(first);
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(first));
  coeffs_ = std::move(coeffs);
}

QSeries QSeries::one(std::size_t prec) { return monomial(0, CycloNum(1), prec); }

QSeries QSeries::monomial(std::int64_t exponent, const CycloNum& c, std::size_t prec) {
  std::vector<CycloNum> v(prec);
  if (prec > 0) v[0] = c;
  return QSeries(exponent, std::move(v));
}

QSeries QSeries::zero(std::int64_t absolute_precision) {
  QSeries s;
  s.lead_ = absolute_precision;
  return s;
}

CycloNum QSeries::coefficient_at(std::int64_t exponent) const {
  if (exponent >= absolute_precision()) {
    throw Error(ErrorCode::kInsufficientPrecision,
                "coefficient of q^(" + std::to_string(exponent) + "/24) requested, series known below " +
                    std::to_string(absolute_precision()));
  }
  if (exponent < lead_) return CycloNum();
  return coeffs_[static_cast<std::size_t>(exponent - lead_)];
}

QSeries QSeries::truncated(std::size_t prec) const {
  std::vector<CycloNum> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(prec, coeffs_.size())));
  if (c.empty()) return zero(lead_ + static_cast<std::int64_t>(std::min(prec, coeffs_.size())));
  return QSeries(lead_, std::move(c));
}

QSeries series_add(const QSeries& a, const QSeries& b) {
  const std::int64_t lo = std::min(a.lead(), b.lead());
  const std::int64_t hi = std::min(a.absolute_precision(), b.absolute_precision());
  if (hi <= lo) return QSeries::zero(hi);
  std::vector<CycloNum> c(static_cast<std::size_t>(hi - lo));
  for (std::int64_t e = lo; e < hi; ++e) {
    const auto n = static_cast<std::size_t>(e - lo);
    if (e >= a.lead()) c[n] += a[static_cast<std::size_t>(e - a.lead())];
    if (e >= b.lead()) c[n] += b[static_cast<std::size_t>(e - b.lead())];
  }
  return QSeries(lo, std::move(c));
}

QSeries series_scale(const QSeries& a, const CycloNum& c) {
  if (c.is_zero() || a.is_zero()) return QSeries::zero(a.absolute_precision());
  std::vector<CycloNum> out(a.prec());
  for (std::size_t n = 0; n < a.prec(); ++n) {
    if (!a[n].is_zero()) out[n] = a[n] * c;
  }
  return QSeries(a.lead(), std::move(out));
}

QSeries series_sub(const QSeries& a, const QSeries& b) { return series_add(a, series_scale(b, CycloNum(-1))); }

QSeries series_mul(const QSeries& a, const QSeries& b) {
  if (a.is_zero() || b.is_zero()) {
    // O(q^A) * (q^lb + ...) = O(q^(A + lb)).
    if (a.is_zero() && b.is_zero()) return QSeries::zero(a.lead() + b.lead());
    return QSeries::zero(a.is_zero() ? a.lead() + b.lead() : a.lead() + b.lead());
  }
  const std::size_t prec = std::min(a.prec(), b.prec());
  std::vector<CycloNum> c(prec);
  const auto nb = nonzero_indices(b.coeffs());
  for (std::size_t i = 0; i < prec; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j : nb) {
      if (i + j >= prec) break;
      c[i + j] += a[i] * b[j];
    }
  }
  return QSeries(a.lead() + b.lead(), std::move(c));
}

QSeries series_inverse(const QSeries& a) {
  if (a.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of a zero series");
  const std::size_t prec = a.prec();
  const CycloNum inv0 = cyc_inv(a[0]);
  const auto na = nonzero_indices(a.coeffs());
  std::vector<CycloNum> g(prec);
  g[0] = inv0;
  for (std::size_t n = 1; n < prec; ++n) {
    CycloNum s;
    for (std::size_t k : na) {
      if (k == 0) continue;
      if (k > n) break;
      if (!g[n - k].is_zero()) s += a[k] * g[n - k];
    }
    if (!s.is_zero()) g[n] = -(s * inv0);
  }
  return QSeries(-a.lead(), std::move(g));
}

QSeries series_pow_int(const QSeries& a, long e) {
  QSeries base = e < 0 ? series_inverse(a) : a;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  QSeries result = QSeries::one(a.is_zero() ? 0 : a.prec());
  while (n > 0) {
    if (n & 1) result = series_mul(result, base);
    n >>= 1;
    if (n > 0) base = series_mul(base, base);
  }
  return result;
}

QSeries series_pow_rational(const QSeries& a, long num, long den) {
  if (den <= 0) throw Error(ErrorCode::kInvalidArgument, "exponent denominator must be positive");
  if (a.is_zero() || a[0] != CycloNum(1)) {
    throw Error(ErrorCode::kNonUnitLeading, "rational power needs leading coefficient 1");
  }
  if ((a.lead() * num) % den != 0) {
    throw Error(ErrorCode::kOffGridExponent,
                "lead " + std::to_string(a.lead()) + " * " + std::to_string(num) + "/" + std::to_string(den) +
                    " is off the 1/24 grid");
  }
  const Rat alpha = make_rat(num, den);
  const std::size_t prec = a.prec();
  const auto na = nonzero_indices(a.coeffs());
  std::vector<CycloNum> g(prec);
  g[0] = CycloNum(1);
  // From h g' = alpha h' g with h_0 = 1:
  //   n g_n = sum_{k=1..n} (alpha k - (n - k)) h_k g_{n-k}.
  for (std::size_t n = 1; n < prec; ++n) {
    CycloNum s;
    for (std::size_t k : na) {
      if (k == 0) continue;
      if (k > n) break;
      if (g[n - k].is_zero()) continue;
      const Rat w = alpha * static_cast<long>(k) - static_cast<long>(n - k);
      if (sgn(w) == 0) continue;
      s += (a[k] * g[n - k]).scaled(w);
    }
    if (!s.is_zero()) g[n] = s.scaled(Rat(1, static_cast<long>(n)));
  }
  return QSeries(a.lead() * num / den, std::move(g));
}

std::int64_t EtaQuotient::lead() const {
  std::int64_t s = 0;
  for (const auto& [d, r] : factors) s += static_cast<std::int64_t>(d) * r;
  return s;
}

void EtaQuotient::validate() const {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].first <= 0 || factors[i].second == 0) {
      throw Error(ErrorCode::kInvalidArgument, "eta quotient factors need d > 0 and r != 0");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (factors[i].first == factors[j].first) {
        throw Error(ErrorCode::kInvalidArgument, "repeated level in eta quotient");
      }
    }
  }
}

QSeries eta_expand(int d, std::size_t prec) {
  if (d <= 0) throw Error(ErrorCode::kInvalidArgument, "eta level must be positive");
  std::vector<CycloNum> c(prec);
  // prod (1 - x^k) = sum_k (-1)^k x^(k(3k-1)/2), k over all integers.
  for (long k = 0;; ++k) {
    bool any = false;
    for (long kk : {k, -k}) {
      if (k == 0 && kk != 0) continue;
      const std::int64_t pent = kk * (3 * kk - 1) / 2;
      const std::int64_t idx = std::int64_t{QSeries::kGrid} * d * pent;
      if (idx < static_cast<std::int64_t>(prec)) {
        c[static_cast<std::size_t>(idx)] = CycloNum((k % 2 == 0) ? 1 : -1);
        any = true;
      }
      if (k == 0) break;
    }
    if (!any) break;
  }
  return QSeries(d, std::move(c));
}

QSeries etaq_expand(const EtaQuotient& e, std::size_t prec) {
  e.validate();
  QSeries result = QSeries::one(prec);
  for (const auto& [d, r] : e.factors) {
    result = series_mul(result, series_pow_int(eta_expand(d, prec), r));
  }
  return result;
}

FormName parse_form_name(std::string_view name) {
  static const std::pair<const char*, FormName> kNames[] = {
      {"F", FormName::kF},     {"B", FormName::kB},     {"F1", FormName::kF1},   {"F2", FormName::kF2},
      {"F3", FormName::kF3},   {"F4", FormName::kF4},   {"F5", FormName::kF5},   {"f5", FormName::kf5},
      {"f7", FormName::kf7},   {"f13", FormName::kf13}, {"f23", FormName::kf23},
  };
  for (const auto& [s, f] : kNames) {
    if (name == s) return f;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown form '" + std::string(name) + "'");
}

std::string form_label(FormName name) {
  switch (name) {
    case FormName::kF: return "F";
    case FormName::kB: return "B";
    case FormName::kF1: return "F1";
    case FormName::kF2: return "F2";
    case FormName::kF3: return "F3";
    case FormName::kF4: return "F4";
    case FormName::kF5: return "F5";
    case FormName::kf5: return "f5";
    case FormName::kf7: return "f7";
    case FormName::kf13: return "f13";
    case FormName::kf23: return "f23";
  }
  return "?";
}

EtaQuotient eta_quotient_of(FormName name) {
  switch (name) {
    case FormName::kF: return {{{1, 4}, {2, 1}, {6, 5}, {3, -4}}};
    case FormName::kB: return {{{2, 3}, {3, 9}, {1, -3}, {6, -9}}};
    case FormName::kf5: return {{{1, 5}, {6, 5}, {3, -2}, {12, -2}}};
    case FormName::kf7: return {{{1, 5}, {4, 1}, {6, 2}, {2, -1}, {12, -1}}};
    case FormName::kf13: return {{{1, 4}, {2, 2}, {3, 1}, {12, 1}, {4, -1}, {6, -1}}};
    case FormName::kf23: return {{{1, 5}, {12, 2}, {6, -1}}};
    default:
      throw Error(ErrorCode::kInvalidArgument, form_label(name) + " is not an eta quotient");
  }
}

QSeries build_form(FormName name, std::size_t prec) {
  if (prec == 0) throw Error(ErrorCode::kInvalidArgument, "precision must be >= 1");
  switch (name) {
    case FormName::kF1:
    case FormName::kF2:
    case FormName::kF3:
    case FormName::kF4:
    case FormName::kF5: {
      const long j = static_cast<long>(name) - static_cast<long>(FormName::kF1) + 1;
      const QSeries b = etaq_expand(eta_quotient_of(FormName::kB), prec);
      const QSeries f = etaq_expand(eta_quotient_of(FormName::kF), prec);
      return series_mul(series_pow_rational(b, 6 - j, 6), f);
    }
    default:
      return etaq_expand(eta_quotient_of(name), prec);
  }
}

std::pair<EigenCombination, EigenCombination> eigen_combinations(int u) {
  switch (u) {
    case -3:
      return {{"F1", CycloNum()}, {"F5", CycloNum()}};
    case -2:
      return {{"F1+2F5", CycloNum(2)}, {"F1-2F5", CycloNum(-2)}};
    case 6:
      return {{"F1+2iF5", CycloNum::basis(CycloNum::kI, 2)}, {"F1-2iF5", CycloNum::basis(CycloNum::kI, -2)}};
    default:
      throw Error(ErrorCode::kInvalidArgument, "u must be one of -3, -2, 6");
  }
}

std::pair<LabeledSeries, LabeledSeries> build_eigenbasis(int u, std::size_t prec) {
  const auto [plus, minus] = eigen_combinations(u);
  const QSeries f1 = build_form(FormName::kF1, prec);
  const QSeries f5 = build_form(FormName::kF5, prec);
  if (u == -3) return {{plus.label, f1}, {minus.label, f5}};
  return {{plus.label, f1 + series_scale(f5, plus.f5_coefficient)},
          {minus.label, f1 + series_scale(f5, minus.f5_coefficient)}};
}

namespace {

// Published initial coefficients of the four eigenform components that are not
// eta quotients. Each row lists the coefficients of the inner series multiplying
// q^(j/24), in increasing powers of q.
struct ListedComponent {
  int residue;
  std::array<long, 8> inner;
};

constexpr ListedComponent kListedComponents[] = {
    {1, {1, 29, 59, 20, 40, -49, -270, 61}},
    {11, {1, 9, 4, 15, -20, 6, -45, 6}},
    {17, {5, 17, 18, 3, -15, -25, -36, -72}},
    {19, {5, 10, 25, -27, 27, -43, -40, -45}},
};

QSeries listed_component(const ListedComponent& lc, int offset_shift, std::int64_t prec) {
  std::vector<CycloNum> c(static_cast<std::size_t>(prec));
  for (std::size_t k = 0; k < lc.inner.size(); ++k) {
    const std::int64_t e = lc.residue + QSeries::kGrid * (static_cast<std::int64_t>(k) + 1 + offset_shift);
    if (e < prec) c[static_cast<std::size_t>(e)] = CycloNum(lc.inner[k]);
  }
  return QSeries(0, std::move(c));
}

QSeries eta_component(FormName name, std::int64_t prec) {
  const std::int64_t lead = eta_quotient_of(name).lead();
  if (prec <= lead) return QSeries::zero(prec);
  return build_form(name, static_cast<std::size_t>(prec - lead));
}

}  // namespace

std::int64_t max_f_precision(int offset_shift) {
  const std::int64_t listed = static_cast<std::int64_t>(kListedComponents[0].inner.size());
  return 1 + QSeries::kGrid * (listed + 1 + offset_shift);
}

QSeries build_f(int offset_shift, std::int64_t prec) {
  if (offset_shift != 0 && offset_shift != -1) {
    throw Error(ErrorCode::kInvalidArgument, "offset shift must be 0 or -1");
  }
  if (prec < 1) throw Error(ErrorCode::kInvalidArgument, "precision must be >= 1");
  if (prec > max_f_precision(offset_shift)) {
    throw Error(ErrorCode::kPrecisionExceedsListedData,
                "f is only known below q^(" + std::to_string(max_f_precision(offset_shift)) + "/24)");
  }
  using B = CycloNum::Basis;
  const auto term = [](unsigned basis, long c) { return CycloNum::basis(basis, c); };
  QSeries f = QSeries::zero(prec);
  f = f + listed_component(kListedComponents[0], offset_shift, prec);
  f = f + series_scale(eta_component(FormName::kf5, prec), term(B::kSqrt6, 3));
  f = f + series_scale(eta_component(FormName::kf7, prec), term(B::kSqrt3, 6));
  f = f + series_scale(listed_component(kListedComponents[1], offset_shift, prec), term(B::kSqrt2, 6));
  f = f + series_scale(eta_component(FormName::kf13, prec), term(B::kISqrt3, 6));
  f = f + series_scale(listed_component(kListedComponents[2], offset_shift, prec), term(B::kISqrt2, 3));
  f = f + series_scale(listed_component(kListedComponents[3], offset_shift, prec), term(B::kI, -4));
  f = f + series_scale(eta_component(FormName::kf23, prec), term(B::kISqrt6, -6));
  return f;
}

HeckeCheck check_f_hecke(int offset_shift) {
  const QSeries f = build_f(offset_shift, 50);
  const CycloNum a5 = f.coefficient_at(5);
  const CycloNum a7 = f.coefficient_at(7);
  const long chi7 = legendre(-6, 7);
  HeckeCheck h;
  h.offset_shift = offset_shift;
  h.square_relation = f.coefficient_at(49) == a7 * a7 - CycloNum(chi7 * 49);
  h.product_relation = f.coefficient_at(35) == a5 * a7;
  return h;
}

int calibrate_f_offset() {
  std::vector<int> passing;
  for (int shift : {0, -1}) {
    if (check_f_hecke(shift).passes()) passing.push_back(shift);
  }
  if (passing.size() != 1) {
    throw Error(ErrorCode::kNoConsistentOffset,
                std::to_string(passing.size()) + " offsets satisfy the Hecke relations");
  }
  return passing.front();
}

std::set<int> support_residues(const QSeries& s, int m, int mu) {
  if (m <= 0 || mu <= 0 || QSeries::kGrid % mu != 0) {
    throw Error(ErrorCode::kInvalidArgument, "need m >= 1 and mu | 24");
  }
  const int step = QSeries::kGrid / mu;
  std::set<int> out;
  for (std::size_t n = 0; n < s.prec(); ++n) {
    if (s[n].is_zero()) continue;
    const std::int64_t e = s.lead() + static_cast<std::int64_t>(n);
    if (e % step != 0) {
      throw Error(ErrorCode::kOffGridExponent, "exponent off the 1/" + std::to_string(mu) + " grid");
    }
    const std::int64_t k = e / step;
    out.insert(static_cast<int>(((k % m) + m) % m));
  }
  return out;
}

}  // namespace qmasd

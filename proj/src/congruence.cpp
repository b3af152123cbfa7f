#include "qmasd/congruence.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "qmasd/arith.hpp"
#include "qmasd/error.hpp"

namespace qmasd {

namespace {

Integer int_pow(std::uint64_t p, unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

int grid_step(int mu) {
  if (mu <= 0 || QSeries::kGrid % mu != 0) throw Error(ErrorCode::kInvalidArgument, "mu must divide 24");
  return QSeries::kGrid / mu;
}

void require_kappa(int kappa) {
  if (kappa < 2) throw Error(ErrorCode::kInvalidArgument, "weight kappa must be >= 2");
}

nlohmann::json margin_json(Valuation m) {
  if (m == kInfiniteValuation) return "inf";
  return m;
}

Valuation margin_of(Valuation v, int required) {
  return v == kInfiniteValuation ? kInfiniteValuation : v - required;
}

ASDReport finish(ASDReport r) {
  r.pass = std::all_of(r.rows.begin(), r.rows.end(), [](const MarginRow& row) { return row.margin >= 0; });
  return r;
}

}  // namespace

CharPoly4 CharPoly4::from_c1_c2(std::uint64_t p, const Integer& c1, const Integer& c2, int kappa) {
  require_kappa(kappa);
  const Integer w = int_pow(p, static_cast<unsigned>(kappa - 1));
  return CharPoly4{p, c1, c2, c1 * w, w * w};
}

bool CharPoly4::functional_equation_holds(int kappa) const {
  const Integer w = int_pow(p, static_cast<unsigned>(kappa - 1));
  return c3 == c1 * w && c4 == w * w;
}

bool CharPoly4::weil_bounds_hold(int kappa) const {
  const Integer w = int_pow(p, static_cast<unsigned>(kappa - 1));
  return c1 * c1 <= 16 * w && abs(c2) <= 6 * w;
}

nlohmann::json CharPoly4::to_json() const {
  return {{"p", p}, {"c", {c1.get_str(), c2.get_str(), c3.get_str(), c4.get_str()}}};
}

std::string CharPoly4::to_string() const {
  return "x^4 + (" + c1.get_str() + ")x^3 + (" + c2.get_str() + ")x^2 + (" + c3.get_str() + ")x + " +
         c4.get_str();
}

std::vector<MarginRow> ASDReport::failures() const {
  std::vector<MarginRow> out;
  for (const auto& r : rows) {
    if (r.margin < 0) out.push_back(r);
  }
  return out;
}

Valuation ASDReport::min_margin() const {
  Valuation m = kInfiniteValuation;
  for (const auto& r : rows) m = std::min(m, r.margin);
  return m;
}

nlohmann::json ASDReport::to_json() const {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& r : failures()) fails.push_back({{"n", r.n}, {"margin", margin_json(r.margin)}});
  return {{"p", p}, {"u", u}, {"form", form}, {"pass", pass}, {"failures", fails},
          {"min_margin", margin_json(min_margin())}};
}

int required_exponent(std::uint64_t p, int kappa, std::int64_t n) {
  return (kappa - 1) * (1 + ord_p(n, p));
}

int max_required_exponent(std::uint64_t p, int kappa, std::int64_t nmax) {
  int best = kappa - 1;
  for (std::int64_t n = 1; n <= nmax; ++n) best = std::max(best, required_exponent(p, kappa, n));
  return best;
}

ASDReport asd_check(const QSeries& a, const CycloNum& A, const Integer& B, std::uint64_t p, int kappa,
                    std::int64_t nmax, int mu, unsigned flips) {
  require_good_prime(p);
  require_kappa(kappa);
  const int step = grid_step(mu);
  const auto pi = static_cast<std::int64_t>(p);
  const auto coeff = [&](std::int64_t n) { return a.coefficient_at(n * step); };
  ASDReport r;
  r.p = p;
  for (std::int64_t n = 1; n <= nmax; ++n) {
    CycloNum e = coeff(pi * n) - A * coeff(n);
    if (n % pi == 0) e += coeff(n / pi).scaled(Rat(B));
    r.rows.push_back({n, margin_of(cyc_vp_at(e, p, flips), required_exponent(p, kappa, n))});
  }
  return finish(std::move(r));
}

ASDReport scholl_check(const QSeries& a, const CharPoly4& H, int kappa, std::int64_t nmax, int mu) {
  require_good_prime(H.p);
  require_kappa(kappa);
  const int step = grid_step(mu);
  const auto pi = static_cast<std::int64_t>(H.p);
  const auto coeff = [&](std::int64_t n) { return a.coefficient_at(n * step); };
  ASDReport r;
  r.p = H.p;
  for (std::int64_t n = 1; n <= nmax; ++n) {
    CycloNum e = coeff(pi * pi * n) + coeff(pi * n).scaled(Rat(H.c1)) + coeff(n).scaled(Rat(H.c2));
    if (n % pi == 0) e += coeff(n / pi).scaled(Rat(H.c3));
    if (n % (pi * pi) == 0) e += coeff(n / (pi * pi)).scaled(Rat(H.c4));
    const Valuation v = e.is_zero() ? kInfiniteValuation : cyc_vp(e, H.p);
    r.rows.push_back({n, margin_of(v, required_exponent(H.p, kappa, n))});
  }
  return finish(std::move(r));
}

CycloMod ModCoefficients::operator()(std::int64_t n) const {
  if (n > max_index) {
    throw Error(ErrorCode::kInsufficientPrecision,
                label + ": a(" + std::to_string(n) + ") requested, known to " + std::to_string(max_index));
  }
  if (n < 0) return CycloMod{};
  return at(n);
}

namespace {

void require_precision(const ModCoefficients& a, std::uint64_t p, int kappa, std::int64_t nmax, std::int64_t reach) {
  if (a.pk.p != p) throw Error(ErrorCode::kInvalidArgument, "coefficients reduced at a different prime");
  const int need = max_required_exponent(p, kappa, nmax);
  if (static_cast<int>(a.pk.k) < need) {
    throw Error(ErrorCode::kInsufficientPrecision, a.label + ": working modulus p^" + std::to_string(a.pk.k) +
                                                       " below the needed p^" + std::to_string(need));
  }
  if (reach * nmax > a.max_index) {
    throw Error(ErrorCode::kInsufficientPrecision,
                a.label + ": needs a(" + std::to_string(reach * nmax) + "), known to " + std::to_string(a.max_index));
  }
}

struct ReducedQuartic {
  std::uint64_t c[4];
};

ReducedQuartic reduce_quartic(const CharPoly4& H, std::uint64_t m) {
  return {{from_integer(H.c1, m), from_integer(H.c2, m), from_integer(H.c3, m), from_integer(H.c4, m)}};
}

CycloMod five_term(const ModCoefficients& a, const ReducedQuartic& h, std::int64_t p, std::int64_t n) {
  const std::uint64_t m = a.pk.modulus;
  CycloMod e = a(p * p * n);
  e = cm_add(e, cm_scale(a(p * n), h.c[0], m), m);
  e = cm_add(e, cm_scale(a(n), h.c[1], m), m);
  if (n % p == 0) e = cm_add(e, cm_scale(a(n / p), h.c[2], m), m);
  if (n % (p * p) == 0) e = cm_add(e, cm_scale(a(n / (p * p)), h.c[3], m), m);
  return e;
}

}  // namespace

ASDReport asd_check_mod(const ModCoefficients& a, const CycloNum& A, const Integer& B, int kappa,
                        std::int64_t nmax, unsigned flips) {
  require_kappa(kappa);
  const std::uint64_t p = a.pk.p;
  require_precision(a, p, kappa, nmax, static_cast<std::int64_t>(p));
  const std::uint64_t m = a.pk.modulus;
  const PrimeAbove prime(p, a.pk.k, flips);
  const CycloMod am = reduce_cyclo(A, a.pk);
  const std::uint64_t bm = from_integer(B, m);
  const auto pi = static_cast<std::int64_t>(p);
  ASDReport r;
  r.p = p;
  r.form = a.label;
  for (std::int64_t n = 1; n <= nmax; ++n) {
    CycloMod e = cm_sub(a(pi * n), cm_mul(am, a(n), m), m);
    if (n % pi == 0) e = cm_add(e, cm_scale(a(n / pi), bm, m), m);
    r.rows.push_back({n, margin_of(prime.valuation(e), required_exponent(p, kappa, n))});
  }
  return finish(std::move(r));
}

ASDReport scholl_check_mod(const ModCoefficients& a, const CharPoly4& H, int kappa, std::int64_t nmax) {
  require_kappa(kappa);
  const auto pi = static_cast<std::int64_t>(H.p);
  require_precision(a, H.p, kappa, nmax, pi * pi);
  const ReducedQuartic h = reduce_quartic(H, a.pk.modulus);
  ASDReport r;
  r.p = H.p;
  r.form = a.label;
  for (std::int64_t n = 1; n <= nmax; ++n) {
    const Valuation v = cm_coordinate_valuation(five_term(a, h, pi, n), a.pk);
    r.rows.push_back({n, margin_of(v, required_exponent(H.p, kappa, n))});
  }
  return finish(std::move(r));
}

bool scholl_passes_mod(const ModCoefficients& a, const CharPoly4& H, int kappa, std::int64_t nmax) {
  const auto pi = static_cast<std::int64_t>(H.p);
  const ReducedQuartic h = reduce_quartic(H, a.pk.modulus);
  for (std::int64_t n = 1; n <= nmax; ++n) {
    const Valuation v = cm_coordinate_valuation(five_term(a, h, pi, n), a.pk);
    if (v < required_exponent(H.p, kappa, n)) return false;
  }
  return true;
}

ModCoefficients ReducedSeries::as_coefficients(int mu, std::string label) const {
  const int step = grid_step(mu);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!cm_is_zero(coeffs[i]) && (lead + static_cast<std::int64_t>(i)) % step != 0) {
      throw Error(ErrorCode::kOffGridExponent, "support is off the 1/" + std::to_string(mu) + " grid");
    }
  }
  ModCoefficients out;
  out.pk = pk;
  out.label = std::move(label);
  const std::int64_t top = lead + static_cast<std::int64_t>(coeffs.size()) - 1;
  out.max_index = top >= 0 ? top / step : -1;
  out.at = [this_lead = lead, step, c = coeffs](std::int64_t n) {
    const std::int64_t e = n * step;
    if (e < this_lead) return CycloMod{};
    return c[static_cast<std::size_t>(e - this_lead)];
  };
  return out;
}

ReducedSeries reduce_mod(const QSeries& a, std::uint64_t p, unsigned k) {
  ReducedSeries r;
  r.pk = PrimePower::make(p, k);
  r.lead = a.lead();
  r.coeffs.reserve(a.prec());
  for (std::size_t n = 0; n < a.prec(); ++n) {
    for (const auto& x : a[n].coords()) {
      if (sgn(x) == 0) continue;
      r.two_exponent = std::max(r.two_exponent, static_cast<unsigned>(valuation(Integer(x.get_den()), 2)));
      r.three_exponent = std::max(r.three_exponent, static_cast<unsigned>(valuation(Integer(x.get_den()), 3)));
    }
    r.coeffs.push_back(reduce_cyclo(a[n], r.pk));
  }
  if (a.is_zero()) {
    // Keep the known-zero range addressable.
    r.lead = 0;
    r.coeffs.assign(static_cast<std::size_t>(std::max<std::int64_t>(a.absolute_precision(), 0)), CycloMod{});
  }
  return r;
}

ModCoefficients family_coefficients(std::shared_ptr<const FamilyMod> family, int j) {
  if (!family->has(j)) throw Error(ErrorCode::kInvalidArgument, "F" + std::to_string(j) + " was not built");
  ModCoefficients out;
  out.pk = family->prime_power();
  out.max_index = family->max_index();
  out.label = "F" + std::to_string(j);
  out.at = [family, j](std::int64_t n) { return cm_from_scalar(family->coefficient(j, n)); };
  return out;
}

ModCoefficients combined_coefficients(std::shared_ptr<const FamilyMod> family, const CycloNum& c5,
                                      std::string label) {
  ModCoefficients out;
  out.pk = family->prime_power();
  out.max_index = family->max_index();
  out.label = std::move(label);
  const CycloMod c5m = reduce_cyclo(c5, out.pk);
  const std::uint64_t m = out.pk.modulus;
  out.at = [family, c5m, m](std::int64_t n) {
    CycloMod r = cm_from_scalar(family->coefficient(1, n));
    const std::uint64_t a5 = family->coefficient(5, n);
    if (a5 != 0) r = cm_add(r, cm_scale(c5m, a5, m), m);
    return r;
  };
  return out;
}

std::int64_t recovery_index_bound(std::uint64_t p, std::int64_t nmax) {
  return std::max<std::int64_t>(nmax, static_cast<std::int64_t>(p));
}

namespace {

struct Box {
  std::int64_t c1_max;
  std::int64_t c2_max;
};

Box weil_box(std::uint64_t p, int kappa) {
  const Integer w = int_pow(p, static_cast<unsigned>(kappa - 1));
  Integer r;
  mpz_sqrt(r.get_mpz_t(), Integer(16 * w).get_mpz_t());
  return {r.get_si(), Integer(6 * w).get_si()};
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// When both forms share one quadratic relation the survivors are exactly
// Q(x) (x^2 + g x + w) for varying g. If p splits completely in Q(sqrt-2, sqrt-3)
// the quartic is Q^2; return it when it is itself a survivor.
std::optional<CharPoly4> square_of_common_factor(const std::vector<CharPoly4>& survivors, std::uint64_t p,
                                                 int kappa) {
  if (legendre(-2, p) != 1 || legendre(-3, p) != 1) return std::nullopt;
  const CharPoly4& s0 = survivors[0];
  const CharPoly4& s1 = survivors[1];
  const Integer d1 = s1.c1 - s0.c1;
  if (d1 == 0) return std::nullopt;
  const Integer d2 = s1.c2 - s0.c2;
  const Integer d3 = s1.c3 - s0.c3;
  if (!mpz_divisible_p(d2.get_mpz_t(), d1.get_mpz_t()) || !mpz_divisible_p(d3.get_mpz_t(), d1.get_mpz_t())) {
    return std::nullopt;
  }
  const Integer a = d2 / d1;
  const Integer b = d3 / d1;
  if (b != int_pow(p, static_cast<unsigned>(kappa - 1))) return std::nullopt;
  for (const auto& s : survivors) {
    const Integer g = s.c1 - a;
    if (s.c2 != 2 * b + a * g || s.c3 != b * (a + g) || s.c4 != b * b) return std::nullopt;
  }
  CharPoly4 sq = CharPoly4::from_c1_c2(p, 2 * a, a * a + 2 * b, kappa);
  if (std::find(survivors.begin(), survivors.end(), sq) == survivors.end()) return std::nullopt;
  return sq;
}

}  // namespace

CharPoly4 recover_charpoly(const std::vector<ModCoefficients>& forms, std::uint64_t p, int kappa, std::int64_t nmax) {
  require_good_prime(p);
  require_kappa(kappa);
  if (forms.empty()) throw Error(ErrorCode::kInvalidArgument, "no forms given");
  const std::int64_t nn = recovery_index_bound(p, nmax);
  const auto pi = static_cast<std::int64_t>(p);
  for (const auto& f : forms) require_precision(f, p, kappa, nn, pi * pi);

  // Stage 1: indices prime to p give a(p^2 n) + c1 a(pn) + c2 a(n) = 0 mod p^(kappa-1).
  const std::uint64_t m1 = ipow(p, static_cast<unsigned>(kappa - 1));
  struct Eq {
    std::uint64_t x, y, z;
  };
  std::vector<Eq> eqs;
  for (const auto& f : forms) {
    for (std::int64_t n = 1; n <= nn; ++n) {
      if (n % pi == 0) continue;
      const CycloMod x = f(pi * pi * n), y = f(pi * n), z = f(n);
      for (unsigned b = 0; b < CycloNum::kDim; ++b) {
        const Eq e{x[b] % m1, y[b] % m1, z[b] % m1};
        if (e.x != 0 || e.y != 0 || e.z != 0) eqs.push_back(e);
      }
    }
  }
  const auto pivot = std::find_if(eqs.begin(), eqs.end(), [p](const Eq& e) { return e.z % p != 0; });
  if (pivot == eqs.end()) {
    throw Error(ErrorCode::kInsufficientUnitCoefficients,
                "no a(n) with p not dividing n is a unit at p = " + std::to_string(p));
  }
  const std::uint64_t zinv = invmod(pivot->z, m1);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> residues;
  for (std::uint64_t c1 = 0; c1 < m1; ++c1) {
    const std::uint64_t c2 =
        mulmod(submod(0, addmod(pivot->x, mulmod(c1, pivot->y, m1), m1), m1), zinv, m1);
    const bool ok = std::all_of(eqs.begin(), eqs.end(), [&](const Eq& e) {
      return addmod(addmod(e.x, mulmod(c1, e.y, m1), m1), mulmod(c2, e.z, m1), m1) == 0;
    });
    if (ok) residues.emplace_back(c1, c2);
  }

  // Stage 2: lift into the Weil box and filter with indices divisible by p.
  const Box box = weil_box(p, kappa);
  const auto m1s = static_cast<std::int64_t>(m1);
  std::vector<CharPoly4> candidates;
  for (const auto& [r1, r2] : residues) {
    const std::int64_t c1_start = -box.c1_max + floor_mod(static_cast<std::int64_t>(r1) + box.c1_max, m1s);
    const std::int64_t c2_start = -box.c2_max + floor_mod(static_cast<std::int64_t>(r2) + box.c2_max, m1s);
    for (std::int64_t c1 = c1_start; c1 <= box.c1_max; c1 += m1s) {
      for (std::int64_t c2 = c2_start; c2 <= box.c2_max; c2 += m1s) {
        const CharPoly4 h = CharPoly4::from_c1_c2(p, Integer(static_cast<long>(c1)), Integer(static_cast<long>(c2)), kappa);
        bool ok = true;
        for (const auto& f : forms) {
          const ReducedQuartic hr = reduce_quartic(h, f.pk.modulus);
          for (std::int64_t n = pi; n <= nn && ok; n += pi) {
            ok = cm_coordinate_valuation(five_term(f, hr, pi, n), f.pk) >= required_exponent(p, kappa, n);
          }
          if (!ok) break;
        }
        if (ok) candidates.push_back(h);
      }
    }
  }

  // Stage 3: full verification.
  std::vector<CharPoly4> survivors;
  for (const auto& h : candidates) {
    if (std::all_of(forms.begin(), forms.end(), [&](const ModCoefficients& f) { return scholl_passes_mod(f, h, kappa, nn); })) {
      survivors.push_back(h);
    }
  }
  if (survivors.empty()) {
    throw Error(ErrorCode::kNoSolution, "no quartic in the Weil box satisfies the congruences at p = " + std::to_string(p));
  }
  if (survivors.size() > 1) {
    if (auto sq = square_of_common_factor(survivors, p, kappa)) return *sq;
    throw Error(ErrorCode::kAmbiguousRecovery,
                std::to_string(survivors.size()) + " quartics survive at p = " + std::to_string(p));
  }
  return survivors.front();
}

CharPoly4 recover_charpoly(const std::vector<QSeries>& forms, std::uint64_t p, int kappa, std::int64_t nmax, int mu) {
  require_good_prime(p);
  require_kappa(kappa);
  const auto k = static_cast<unsigned>(max_required_exponent(p, kappa, recovery_index_bound(p, nmax)));
  std::vector<ModCoefficients> reduced;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    reduced.push_back(reduce_mod(forms[i], p, k).as_coefficients(mu, "form" + std::to_string(i + 1)));
  }
  return recover_charpoly(reduced, p, kappa, nmax);
}

CharPoly4 recover_new_charpoly(std::uint64_t p, int kappa, std::int64_t nmax) {
  require_good_prime(p);
  const std::int64_t nn = recovery_index_bound(p, nmax);
  const auto k = static_cast<unsigned>(max_required_exponent(p, kappa, nn));
  const auto pi = static_cast<std::int64_t>(p);
  auto family = std::make_shared<const FamilyMod>(p, k, pi * pi * nn, std::initializer_list<int>{1, 5});
  return recover_charpoly({family_coefficients(family, 1), family_coefficients(family, 5)}, p, kappa, nmax);
}

std::vector<CharPoly4> scholl_survivors(const std::vector<ModCoefficients>& forms, std::uint64_t p, int kappa,
                                        std::int64_t nmax) {
  require_good_prime(p);
  require_kappa(kappa);
  const auto pi = static_cast<std::int64_t>(p);
  for (const auto& f : forms) require_precision(f, p, kappa, nmax, pi * pi);
  const Box box = weil_box(p, kappa);
  std::vector<CharPoly4> out;
  for (std::int64_t c1 = -box.c1_max; c1 <= box.c1_max; ++c1) {
    for (std::int64_t c2 = -box.c2_max; c2 <= box.c2_max; ++c2) {
      const CharPoly4 h = CharPoly4::from_c1_c2(p, Integer(static_cast<long>(c1)), Integer(static_cast<long>(c2)), kappa);
      if (std::all_of(forms.begin(), forms.end(),
                      [&](const ModCoefficients& f) { return scholl_passes_mod(f, h, kappa, nmax); })) {
        out.push_back(h);
      }
    }
  }
  return out;
}

}  // namespace qmasd

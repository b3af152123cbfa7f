#pragma once

// Three-term (ASD) and five-term congruence checks, and recovery of the quartic
// Frobenius polynomial from the five-term congruences alone.
//
// Coefficients a(n) are indexed on the grid q^(n/mu); mu = 6 for the F_j family.
// The modulus at index n is p^((kappa-1)(1 + ord_p n)).

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmasd/cyclo.hpp"
#include "qmasd/modseries.hpp"
#include "qmasd/padic.hpp"
#include "qmasd/qseries.hpp"
#include "qmasd/rational.hpp"

namespace qmasd {

/// x^4 + c1 x^3 + c2 x^2 + c3 x + c4.
struct CharPoly4 {
  std::uint64_t p = 0;
  Integer c1, c2, c3, c4;

  /// Fills c3 = c1 p^(kappa-1) and c4 = p^(2(kappa-1)).
  static CharPoly4 from_c1_c2(std::uint64_t p, const Integer& c1, const Integer& c2, int kappa = 3);

  bool functional_equation_holds(int kappa = 3) const;
  /// c1^2 <= 16 p^(kappa-1) and |c2| <= 6 p^(kappa-1).
  bool weil_bounds_hold(int kappa = 3) const;
  bool satisfies_invariants(int kappa = 3) const {
    return functional_equation_holds(kappa) && weil_bounds_hold(kappa);
  }

  nlohmann::json to_json() const;
  std::string to_string() const;

  friend bool operator==(const CharPoly4& a, const CharPoly4& b) {
    return a.p == b.p && a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3 && a.c4 == b.c4;
  }
};

struct MarginRow {
  std::int64_t n;
  /// v - required exponent; kInfiniteValuation when the expression vanishes
  /// (exactly, or to the working precision on the modular path).
  Valuation margin;
};

struct ASDReport {
  std::uint64_t p = 0;
  int u = 0;
  std::string form;
  std::vector<MarginRow> rows;
  bool pass = true;

  std::vector<MarginRow> failures() const;
  Valuation min_margin() const;
  /// {p, u, form, pass, failures: [{n, margin}]}.
  nlohmann::json to_json() const;
};

/// (kappa - 1)(1 + ord_p n).
int required_exponent(std::uint64_t p, int kappa, std::int64_t n);
/// Largest required_exponent over 1 <= n <= nmax.
int max_required_exponent(std::uint64_t p, int kappa, std::int64_t nmax);

/// a(pn) - A a(n) + B a(n/p), valued at the prime above p selected by `flips`.
ASDReport asd_check(const QSeries& a, const CycloNum& A, const Integer& B, std::uint64_t p, int kappa,
                    std::int64_t nmax, int mu = 6, unsigned flips = 0);
/// a(p^2 n) + c1 a(pn) + c2 a(n) + c3 a(n/p) + c4 a(n/p^2), valued coordinate-wise.
ASDReport scholl_check(const QSeries& a, const CharPoly4& H, int kappa, std::int64_t nmax, int mu = 6);

/// Coefficients a(n) mod p^k for 0 <= n <= max_index.
struct ModCoefficients {
  PrimePower pk;
  std::int64_t max_index = 0;
  std::string label;
  std::function<CycloMod(std::int64_t)> at;

  CycloMod operator()(std::int64_t n) const;
};

ASDReport asd_check_mod(const ModCoefficients& a, const CycloNum& A, const Integer& B, int kappa,
                        std::int64_t nmax, unsigned flips = 0);
ASDReport scholl_check_mod(const ModCoefficients& a, const CharPoly4& H, int kappa, std::int64_t nmax);
/// Early-exit form of scholl_check_mod for candidate screening.
bool scholl_passes_mod(const ModCoefficients& a, const CharPoly4& H, int kappa, std::int64_t nmax);

/// A QSeries with every coordinate mapped into Z/p^k.
struct ReducedSeries {
  PrimePower pk;
  std::int64_t lead = 0;
  std::vector<CycloMod> coeffs;
  /// Largest powers of 2 and 3 met in coefficient denominators.
  unsigned two_exponent = 0;
  unsigned three_exponent = 0;

  /// View on the grid q^(n/mu); throws kOffGridExponent if the support is off that grid.
  ModCoefficients as_coefficients(int mu, std::string label) const;
};

/// Throws kNonIntegralAtP when a coordinate has negative p-adic valuation.
ReducedSeries reduce_mod(const QSeries& a, std::uint64_t p, unsigned k);

/// F_j from a built family, as modular coefficients.
ModCoefficients family_coefficients(std::shared_ptr<const FamilyMod> family, int j);
/// F1 + c5 F5, the shape of every eigenform combination.
ModCoefficients combined_coefficients(std::shared_ptr<const FamilyMod> family, const CycloNum& c5,
                                      std::string label);

/// Index bound used by recovery: max(nmax, p), so that some n divisible by p is always included.
std::int64_t recovery_index_bound(std::uint64_t p, std::int64_t nmax);

/// Quartic with c3 = c1 p^(kappa-1), c4 = p^(2(kappa-1)) inside the Weil box
/// whose five-term congruences hold on every form:
///  1. (c1, c2) mod p^(kappa-1) from indices prime to p, pivoting on a unit a(n);
///  2. lifts inside the Weil box filtered by indices divisible by p;
///  3. full five-term verification of the survivors.
/// If several survive, they all share a quadratic factor Q and p splits completely
/// in Q(sqrt-2, sqrt-3), the result is Q^2.
/// Throws kInsufficientUnitCoefficients, kNoSolution or kAmbiguousRecovery.
CharPoly4 recover_charpoly(const std::vector<ModCoefficients>& forms, std::uint64_t p, int kappa, std::int64_t nmax);
/// Exact-series entry point; reduces each series and delegates.
CharPoly4 recover_charpoly(const std::vector<QSeries>& forms, std::uint64_t p, int kappa, std::int64_t nmax,
                           int mu = 6);
/// Builds F1 and F5 modulo the needed power of p and recovers their quartic.
CharPoly4 recover_new_charpoly(std::uint64_t p, int kappa = 3, std::int64_t nmax = 40);

/// Every (c1, c2) in the Weil box passing the five-term check on all forms.
std::vector<CharPoly4> scholl_survivors(const std::vector<ModCoefficients>& forms, std::uint64_t p, int kappa,
                                        std::int64_t nmax);

}  // namespace qmasd

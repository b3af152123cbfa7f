#pragma once

// Exact truncated q-expansions on the grid q^(1/24).
//
// A QSeries stores coeffs[n] as the coefficient of q^((lead + n)/24). It is
// known up to (but excluding) the absolute exponent lead + prec. The identically
// zero series (to its precision) has no coefficients and lead equal to that
// absolute precision.

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmasd/cyclo.hpp"

namespace qmasd {

class QSeries {
 public:
  static constexpr int kGrid = 24;

  QSeries() = default;
  /// Strips leading zeros, keeping the absolute precision lead + coeffs.size().
  QSeries(std::int64_t lead, std::vector<CycloNum> coeffs);

  static QSeries one(std::size_t prec);
  static QSeries monomial(std::int64_t exponent, const CycloNum& c, std::size_t prec);
  static QSeries zero(std::int64_t absolute_precision);

  std::int64_t lead() const { return lead_; }
  std::size_t prec() const { return coeffs_.size(); }
  std::int64_t absolute_precision() const { return lead_ + static_cast<std::int64_t>(coeffs_.size()); }
  bool is_zero() const { return coeffs_.empty(); }

  const std::vector<CycloNum>& coeffs() const { return coeffs_; }
  const CycloNum& operator[](std::size_t n) const { return coeffs_[n]; }

  /// Coefficient of q^(exponent/24); zero below the lead.
  /// Throws kInsufficientPrecision at or beyond the absolute precision.
  CycloNum coefficient_at(std::int64_t exponent) const;

  /// Same series cut to `prec` stored coefficients.
  QSeries truncated(std::size_t prec) const;

 private:
  std::int64_t lead_ = 0;
  std::vector<CycloNum> coeffs_;
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_sub(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);
QSeries series_scale(const QSeries& a, const CycloNum& c);
/// Throws kDivisionByZero on a zero series.
QSeries series_inverse(const QSeries& a);
QSeries series_pow_int(const QSeries& a, long e);
/// a^(num/den) by the binomial recurrence. Requires leading coefficient 1
/// (kNonUnitLeading) and lead*num/den integral (kOffGridExponent).
QSeries series_pow_rational(const QSeries& a, long num, long den);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return series_add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return series_sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }

/// Product of eta(d z)^r over the factors.
struct EtaQuotient {
  std::vector<std::pair<int, int>> factors;

  /// Sum of r*d, the leading exponent in units of q^(1/24).
  std::int64_t lead() const;
  /// Throws kInvalidArgument for repeated d, d <= 0 or r = 0.
  void validate() const;
};

/// eta(d z) = q^(d/24) prod_k (1 - q^(d k)), via the pentagonal number theorem.
QSeries eta_expand(int d, std::size_t prec);
QSeries etaq_expand(const EtaQuotient& e, std::size_t prec);

enum class FormName { kF, kB, kF1, kF2, kF3, kF4, kF5, kf5, kf7, kf13, kf23 };

FormName parse_form_name(std::string_view name);
std::string form_label(FormName name);
/// The eta quotient defining F, B, f5, f7, f13 or f23.
EtaQuotient eta_quotient_of(FormName name);

/// Named expansion with `prec` stored coefficients; F_j = B^((6-j)/6) * F.
QSeries build_form(FormName name, std::size_t prec);

struct LabeledSeries {
  std::string label;
  QSeries series;
};

/// F1 + c * F5 description of an eigenform.
struct EigenCombination {
  std::string label;
  CycloNum f5_coefficient;
};

/// Eigenform combinations for u in {-3, -2, 6}: (F1, F5), (F1 +- 2 F5), (F1 +- 2i F5).
/// First entry is the +i-eigenvector candidate. Throws kInvalidArgument for other u.
std::pair<EigenCombination, EigenCombination> eigen_combinations(int u);
std::pair<LabeledSeries, LabeledSeries> build_eigenbasis(int u, std::size_t prec);

/// Largest precision (exclusive exponent bound) available for build_f at a shift.
std::int64_t max_f_precision(int offset_shift);

/// The weight 3 eigenform f(z/24) = sum a(n) q^(n/24), known for exponents < prec.
/// offset_shift 0 reads each listed component series literally as starting at q^1;
/// offset_shift -1 starts them at q^0. Throws kPrecisionExceedsListedData.
QSeries build_f(int offset_shift, std::int64_t prec);

/// Result of the two Hecke relations at one shift.
struct HeckeCheck {
  int offset_shift;
  bool square_relation;   // a(49) = a(7)^2 - chi(7) 7^2
  bool product_relation;  // a(35) = a(5) a(7)
  bool passes() const { return square_relation && product_relation; }
};

HeckeCheck check_f_hecke(int offset_shift);
/// The unique shift in {0, -1} passing both relations; kNoConsistentOffset otherwise.
int calibrate_f_offset();

/// Residues mod m of the support exponents n of s written as q^(n/mu).
/// Requires m | mu and mu | 24; throws kOffGridExponent if some exponent is off the 1/mu grid.
std::set<int> support_residues(const QSeries& s, int m, int mu = QSeries::kGrid);

}  // namespace qmasd

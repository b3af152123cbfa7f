#pragma once

// Frobenius traces on the elliptic surface
//   Y^2 = X^3 + a(B) X^2 + b(B) X,
//   a(B) = 2/27 - 5B/27 - B^2/108,  b(B) = (1 + B)^3 / 729,
// and its base changes t^d = B, by naive point counting over F_p and F_{p^2}.
// The new part is isolated by the alternating sum over d = 6, 3, 2, 1.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmasd/congruence.hpp"

namespace qmasd {

struct FqElem {
  std::uint32_t x = 0;
  std::uint32_t y = 0;  // coefficient of w, w^2 = r; always 0 over F_p
  friend bool operator==(const FqElem&, const FqElem&) = default;
};

class FiniteField {
 public:
  /// F_p (degree 1) or F_p[w]/(w^2 - r) (degree 2). r defaults to the smallest
  /// positive nonresidue and must be a nonresidue when given.
  FiniteField(std::uint64_t p, unsigned degree, std::uint64_t r = 0);

  std::uint64_t p() const { return p_; }
  std::uint64_t q() const { return q_; }
  unsigned degree() const { return degree_; }
  std::uint64_t nonresidue() const { return r_; }

  FqElem from_int(std::int64_t a) const;
  /// Throws kNonIntegralAtP if p divides the denominator.
  FqElem from_rat(const Rat& a) const;
  FqElem element(std::uint64_t index) const;
  std::uint64_t index(const FqElem& a) const { return a.x + p_ * a.y; }

  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem pow(FqElem a, std::uint64_t e) const;
  /// Throws kDivisionByZero on 0.
  FqElem inv(const FqElem& a) const;
  bool is_zero(const FqElem& a) const { return a.x == 0 && a.y == 0; }

  /// Quadratic character: 0, +1 or -1.
  int chi(const FqElem& a) const { return chi_[index(a)]; }

 private:
  std::uint64_t p_;
  unsigned degree_;
  std::uint64_t q_;
  std::uint64_t r_ = 0;
  std::vector<std::int8_t> chi_;
};

/// Projective point count of Y^2 = X^3 + a2 X^2 + a4 X over the field.
std::int64_t count_points(const FiniteField& field, const FqElem& a2, const FqElem& a4);

enum class ReductionType { kGood, kSplitMultiplicative, kNonsplitMultiplicative, kAdditive };
std::string reduction_name(ReductionType t);

/// Type of the fiber Y^2 = X^3 + a X^2 + b X.
ReductionType reduction_type(const FiniteField& field, const FqElem& a, const FqElem& b);

struct FiberCount {
  FqElem t;
  FqElem B;
  bool singular = false;
  ReductionType type = ReductionType::kGood;
  std::int64_t count = 0;  // naive projective count
  std::int64_t trace = 0;  // q + 1 - count
};

/// Coefficients a(B), b(B) over the field.
std::pair<FqElem, FqElem> surface_coefficients(const FiniteField& field, const FqElem& B);
/// Fiber of the d-th cover over t (B = t^d). d must divide 6.
FiberCount fiber_at(const FiniteField& field, const FqElem& t, int d);
/// Fiber of the cover at t = infinity: the limit model Y^2 = X^3 - X^2/108.
FiberCount fiber_at_infinity(const FiniteField& field);

/// Sum of traces over nonsingular fibers t in F_q^x of the d-th cover.
std::int64_t s_sum(const FiniteField& field, int d);

/// Contribution rules for singular fibers, by reduction type.
struct CorrectionPolicy {
  std::string id = "lefschetz-v1";
  int split = 1;
  int nonsplit = -1;
  int additive = 0;
  /// Apply the type rules at the cusps t = 0 and t = infinity; otherwise they contribute 0.
  bool cusps_by_type = true;
  bool calibrated = true;

  static CorrectionPolicy lefschetz();
  int contribution(ReductionType t) const;
  nlohmann::json to_json() const;
  static CorrectionPolicy from_json(const nlohmann::json& j);
};

/// Per-cover fiber statistics, enough to evaluate any policy.
struct CoverData {
  int d = 0;
  std::int64_t s_sum = 0;
  std::int64_t split = 0, nonsplit = 0, additive = 0;  // singular fibers, t in F_q^x
  ReductionType at_zero = ReductionType::kGood;
  ReductionType at_infinity = ReductionType::kGood;

  /// Sum of a_t over all of P^1(F_q) under the policy.
  std::int64_t total(const CorrectionPolicy& policy) const;
};

struct TraceData {
  std::uint64_t p = 0;
  unsigned r = 1;
  std::vector<CoverData> covers;  // d = 1, 2, 3, 6
  std::int64_t new_trace(const CorrectionPolicy& policy) const;
};

TraceData trace_data(std::uint64_t p, unsigned r);
/// -(S6 - S3 - S2 + S1) over F_{p^r} with the policy applied at the singular fibers.
std::int64_t new_trace(std::uint64_t p, unsigned r, const CorrectionPolicy& policy);
/// c1 = -s1, c2 = (s1^2 - s2)/2. Throws kWeilBoundViolation if the result breaks the Weil bounds.
CharPoly4 assemble_charpoly(std::uint64_t p, const CorrectionPolicy& policy);

struct PolicyCalibration {
  /// All candidate policies reproducing every published row.
  std::vector<CorrectionPolicy> consistent;
  /// Rule names whose value changes the outcome on the published primes.
  std::vector<std::string> observable;
};

/// Searches split/nonsplit/additive in {-1, 0, 1} and both cusp conventions.
PolicyCalibration calibrate_policy();

}  // namespace qmasd

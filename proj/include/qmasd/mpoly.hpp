#pragma once

// Laurent polynomials in X, Y and a base parameter S over R = Q(zeta_24)[c]/(c^6 + 8).
// Every map used by the isogeny checks has monomial denominators, so Laurent
// polynomials are closed under the substitutions needed; inverting anything
// other than a monomial is rejected.

#include <array>
#include <map>
#include <string>

#include "qmasd/cyclo.hpp"

namespace qmasd {

/// sum_{k<6} coeffs[k] c^k with c^6 = -8.
class CRing {
 public:
  static constexpr int kDegree = 6;

  CRing() = default;
  CRing(const CycloNum& a) { c_[0] = a; }  // NOLINT: scalars embed
  CRing(long a) { c_[0] = CycloNum(a); }   // NOLINT

  /// The generator c.
  static CRing gen();

  const CycloNum& operator[](int k) const { return c_[k]; }
  bool is_zero() const;
  /// Number of nonzero c-components.
  int terms() const;

  CRing operator-() const;
  friend CRing operator+(const CRing& a, const CRing& b);
  friend CRing operator-(const CRing& a, const CRing& b);
  friend CRing operator*(const CRing& a, const CRing& b);
  friend bool operator==(const CRing& a, const CRing& b) { return a.c_ == b.c_; }

  /// Inverse of a single term z c^k; throws kDivisionByZero otherwise.
  CRing term_inverse() const;
  std::string to_string() const;

 private:
  std::array<CycloNum, kDegree> c_{};
};

/// Variable order (X, Y, S).
using Exponent = std::array<int, 3>;
enum Var : int { kX = 0, kY = 1, kS = 2 };

class LPoly {
 public:
  LPoly() = default;
  LPoly(const CRing& c);  // NOLINT: constants
  LPoly(long c);          // NOLINT

  static LPoly monomial(const Exponent& e, const CRing& c = CRing(1));
  static LPoly var(Var v, int power = 1);

  const std::map<Exponent, CRing>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_monomial() const { return t_.size() == 1; }
  /// Componentwise minimum exponent (zeros for the zero polynomial).
  Exponent min_exponents() const;
  int max_exponent(Var v) const;

  friend LPoly operator+(const LPoly& a, const LPoly& b);
  friend LPoly operator-(const LPoly& a, const LPoly& b);
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  LPoly operator-() const;
  friend bool operator==(const LPoly& a, const LPoly& b) { return a.t_ == b.t_; }

  LPoly pow(unsigned e) const;
  /// Inverse of a monomial; throws kInvalidArgument otherwise.
  LPoly monomial_inverse() const;
  /// Multiplies by X^e0 Y^e1 S^e2.
  LPoly shifted(const Exponent& e) const;
  /// f(values[0], values[1], values[2]); negative powers need monomial values.
  LPoly substitute(const std::array<LPoly, 3>& values) const;

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const CRing& c);
  std::map<Exponent, CRing> t_;
};

/// Y^2 = X^3 + a X^2 + b X with a, b polynomials in S only.
struct Curve {
  LPoly a;
  LPoly b;

  /// X^3 + a X^2 + b X.
  LPoly cubic() const;
  /// Y^2 - cubic().
  LPoly equation() const;
};

/// Replaces Y^2 by the cubic until the Y-degree is at most 1. Throws kInvalidArgument
/// on negative powers of Y.
LPoly reduce_mod_curve(const LPoly& f, const Curve& curve);
/// Multiplies by the monomial clearing all negative exponents, then reduces.
bool vanishes_on_curve(const LPoly& f, const Curve& curve);

/// Images of (X, Y, S).
using RationalMap = std::array<LPoly, 3>;
/// outer after inner.
RationalMap compose(const RationalMap& outer, const RationalMap& inner);
bool maps_agree_on_curve(const RationalMap& f, const RationalMap& g, const Curve& curve);

}  // namespace qmasd

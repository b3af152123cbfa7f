#pragma once

// Exact verification of the 2-isogeny between the surfaces
//   E_B  : Y^2 = X^3 + a(B) X^2 + b(B) X,
//   E'_B : Y^2 = X^3 - 2a(-8/B) X^2 + (a(-8/B)^2 - 4b(-8/B)) X,
// its pull-back to t with t^6 = B, the relation zeta W2 zeta = W2 and the
// fiberwise identity (W2)^2 = +-[2].
//
// The base variable S of an LPoly stands for B or t depending on the check.
// Each check records the monomial that cleared its denominators.

#include <string>
#include <vector>

#include <json.hpp>

#include "qmasd/mpoly.hpp"

namespace qmasd {

/// a(s) = 2/27 - 5s/27 - s^2/108.
LPoly surface_a(const LPoly& s);
/// b(s) = (1 + s)^3 / 729.
LPoly surface_b(const LPoly& s);

/// E_B in (X, Y, B).
Curve source_curve_B();
/// E_{t^6} in (X, Y, t).
Curve source_curve_t();
/// The curve Y^2 = X^3 - 2a X^2 + (a^2 - 4b) X.
Curve two_isogenous(const Curve& e);
/// E' written in its own parameter B' (so a(-8/B') etc.).
Curve target_curve_B();
/// E' at B' = T^6 written in T.
Curve target_curve_t();

/// (Y^2/X^2, Y(b(B) - X^2)/X^2, -8/B).
RationalMap w2_map_B();
/// (Y^2/X^2, Y(b(t^6) - X^2)/X^2, c/t).
RationalMap w2_map_t();
/// (X, Y, w t) with w a primitive sixth root of unity.
RationalMap zeta_map(bool conjugate_root = false);

struct IdentityCheck {
  std::string label;
  /// Monomial (X, Y, S exponents) multiplied in before reduction.
  Exponent clearing{0, 0, 0};
  /// Terms left after reduction modulo the curve.
  std::size_t residual_terms = 0;
  bool holds = false;

  nlohmann::json to_json() const;
};

struct IsogenyProof {
  std::string name;
  std::vector<IdentityCheck> checks;
  bool pass = false;

  explicit operator bool() const { return pass; }
  nlohmann::json to_json() const;
};

/// Clears denominators of f, reduces modulo the curve, and checks for zero.
IdentityCheck check_identity(const std::string& label, const LPoly& f, const Curve& curve);

/// Each verifier takes `mutate`, which applies a single deliberate perturbation
/// that must make the verdict false:
///   isogeny_B: target built with b + 1;
///   W2_map_t: target X^2 coefficient shifted by 1;
///   zeta: the outer zeta uses the conjugate root;
///   square: the intermediate curve built with a + 1.
IsogenyProof verify_isogeny_B(bool mutate = false);
IsogenyProof verify_W2_map_t(bool mutate = false);
IsogenyProof verify_zeta_conjugation(bool mutate = false);
IsogenyProof verify_square_is_mult2(bool mutate = false);

/// The four unmutated verifications in a fixed order.
std::vector<IsogenyProof> verify_all();

}  // namespace qmasd

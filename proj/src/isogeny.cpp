#include "qmasd/isogeny.hpp"

#include <algorithm>

namespace qmasd {

namespace {

const LPoly& X() {
  static const LPoly x = LPoly::var(kX);
  return x;
}
const LPoly& Y() {
  static const LPoly y = LPoly::var(kY);
  return y;
}
const LPoly& S() {
  static const LPoly s = LPoly::var(kS);
  return s;
}

LPoly rational(long num, long den) { return LPoly(CRing(CycloNum(make_rat(num, den)))); }

/// -8 / s for a monomial s.
LPoly base_swap(const LPoly& s) { return LPoly(-8) * s.monomial_inverse(); }

/// The standard 2-isogeny (Y^2/X^2, Y(b - X^2)/X^2, base) out of Y^2 = X^3 + aX^2 + bX.
RationalMap two_isogeny(const LPoly& b, const LPoly& base) {
  const LPoly inv_x2 = LPoly::var(kX, -2);
  return {Y() * Y() * inv_x2, Y() * (b - X() * X()) * inv_x2, base};
}

/// Equation of `target` after substituting the images of `map`.
LPoly pulled_back_equation(const Curve& target, const RationalMap& map) { return target.equation().substitute(map); }

IsogenyProof finish(std::string name, std::vector<IdentityCheck> checks) {
  IsogenyProof p;
  p.name = std::move(name);
  p.pass = std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
  p.checks = std::move(checks);
  return p;
}

}  // namespace

LPoly surface_a(const LPoly& s) { return rational(2, 27) - rational(5, 27) * s - rational(1, 108) * s * s; }

LPoly surface_b(const LPoly& s) { return rational(1, 729) * (LPoly(1) + s).pow(3); }

Curve source_curve_B() { return {surface_a(S()), surface_b(S())}; }

Curve source_curve_t() {
  const LPoly t6 = S().pow(6);
  return {surface_a(t6), surface_b(t6)};
}

Curve two_isogenous(const Curve& e) { return {LPoly(-2) * e.a, e.a * e.a - LPoly(4) * e.b}; }

Curve target_curve_B() {
  const LPoly s = base_swap(S());
  return two_isogenous({surface_a(s), surface_b(s)});
}

Curve target_curve_t() {
  const LPoly s = base_swap(S().pow(6));
  return two_isogenous({surface_a(s), surface_b(s)});
}

RationalMap w2_map_B() { return two_isogeny(source_curve_B().b, base_swap(S())); }

RationalMap w2_map_t() {
  return two_isogeny(source_curve_t().b, LPoly(CRing::gen()) * S().monomial_inverse());
}

RationalMap zeta_map(bool conjugate_root) {
  // e^{-pi i/3} = 1/2 - (sqrt3/2) i; the conjugate flips the sign of i sqrt3.
  const Rat im = conjugate_root ? Rat(1, 2) : Rat(-1, 2);
  const CycloNum w = CycloNum(Rat(1, 2)) + CycloNum::basis(CycloNum::kI | CycloNum::kSqrt3, im);
  return {X(), Y(), LPoly(CRing(w)) * S()};
}

nlohmann::json IdentityCheck::to_json() const {
  return {{"label", label},
          {"clearing", {{"X", clearing[0]}, {"Y", clearing[1]}, {"S", clearing[2]}}},
          {"residual_terms", residual_terms},
          {"holds", holds}};
}

nlohmann::json IsogenyProof::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) cs.push_back(c.to_json());
  return {{"name", name}, {"pass", pass}, {"checks", cs}};
}

IdentityCheck check_identity(const std::string& label, const LPoly& f, const Curve& curve) {
  IdentityCheck c;
  c.label = label;
  const Exponent m = f.min_exponents();
  c.clearing = {std::max(0, -m[0]), std::max(0, -m[1]), std::max(0, -m[2])};
  const LPoly r = reduce_mod_curve(f.shifted(c.clearing), curve);
  c.residual_terms = r.terms().size();
  c.holds = r.is_zero();
  return c;
}

IsogenyProof verify_isogeny_B(bool mutate) {
  const Curve source = source_curve_B();
  Curve target = target_curve_B();
  if (mutate) {
    const LPoly s = base_swap(S());
    target = two_isogenous({surface_a(s), surface_b(s) + LPoly(1)});
  }
  return finish("isogeny_B",
                {check_identity("target equation on image", pulled_back_equation(target, w2_map_B()), source)});
}

IsogenyProof verify_W2_map_t(bool mutate) {
  const Curve source = source_curve_t();
  Curve target = target_curve_t();
  if (mutate) target.a = target.a + LPoly(1);
  return finish("W2_map_t",
                {check_identity("target equation on image", pulled_back_equation(target, w2_map_t()), source)});
}

IsogenyProof verify_zeta_conjugation(bool mutate) {
  const Curve source = source_curve_t();
  const RationalMap w2 = w2_map_t();
  const RationalMap composite = compose(zeta_map(mutate), compose(w2, zeta_map(false)));
  static const char* kNames[3] = {"X component", "Y component", "base component"};
  std::vector<IdentityCheck> checks;
  for (int i = 0; i < 3; ++i) checks.push_back(check_identity(kNames[i], composite[i] - w2[i], source));
  return finish("zeta_conjugation", std::move(checks));
}

IsogenyProof verify_square_is_mult2(bool mutate) {
  const Curve source = source_curve_B();
  // Intermediate curve in its own parameter B' = -8/B.
  const LPoly back = base_swap(S());
  Curve before_swap{surface_a(back), surface_b(back)};
  if (mutate) before_swap.a = before_swap.a + LPoly(1);
  const Curve middle = two_isogenous(before_swap);
  // The second isogeny lands on Y^2 = X^3 + 4a X^2 + 16b X over B'' = -8/B'.
  const Curve last_in_middle = two_isogenous(middle);
  const RationalMap rebase = {X(), Y(), back};
  const Curve last{last_in_middle.a.substitute(rebase), last_in_middle.b.substitute(rebase)};

  const RationalMap phi1 = w2_map_B();
  const RationalMap phi2 = two_isogeny(middle.b, back);
  const RationalMap sigma = {rational(1, 4) * X(), rational(1, 8) * Y(), S()};
  const Curve scaled{LPoly(4) * source.a, LPoly(16) * source.b};
  const RationalMap composite = compose(sigma, compose(phi2, phi1));

  std::vector<IdentityCheck> checks;
  checks.push_back(check_identity("first isogeny lands on the middle curve", pulled_back_equation(middle, phi1), source));
  checks.push_back(check_identity("second isogeny lands on the scaled curve",
                                  pulled_back_equation(last, phi2), middle));
  checks.push_back(check_identity("last curve has X^2 coefficient 4a", last.a - scaled.a, source));
  checks.push_back(check_identity("last curve has X coefficient 16b", last.b - scaled.b, source));
  checks.push_back(check_identity("base returns to B", composite[2] - S(), source));

  const LPoly& a = source.a;
  const LPoly& b = source.b;
  const LPoly y2 = Y() * Y();
  checks.push_back(check_identity("X equals X([2]P)",
                                  LPoly(4) * y2 * composite[0] - (X() * X() - b).pow(2), source));

  // 8 Y^3 y([2]P) = 4 Y^2 N (3X + a) - N^3 - 8 Y^4 with N = 3X^2 + 2aX + b.
  const LPoly n = LPoly(3) * X() * X() + LPoly(2) * a * X() + b;
  const LPoly dup_y = LPoly(4) * y2 * n * (LPoly(3) * X() + a) - n.pow(3) - LPoly(8) * y2 * y2;
  const LPoly lhs = LPoly(8) * y2 * Y() * composite[1];
  IdentityCheck plus = check_identity("Y equals +y([2]P)", lhs - dup_y, source);
  IdentityCheck minus = check_identity("Y equals -y([2]P)", lhs + dup_y, source);
  checks.push_back(plus.holds || !minus.holds ? plus : minus);
  return finish("square_is_mult2", std::move(checks));
}

std::vector<IsogenyProof> verify_all() {
  return {verify_isogeny_B(), verify_W2_map_t(), verify_zeta_conjugation(), verify_square_is_mult2()};
}

}  // namespace qmasd

#include "qmasd/qmfactor.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include "qmasd/arith.hpp"
#include "qmasd/error.hpp"

namespace qmasd {

std::vector<int> splitting_set(std::uint64_t p) {
  require_good_prime(p);
  std::vector<int> out;
  for (int u : {-3, -2, 6}) {
    if (legendre(u, p) == 1) out.push_back(u);
  }
  return out;
}

bool splits_completely(std::uint64_t p) { return splitting_set(p).size() == 3; }

bool QuadFactorization::field_matches_u() const {
  return kind == FactorKind::kSquared || radicand == -std::labs(u);
}

nlohmann::json QuadFactorization::to_json() const {
  return {{"p", p},
          {"kind", kind == FactorKind::kSquared ? "squared" : "conjugate_pair"},
          {"u", u},
          {"A", qmasd::to_json(A)},
          {"A_text", format_compact(A)},
          {"B", B.get_str()},
          {"field_matches_u", field_matches_u()}};
}

std::array<CycloNum, 5> expand_quadratics(const CycloNum& A, const CycloNum& A2, const Integer& B) {
  const CycloNum b{Rat(B)};
  const CycloNum s = A + A2;
  return {CycloNum(1), -s, A * A2 + b + b, -(s * b), b * b};
}

namespace {

bool expands_to(const CycloNum& A, const CycloNum& A2, const Integer& B, const CharPoly4& H) {
  const auto c = expand_quadratics(A, A2, B);
  return c[1] == CycloNum(Rat(H.c1)) && c[2] == CycloNum(Rat(H.c2)) && c[3] == CycloNum(Rat(H.c3)) &&
         c[4] == CycloNum(Rat(H.c4));
}

long squarefree_radicand(const CycloNum& root) {
  // root = s * basis(b) for a single basis element b.
  for (unsigned b = 0; b < CycloNum::kDim; ++b) {
    if (sgn(root[b]) == 0) continue;
    long d = (b & CycloNum::kI) ? -1 : 1;
    if (b & CycloNum::kSqrt2) d *= 2;
    if (b & CycloNum::kSqrt3) d *= 3;
    return d;
  }
  return 1;
}

std::optional<QuadFactorization> try_squared(const CharPoly4& H, int u) {
  if (mpz_odd_p(H.c1.get_mpz_t())) return std::nullopt;
  const Integer p2 = Integer(static_cast<unsigned long>(H.p)) * static_cast<unsigned long>(H.p);
  const CycloNum A{Rat(-H.c1 / 2)};
  for (const Integer& beta : {Integer(-p2), p2}) {
    if (expands_to(A, A, beta, H)) {
      QuadFactorization f;
      f.p = H.p;
      f.u = u;
      f.kind = FactorKind::kSquared;
      f.A = A;
      f.A_conj = A;
      f.B = beta;
      return f;
    }
  }
  return std::nullopt;
}

std::optional<QuadFactorization> try_conjugate(const CharPoly4& H, int u) {
  const Integer p2 = Integer(static_cast<unsigned long>(H.p)) * static_cast<unsigned long>(H.p);
  const Rat r = make_rat(-H.c1, 2);
  for (const Integer& beta : {Integer(-p2), p2}) {
    // c2 = r^2 + 2 beta - D s^2; 4 D s^2 is an integer.
    const Rat m = r * r + 2 * Rat(beta) - Rat(H.c2);
    if (sgn(m) == 0) continue;
    const Rat four_m = 4 * m;
    if (four_m.get_den() != 1) continue;
    CycloNum root;
    try {
      root = sqrt_small(four_m.get_num());
    } catch (const Error&) {
      continue;
    }
    const CycloNum half_root = root.scaled(Rat(1, 2));
    const CycloNum A = CycloNum(r) + half_root;
    const CycloNum A2 = CycloNum(r) - half_root;
    if (!expands_to(A, A2, beta, H)) continue;
    QuadFactorization f;
    f.p = H.p;
    f.u = u;
    f.kind = FactorKind::kConjugatePair;
    f.A = A;
    f.A_conj = A2;
    f.B = beta;
    f.radicand = squarefree_radicand(root);
    return f;
  }
  return std::nullopt;
}

}  // namespace

QuadFactorization factor_qm(const CharPoly4& H) {
  const std::vector<int> split = splitting_set(H.p);
  if (split.size() == 3) {
    if (auto f = try_squared(H, -3)) return *f;
    if (auto f = try_conjugate(H, -3)) return *f;
  } else {
    for (int u : split) {
      if (auto f = try_conjugate(H, u)) return *f;
    }
  }
  throw Error(ErrorCode::kNoQMFactorization, "no quadratic factorization of " + H.to_string());
}

nlohmann::json EigenAssignment::to_json() const {
  nlohmann::json forms = nlohmann::json::array();
  for (int i = 0; i < 2; ++i) {
    nlohmann::json r = reports[i].to_json();
    r["A"] = format_compact(A[i]);
    forms.push_back(r);
  }
  return {{"u", u}, {"B", B.get_str()}, {"forms", forms}};
}

EigenAssignment pair_eigenvectors(int u, const QuadFactorization& f, std::shared_ptr<const FamilyMod> family,
                                  int kappa, std::int64_t nmax) {
  const auto split = splitting_set(f.p);
  if (std::find(split.begin(), split.end(), u) == split.end()) {
    throw Error(ErrorCode::kInvalidArgument, std::to_string(u) + " is not in the splitting set of " + std::to_string(f.p));
  }
  const auto [first, second] = eigen_combinations(u);
  const auto coefficients = [&](const EigenCombination& c) {
    if (u == -3) return family_coefficients(family, c.label == "F1" ? 1 : 5);
    return combined_coefficients(family, c.f5_coefficient, c.label);
  };
  const ModCoefficients forms[2] = {coefficients(first), coefficients(second)};

  const auto attempt = [&](const CycloNum& a0, const CycloNum& a1) {
    EigenAssignment e;
    e.u = u;
    e.labels = {forms[0].label, forms[1].label};
    e.A = {a0, a1};
    e.B = f.B;
    for (int i = 0; i < 2; ++i) {
      e.reports[i] = asd_check_mod(forms[i], e.A[i], f.B, kappa, nmax);
      e.reports[i].u = u;
    }
    return e;
  };
  const auto passes = [](const EigenAssignment& e) { return e.reports[0].pass && e.reports[1].pass; };

  EigenAssignment straight = attempt(f.A, f.A_conj);
  if (f.kind == FactorKind::kSquared || f.A == f.A_conj) {
    if (passes(straight)) return straight;
    throw Error(ErrorCode::kNoValidAssignment, "the repeated factor fails on the eigenbasis at p = " + std::to_string(f.p));
  }
  EigenAssignment swapped = attempt(f.A_conj, f.A);
  if (passes(straight) && passes(swapped)) {
    throw Error(ErrorCode::kBothAssignmentsPass, "both assignments pass at p = " + std::to_string(f.p));
  }
  if (passes(straight)) return straight;
  if (passes(swapped)) return swapped;
  throw Error(ErrorCode::kNoValidAssignment, "neither assignment passes at p = " + std::to_string(f.p));
}

EigenAssignment pair_eigenvectors(int u, const QuadFactorization& f, int kappa, std::int64_t nmax) {
  const auto k = static_cast<unsigned>(max_required_exponent(f.p, kappa, nmax));
  const auto pi = static_cast<std::int64_t>(f.p);
  auto family = std::make_shared<const FamilyMod>(f.p, k, pi * nmax, std::initializer_list<int>{1, 5});
  return pair_eigenvectors(u, f, family, kappa, nmax);
}

}  // namespace qmasd

#pragma once

// Factorization of the quartic over Q(zeta_24) driven by how p splits in
// Q(sqrt-2, sqrt-3), and the matching of factors to eigenforms.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmasd/congruence.hpp"
#include "qmasd/cyclo.hpp"

namespace qmasd {

/// {u in {-2, -3, 6} : (u/p) = +1}, ascending.
std::vector<int> splitting_set(std::uint64_t p);
/// p splits completely in Q(sqrt-2, sqrt-3), i.e. p = 1 or 19 mod 24.
bool splits_completely(std::uint64_t p);

enum class FactorKind { kSquared, kConjugatePair };

struct QuadFactorization {
  std::uint64_t p = 0;
  int u = 0;
  FactorKind kind = FactorKind::kConjugatePair;
  /// H = (x^2 - A x + B)(x^2 - A_conj x + B); A_conj = A when squared.
  CycloNum A;
  CycloNum A_conj;
  Integer B;
  /// Squarefree d with A in Q(sqrt d); 1 when A is rational.
  long radicand = 1;

  /// A lies in Q(sqrt(-|u|)) (always true for the squared kind).
  bool field_matches_u() const;
  nlohmann::json to_json() const;
};

/// Coefficients (1, c1, c2, c3, c4) of (x^2 - A x + B)(x^2 - A2 x + B).
std::array<CycloNum, 5> expand_quadratics(const CycloNum& A, const CycloNum& A2, const Integer& B);

/// Throws kNoQMFactorization when no branch re-expands to H.
QuadFactorization factor_qm(const CharPoly4& H);

struct EigenAssignment {
  int u = 0;
  /// Eigenforms in build_eigenbasis order with the A each one is paired with.
  std::array<std::string, 2> labels;
  std::array<CycloNum, 2> A;
  Integer B;
  std::array<ASDReport, 2> reports;

  nlohmann::json to_json() const;
};

/// Tries both ways of attaching (A, A_conj) to the u-eigenbasis and returns the one
/// passing the three-term congruences at the canonical prime above p.
/// Throws kNoValidAssignment or kBothAssignmentsPass.
EigenAssignment pair_eigenvectors(int u, const QuadFactorization& f, std::shared_ptr<const FamilyMod> family,
                                  int kappa, std::int64_t nmax);
/// Builds F1 and F5 modulo the needed power of p first.
EigenAssignment pair_eigenvectors(int u, const QuadFactorization& f, int kappa = 3, std::int64_t nmax = 40);

}  // namespace qmasd

#include <doctest.h>

#include <memory>

#include "qmasd/error.hpp"
#include "qmasd/golden.hpp"
#include "qmasd/modseries.hpp"
#include "qmasd/qmfactor.hpp"

using namespace qmasd;

namespace {

CycloNum root(unsigned b, long c) { return CycloNum::basis(b, c); }

CharPoly4 table_poly(std::uint64_t p) {
  const GoldenRow* g = golden_row(p);
  REQUIRE(g != nullptr);
  return CharPoly4::from_c1_c2(p, g->c1, g->c2);
}

}  // namespace

TEST_CASE("splitting sets") {
  CHECK(splitting_set(5) == std::vector<int>{6});
  CHECK(splitting_set(7) == std::vector<int>{-3});
  CHECK(splitting_set(19) == std::vector<int>{-3, -2, 6});
  CHECK(splits_completely(19));
  CHECK(splits_completely(43));
  CHECK_FALSE(splits_completely(41));
  CHECK_THROWS_AS(splitting_set(9), Error);
}

TEST_CASE("factorizations of published rows") {
  const QuadFactorization f5 = factor_qm(table_poly(5));
  CHECK(f5.kind == FactorKind::kConjugatePair);
  CHECK(f5.u == 6);
  CHECK(f5.B == -25);
  CHECK((f5.A == root(CycloNum::kISqrt6, 3) || f5.A == root(CycloNum::kISqrt6, -3)));
  CHECK(f5.A_conj == -f5.A);

  const QuadFactorization f19 = factor_qm(table_poly(19));
  CHECK(f19.kind == FactorKind::kSquared);
  CHECK(f19.A == CycloNum(-20));
  CHECK(f19.B == 361);

  const QuadFactorization f17 = factor_qm(table_poly(17));
  CHECK(f17.kind == FactorKind::kConjugatePair);
  CHECK(f17.B == -289);
  CHECK((f17.A == root(CycloNum::kISqrt2, 15) || f17.A == root(CycloNum::kISqrt2, -15)));
}

TEST_CASE("every published row re-expands and lies in the expected field") {
  for (const GoldenRow& g : golden_table()) {
    const CharPoly4 h = table_poly(g.p);
    const QuadFactorization f = factor_qm(h);
    const auto c = expand_quadratics(f.A, f.A_conj, f.B);
    CHECK(c[1] == CycloNum(Rat(h.c1)));
    CHECK(c[2] == CycloNum(Rat(h.c2)));
    CHECK(c[3] == CycloNum(Rat(h.c3)));
    CHECK(c[4] == CycloNum(Rat(h.c4)));
    CHECK(f.field_matches_u());
    CHECK(cyc_abs2(f.A) == cyc_abs2(g.A));
    CHECK(f.B * f.B == h.c4);
  }
}

TEST_CASE("quartics without a quadratic factorization") {
  try {
    factor_qm(CharPoly4::from_c1_c2(5, 1, 0));
    FAIL("expected NoQMFactorization");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoQMFactorization);
  }
}

TEST_CASE("eigenvector pairing for u = -3 at p = 7") {
  const QuadFactorization f = factor_qm(table_poly(7));
  CHECK(f.u == -3);
  auto family = std::make_shared<const FamilyMod>(7, static_cast<unsigned>(max_required_exponent(7, 3, 40)), 7 * 40,
                                                  std::initializer_list<int>{1, 5});
  const EigenAssignment e = pair_eigenvectors(-3, f, family, 3, 40);
  CHECK(e.labels == std::array<std::string, 2>{"F1", "F5"});
  CHECK(e.A[0] == -e.A[1]);
  CHECK(cyc_abs2(e.A[0]) == CycloNum(108));
  CHECK(e.reports[0].pass);
  CHECK(e.reports[1].pass);
  // The other way round fails.
  CHECK_FALSE(asd_check_mod(family_coefficients(family, 1), e.A[1], f.B, 3, 40).pass);
  CHECK_FALSE(asd_check_mod(family_coefficients(family, 5), e.A[0], f.B, 3, 40).pass);
}

TEST_CASE("eigenvector pairing for u = 6 at p = 5") {
  const QuadFactorization f = factor_qm(table_poly(5));
  const EigenAssignment e = pair_eigenvectors(6, f);
  CHECK(e.labels == std::array<std::string, 2>{"F1+2iF5", "F1-2iF5"});
  for (const CycloNum& a : e.A) {
    CHECK((a == root(CycloNum::kISqrt6, 3) || a == root(CycloNum::kISqrt6, -3)));
  }
  CHECK(e.A[0] == -e.A[1]);
  CHECK(e.to_json()["forms"].size() == 2);
}

TEST_CASE("squared kind shares one parameter") {
  const QuadFactorization f = factor_qm(table_poly(19));
  const EigenAssignment e = pair_eigenvectors(-3, f);
  CHECK(e.A[0] == CycloNum(-20));
  CHECK(e.A[1] == CycloNum(-20));
  CHECK(e.B == 361);
}

TEST_CASE("pairing rejects a u outside the splitting set") {
  const QuadFactorization f = factor_qm(table_poly(5));
  CHECK_THROWS_AS(pair_eigenvectors(-3, f), Error);
}

#include <doctest.h>

#include <map>
#include <memory>

#include "qmasd/congruence.hpp"
#include "qmasd/error.hpp"
#include "qmasd/modseries.hpp"
#include "qmasd/qseries.hpp"

using namespace qmasd;

namespace {

CharPoly4 h5() { return CharPoly4::from_c1_c2(5, 0, 4); }

/// Exact F_j on the q^(1/6) grid, long enough for five-term checks at p = 5, nmax = 40.
const QSeries& exact_form(FormName n) {
  static std::map<FormName, QSeries> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_form(n, 4 * 25 * 40 + 8)).first;
  return it->second;
}

}  // namespace

TEST_CASE("characteristic polynomial invariants") {
  const CharPoly4 h = CharPoly4::from_c1_c2(19, 40, 1122);
  CHECK(h.c3 == 14440);
  CHECK(h.c4 == 130321);
  CHECK(h.satisfies_invariants());
  CharPoly4 bad = h;
  bad.c3 += 1;
  CHECK_FALSE(bad.functional_equation_holds());
  CHECK_FALSE(CharPoly4::from_c1_c2(5, 21, 0).weil_bounds_hold());
  CHECK_FALSE(CharPoly4::from_c1_c2(5, 0, 151).weil_bounds_hold());
  CHECK(CharPoly4::from_c1_c2(5, 20, 150).weil_bounds_hold());
  CHECK(h5().to_json()["c"] == nlohmann::json::array({"0", "4", "0", "625"}));
}

TEST_CASE("required exponents") {
  CHECK(required_exponent(5, 3, 1) == 2);
  CHECK(required_exponent(5, 3, 25) == 6);
  CHECK(max_required_exponent(5, 3, 40) == 6);
  CHECK(max_required_exponent(7, 3, 40) == 4);
}

TEST_CASE("three-term congruence on the zero series") {
  const ASDReport r = asd_check(QSeries::zero(10000), CycloNum(7), 3, 5, 3, 40);
  CHECK(r.pass);
  CHECK(r.min_margin() == kInfiniteValuation);
  CHECK(r.to_json()["min_margin"] == "inf");
}

TEST_CASE("three-term congruence at p = 5 on the exact eigenforms") {
  const QSeries& f1 = exact_form(FormName::kF1);
  const QSeries& f5 = exact_form(FormName::kF5);
  const CycloNum two_i = CycloNum::basis(CycloNum::kI, 2);
  const QSeries plus = f1 + series_scale(f5, two_i);
  const QSeries minus = f1 - series_scale(f5, two_i);
  const CycloNum a = CycloNum::basis(CycloNum::kISqrt6, 3);
  const Integer b = -25;

  // Exactly one sign of A works for each eigenform at the canonical prime above 5.
  const bool plus_pos = asd_check(plus, a, b, 5, 3, 40).pass;
  const bool plus_neg = asd_check(plus, -a, b, 5, 3, 40).pass;
  const bool minus_pos = asd_check(minus, a, b, 5, 3, 40).pass;
  const bool minus_neg = asd_check(minus, -a, b, 5, 3, 40).pass;
  CHECK(plus_pos != plus_neg);
  CHECK(minus_pos != minus_neg);
  CHECK(plus_pos != minus_pos);

  const QSeries& good = plus_pos ? plus : minus;
  const ASDReport ok = asd_check(good, a, b, 5, 3, 40);
  CHECK(ok.pass);
  CHECK(ok.min_margin() >= 0);

  const ASDReport perturbed = asd_check(good, a + CycloNum(1), b, 5, 3, 30);
  CHECK_FALSE(perturbed.pass);
  REQUIRE_FALSE(perturbed.failures().empty());
  CHECK(perturbed.failures().front().n <= 30);
}

TEST_CASE("five-term congruence at p = 5") {
  CHECK(scholl_check(exact_form(FormName::kF1), h5(), 3, 40).pass);
  CHECK(scholl_check(exact_form(FormName::kF5), h5(), 3, 40).pass);
  const ASDReport old = scholl_check(exact_form(FormName::kF3), h5(), 3, 40);
  CHECK_FALSE(old.pass);
  CHECK(old.min_margin() < 0);
  CHECK_FALSE(scholl_check(exact_form(FormName::kF1), CharPoly4::from_c1_c2(5, 0, 5), 3, 40).pass);
  CHECK_THROWS_AS(scholl_check(build_form(FormName::kF1, 100), h5(), 3, 40), Error);
}

TEST_CASE("reduction modulo p^k") {
  const ReducedSeries r = reduce_mod(exact_form(FormName::kF1), 5, 4);
  CHECK(r.pk.modulus == 625);
  const ModCoefficients c = r.as_coefficients(6, "F1");
  CHECK(c(1)[CycloNum::kOne] == 1);
  CHECK(c(2)[CycloNum::kOne] == 0);

  const ReducedSeries z = reduce_mod(QSeries::zero(100), 5, 4);
  CHECK(z.coeffs.size() == 100);
  for (const CycloMod& x : z.coeffs) CHECK(x == CycloMod{});

  const QSeries fifth(0, {CycloNum(Rat(1, 5))});
  try {
    reduce_mod(fifth, 5, 2);
    FAIL("expected NonIntegralAtP");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonIntegralAtP);
  }
}

TEST_CASE("modular family agrees with the exact expansions") {
  auto family = std::make_shared<const FamilyMod>(5, 6, 1000);
  for (FormName n : {FormName::kF1, FormName::kF2, FormName::kF3, FormName::kF4, FormName::kF5}) {
    const QSeries& s = exact_form(n);
    const int j = static_cast<int>(s.lead() / 4);
    const ModCoefficients exact = reduce_mod(s, 5, 6).as_coefficients(6, "exact");
    const ModCoefficients fast = family_coefficients(family, j);
    for (std::int64_t k = 0; k <= 1000; ++k) {
      CHECK(exact(k)[CycloNum::kOne] == fast(k)[CycloNum::kOne]);
    }
  }
  CHECK_THROWS_AS(family->coefficient(1, 1001), Error);
}

TEST_CASE("recovery from the exact series") {
  const CharPoly4 h = recover_charpoly({exact_form(FormName::kF1), exact_form(FormName::kF5)}, 5, 3, 40);
  CHECK(h == h5());
}

TEST_CASE("recovery on the modular path") {
  CHECK(recover_new_charpoly(5) == h5());
  CHECK(recover_new_charpoly(19) == CharPoly4::from_c1_c2(19, 40, 1122));
  CHECK(recover_new_charpoly(29) == CharPoly4::from_c1_c2(29, 0, -332));
  CHECK(recovery_index_bound(47, 40) == 47);
  CHECK(recovery_index_bound(5, 40) == 40);
}

TEST_CASE("the p = 19 survivors form a pencil around the published square") {
  const std::int64_t nn = recovery_index_bound(19, 40);
  auto family = std::make_shared<const FamilyMod>(19, static_cast<unsigned>(max_required_exponent(19, 3, nn)),
                                                  19 * 19 * nn, std::initializer_list<int>{1, 5});
  const auto survivors =
      scholl_survivors({family_coefficients(family, 1), family_coefficients(family, 5)}, 19, 3, 40);
  CHECK(survivors.size() > 1);
  bool has_square = false;
  for (const CharPoly4& h : survivors) has_square = has_square || h == CharPoly4::from_c1_c2(19, 40, 1122);
  CHECK(has_square);
}

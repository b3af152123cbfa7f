#include <doctest.h>

#include <set>

#include "qmasd/error.hpp"
#include "qmasd/qseries.hpp"

using namespace qmasd;

namespace {

/// Generalized pentagonal numbers k(3k-1)/2 with sign (-1)^k, as a dense vector.
std::vector<int> pentagonal_oracle(std::size_t n) {
  std::vector<int> c(n, 0);
  for (long k = -20; k <= 20; ++k) {
    const long e = k * (3 * k - 1) / 2;
    if (e >= 0 && static_cast<std::size_t>(e) < n) c[static_cast<std::size_t>(e)] = (k % 2 == 0) ? 1 : -1;
  }
  return c;
}

CycloNum ci(const Rat& r) { return CycloNum(r); }

}  // namespace

TEST_CASE("eta expansion matches the pentagonal number theorem") {
  const QSeries e = eta_expand(1, 16 * 24);
  CHECK(e.lead() == 1);
  const auto oracle = pentagonal_oracle(16);
  for (std::size_t m = 0; m < 16; ++m) {
    CHECK(e.coefficient_at(1 + 24 * static_cast<std::int64_t>(m)) == CycloNum(oracle[m]));
  }
  CHECK(e.coefficient_at(1 + 24 * 3).is_zero());
  CHECK(e.coefficient_at(2).is_zero());
  CHECK(eta_expand(2, 48).lead() == 2);
}

TEST_CASE("eta quotient leads") {
  CHECK(eta_quotient_of(FormName::kB).lead() == -24);
  CHECK(eta_quotient_of(FormName::kF).lead() == 24);
  CHECK(eta_quotient_of(FormName::kf5).lead() == 5);
  CHECK(eta_quotient_of(FormName::kf7).lead() == 7);
  CHECK(build_form(FormName::kB, 48).lead() == -24);
  CHECK(build_form(FormName::kF, 48)[0] == CycloNum(1));
  CHECK_THROWS_AS((EtaQuotient{{{1, 2}, {1, 3}}}.validate()), Error);
  CHECK_THROWS_AS((EtaQuotient{{{0, 2}}}.validate()), Error);
}

TEST_CASE("series arithmetic") {
  const QSeries b = build_form(FormName::kB, 200);
  const QSeries one = QSeries::one(200);
  CHECK((b * one).coeffs() == b.coeffs());
  const QSeries q1 = QSeries::monomial(1, CycloNum(1), 10);
  const QSeries q2 = q1 * q1;
  CHECK(q2.lead() == 2);
  CHECK(q2[0] == CycloNum(1));

  const QSeries round = b * series_inverse(b);
  CHECK(round.lead() == 0);
  CHECK(round[0] == CycloNum(1));
  for (std::size_t n = 1; n < round.prec(); ++n) CHECK(round[n].is_zero());

  CHECK((b - b).is_zero());
  CHECK_THROWS_AS(series_inverse(QSeries::zero(10)), Error);
  const QSeries doubled = series_scale(b, CycloNum(2));
  CHECK((doubled - b).coeffs() == b.coeffs());
}

TEST_CASE("precision is the minimum after alignment") {
  const QSeries a(0, std::vector<CycloNum>(10, CycloNum(1)));
  const QSeries c(4, std::vector<CycloNum>(20, CycloNum(1)));
  CHECK((a + c).absolute_precision() == 10);
  CHECK((a * c).absolute_precision() == 14);
  CHECK_THROWS_AS(a.coefficient_at(10), Error);
}

TEST_CASE("rational powers") {
  const QSeries b = build_form(FormName::kB, 240);
  const QSeries r = series_pow_rational(b, 1, 6);
  CHECK(r.lead() == -4);
  const QSeries back = series_pow_int(r, 6);
  for (std::size_t n = 0; n < 200; ++n) CHECK(back[n] == b[n]);

  const QSeries zero_power = series_pow_rational(b, 0, 1);
  CHECK(zero_power.lead() == 0);
  CHECK(zero_power[0] == CycloNum(1));

  const QSeries one_plus_q(0, [] {
    std::vector<CycloNum> v(48);
    v[0] = CycloNum(1);
    v[24] = CycloNum(1);
    return v;
  }());
  const QSeries sq = series_pow_rational(one_plus_q, 1, 2);
  CHECK(sq[24] == ci(Rat(1, 2)));
  CHECK((sq * sq).coeffs() == one_plus_q.coeffs());

  const QSeries twice = series_scale(QSeries::one(10), CycloNum(2));
  CHECK_THROWS_AS(series_pow_rational(twice, 1, 2), Error);
  CHECK_THROWS_AS(series_pow_rational(QSeries::monomial(1, CycloNum(1), 10), 1, 2), Error);
}

TEST_CASE("the forms F_j") {
  CHECK(build_form(FormName::kF1, 30).lead() == 4);
  CHECK(build_form(FormName::kF5, 30).lead() == 20);
  CHECK(build_form(FormName::kF3, 30).lead() == 12);
  CHECK(build_form(FormName::kf7, 30).lead() == 7);
  CHECK(build_form(FormName::kF1, 30)[0] == CycloNum(1));
  CHECK(parse_form_name("F4") == FormName::kF4);
  CHECK(form_label(FormName::kf13) == "f13");
  CHECK_THROWS_AS(parse_form_name("F6"), Error);
}

TEST_CASE("F_j are supported on one class mod 6") {
  for (FormName n : {FormName::kF1, FormName::kF2, FormName::kF3, FormName::kF4, FormName::kF5}) {
    const QSeries s = build_form(n, 600);
    const int j = static_cast<int>(s.lead() / 4);
    CHECK(support_residues(s, 6, 6) == std::set<int>{j});
  }
  CHECK(support_residues(build_form(FormName::kf5, 600), 24) == std::set<int>{5});
  CHECK(support_residues(build_form(FormName::kf23, 600), 24) == std::set<int>{23});
  CHECK_THROWS_AS(support_residues(build_form(FormName::kf5, 60), 6, 6), Error);
}

TEST_CASE("eigenbases") {
  const auto [a, b] = build_eigenbasis(-3, 60);
  CHECK(a.label == "F1");
  CHECK(b.label == "F5");
  const auto [c, d] = build_eigenbasis(-2, 60);
  CHECK(c.series.coefficient_at(4) == CycloNum(1));
  CHECK(c.label == "F1+2F5");
  CHECK(d.label == "F1-2F5");
  const auto [e, f] = build_eigenbasis(6, 120);
  for (const QSeries* s : {&e.series, &f.series}) {
    for (const CycloNum& x : s->coeffs()) {
      for (unsigned k = 2; k < CycloNum::kDim; ++k) CHECK(x[k] == 0);
    }
  }
  CHECK_THROWS_AS(build_eigenbasis(5, 10), Error);
}

TEST_CASE("the eigenform f") {
  CHECK(calibrate_f_offset() == -1);
  const QSeries f = build_f(-1, 60);
  const auto basis = [](unsigned b, const Rat& c) { return CycloNum::basis(b, c); };
  CHECK(f.coefficient_at(1) == CycloNum(1));
  CHECK(f.coefficient_at(5) == basis(CycloNum::kSqrt6, 3));
  CHECK(f.coefficient_at(7) == basis(CycloNum::kSqrt3, 6));
  CHECK(f.coefficient_at(23) == basis(CycloNum::kISqrt6, -6));
  CHECK(f.coefficient_at(25) == CycloNum(29));
  CHECK(f.coefficient_at(49) == CycloNum(59));
  CHECK(f.coefficient_at(35) == f.coefficient_at(5) * f.coefficient_at(7));

  const QSeries literal = build_f(0, 60);
  CHECK(literal.coefficient_at(25) == CycloNum(1));
  CHECK(literal.coefficient_at(49) == CycloNum(29));
  CHECK_FALSE(check_f_hecke(0).passes());
  CHECK(check_f_hecke(-1).passes());

  CHECK(support_residues(f, 24).size() == 8);
  CHECK_THROWS_AS(build_f(-1, max_f_precision(-1) + 1), Error);
  CHECK_THROWS_AS(build_f(3, 10), Error);
}

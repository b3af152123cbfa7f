// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes except those listed in
// kKnownFailures with exactly the recorded reason; a known failure that starts
// passing also makes the run fail, so the list cannot go stale.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <array>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qmasd/arith.hpp"
#include "qmasd/congruence.hpp"
#include "qmasd/cyclo.hpp"
#include "qmasd/error.hpp"
#include "qmasd/frobenius.hpp"
#include "qmasd/golden.hpp"
#include "qmasd/isogeny.hpp"
#include "qmasd/modseries.hpp"
#include "qmasd/qmfactor.hpp"
#include "qmasd/qseries.hpp"
#include "qmasd/report.hpp"

using namespace qmasd;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      problems.push_back(what);
    }
  }
};

using Criterion = std::function<Outcome()>;

const std::vector<std::uint64_t>& table_primes() {
  static const std::vector<std::uint64_t> primes = primes_between(5, 29);
  return primes;
}

const ReportDocument& table_report() {
  static const ReportDocument doc = cmd_table(5, 29, Engine::kCongruence);
  return doc;
}

Outcome golden_table_reproduction() {
  Outcome o;
  const auto& rows = table_report().results;
  o.require(rows.size() == 8, "expected 8 rows");
  for (const auto& row : rows) {
    o.require(row["golden"]["charpoly_match"] == true, "p=" + row["p"].dump() + " charpoly differs");
  }
  return o;
}

Outcome factorization_agreement() {
  Outcome o;
  for (const auto& row : table_report().results) {
    o.require(row["golden"]["factorization_match"] == true, "p=" + row["p"].dump() + " factorization differs");
    o.require(row["factorization"]["field_matches_u"] == true, "p=" + row["p"].dump() + " field mismatch");
  }
  return o;
}

Outcome cross_oracle_equality() {
  Outcome o;
  const CorrectionPolicy policy = CorrectionPolicy::lefschetz();
  for (std::uint64_t p : primes_between(5, 47)) {
    const auto start = std::chrono::steady_clock::now();
    const CharPoly4 counted = assemble_charpoly(p, policy);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const CharPoly4 recovered = recover_new_charpoly(p);
    const std::string tag = "p=" + std::to_string(p);
    o.require(seconds <= 120.0, tag + " point counting took " + std::to_string(seconds) + " s");
    o.require(counted == recovered, tag + " engines disagree");
    o.require(counted.satisfies_invariants(), tag + " counted quartic breaks invariants");
    o.require(recovered.satisfies_invariants(), tag + " recovered quartic breaks invariants");
  }
  return o;
}

Outcome asd_suite() {
  Outcome o;
  for (std::uint64_t p : table_primes()) {
    const ReportDocument d = cmd_asd(p, 40, 3);
    const std::string tag = "p=" + std::to_string(p);
    for (const auto& form : d.results["assignment"]["forms"]) {
      o.require(form["pass"] == true, tag + " three-term fails on " + form["form"].get<std::string>());
      o.require(form["failures"].empty(), tag + " negative margin on " + form["form"].get<std::string>());
    }
    for (const auto& row : d.results["scholl"]) {
      if (row["role"] == "new") o.require(row["pass"] == true, tag + " five-term fails on " + row["form"].get<std::string>());
    }
  }
  return o;
}

Outcome support_invariants() {
  Outcome o;
  const FormName fs[] = {FormName::kF1, FormName::kF2, FormName::kF3, FormName::kF4, FormName::kF5};
  for (int j = 1; j <= 5; ++j) {
    const QSeries s = build_form(fs[j - 1], 1200);
    o.require(support_residues(s, 6, 6) == std::set<int>{j}, "F" + std::to_string(j) + " leaves its class");
  }
  const std::pair<FormName, int> comps[] = {
      {FormName::kf5, 5}, {FormName::kf7, 7}, {FormName::kf13, 13}, {FormName::kf23, 23}};
  for (const auto& [name, j] : comps) {
    o.require(support_residues(build_form(name, 1200), 24) == std::set<int>{j}, form_label(name) + " leaves its class");
  }
  const QSeries f = build_f(calibrate_f_offset(), max_f_precision(-1));
  for (int r : support_residues(f, 24)) o.require(std::gcd(r, 24) == 1, "f has support at " + std::to_string(r) + " mod 24");
  return o;
}

Outcome symbolic_geometry() {
  Outcome o;
  using Verifier = IsogenyProof (*)(bool);
  const Verifier vs[] = {verify_isogeny_B, verify_W2_map_t, verify_zeta_conjugation, verify_square_is_mult2};
  const auto start = std::chrono::steady_clock::now();
  for (Verifier v : vs) {
    const IsogenyProof good = v(false);
    o.require(good.pass, good.name + " fails");
    o.require(!v(true).pass, good.name + " accepts its mutation");
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(seconds <= 10.0, "symbolic checks took " + std::to_string(seconds) + " s");
  return o;
}

Outcome norm_compatibility() {
  Outcome o;
  o.require(calibrate_f_offset() == -1, "offset is not -1");
  o.require(check_f_hecke(-1).passes(), "Hecke relations fail at the calibrated offset");
  const ReportDocument d = cmd_norms();
  for (const auto& row : d.results) o.require(row["pass"] == true, "p=" + row["p"].dump() + " norms differ");
  o.require(d.results.size() == 8, "expected 8 primes");
  return o;
}

Outcome property_suites() {
  Outcome o;
  // Random field axioms and conjugation.
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 4);
  const auto rnd = [&] {
    std::array<Rat, CycloNum::kDim> c;
    for (auto& x : c) x = make_rat(num(rng), den(rng));
    return CycloNum(c);
  };
  bool axioms = true;
  for (int it = 0; it < 10000 && axioms; ++it) {
    const CycloNum a = rnd(), b = rnd(), c = rnd();
    const unsigned flips = static_cast<unsigned>(it % 8);
    axioms = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a &&
             (a.is_zero() || a * cyc_inv(a) == CycloNum(1)) &&
             cyc_conj(a * b, flips) == cyc_conj(a, flips) * cyc_conj(b, flips);
  }
  o.require(axioms, "field axioms or conjugation fail on random elements");

  // Hasse bound on every fibre counted by the engine.
  bool hasse = true;
  for (std::uint64_t p : primes_between(5, 47)) {
    for (unsigned degree : {1u, 2u}) {
      const FiniteField f(p, degree);
      for (std::uint64_t i = 0; i < f.q(); ++i) {
        const FiberCount fb = fiber_at(f, f.element(i), 1);
        if (!fb.singular && fb.trace * fb.trace > static_cast<std::int64_t>(4 * f.q())) hasse = false;
      }
    }
  }
  o.require(hasse, "Hasse bound violated");

  // Perturbation sensitivity: the true quartic must be the only survivor in the Weil box.
  for (const GoldenRow& g : golden_table()) {
    const auto k = static_cast<unsigned>(max_required_exponent(g.p, 3, 40));
    const auto pi = static_cast<std::int64_t>(g.p);
    auto family = std::make_shared<const FamilyMod>(g.p, k, pi * pi * 40, std::initializer_list<int>{1, 5});
    const auto survivors =
        scholl_survivors({family_coefficients(family, 1), family_coefficients(family, 5)}, g.p, 3, 40);
    if (survivors.size() != 1) {
      o.require(false, "perturbation at p=" + std::to_string(g.p) + ": " + std::to_string(survivors.size()) +
                           " quartics survive");
    }
  }
  return o;
}

struct KnownFailure {
  int criterion;
  std::vector<std::string> problems;
  std::string reason;
};

// At p = 19 the factorization is a square with rational A = -20, so every
// (x^2 + 20x + 361)(x^2 + gx + 361) inside the Weil box also annihilates F1 and F5.
const std::vector<KnownFailure> kKnownFailures = {
    {8, {"perturbation at p=19: 153 quartics survive"},
     "p=19: the quartics sharing the factor x^2+20x+361 all satisfy the five-term congruences"}};

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"golden table reproduction", golden_table_reproduction},
      {"factorization agreement", factorization_agreement},
      {"cross-oracle equality", cross_oracle_equality},
      {"ASD congruence suite", asd_suite},
      {"support invariants", support_invariants},
      {"symbolic geometry", symbolic_geometry},
      {"eigenform norm compatibility", norm_compatibility},
      {"property suites", property_suites},
  };

  bool ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    const KnownFailure* known = nullptr;
    for (const auto& k : kKnownFailures) {
      if (k.criterion == id) known = &k;
    }

    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << criteria[i].first;
    for (const auto& p : o.problems) line << " [" << p << "]";
    if (known && !o.pass && o.problems == known->problems) {
      line << " (known failure: " << known->reason << ")";
    } else if (known) {
      line << " (expected a known failure that did not occur as recorded)";
      ok = false;
    } else if (!o.pass) {
      ok = false;
    }
    std::cout << line.str() << std::endl;
  }
  return ok ? 0 : 1;
}

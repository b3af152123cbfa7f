#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "qmasd/error.hpp"
#include "qmasd/report.hpp"

using namespace qmasd;

TEST_CASE("splitting report") {
  const ReportDocument d = cmd_splitting(7);
  CHECK(d.results["splitting_set"] == nlohmann::json::array({-3}));
  CHECK(d.render(OutputFormat::kTsv) == "7\t-3\tpartial\n");
  CHECK(cmd_splitting(19).results["splits_completely"] == true);
}

TEST_CASE("q-expansion report") {
  const ReportDocument d = cmd_qexp("F1", 10);
  REQUIRE_FALSE(d.tsv.empty());
  CHECK(d.tsv.front() == "4\t1");
  const ReportDocument f = cmd_qexp("f", 30);
  CHECK(f.tsv.front() == "1\t1");
  CHECK(f.parameters["offset_shift"] == -1);
  CHECK_THROWS_AS(cmd_qexp("G", 10), Error);
}

TEST_CASE("isogeny report") {
  const ReportDocument d = cmd_isogeny();
  CHECK(d.pass);
  REQUIRE(d.tsv.size() == 4);
  for (const auto& line : d.tsv) CHECK(line.rfind("PASS\t", 0) == 0);
}

TEST_CASE("ASD report") {
  try {
    cmd_asd(6);
    FAIL("expected BadPrime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBadPrime);
  }
  const ReportDocument d5 = cmd_asd(5, 40);
  CHECK(d5.pass);
  CHECK(d5.results["assignment"]["u"] == 6);
  const ReportDocument d19 = cmd_asd(19, 40);
  CHECK(d19.pass);
  CHECK(d19.results.contains("note"));
  CHECK(d19.results["factorization"]["kind"] == "squared");
  for (const auto& row : d19.results["scholl"]) {
    if (row["role"] == "new") CHECK(row["pass"] == true);
  }
}

TEST_CASE("norm report") {
  const ReportDocument d = cmd_norms();
  CHECK(d.pass);
  REQUIRE(d.results.size() == 8);
  CHECK(d.results[0]["p"] == 5);
  CHECK(d.results[0]["abs2_a_p"] == "54");
  CHECK(d.results[5]["p"] == 19);
  CHECK(d.results[5]["abs2_A"] == "400");
  CHECK(d.results[7]["abs2_a_p"] == "1350");
}

TEST_CASE("table report") {
  const ReportDocument d = cmd_table(5, 29, Engine::kCongruence);
  CHECK(d.pass);
  REQUIRE(d.results.size() == 8);
  for (const auto& row : d.results) {
    CHECK(row["golden"]["charpoly_match"] == true);
    CHECK(row["golden"]["factorization_match"] == true);
  }
  const ReportDocument beyond = cmd_table(31, 47, Engine::kCongruence);
  CHECK(beyond.pass);
  for (const auto& row : beyond.results) {
    CHECK(row["invariants"] == true);
    CHECK(row["golden"].is_null());
  }
  CHECK_THROWS_AS(cmd_table(3, 29, Engine::kCongruence), Error);
  CHECK_THROWS_AS(cmd_table(29, 5, Engine::kCongruence), Error);
  CHECK_THROWS_AS(cmd_table(5, 53, Engine::kCongruence), Error);
}

TEST_CASE("both engines agree row by row") {
  const ReportDocument d = cmd_table(5, 13, Engine::kBoth);
  CHECK(d.pass);
  for (const auto& row : d.results) CHECK(row["engines"]["agree"] == true);
  CHECK(d.to_json()["policy"]["id"] == "lefschetz-v1");
}

TEST_CASE("reports are deterministic") {
  CHECK(cmd_charpoly(7, Engine::kBoth).render(OutputFormat::kJson) ==
        cmd_charpoly(7, Engine::kBoth).render(OutputFormat::kJson));
  const auto j = cmd_factor(17, Engine::kCongruence).to_json();
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["command"] == "factor");
  CHECK(j["results"]["golden_match"] == true);
}

TEST_CASE("engine, format and policy parsing") {
  CHECK(parse_engine("both") == Engine::kBoth);
  CHECK(engine_name(Engine::kCount) == "count");
  CHECK_THROWS_AS(parse_engine("guess"), Error);
  CHECK(parse_format("tsv") == OutputFormat::kTsv);
  CHECK_THROWS_AS(parse_format("xml"), Error);
  CHECK(resolve_policy("lefschetz-v1").split == 1);
  CHECK_THROWS_AS(resolve_policy("no-such-policy"), Error);

  const auto path = std::filesystem::temp_directory_path() / "qmasd_policy_test.json";
  CorrectionPolicy p = CorrectionPolicy::lefschetz();
  p.id = "from-file";
  p.additive = 1;
  std::ofstream(path) << p.to_json().dump();
  const CorrectionPolicy back = resolve_policy(path.string());
  CHECK(back.id == "from-file");
  CHECK(back.additive == 1);
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(resolve_policy(path.string()), Error);
  std::filesystem::remove(path);
}

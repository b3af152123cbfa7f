#pragma once

// Command implementations behind the qmasd executable. Each returns a
// ReportDocument whose JSON form is deterministic for fixed inputs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmasd/congruence.hpp"
#include "qmasd/frobenius.hpp"

namespace qmasd {

inline constexpr int kSchemaVersion = 1;

enum class Engine { kCount, kCongruence, kBoth };
Engine parse_engine(const std::string& name);
std::string engine_name(Engine e);

/// "lefschetz-v1" or a path to a JSON policy file.
CorrectionPolicy resolve_policy(const std::string& id);

enum class OutputFormat { kJson, kTsv };
OutputFormat parse_format(const std::string& name);

struct ReportDocument {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<std::string> engine;
  std::optional<nlohmann::json> policy;
  nlohmann::json results;
  bool pass = false;
  /// Tab-separated rendering, one record per line, no header.
  std::vector<std::string> tsv;

  nlohmann::json to_json() const;
  std::string render(OutputFormat format) const;
};

/// Characteristic polynomial from one engine, or both with an agreement check.
struct EngineResult {
  std::optional<CharPoly4> count;
  std::optional<CharPoly4> congruence;

  bool agree() const { return !count || !congruence || *count == *congruence; }
  const CharPoly4& chosen() const { return congruence ? *congruence : *count; }
  nlohmann::json to_json() const;
};

EngineResult compute_charpoly(std::uint64_t p, Engine engine, const CorrectionPolicy& policy, int kappa = 3,
                              std::int64_t nmax = 40);

/// 5 <= pmin <= pmax <= 47.
ReportDocument cmd_table(std::uint64_t pmin, std::uint64_t pmax, Engine engine,
                         const CorrectionPolicy& policy = CorrectionPolicy::lefschetz());
/// Throws kBadPrime unless p is a prime >= 5.
ReportDocument cmd_asd(std::uint64_t p, std::int64_t nmax = 40, int kappa = 3);
ReportDocument cmd_norms();
/// Nonzero coefficients of a named form ("f" is the calibrated eigenform) with
/// exponents in units of q^(1/24).
ReportDocument cmd_qexp(const std::string& name, std::size_t prec);
ReportDocument cmd_splitting(std::uint64_t p);
ReportDocument cmd_isogeny();
ReportDocument cmd_charpoly(std::uint64_t p, Engine engine, const CorrectionPolicy& policy = CorrectionPolicy::lefschetz());
ReportDocument cmd_factor(std::uint64_t p, Engine engine, const CorrectionPolicy& policy = CorrectionPolicy::lefschetz());

}  // namespace qmasd

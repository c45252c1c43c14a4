#pragma once

// Deterministic JSON reports (sorted keys, rationals as "p/q") and their
// plain-text rendering.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqsing/family.hpp"
#include "eqsing/limits.hpp"
#include "eqsing/modifications.hpp"
#include "eqsing/projection.hpp"
#include "eqsing/rolle.hpp"
#include "eqsing/zariski.hpp"

namespace eqsing {

inline constexpr int kReportVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

struct ReportOptions {
  CheckOptions check;
  std::vector<mpq_class> special_a;
  /// Worker threads for full_report; the output does not depend on it.
  unsigned threads = 1;
};

nlohmann::json to_json(const Arc& arc);
nlohmann::json to_json(const Verdict& v, bool with_regimes = true);
nlohmann::json to_json(const CharSequence& cs);

nlohmann::json whitney_section(const Parametrization& param, const CheckOptions& opts);
nlohmann::json zariski_section(const Parametrization& param);
nlohmann::json crosscheck_section(const Parametrization& param, const CheckOptions& opts);
nlohmann::json strong_section(const Parametrization& param, const CheckOptions& opts,
                              const std::vector<mpq_class>& special_a);
nlohmann::json char_exponents_section(const Parametrization& param, const std::vector<mpq_class>& special_a);
nlohmann::json modification_section(const Parametrization& original, const ModificationResult& mod);
nlohmann::json rolle_section(const RolleCertificate& cert);
nlohmann::json equations_section(const Parametrization& param, const ImplicitEquations& eqs);

/// Every check on the family, then the checks again on both modifications.
nlohmann::json full_report_section(const Parametrization& param, const ReportOptions& opts);

/// Wraps a section with version, command, input echo and options.
nlohmann::json envelope(const std::string& command, const std::string& input_name, const nlohmann::json& input,
                        const ReportOptions& opts, nlohmann::json results);

/// Status that decides the exit code: "Verified", "Refuted" or "Inconclusive".
std::string headline_status(const std::string& command, const nlohmann::json& results);

std::string render_json(const nlohmann::json& j);
std::string render_text(const nlohmann::json& j);

}  // namespace eqsing

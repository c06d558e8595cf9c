#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "symdet/tolerances.hpp"

namespace symdet {

inline constexpr const char* kToolName = "symdet 0.1.0";

struct FailureEntry {
  std::uint64_t seed = 0;
  std::size_t half_dim = 0;
  std::map<std::string, double> residuals;
  /// Shown in text output only; the JSON schema has no slot for it.
  std::string note;

  bool operator==(const FailureEntry& o) const {
    return seed == o.seed && half_dim == o.half_dim && residuals == o.residuals;
  }
};

struct Report {
  std::string tool = kToolName;
  std::string suite;
  nlohmann::json config = nlohmann::json::object();
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::vector<FailureEntry> failures;
  std::map<std::string, double> worst_residuals;
  double elapsed_seconds = 0.0;

  bool all_passed() const { return passes == trials; }
  bool operator==(const Report&) const = default;
};

enum class ReportFormat { Text, Json };

ReportFormat parse_report_format(const std::string& name);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ToleranceConfig& t);

std::string render_text(const Report& r);
std::string render(const std::vector<Report>& reports, ReportFormat format);

/// Writes to `path`, or stdout when path is empty or "-". Throws std::runtime_error if unwritable.
void emit_report(const std::vector<Report>& reports, ReportFormat format, const std::string& path);
void emit_report(const Report& report, ReportFormat format, const std::string& path);

}  // namespace symdet

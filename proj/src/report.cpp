#include "symdet/report.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "symdet/matrix.hpp"

namespace symdet {

using nlohmann::json;

bool ToleranceConfig::set(const std::string& name, double value) {
  if (name == "membership") membership = value;
  else if (name == "identity") identity = value;
  else if (name == "determinant") determinant = value;
  else if (name == "phase") phase = value;
  else if (name == "formula_floor") formula_floor = value;
  else if (name == "form") form = value;
  else if (name == "split") split = value;
  else if (name == "lemma") lemma = value;
  else if (name == "lemma_floor") lemma_floor = value;
  else if (name == "generator") generator = value;
  else return false;
  return true;
}

json to_json(const ToleranceConfig& t) {
  return json{{"membership", t.membership}, {"identity", t.identity},       {"determinant", t.determinant},
              {"phase", t.phase},           {"formula_floor", t.formula_floor}, {"form", t.form},
              {"split", t.split},           {"lemma", t.lemma},             {"lemma_floor", t.lemma_floor},
              {"generator", t.generator}};
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "json") return ReportFormat::Json;
  throw ContractViolation("unknown report format '" + name + "' (expected text or json)");
}

namespace {

// JSON has no infinity; non-finite residuals are written as null and read back as +inf.
double number_from_json(const json& v) {
  if (v.is_null()) return std::numeric_limits<double>::infinity();
  return v.get<double>();
}

json residuals_to_json(const std::map<std::string, double>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

std::map<std::string, double> residuals_from_json(const json& j) {
  std::map<std::string, double> out;
  for (const auto& [k, v] : j.items()) out[k] = number_from_json(v);
  return out;
}

// Same token the JSON writer produces, so both formats carry identical numbers.
std::string num(double x) { return json(x).dump(); }

}  // namespace

json to_json(const Report& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"seed", f.seed}, {"halfDim", f.half_dim}, {"residuals", residuals_to_json(f.residuals)}});
  }
  return json{{"tool", r.tool},
              {"suite", r.suite},
              {"config", r.config},
              {"trials", r.trials},
              {"passes", r.passes},
              {"failures", failures},
              {"worstResiduals", residuals_to_json(r.worst_residuals)},
              {"elapsedSeconds", r.elapsed_seconds}};
}

Report report_from_json(const json& j) {
  Report r;
  r.tool = j.at("tool").get<std::string>();
  r.suite = j.at("suite").get<std::string>();
  r.config = j.at("config");
  r.trials = j.at("trials").get<std::size_t>();
  r.passes = j.at("passes").get<std::size_t>();
  for (const auto& f : j.at("failures")) {
    r.failures.push_back({f.at("seed").get<std::uint64_t>(), f.at("halfDim").get<std::size_t>(),
                          residuals_from_json(f.at("residuals")), ""});
  }
  r.worst_residuals = residuals_from_json(j.at("worstResiduals"));
  r.elapsed_seconds = number_from_json(j.at("elapsedSeconds"));
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "tool            " << r.tool << '\n';
  out << "suite           " << r.suite << '\n';
  out << "config          " << r.config.dump() << '\n';
  out << "trials          " << r.trials << '\n';
  out << "passes          " << r.passes << '\n';
  out << "elapsedSeconds  " << num(r.elapsed_seconds) << '\n';
  out << "worstResiduals\n";
  for (const auto& [k, v] : r.worst_residuals) {
    out << "  " << k << std::string(k.size() < 28 ? 28 - k.size() : 1, ' ') << num(v) << '\n';
  }
  out << "failures        " << r.failures.size() << '\n';
  for (const auto& f : r.failures) {
    out << "  seed=" << f.seed << " halfDim=" << f.half_dim;
    for (const auto& [k, v] : f.residuals) out << ' ' << k << '=' << num(v);
    if (!f.note.empty()) out << "  # " << f.note;
    out << '\n';
  }
  return out.str();
}

std::string render(const std::vector<Report>& reports, ReportFormat format) {
  if (format == ReportFormat::Json) {
    if (reports.size() == 1) return to_json(reports.front()).dump(2) + "\n";
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) out += '\n';
    out += render_text(reports[i]);
  }
  return out;
}

void emit_report(const std::vector<Report>& reports, ReportFormat format, const std::string& path) {
  const std::string text = render(reports, format);
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report to '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("failed writing report to '" + path + "'");
}

void emit_report(const Report& report, ReportFormat format, const std::string& path) {
  emit_report(std::vector<Report>{report}, format, path);
}

}  // namespace symdet

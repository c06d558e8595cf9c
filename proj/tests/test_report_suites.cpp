#include <cmath>
#include <filesystem>
#include <limits>
#include <regex>

#include "doctest.h"
#include "symdet/certificate.hpp"
#include "symdet/certify.hpp"
#include "symdet/generators.hpp"
#include "symdet/report.hpp"
#include "symdet/suites.hpp"

using namespace symdet;
using nlohmann::json;

namespace {

Report synthetic_report() {
  Report r;
  r.suite = "lemma";
  r.config = {{"trials", 3}, {"seed", 42}};
  r.trials = 3;
  r.passes = 2;
  r.failures.push_back({7, 4, {{"lemma-sign", 3.5}, {"gram-sign", 0.125}}, "rejected"});
  r.worst_residuals = {{"lemma-sign", 3.5}, {"gram-sign", 0.125}};
  r.elapsed_seconds = 0.25;
  return r;
}

}  // namespace

TEST_CASE("report JSON schema and round trip") {
  const Report r = synthetic_report();
  const json j = to_json(r);
  for (const char* key : {"tool", "suite", "config", "trials", "passes", "failures", "worstResiduals", "elapsedSeconds"}) {
    CHECK(j.contains(key));
  }
  CHECK(j.size() == 8);
  CHECK(j["failures"][0]["seed"] == 7);
  CHECK(j["failures"][0]["halfDim"] == 4);
  CHECK(j["failures"][0]["residuals"]["lemma-sign"] == 3.5);
  CHECK_FALSE(j["failures"][0].contains("note"));

  const Report back = report_from_json(json::parse(j.dump()));
  CHECK(back == r);
  CHECK(back.failures[0].note.empty());
}

TEST_CASE("passing report has an empty failure list") {
  SuiteSpec spec = default_spec(SuiteId::FormIdentities);
  const Report r = run_suite(spec);
  CHECK(r.all_passed());
  const json j = to_json(r);
  CHECK(j["failures"].is_array());
  CHECK(j["failures"].empty());
  CHECK(j["trials"] == 8);
  CHECK(j["config"]["tolerances"]["membership"] == 1e-8);
}

TEST_CASE("infinite residuals survive JSON") {
  Report r = synthetic_report();
  r.worst_residuals["lemma-sign"] = std::numeric_limits<double>::infinity();
  const Report back = report_from_json(json::parse(to_json(r).dump()));
  CHECK(std::isinf(back.worst_residuals.at("lemma-sign")));
}

TEST_CASE("text and JSON carry the same numbers") {
  const Report r = synthetic_report();
  const std::string text = render_text(r);
  const json j = to_json(r);
  for (const auto& [name, value] : j["worstResiduals"].items()) {
    CHECK(text.find(name) != std::string::npos);
    CHECK(text.find(value.dump()) != std::string::npos);
  }
  CHECK(text.find("seed=7 halfDim=4") != std::string::npos);
  CHECK(text.find("lemma-sign=3.5") != std::string::npos);

  const Report real = run_suite([] {
    SuiteSpec s = default_spec(SuiteId::RealTheorem);
    s.trials = 10;
    return s;
  }());
  const std::string real_text = render_text(real);
  for (const auto& [name, value] : to_json(real)["worstResiduals"].items()) {
    CHECK(real_text.find(value.dump()) != std::string::npos);
  }
}

TEST_CASE("render: one report is an object, several are an array") {
  const Report r = synthetic_report();
  CHECK(json::parse(render({r}, ReportFormat::Json)).is_object());
  CHECK(json::parse(render({r, r}, ReportFormat::Json)).is_array());
  CHECK(parse_report_format("json") == ReportFormat::Json);
  CHECK_THROWS_AS(parse_report_format("xml"), ContractViolation);
}

TEST_CASE("emit_report writes files and rejects unwritable paths") {
  const auto path = std::filesystem::temp_directory_path() / "symdet_report_test.json";
  emit_report(synthetic_report(), ReportFormat::Json, path.string());
  CHECK(std::filesystem::file_size(path) > 0);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(emit_report(synthetic_report(), ReportFormat::Json, "/nonexistent-dir/report.json"),
                  std::runtime_error);
}

TEST_CASE("suite ids") {
  CHECK(all_suites().size() == 7);
  for (SuiteId id : all_suites()) CHECK(parse_suite_id(to_string(id)) == id);
  CHECK_THROWS_AS(parse_suite_id("no-such-suite"), ContractViolation);
  SuiteSpec bad = default_spec(SuiteId::Lemma);
  bad.half_dims.clear();
  CHECK_THROWS_AS(run_suite(bad), ContractViolation);
}

TEST_CASE("every default suite passes on a reduced run") {
  for (SuiteId id : all_suites()) {
    SuiteSpec spec = default_spec(id);
    spec.trials = std::min<std::size_t>(spec.trials, 24);
    const Report r = run_suite(spec);
    INFO(render_text(r));
    CHECK(r.all_passed());
    CHECK(r.trials == spec.trials);
  }
}

TEST_CASE("replaying a failure seed reproduces its residuals") {
  SuiteSpec spec = default_spec(SuiteId::Lemma);
  spec.trials = 30;
  spec.tolerances.identity = 1e-30;  // forces failures
  const Report r = run_suite(spec);
  REQUIRE_FALSE(r.failures.empty());
  for (const FailureEntry& f : r.failures) {
    const TrialResult again = run_trial(SuiteId::Lemma, f.seed, f.half_dim, spec.tolerances);
    CHECK_FALSE(again.pass);
    CHECK(again.residuals == f.residuals);
  }
}

TEST_CASE("results do not depend on the thread count") {
  for (SuiteId id : {SuiteId::RealTheorem, SuiteId::Lemma, SuiteId::ConjFormula}) {
    SuiteSpec spec = default_spec(id);
    spec.trials = 40;
    spec.threads = 1;
    const auto one = run_trials(spec);
    spec.threads = 4;
    const auto four = run_trials(spec);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      CHECK(one[i].seed == four[i].seed);
      CHECK(one[i].residuals == four[i].residuals);
    }
    Report a = run_suite(spec);
    spec.threads = 1;
    Report b = run_suite(spec);
    a.elapsed_seconds = b.elapsed_seconds = 0.0;
    CHECK(a == b);
  }
}

TEST_CASE("certify_matrix") {
  const ToleranceConfig tol;
  SUBCASE("J passes") {
    const CertifyOutcome out = certify_matrix(form_matrix<double>(2), CertifyMode::Auto, tol, "J");
    CHECK(out.report.all_passed());
    CHECK(out.report.suite == "certify");
    CHECK(out.narrative.find("det-one") != std::string::npos);
  }
  SUBCASE("diag(3, 3) fails with a membership residual") {
    const CertifyOutcome out = certify_matrix(RealMatrix::diagonal({3.0, 3.0}), CertifyMode::Auto, tol, "d");
    CHECK_FALSE(out.report.all_passed());
    REQUIRE(out.report.failures.size() == 1);
    CHECK(out.report.failures[0].residuals.at("membership") == doctest::Approx(8.0));
  }
  SUBCASE("conjugate mode on e^{0.3i} I_4") {
    const CertifyOutcome out = certify_matrix(phase_factor(0.3, 2), CertifyMode::Conjugate, tol, "phase");
    CHECK(out.report.all_passed());
    CHECK(out.report.worst_residuals.at("phase-error") <= 1e-14);
    CHECK(phase_angle(conj_symplectic_det_formula(phase_factor(0.3, 2)), std::polar(1.0, 1.2)) <= 1e-14);
  }
  SUBCASE("contract violations") {
    CHECK_THROWS_AS(certify_matrix(RealMatrix::identity(3), CertifyMode::Auto, tol, "odd"), ContractViolation);
    CHECK_THROWS_AS(certify_matrix(ComplexMatrix::identity(2), CertifyMode::RealSymplectic, tol, "c"),
                    ContractViolation);
  }
}

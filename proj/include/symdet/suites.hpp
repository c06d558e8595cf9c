#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symdet/report.hpp"
#include "symdet/tolerances.hpp"

namespace symdet {

enum class SuiteId {
  FormIdentities,
  RealTheorem,
  ComplexTheorem,
  Lemma,
  IneqReal,
  ConjFormula,
  GeneratorSanity,
};

std::string to_string(SuiteId id);
/// Throws ContractViolation for an unknown name.
SuiteId parse_suite_id(const std::string& name);
std::vector<SuiteId> all_suites();

struct SuiteSpec {
  SuiteId id = SuiteId::FormIdentities;
  std::size_t trials = 1;
  /// Trial i runs at half_dims[i % half_dims.size()].
  std::vector<std::size_t> half_dims{1};
  std::uint64_t seed = 42;
  ToleranceConfig tolerances;
  /// Worker threads; results never depend on this.
  std::size_t threads = 1;

  void validate() const;
};

/// The trial counts and dimensions used by the acceptance runs.
SuiteSpec default_spec(SuiteId id);

struct TrialResult {
  std::uint64_t seed = 0;
  std::size_t half_dim = 0;
  bool pass = false;
  std::map<std::string, double> residuals;
  /// Error text when the trial threw instead of producing residuals.
  std::string note;
};

/// C is "well conditioned" for the lemma block reduction when
/// ||C||_F ||C^{-1}||_F / N stays below this.
inline constexpr double kLemmaReductionConditionLimit = 1e4;

/// One trial, fully determined by (suite, seed, half_dim, tolerances).
TrialResult run_trial(SuiteId id, std::uint64_t seed, std::size_t half_dim, const ToleranceConfig& tol);

/// Seed of trial `index` within a suite run.
std::uint64_t trial_seed(std::uint64_t suite_seed, std::size_t index);

/// Runs every trial and collects per-trial results in index order.
std::vector<TrialResult> run_trials(const SuiteSpec& spec);

Report run_suite(const SuiteSpec& spec);

}  // namespace symdet

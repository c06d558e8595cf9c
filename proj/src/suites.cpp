#include "symdet/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

#include "symdet/certificate.hpp"
#include "symdet/generators.hpp"
#include "symdet/lu.hpp"
#include "symdet/matrix_io.hpp"
#include "symdet/rng.hpp"
#include "symdet/symplectic.hpp"

namespace symdet {

namespace {

struct SuiteName {
  SuiteId id;
  const char* name;
};

constexpr SuiteName kSuiteNames[] = {
    {SuiteId::FormIdentities, "form-identities"}, {SuiteId::RealTheorem, "real-theorem"},
    {SuiteId::ComplexTheorem, "complex-theorem"}, {SuiteId::Lemma, "lemma"},
    {SuiteId::IneqReal, "ineq-real"},             {SuiteId::ConjFormula, "conj-formula"},
    {SuiteId::GeneratorSanity, "generator-sanity"},
};

using Residuals = std::map<std::string, double>;

bool all_within(const Residuals& r, const std::map<std::string, double>& limits) {
  for (const auto& [name, limit] : limits) {
    const auto it = r.find(name);
    if (it == r.end() || !(it->second <= limit)) return false;
  }
  return true;
}

template <Scalar T>
double condition_estimate(const Matrix<T>& m) {
  const LuFactorization<T> lu = lu_decompose(m);
  if (lu.singular) return std::numeric_limits<double>::infinity();
  const Matrix<T> inv = solve(lu, Matrix<T>::identity(m.size()));
  return frobenius_norm(m) * frobenius_norm(inv) / static_cast<double>(m.size());
}

TrialResult form_trial(std::size_t n, const ToleranceConfig& tol) {
  TrialResult t;
  const RealMatrix j = form_matrix<double>(n);
  const RealMatrix id = RealMatrix::identity(2 * n);
  t.residuals["j-squared"] = frobenius_norm(j * j + id);
  t.residuals["j-transpose"] = frobenius_norm(transpose(j) + j);
  t.residuals["j-orthogonal"] = frobenius_norm(transpose(j) * j - id);
  t.residuals["j-inverse"] = frobenius_norm(inverse(j) - transpose(j));
  t.residuals["det-j"] = std::abs(log_det(j).value() - 1.0);
  t.residuals["j-symplectic"] = symplectic_residual(j);
  t.pass = std::all_of(t.residuals.begin(), t.residuals.end(), [&](const auto& kv) { return kv.second <= tol.form; });
  return t;
}

template <Scalar T>
TrialResult theorem_trial(GroupTarget target, std::uint64_t seed, std::size_t n, const ToleranceConfig& tol) {
  TrialResult t;
  GeneratorConfig config;
  config.half_dim = n;
  config.seed = seed;
  config.target = target;
  const Matrix<T> a = generate<T>(config);
  const Certificate cert = theorem_certificate(a, tol);
  for (const auto& step : cert.narrative) t.residuals[step.name] = step.residual;
  t.pass = cert.pass;
  return t;
}

TrialResult lemma_trial(std::uint64_t seed, std::size_t n, const ToleranceConfig& tol) {
  TrialResult t;
  Rng rng(seed);
  // 0: Gaussian C; 1, 2: C = eps I + rank-(N-1) matrix with eps = 1e-2, 1e-6.
  const std::size_t variant = rng.index(3);
  ComplexMatrix c = random_gaussian<Complex>(rng, n);
  if (variant != 0) {
    const double eps = variant == 1 ? 1e-2 : 1e-6;
    ComplexMatrix mask(n);
    for (std::size_t i = 0; i + 1 < n; ++i) mask(i, i) = 1.0;
    const ComplexMatrix right = random_gaussian<Complex>(rng, n);
    c = ComplexMatrix::scalar(n, eps) + c * mask * right;
  }
  const ComplexMatrix d = random_gaussian<Complex>(rng, n);

  const LogDet det = lemma_det(c, d);
  t.residuals["lemma-sign"] = nonnegativity_violation(det, tol.lemma, tol.lemma_floor);
  std::map<std::string, double> limits{{"lemma-sign", 1.0}};

  if (variant == 0 && condition_estimate(c) <= kLemmaReductionConditionLimit) {
    const LemmaProbe probe = lemma_reduction(c, d);
    if (!probe.c_invertible()) {
      t.note = "C singular in reduction";
      return t;
    }
    t.residuals["reduction"] = probe.reduction_residual;
    t.residuals["gram-reduction"] = probe.gram_residual;
    t.residuals["ce-residual"] = probe.ce_residual;
    t.residuals["gram-sign"] = nonnegativity_violation(probe.gram_det, tol.lemma, tol.lemma_floor);
    limits.insert({{"reduction", tol.identity}, {"gram-reduction", tol.identity}, {"ce-residual", tol.identity},
                   {"gram-sign", 1.0}});
  }
  t.pass = all_within(t.residuals, limits);
  return t;
}

TrialResult ineq_real_trial(std::uint64_t seed, std::size_t n, const ToleranceConfig& tol) {
  TrialResult t;
  Rng rng(seed);
  const RealMatrix c = random_gaussian<double>(rng, n);
  const RealMatrix d = random_gaussian<double>(rng, n);
  const RealMatrix m = embed_orthogonal_pair(c, d);
  const LogDet dense = log_det(m);
  const SplitDet split = unitary_split_det(BlockPair<double>{c, d, PairVariant::RealSymplectic});
  const LogDet modulus_squared = split.plus * split.plus.conj();
  const double negative = dense.phase.real() < 0 ? dense.magnitude() : 0.0;
  t.residuals["ineq-sign"] = negative / (tol.split * hadamard_bound(m));
  t.residuals["split-agreement"] = relative_difference(dense, modulus_squared);
  t.pass = all_within(t.residuals, {{"ineq-sign", 1.0}, {"split-agreement", tol.split}});
  return t;
}

TrialResult conj_formula_trial(std::uint64_t seed, std::size_t n, const ToleranceConfig& tol) {
  TrialResult t;
  GeneratorConfig config;
  config.half_dim = n;
  config.seed = seed;
  config.target = GroupTarget::ConjugateSymplectic;
  const ComplexMatrix a = generate<Complex>(config);
  const FormulaCheck check = check_conj_formula(a, tol);
  t.residuals["phase-error"] = check.phase_error;
  t.residuals["modulus-error"] = check.modulus_error;
  t.residuals["membership"] = check.membership_residual;
  t.pass = check.pass;
  return t;
}

template <Scalar T>
TrialResult generator_trial(GroupTarget target, std::uint64_t seed, std::size_t n, const ToleranceConfig& tol) {
  TrialResult t;
  GeneratorConfig config;
  config.half_dim = n;
  config.seed = seed;
  config.target = target;
  const Matrix<T> a = generate<T>(config);
  const Matrix<T> again = generate<T>(config);
  const bool conj_target = target == GroupTarget::ConjugateSymplectic;
  const double membership = conj_target ? conjugate_symplectic_residual(a) : symplectic_residual(a);
  const LogDet det = log_det(a);
  t.residuals["membership"] = membership / membership_bound(a, tol.generator);
  t.residuals["determinism"] = format_matrix(a) == format_matrix(again) ? 0.0 : 1.0;
  t.residuals["det-modulus"] = std::abs(det.magnitude() - 1.0);
  if (!conj_target) t.residuals["det-one"] = std::abs(det.value() - Complex{1.0, 0.0});
  std::map<std::string, double> limits{{"membership", 1.0}, {"determinism", 0.0}, {"det-modulus", tol.determinant}};
  if (!conj_target) limits["det-one"] = tol.determinant;
  t.pass = all_within(t.residuals, limits);
  return t;
}

TrialResult generator_sanity_trial(std::uint64_t seed, std::size_t n, const ToleranceConfig& tol) {
  Rng rng(seed);
  const std::size_t which = rng.index(3);
  const std::uint64_t gen_seed = child_seed(seed, 1);
  switch (which) {
    case 0:
      return generator_trial<double>(GroupTarget::RealSymplectic, gen_seed, n, tol);
    case 1:
      return generator_trial<Complex>(GroupTarget::ComplexSymplectic, gen_seed, n, tol);
    default:
      return generator_trial<Complex>(GroupTarget::ConjugateSymplectic, gen_seed, n, tol);
  }
}

}  // namespace

std::string to_string(SuiteId id) {
  for (const auto& s : kSuiteNames) {
    if (s.id == id) return s.name;
  }
  return "unknown";
}

SuiteId parse_suite_id(const std::string& name) {
  for (const auto& s : kSuiteNames) {
    if (name == s.name) return s.id;
  }
  throw ContractViolation("unknown suite '" + name + "'");
}

std::vector<SuiteId> all_suites() {
  std::vector<SuiteId> ids;
  for (const auto& s : kSuiteNames) ids.push_back(s.id);
  return ids;
}

void SuiteSpec::validate() const {
  if (trials < 1) throw ContractViolation("suite: trials must be >= 1");
  if (half_dims.empty()) throw ContractViolation("suite: at least one half dimension is required");
  for (std::size_t n : half_dims) {
    if (n < 1) throw ContractViolation("suite: half dimensions must be >= 1");
  }
  if (threads < 1) throw ContractViolation("suite: threads must be >= 1");
}

SuiteSpec default_spec(SuiteId id) {
  SuiteSpec spec;
  spec.id = id;
  switch (id) {
    case SuiteId::FormIdentities:
      spec.trials = 8;
      spec.half_dims = {1, 2, 3, 4, 5, 6, 7, 8};
      break;
    case SuiteId::RealTheorem:
    case SuiteId::ComplexTheorem:
      spec.trials = 200;
      spec.half_dims = {1, 2, 4, 8, 10};
      break;
    case SuiteId::Lemma:
    case SuiteId::IneqReal:
      spec.trials = 500;
      spec.half_dims = {1, 2, 3, 4, 5, 6, 7, 8};
      break;
    case SuiteId::ConjFormula:
      spec.trials = 200;
      spec.half_dims = {1, 2, 3, 4, 6, 8, 12, 16};
      break;
    case SuiteId::GeneratorSanity:
      spec.trials = 60;
      spec.half_dims = {1, 2, 4, 8, 16};
      break;
  }
  return spec;
}

std::uint64_t trial_seed(std::uint64_t suite_seed, std::size_t index) { return child_seed(suite_seed, index); }

TrialResult run_trial(SuiteId id, std::uint64_t seed, std::size_t half_dim, const ToleranceConfig& tol) {
  TrialResult t;
  try {
    switch (id) {
      case SuiteId::FormIdentities:
        t = form_trial(half_dim, tol);
        break;
      case SuiteId::RealTheorem:
        t = theorem_trial<double>(GroupTarget::RealSymplectic, seed, half_dim, tol);
        break;
      case SuiteId::ComplexTheorem:
        t = theorem_trial<Complex>(GroupTarget::ComplexSymplectic, seed, half_dim, tol);
        break;
      case SuiteId::Lemma:
        t = lemma_trial(seed, half_dim, tol);
        break;
      case SuiteId::IneqReal:
        t = ineq_real_trial(seed, half_dim, tol);
        break;
      case SuiteId::ConjFormula:
        t = conj_formula_trial(seed, half_dim, tol);
        break;
      case SuiteId::GeneratorSanity:
        t = generator_sanity_trial(seed, half_dim, tol);
        break;
    }
  } catch (const NonMembershipError& e) {
    t = TrialResult{};
    t.residuals["membership"] = e.residual();
    t.note = e.what();
  } catch (const std::exception& e) {
    t = TrialResult{};
    t.note = e.what();
  }
  t.seed = seed;
  t.half_dim = half_dim;
  return t;
}

std::vector<TrialResult> run_trials(const SuiteSpec& spec) {
  spec.validate();
  std::vector<TrialResult> results(spec.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < spec.trials; i = next++) {
      results[i] = run_trial(spec.id, trial_seed(spec.seed, i), spec.half_dims[i % spec.half_dims.size()],
                             spec.tolerances);
    }
  };
  const std::size_t threads = std::min(spec.threads, spec.trials);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  return results;
}

Report run_suite(const SuiteSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<TrialResult> results = run_trials(spec);

  Report report;
  report.suite = to_string(spec.id);
  report.config = {{"trials", spec.trials},
                   {"halfDims", spec.half_dims},
                   {"seed", spec.seed},
                   {"tolerances", to_json(spec.tolerances)}};
  report.trials = results.size();
  for (const TrialResult& t : results) {
    if (t.pass) {
      ++report.passes;
    } else {
      report.failures.push_back({t.seed, t.half_dim, t.residuals, t.note});
    }
    for (const auto& [name, value] : t.residuals) {
      auto [it, inserted] = report.worst_residuals.try_emplace(name, value);
      if (!inserted) it->second = std::max(it->second, value);
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace symdet

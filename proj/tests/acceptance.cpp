// Runs the eight acceptance criteria at their stated tolerances and prints
// one PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "symdet/certificate.hpp"
#include "symdet/generators.hpp"
#include "symdet/lu.hpp"
#include "symdet/report.hpp"
#include "symdet/suites.hpp"

namespace {

using namespace symdet;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double worst(const Report& r, const std::string& key) {
  const auto it = r.worst_residuals.find(key);
  return it == r.worst_residuals.end() ? 0.0 : it->second;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string summary(const Report& r) {
  return std::to_string(r.passes) + "/" + std::to_string(r.trials) + " trials";
}

Outcome form_identities() {
  const Report r = run_suite(default_spec(SuiteId::FormIdentities));
  double max_residual = 0.0;
  for (const auto& [k, v] : r.worst_residuals) max_residual = std::max(max_residual, v);
  return {r.all_passed() && max_residual <= 1e-12, summary(r) + ", N = 1..8, max residual " + sci(max_residual)};
}

Outcome theorem(SuiteId id) {
  const SuiteSpec spec = default_spec(id);
  const Report r = run_suite(spec);
  const double det_one = worst(r, "det-one");
  const double chain = worst(r, "chain");
  const double factorization = worst(r, "factorization");
  const double gram = worst(r, "gram-exceeds-one");
  const bool pass = r.all_passed() && r.trials == 200 && det_one <= 1e-8 &&
                    std::max({chain, factorization}) <= 1e-9 && gram <= spec.tolerances.phase;
  std::ostringstream d;
  d << summary(r) << ", |det-1| " << sci(det_one) << ", factorization " << sci(factorization);
  if (id == SuiteId::RealTheorem) d << ", chain " << sci(chain);
  return {pass, d.str()};
}

Outcome lemma() {
  const Report r = run_suite(default_spec(SuiteId::Lemma));
  const bool pass = r.all_passed() && r.trials == 500 && worst(r, "lemma-sign") <= 1.0 &&
                    worst(r, "gram-sign") <= 1.0 && worst(r, "reduction") <= 1e-9 &&
                    worst(r, "gram-reduction") <= 1e-9;
  return {pass, summary(r) + ", sign violation " + sci(worst(r, "lemma-sign")) + " of allowance, reduction " +
                    sci(worst(r, "reduction")) + ", gram sign " + sci(worst(r, "gram-sign"))};
}

Outcome ineq_real() {
  const Report r = run_suite(default_spec(SuiteId::IneqReal));
  const bool pass = r.all_passed() && r.trials == 500 && worst(r, "ineq-sign") <= 1.0 &&
                    worst(r, "split-agreement") <= 1e-10;
  return {pass, summary(r) + ", negative part " + sci(worst(r, "ineq-sign")) + " of allowance, split agreement " +
                    sci(worst(r, "split-agreement"))};
}

Outcome conj_formula() {
  const Report r = run_suite(default_spec(SuiteId::ConjFormula));
  bool pass = r.all_passed() && r.trials == 200 && worst(r, "phase-error") <= 1e-8 &&
              worst(r, "modulus-error") <= 1e-8;

  int off_one = 0;
  int with_phase = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GeneratorConfig config;
    config.half_dim = 1 + seed % 8;
    config.seed = child_seed(6, seed);
    config.target = GroupTarget::ConjugateSymplectic;
    Rng rng(config.seed);
    const auto traced = generate_traced<Complex>(config, rng);
    if (std::count(traced.factors.begin(), traced.factors.end(), FactorKind::Phase) > 0) ++with_phase;
    if (std::abs(log_det(traced.matrix).value() - 1.0) > 1e-3) ++off_one;
  }
  pass = pass && with_phase == 50 && off_one >= 45;
  return {pass, summary(r) + ", phase error " + sci(worst(r, "phase-error")) + ", ||det|-1| " +
                    sci(worst(r, "modulus-error")) + ", " + std::to_string(off_one) + "/50 off 1"};
}

template <Scalar T>
double relative(T a, T b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

Outcome oracle_integrity() {
  Rng rng(7);
  double cofactor = 0.0;
  for (int i = 0; i < 100; ++i) {
    const RealMatrix r = random_gaussian<double>(rng, 4);
    cofactor = std::max(cofactor, relative(log_det(r).value(), Complex{oracle::cofactor_det(r)}));
    const ComplexMatrix c = random_gaussian<Complex>(rng, 4);
    cofactor = std::max(cofactor, relative(log_det(c).value(), oracle::cofactor_det(c)));
  }
  double product = 0.0;
  double transposed = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng.index(16);
    if (i % 2 == 0) {
      const RealMatrix a = random_gaussian<double>(rng, n);
      const RealMatrix b = random_gaussian<double>(rng, n);
      product = std::max(product, relative_difference(log_det(a * b), log_det(a) * log_det(b)));
      transposed = std::max(transposed, relative_difference(log_det(transpose(a)), log_det(a)));
    } else {
      const ComplexMatrix a = random_gaussian<Complex>(rng, n);
      const ComplexMatrix b = random_gaussian<Complex>(rng, n);
      product = std::max(product, relative_difference(log_det(a * b), log_det(a) * log_det(b)));
      transposed = std::max(transposed, relative_difference(log_det(transpose(a)), log_det(a)));
    }
  }
  const bool pass = cofactor <= 1e-12 && product <= 1e-10 && transposed <= 1e-10;
  return {pass, "cofactor " + sci(cofactor) + ", multiplicativity " + sci(product) + ", transpose " + sci(transposed)};
}

Outcome reproducibility() {
  // Impossible tolerances make every suite record failures to replay.
  ToleranceConfig strict;
  strict.form = strict.identity = strict.determinant = strict.phase = strict.split = 1e-300;
  std::size_t replayed = 0;
  std::size_t mismatched = 0;
  for (SuiteId id : all_suites()) {
    SuiteSpec spec = default_spec(id);
    spec.trials = std::min<std::size_t>(spec.trials, 40);
    spec.tolerances = strict;
    const Report r = run_suite(spec);
    for (const FailureEntry& f : r.failures) {
      const TrialResult again = run_trial(id, f.seed, f.half_dim, strict);
      ++replayed;
      if (again.pass || again.residuals != f.residuals) ++mismatched;
    }
  }

  const std::size_t threads = std::max(2u, std::thread::hardware_concurrency());
  std::size_t differing = 0;
  for (SuiteId id : all_suites()) {
    SuiteSpec spec = default_spec(id);
    spec.threads = 1;
    Report serial = run_suite(spec);
    spec.threads = threads;
    Report parallel = run_suite(spec);
    serial.elapsed_seconds = parallel.elapsed_seconds = 0.0;
    if (to_json(serial).dump() != to_json(parallel).dump()) ++differing;
  }
  const bool pass = replayed > 0 && mismatched == 0 && differing == 0;
  return {pass, std::to_string(replayed) + " failure seeds replayed, " + std::to_string(mismatched) +
                    " mismatched; 1 vs " + std::to_string(threads) + " threads: " + std::to_string(differing) +
                    " suites differ"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"form identities", form_identities},
      {"real theorem", [] { return theorem(SuiteId::RealTheorem); }},
      {"complex theorem", [] { return theorem(SuiteId::ComplexTheorem); }},
      {"lemma", lemma},
      {"real block inequality", ineq_real},
      {"conjugate symplectic formula", conj_formula},
      {"oracle integrity", oracle_integrity},
      {"reproducibility", reproducibility},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

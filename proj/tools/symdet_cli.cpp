// symdet: determinant certificates and property suites for symplectic matrices.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "symdet/certify.hpp"
#include "symdet/generators.hpp"
#include "symdet/matrix_io.hpp"
#include "symdet/report.hpp"
#include "symdet/suites.hpp"

namespace {

using namespace symdet;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// "4", "1..8" or "1,2,4,8".
std::vector<std::size_t> parse_half_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  const auto range = text.find("..");
  if (range != std::string::npos) {
    const std::size_t lo = std::stoul(text.substr(0, range));
    const std::size_t hi = std::stoul(text.substr(range + 2));
    if (lo < 1 || hi < lo) throw ContractViolation("invalid --n range '" + text + "'");
    for (std::size_t n = lo; n <= hi; ++n) dims.push_back(n);
    return dims;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    const std::size_t n = std::stoul(item, &used);
    if (used != item.size() || n < 1) throw ContractViolation("invalid --n entry '" + item + "'");
    dims.push_back(n);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return dims;
}

ToleranceConfig parse_tolerances(const std::vector<std::string>& overrides) {
  ToleranceConfig tol;
  for (const std::string& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw ContractViolation("--tol expects name=value, got '" + o + "'");
    const std::string name = o.substr(0, eq);
    std::size_t used = 0;
    const std::string value_text = o.substr(eq + 1);
    const double value = std::stod(value_text, &used);
    if (used != value_text.size()) throw ContractViolation("--tol value '" + value_text + "' is not a number");
    if (!tol.set(name, value)) throw ContractViolation("unknown tolerance '" + name + "'");
  }
  return tol;
}

GroupTarget parse_target(const std::string& name) {
  if (name == "real") return GroupTarget::RealSymplectic;
  if (name == "complex") return GroupTarget::ComplexSymplectic;
  if (name == "conjugate") return GroupTarget::ConjugateSymplectic;
  throw ContractViolation("unknown target '" + name + "' (expected real, complex or conjugate)");
}

struct CommonOptions {
  std::vector<std::string> tol;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--tol", opts.tol, "Tolerance override name=value (repeatable)");
  cmd->add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", opts.out, "Report path (default stdout)");
}

int run_suites(const std::vector<std::string>& names, const std::string& dims, std::size_t trials,
               std::uint64_t seed, std::size_t threads, const std::vector<std::uint64_t>& replay,
               const CommonOptions& opts) {
  std::vector<SuiteId> ids;
  for (const std::string& name : names) {
    if (name == "all") {
      const auto every = all_suites();
      ids.insert(ids.end(), every.begin(), every.end());
    } else {
      ids.push_back(parse_suite_id(name));
    }
  }
  const ToleranceConfig tol = parse_tolerances(opts.tol);
  std::vector<Report> reports;
  for (SuiteId id : ids) {
    SuiteSpec spec = default_spec(id);
    spec.seed = seed;
    spec.tolerances = tol;
    spec.threads = threads;
    if (!dims.empty()) spec.half_dims = parse_half_dims(dims);
    if (trials > 0) spec.trials = trials;
    if (!replay.empty()) {
      // Re-run recorded failures: one trial per seed at the first --n value.
      Report r;
      r.suite = to_string(id);
      r.config = {{"replaySeeds", replay}, {"halfDim", spec.half_dims.front()}, {"tolerances", to_json(tol)}};
      for (std::uint64_t s : replay) {
        const TrialResult t = run_trial(id, s, spec.half_dims.front(), tol);
        ++r.trials;
        if (t.pass) ++r.passes;
        else r.failures.push_back({t.seed, t.half_dim, t.residuals, t.note});
        for (const auto& [k, v] : t.residuals) {
          auto [it, inserted] = r.worst_residuals.try_emplace(k, v);
          if (!inserted) it->second = std::max(it->second, v);
        }
      }
      reports.push_back(std::move(r));
    } else {
      reports.push_back(run_suite(spec));
    }
  }
  emit_report(reports, parse_report_format(opts.format), opts.out);
  for (const Report& r : reports) {
    if (!r.all_passed()) return kExitFailure;
  }
  return 0;
}

int run_certify(const std::string& path, const std::string& mode, const CommonOptions& opts) {
  const CertifyOutcome outcome = certify_file(path, parse_certify_mode(mode), parse_tolerances(opts.tol));
  const ReportFormat format = parse_report_format(opts.format);
  (format == ReportFormat::Text ? std::cout : std::cerr) << outcome.narrative << std::flush;
  emit_report(outcome.report, format, opts.out);
  return outcome.report.all_passed() ? 0 : kExitFailure;
}

int run_generate(const std::string& target_name, std::size_t n, std::uint64_t seed, std::size_t factors,
                 const std::string& out) {
  GeneratorConfig config;
  config.half_dim = n;
  config.seed = seed;
  config.target = parse_target(target_name);
  if (factors > 0) config.num_factors = factors;
  AnyMatrix m;
  if (config.target == GroupTarget::RealSymplectic) {
    m = generate<double>(config);
  } else {
    m = generate<Complex>(config);
  }
  if (out.empty() || out == "-") {
    std::cout << std::visit([](const auto& x) { return format_matrix(x); }, m);
  } else {
    write_matrix_file(out, m);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinant certificates and property suites for symplectic matrices"};
  app.require_subcommand(1);

  CommonOptions suite_opts;
  std::vector<std::string> suite_names;
  std::string dims;
  std::size_t trials = 0;
  std::uint64_t seed = 42;
  std::size_t threads = 1;
  std::vector<std::uint64_t> replay;
  auto* suite = app.add_subcommand("suite", "Run property suites (or 'all')");
  suite->add_option("suites", suite_names, "form-identities, real-theorem, complex-theorem, lemma, ineq-real, "
                                           "conj-formula, generator-sanity, all")
      ->required();
  suite->add_option("--n", dims, "Half dimensions: N, A..B or N1,N2,...");
  suite->add_option("--trials", trials, "Trial count (default per suite)");
  suite->add_option("--seed", seed, "Suite seed");
  suite->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  suite->add_option("--replay", replay, "Re-run the given recorded trial seeds at the first --n value");
  add_common(suite, suite_opts);

  CommonOptions certify_opts;
  std::string certify_path;
  std::string certify_mode = "auto";
  auto* certify = app.add_subcommand("certify", "Certify det(A) = 1 (or the conjugate phase) for a matrix file");
  certify->add_option("file", certify_path, "Matrix text file")->required();
  certify->add_option("--mode", certify_mode, "auto, real, complex or conjugate")
      ->check(CLI::IsMember({"auto", "real", "complex", "conjugate"}));
  add_common(certify, certify_opts);

  CommonOptions formula_opts;
  std::string formula_path;
  auto* formula = app.add_subcommand("formula", "Evaluate the conjugate symplectic determinant phase formula");
  formula->add_option("file", formula_path, "Matrix text file")->required();
  add_common(formula, formula_opts);

  std::string gen_target = "real";
  std::size_t gen_n = 2;
  std::uint64_t gen_seed = 0;
  std::size_t gen_factors = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "Write a random group element in matrix text format");
  gen->add_option("--target", gen_target, "real, complex or conjugate")
      ->check(CLI::IsMember({"real", "complex", "conjugate"}));
  gen->add_option("--n", gen_n, "Half dimension N")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("--factors", gen_factors, "Number of elementary factors");
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*suite) return run_suites(suite_names, dims, trials, seed, threads, replay, suite_opts);
    if (*certify) return run_certify(certify_path, certify_mode, certify_opts);
    if (*formula) return run_certify(formula_path, "conjugate", formula_opts);
    if (*gen) return run_generate(gen_target, gen_n, gen_seed, gen_factors, gen_out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

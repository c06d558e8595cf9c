#include "symdet/certify.hpp"

#include <cmath>
#include <sstream>

#include "symdet/certificate.hpp"
#include "symdet/lu.hpp"
#include "symdet/symplectic.hpp"

namespace symdet {

namespace {

std::string num(double x) { return nlohmann::json(x).dump(); }

std::string format_complex(Complex z) { return "(" + num(z.real()) + ", " + num(z.imag()) + ")"; }

Report single_report(const std::string& label, CertifyMode mode, const ToleranceConfig& tol) {
  Report r;
  r.suite = "certify";
  r.config = {{"path", label}, {"mode", to_string(mode)}, {"tolerances", to_json(tol)}};
  r.trials = 1;
  return r;
}

void finish(Report& r, bool pass, std::size_t half_dim, const std::map<std::string, double>& residuals,
            const std::string& note) {
  r.worst_residuals = residuals;
  if (pass) {
    r.passes = 1;
  } else {
    r.failures.push_back({0, half_dim, residuals, note});
  }
}

template <Scalar T>
CertifyOutcome certify_theorem(const Matrix<T>& a, CertifyMode mode, const ToleranceConfig& tol,
                               const std::string& label) {
  const std::size_t n = a.size() / 2;
  CertifyOutcome out{single_report(label, mode, tol), ""};
  std::ostringstream text;
  try {
    const Certificate cert = theorem_certificate(a, tol);
    text << "certificate (" << to_string(cert.mode) << ", N = " << cert.half_dim << ")\n";
    std::map<std::string, double> residuals;
    for (const auto& step : cert.narrative) {
      text << (step.passed ? "  [pass] " : "  [FAIL] ") << step.name << ": " << step.statement << '\n'
           << "         lhs = " << format_logdet(step.lhs) << "  rhs = " << format_logdet(step.rhs) << '\n'
           << "         residual = " << num(step.residual) << "  tolerance = " << num(step.tolerance) << '\n';
      residuals[step.name] = step.residual;
    }
    text << "det(A) = " << format_logdet(cert.det_a) << '\n';
    text << (cert.pass ? "verdict: certified, det(A) = 1\n" : "verdict: NOT certified\n");
    finish(out.report, cert.pass, n, residuals, cert.pass ? "" : "certificate failed");
  } catch (const NonMembershipError& e) {
    text << "rejected: " << e.what() << '\n';
    finish(out.report, false, n, {{"membership", e.residual()}, {"membership-bound", e.bound()}}, e.what());
  }
  out.narrative = text.str();
  return out;
}

CertifyOutcome certify_conjugate(const ComplexMatrix& a, const ToleranceConfig& tol, const std::string& label) {
  const std::size_t n = a.size() / 2;
  CertifyOutcome out{single_report(label, CertifyMode::Conjugate, tol), ""};
  std::ostringstream text;
  try {
    const FormulaCheck check = check_conj_formula(a, tol);
    text << "conjugate symplectic determinant (N = " << n << ")\n"
         << "  membership residual ||A^* J A - J||_F / ||J||_F = " << num(check.membership_residual) << '\n'
         << "  formula  det(M)/|det(M)|, M = C^2 + D^2 - i[C, D]: " << format_complex(check.formula_phase)
         << "  arg = " << num(std::arg(check.formula_phase)) << '\n'
         << "  LU oracle det(A) = " << format_logdet(check.oracle) << "  arg = " << num(std::arg(check.oracle.phase))
         << '\n'
         << "  phase error = " << num(check.phase_error) << "  tolerance = " << num(tol.phase) << '\n'
         << "  ||det(A)| - 1| = " << num(check.modulus_error) << "  tolerance = " << num(tol.determinant) << '\n'
         << (check.pass ? "verdict: formula agrees with oracle\n" : "verdict: formula DISAGREES with oracle\n");
    finish(out.report, check.pass, n,
           {{"phase-error", check.phase_error},
            {"modulus-error", check.modulus_error},
            {"membership", check.membership_residual}},
           check.pass ? "" : "formula/oracle mismatch");
  } catch (const NonMembershipError& e) {
    text << "rejected: " << e.what() << '\n';
    finish(out.report, false, n, {{"membership", e.residual()}, {"membership-bound", e.bound()}}, e.what());
  } catch (const FormulaInconclusiveError& e) {
    text << "inconclusive: " << e.what() << '\n';
    finish(out.report, false, n, {{"log-det-m", e.log_magnitude()}}, e.what());
  }
  out.narrative = text.str();
  return out;
}

}  // namespace

CertifyMode parse_certify_mode(const std::string& name) {
  if (name == "auto") return CertifyMode::Auto;
  if (name == "real") return CertifyMode::RealSymplectic;
  if (name == "complex") return CertifyMode::ComplexSymplectic;
  if (name == "conjugate") return CertifyMode::Conjugate;
  throw ContractViolation("unknown certify mode '" + name + "' (expected auto, real, complex or conjugate)");
}

std::string to_string(CertifyMode m) {
  switch (m) {
    case CertifyMode::Auto:
      return "auto";
    case CertifyMode::RealSymplectic:
      return "real";
    case CertifyMode::ComplexSymplectic:
      return "complex";
    case CertifyMode::Conjugate:
      return "conjugate";
  }
  return "unknown";
}

std::string format_logdet(const LogDet& d) {
  if (d.is_zero()) return "0";
  if (std::abs(d.log_magnitude) < 700.0) return format_complex(d.value());
  return "exp(" + num(d.log_magnitude) + ") * " + format_complex(d.phase);
}

CertifyOutcome certify_matrix(const AnyMatrix& a, CertifyMode mode, const ToleranceConfig& tol,
                              const std::string& label) {
  const std::size_t dim = std::visit([](const auto& m) { return m.size(); }, a);
  if (dim % 2 != 0) throw ContractViolation("certify: matrix dimension must be even, got " + std::to_string(dim));

  if (mode == CertifyMode::Auto) {
    mode = std::holds_alternative<RealMatrix>(a) ? CertifyMode::RealSymplectic : CertifyMode::ComplexSymplectic;
  }
  switch (mode) {
    case CertifyMode::RealSymplectic:
      if (!std::holds_alternative<RealMatrix>(a)) {
        throw ContractViolation("certify: real mode needs a real (R) matrix");
      }
      return certify_theorem(std::get<RealMatrix>(a), mode, tol, label);
    case CertifyMode::ComplexSymplectic:
      return certify_theorem(std::visit([](const auto& m) { return to_complex(m); }, a), mode, tol, label);
    case CertifyMode::Conjugate:
      return certify_conjugate(std::visit([](const auto& m) { return to_complex(m); }, a), tol, label);
    case CertifyMode::Auto:
      break;
  }
  throw ContractViolation("certify: unresolved mode");
}

CertifyOutcome certify_file(const std::string& path, CertifyMode mode, const ToleranceConfig& tol) {
  return certify_matrix(read_matrix_file(path), mode, tol, path);
}

}  // namespace symdet

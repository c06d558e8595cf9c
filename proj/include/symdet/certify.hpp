#pragma once

#include <string>

#include "symdet/logdet.hpp"
#include "symdet/matrix_io.hpp"
#include "symdet/report.hpp"
#include "symdet/tolerances.hpp"

namespace symdet {

enum class CertifyMode {
  /// Real-symplectic certificate for R files, complex-symplectic for C files.
  Auto,
  RealSymplectic,
  ComplexSymplectic,
  /// Conjugate symplectic: determinant phase via the block formula, checked against LU.
  Conjugate,
};

CertifyMode parse_certify_mode(const std::string& name);
std::string to_string(CertifyMode m);

struct CertifyOutcome {
  Report report;
  /// Human-readable transcript: every identity with both sides and its residual.
  std::string narrative;
};

/// Never throws for non-membership; a rejected matrix yields a failing report.
CertifyOutcome certify_matrix(const AnyMatrix& a, CertifyMode mode, const ToleranceConfig& tol,
                              const std::string& label);

/// Throws ParseError when the file cannot be read or parsed.
CertifyOutcome certify_file(const std::string& path, CertifyMode mode, const ToleranceConfig& tol = {});

std::string format_logdet(const LogDet& d);

}  // namespace symdet

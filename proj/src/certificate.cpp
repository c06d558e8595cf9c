#include "symdet/certificate.hpp"

#include <cmath>
#include <limits>

#include "symdet/lu.hpp"
#include "symdet/symplectic.hpp"

namespace symdet {

std::string to_string(TheoremMode m) {
  return m == TheoremMode::RealSymplectic ? "real-symplectic" : "complex-symplectic";
}

double Certificate::residual(const std::string& name) const {
  for (const auto& step : narrative) {
    if (step.name == name) return step.residual;
  }
  throw std::out_of_range("certificate has no identity named '" + name + "'");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void record(Certificate& cert, std::string name, std::string statement, const LogDet& lhs, const LogDet& rhs,
            double residual, double tolerance) {
  const bool ok = residual <= tolerance;
  cert.narrative.push_back({std::move(name), std::move(statement), lhs, rhs, residual, tolerance, ok});
}

double positive_real_gap(const LogDet& d) {
  return d.is_zero() ? kInf : std::abs(d.phase - Complex{1.0, 0.0});
}

template <Scalar T>
Certificate certify(const Matrix<T>& a, const ToleranceConfig& tol) {
  constexpr bool complex_mode = is_complex_v<T>;
  const std::size_t n = detail::half_dim(a.size(), "theorem_certificate");

  const double membership = symplectic_residual(a);
  const double bound = membership_bound(a, tol.membership);
  if (!(membership <= bound)) throw NonMembershipError("symplectic", membership, bound);

  Certificate cert;
  cert.mode = complex_mode ? TheoremMode::ComplexSymplectic : TheoremMode::RealSymplectic;
  cert.half_dim = n;
  record(cert, "membership", "||A^T J A - J||_F / ||J||_F within bound", LogDet::from_value(membership),
         LogDet::from_value(bound), membership, bound);

  cert.det_a = log_det(a);
  record(cert, "det-unimodular", "det(A)^2 = 1", cert.det_a * cert.det_a, LogDet::one(),
         relative_difference(cert.det_a * cert.det_a, LogDet::one()), tol.determinant);

  // A^T A + I for real A, A^* A + I for complex A.
  const Matrix<T> gram = conj_transpose(a) * a + Matrix<T>::identity(a.size());
  cert.lhs_det = log_det(gram);
  const double gram_gap = cert.lhs_det.log_magnitude > 0.0 ? positive_real_gap(cert.lhs_det) : kInf;
  record(cert, "gram-exceeds-one", complex_mode ? "det(A^* A + I) > 1" : "det(A^T A + I) > 1", cert.lhs_det,
         LogDet::one(), gram_gap, tol.identity);

  const BlockPair<T> pair =
      block_pair(a, complex_mode ? PairVariant::ComplexSymplectic : PairVariant::RealSymplectic);
  cert.auxiliary_det = log_det(embed_pair(pair));
  const LogDet factored = cert.det_a.conj() * cert.auxiliary_det;
  record(cert, "factorization",
         complex_mode ? "det(A^* A + I) = conj(det A) det([[C, D], [-conj D, conj C]])"
                      : "det(A^T A + I) = det(A) det([[C, D], [-D, C]])",
         cert.lhs_det, factored, relative_difference(cert.lhs_det, factored), tol.identity);

  if constexpr (!complex_mode) {
    const SplitDet split = unitary_split_det(pair);
    record(cert, "split-conjugate", "det(C - iD) = conj(det(C + iD))", split.minus, split.plus.conj(),
           relative_difference(split.minus, split.plus.conj()), tol.identity);
    const LogDet product = split.plus * split.minus;
    record(cert, "unitary-split", "det([[C, D], [-D, C]]) = det(C + iD) det(C - iD)", cert.auxiliary_det, product,
           relative_difference(cert.auxiliary_det, product), tol.identity);
    const LogDet chain = cert.det_a * split.plus * split.plus.conj();
    record(cert, "chain", "det(A^T A + I) = det(A) |det(C + iD)|^2", cert.lhs_det, chain,
           relative_difference(cert.lhs_det, chain), tol.identity);
  } else {
    record(cert, "block-positive", "det([[C, D], [-conj D, conj C]]) > 0", cert.auxiliary_det, LogDet::one(),
           positive_real_gap(cert.auxiliary_det), tol.identity);
  }

  record(cert, "det-one", "det(A) = 1", cert.det_a, LogDet::one(),
         std::abs(cert.det_a.value() - Complex{1.0, 0.0}), tol.determinant);

  cert.pass = true;
  for (const auto& step : cert.narrative) cert.pass = cert.pass && step.passed;
  return cert;
}

}  // namespace

Certificate theorem_certificate(const RealMatrix& a, const ToleranceConfig& tol) { return certify(a, tol); }
Certificate theorem_certificate(const ComplexMatrix& a, const ToleranceConfig& tol) { return certify(a, tol); }

ComplexMatrix phase_formula_matrix(const ComplexMatrix& a) {
  const BlockPair<Complex> p = block_pair(a, PairVariant::ConjugateSymplectic);
  const ComplexMatrix commutator = p.c * p.d - p.d * p.c;
  return add_scaled(p.c * p.c + p.d * p.d, commutator, Complex{0.0, -1.0});
}

Complex conj_symplectic_det_formula(const ComplexMatrix& a, const ToleranceConfig& tol) {
  const double membership = conjugate_symplectic_residual(a);
  const double bound = membership_bound(a, tol.membership);
  if (!(membership <= bound)) throw NonMembershipError("conjugate symplectic", membership, bound);
  const LogDet det_m = log_det(phase_formula_matrix(a));
  if (det_m.is_zero() || det_m.log_magnitude < std::log(tol.formula_floor)) {
    throw FormulaInconclusiveError(det_m.log_magnitude);
  }
  return det_m.phase;
}

Complex conj_symplectic_det_formula(const RealMatrix& a, const ToleranceConfig& tol) {
  return conj_symplectic_det_formula(to_complex(a), tol);
}

FormulaCheck check_conj_formula(const ComplexMatrix& a, const ToleranceConfig& tol) {
  FormulaCheck check;
  check.membership_residual = conjugate_symplectic_residual(a);
  check.formula_phase = conj_symplectic_det_formula(a, tol);
  check.oracle = log_det(a);
  check.phase_error = phase_angle(check.formula_phase, check.oracle.phase);
  check.modulus_error = std::abs(check.oracle.magnitude() - 1.0);
  check.pass = check.phase_error <= tol.phase && check.modulus_error <= tol.determinant;
  return check;
}

}  // namespace symdet

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symdet/logdet.hpp"
#include "symdet/matrix.hpp"
#include "symdet/tolerances.hpp"

namespace symdet {

enum class TheoremMode { RealSymplectic, ComplexSymplectic };

std::string to_string(TheoremMode m);

/// One line of a certificate: an identity between two determinants (or a
/// determinant and a reference value) and how far apart they came out.
struct CheckedIdentity {
  std::string name;
  std::string statement;
  LogDet lhs;
  LogDet rhs;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Numerical transcript of the determinant-one argument for one matrix.
struct Certificate {
  TheoremMode mode = TheoremMode::RealSymplectic;
  std::size_t half_dim = 0;
  LogDet det_a;          ///< det(A)
  LogDet auxiliary_det;  ///< det(A + A^{-T}) (or A + A^{-*}) via its block pair
  LogDet lhs_det;        ///< det(A^T A + I) (or A^* A + I)
  std::vector<CheckedIdentity> narrative;
  bool pass = false;

  /// Residual recorded under `name`; throws std::out_of_range when absent.
  double residual(const std::string& name) const;
};

/// Runs the membership predicate, then checks in order:
///   det(A)^2 = 1, det(A^T A + I) > 1, the block factorization of
///   det(A^T A + I), the C +/- iD split (real mode) or the nonnegativity of the
///   conjugated block determinant (complex mode), and finally det(A) = 1.
/// Throws NonMembershipError for inputs outside Sp(2N).
Certificate theorem_certificate(const RealMatrix& a, const ToleranceConfig& tol = {});
Certificate theorem_certificate(const ComplexMatrix& a, const ToleranceConfig& tol = {});

/// The phase formula could not be evaluated because det(M) is numerically zero.
class FormulaInconclusiveError : public std::runtime_error {
 public:
  explicit FormulaInconclusiveError(double log_magnitude)
      : std::runtime_error("phase formula inconclusive: log|det(M)| = " + std::to_string(log_magnitude)),
        log_magnitude_(log_magnitude) {}
  double log_magnitude() const { return log_magnitude_; }

 private:
  double log_magnitude_;
};

/// M = C^2 + D^2 - i[C, D] with C = A11 + A22, D = A12 - A21.
ComplexMatrix phase_formula_matrix(const ComplexMatrix& a);

/// det(A) for conjugate symplectic A, computed as det(M) / |det(M)|.
/// Throws NonMembershipError when A^* J A != J, FormulaInconclusiveError when det(M) ~ 0.
Complex conj_symplectic_det_formula(const ComplexMatrix& a, const ToleranceConfig& tol = {});
Complex conj_symplectic_det_formula(const RealMatrix& a, const ToleranceConfig& tol = {});

/// Formula result side by side with the LU determinant of A.
struct FormulaCheck {
  Complex formula_phase;
  LogDet oracle;            ///< LU determinant of A
  double phase_error = 0.0; ///< angle between formula_phase and oracle.phase
  double modulus_error = 0.0;  ///< ||det(A)| - 1|
  double membership_residual = 0.0;
  bool pass = false;
};

FormulaCheck check_conj_formula(const ComplexMatrix& a, const ToleranceConfig& tol = {});

}  // namespace symdet

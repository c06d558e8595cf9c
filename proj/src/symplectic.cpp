#include "symdet/symplectic.hpp"

#include <algorithm>
#include <cmath>

namespace symdet {

std::string to_string(PairVariant v) {
  switch (v) {
    case PairVariant::RealSymplectic:
      return "real-symplectic";
    case PairVariant::ComplexSymplectic:
      return "complex-symplectic";
    case PairVariant::ConjugateSymplectic:
      return "conjugate-symplectic";
  }
  return "unknown";
}

LogDet lemma_det(const ComplexMatrix& c, const ComplexMatrix& d) {
  if (c.size() != d.size()) throw ContractViolation("lemma_det: C and D differ in dimension");
  return log_det(embed_pair(BlockPair<Complex>{c, d, PairVariant::ComplexSymplectic}));
}

LemmaProbe lemma_reduction(const ComplexMatrix& c, const ComplexMatrix& d) {
  if (c.size() != d.size()) throw ContractViolation("lemma_reduction: C and D differ in dimension");
  const std::size_t n = c.size();
  LemmaProbe probe{c, d, std::nullopt, lemma_det(c, d), LogDet::zero(), LogDet::zero(), LogDet::zero()};

  const LuFactorization<Complex> lu_c = lu_decompose(c);
  probe.det_c = log_det(lu_c);
  if (lu_c.singular) return probe;

  const ComplexMatrix e = solve(lu_c, d);
  const ComplexMatrix identity = ComplexMatrix::identity(n);
  probe.reduced_det = log_det(embed_pair(BlockPair<Complex>{identity, e, PairVariant::ComplexSymplectic}));
  probe.gram_det = log_det(conjugate(e) * e + identity);

  probe.ce_residual = frobenius_norm(c * e - d) / (frobenius_norm(c) * frobenius_norm(e) + frobenius_norm(d));
  probe.reduction_residual = relative_difference(probe.lemma_det, probe.det_c * probe.det_c.conj() * probe.reduced_det);
  probe.gram_residual = relative_difference(probe.reduced_det, probe.gram_det);
  probe.e = e;
  return probe;
}

double nonnegativity_violation(const LogDet& det, double rel, double abs) {
  if (det.is_zero()) return 0.0;
  const double mag = det.magnitude();
  const double off_axis = std::abs(det.phase.imag());
  const double negative = std::max(0.0, -det.phase.real());
  return mag * std::max(off_axis, negative) / (rel * mag + abs);
}

}  // namespace symdet

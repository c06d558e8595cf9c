#include "symdet/generators.hpp"

namespace symdet {

std::string to_string(GroupTarget t) {
  switch (t) {
    case GroupTarget::RealSymplectic:
      return "real-symplectic";
    case GroupTarget::ComplexSymplectic:
      return "complex-symplectic";
    case GroupTarget::ConjugateSymplectic:
      return "conjugate-symplectic";
  }
  return "unknown";
}

std::string to_string(FactorKind f) {
  switch (f) {
    case FactorKind::ShearLower:
      return "shear-lower";
    case FactorKind::ShearUpper:
      return "shear-upper";
    case FactorKind::DiagBlock:
      return "diag-block";
    case FactorKind::FormJ:
      return "form-j";
    case FactorKind::Phase:
      return "phase";
  }
  return "unknown";
}

void GeneratorConfig::validate() const {
  if (half_dim < 1) throw ContractViolation("generator: half_dim must be >= 1");
  if (schedule.empty() && num_factors < 1) throw ContractViolation("generator: num_factors must be >= 1");
  if (!(factor_scale > 0.0)) throw ContractViolation("generator: factor_scale must be > 0");
  if (!(condition_cap > 1.0)) throw ContractViolation("generator: condition_cap must be > 1");
  for (FactorKind f : schedule) {
    if (f == FactorKind::Phase && target != GroupTarget::ConjugateSymplectic) {
      throw ContractViolation("generator: phase factors require the conjugate symplectic target");
    }
  }
}

}  // namespace symdet

#pragma once

#include <string>

namespace symdet {

/// Thresholds shared by the membership predicates, certificates and suites.
struct ToleranceConfig {
  /// Group membership: residual <= membership * max(1, ||A||_F^2 / 2N).
  double membership = 1e-8;
  /// Relative error allowed in determinant identities.
  double identity = 1e-9;
  /// |det(A) - 1| (and ||det(A)| - 1| for conjugate symplectic A).
  double determinant = 1e-8;
  /// Angular agreement between two determinant phases, radians.
  double phase = 1e-8;
  /// |det(M)| below this makes the phase formula inconclusive.
  double formula_floor = 1e-200;
  /// Exact identities of J.
  double form = 1e-12;
  /// det([[C, D], [-D, C]]) against |det(C + iD)|^2, and its sign relative to the Hadamard bound.
  double split = 1e-10;
  /// Sign test for det([[C, D], [-conj D, conj C]]): relative part and absolute floor.
  double lemma = 1e-9;
  double lemma_floor = 1e-12;
  /// Generated matrices: membership residual bound before any certificate runs.
  double generator = 1e-9;

  /// Sets a field by name; returns false for an unknown name.
  bool set(const std::string& name, double value);
};

}  // namespace symdet

#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "symdet/matrix.hpp"

namespace symdet {

/// Determinant held as exp(log_magnitude) * phase, |phase| == 1.
/// A singular determinant has log_magnitude == -inf and phase == 1.
struct LogDet {
  double log_magnitude = 0.0;
  Complex phase{1.0, 0.0};

  static LogDet one() { return {}; }
  static LogDet zero() { return {-std::numeric_limits<double>::infinity(), {1.0, 0.0}}; }

  static LogDet from_value(Complex value) {
    const double mag = std::abs(value);
    if (mag == 0.0) return zero();
    return {std::log(mag), value / mag};
  }

  bool is_zero() const { return std::isinf(log_magnitude) && log_magnitude < 0; }

  /// May overflow to inf or underflow to 0 when the magnitude is not representable.
  Complex value() const {
    if (is_zero()) return {0.0, 0.0};
    return std::exp(log_magnitude) * phase;
  }

  double magnitude() const { return is_zero() ? 0.0 : std::exp(log_magnitude); }

  /// Accumulate one factor; the phase is renormalized so drift cannot build up.
  void accumulate(Complex factor) {
    const double mag = std::abs(factor);
    if (mag == 0.0) {
      *this = zero();
      return;
    }
    if (is_zero()) return;
    log_magnitude += std::log(mag);
    phase *= factor / mag;
    phase /= std::abs(phase);
  }

  LogDet conj() const { return {log_magnitude, std::conj(phase)}; }

  friend LogDet operator*(const LogDet& a, const LogDet& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    Complex p = a.phase * b.phase;
    p /= std::abs(p);
    return {a.log_magnitude + b.log_magnitude, p};
  }

  friend LogDet operator/(const LogDet& a, const LogDet& b) {
    if (b.is_zero()) throw ContractViolation("LogDet: division by a zero determinant");
    if (a.is_zero()) return zero();
    Complex p = a.phase / b.phase;
    p /= std::abs(p);
    return {a.log_magnitude - b.log_magnitude, p};
  }
};

/// |x - y| / max(|x|, |y|), evaluated without leaving log space.
/// Two zero determinants compare equal; zero against nonzero gives 1.
inline double relative_difference(const LogDet& x, const LogDet& y) {
  if (x.is_zero() && y.is_zero()) return 0.0;
  if (x.is_zero() || y.is_zero()) return 1.0;
  const LogDet& big = x.log_magnitude >= y.log_magnitude ? x : y;
  const LogDet& small = x.log_magnitude >= y.log_magnitude ? y : x;
  const Complex ratio = std::exp(small.log_magnitude - big.log_magnitude) * (small.phase / big.phase);
  return std::abs(ratio - Complex{1.0, 0.0});
}

/// Absolute angle in [0, pi] between two unit-modulus phases.
inline double phase_angle(Complex a, Complex b) {
  return std::abs(std::arg(a * std::conj(b)));
}

}  // namespace symdet

#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "symdet/logdet.hpp"
#include "symdet/matrix.hpp"

namespace symdet {

/// Raised by solve() when the factorization has an exactly zero pivot.
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// P * A = L * U with L unit lower triangular. L and U share one compact
/// matrix: strictly-lower part holds L's multipliers, upper part holds U.
/// perm[i] is the source row of A that landed in row i.
template <Scalar T>
struct LuFactorization {
  Matrix<T> packed;
  std::vector<std::size_t> perm;
  std::size_t swap_count = 0;
  bool singular = false;

  std::size_t size() const { return packed.size(); }

  Matrix<T> lower() const {
    const std::size_t n = size();
    Matrix<T> l = Matrix<T>::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) l(i, j) = packed(i, j);
    return l;
  }

  Matrix<T> upper() const {
    const std::size_t n = size();
    Matrix<T> u(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) u(i, j) = packed(i, j);
    return u;
  }

  /// Rows of `a` reordered by perm.
  Matrix<T> permute_rows(const Matrix<T>& a) const {
    const std::size_t n = size();
    Matrix<T> pa(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) pa(i, j) = a(perm[i], j);
    return pa;
  }
};

/// Gaussian elimination with partial pivoting. The pivot is the entry of
/// largest modulus; ties go to the lowest row index. An all-zero pivot column
/// marks the factorization singular and elimination continues past it.
template <Scalar T>
LuFactorization<T> lu_decompose(const Matrix<T>& a) {
  const std::size_t n = a.size();
  LuFactorization<T> f{a, std::vector<std::size_t>(n), 0, false};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  Matrix<T>& m = f.packed;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(m(i, k));
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best == 0.0) {
      f.singular = true;
      continue;
    }
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      std::swap(f.perm[k], f.perm[pivot]);
      ++f.swap_count;
    }
    const T inv_pivot = T{1} / m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T factor = m(i, k) * inv_pivot;
      m(i, k) = factor;
      if (factor == T{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return f;
}

/// Documented reconstruction constant: ||P A - L U||_F <= kLuResidualConstant * n * eps * ||A||_F
/// holds for the modest growth factors seen on non-adversarial inputs.
inline constexpr double kLuResidualConstant = 16.0;

template <Scalar T>
LogDet log_det(const LuFactorization<T>& f) {
  if (f.singular) return LogDet::zero();
  LogDet d;
  if (f.swap_count % 2 == 1) d.phase = -1.0;
  for (std::size_t i = 0; i < f.size(); ++i) d.accumulate(f.packed(i, i));
  return d;
}

template <Scalar T>
LogDet log_det(const Matrix<T>& a) {
  return log_det(lu_decompose(a));
}

/// Solves A X = rhs column by column.
template <Scalar T>
Matrix<T> solve(const LuFactorization<T>& f, const Matrix<T>& rhs) {
  if (f.singular) throw SingularMatrixError("solve: factorization is singular");
  const std::size_t n = f.size();
  if (rhs.size() != n) throw ContractViolation("solve: right-hand side dimension mismatch");
  Matrix<T> x = f.permute_rows(rhs);
  const Matrix<T>& m = f.packed;
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 1; i < n; ++i) {
      T s = x(i, col);
      for (std::size_t k = 0; k < i; ++k) s -= m(i, k) * x(k, col);
      x(i, col) = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      T s = x(ii, col);
      for (std::size_t k = ii + 1; k < n; ++k) s -= m(ii, k) * x(k, col);
      x(ii, col) = s / m(ii, ii);
    }
  }
  return x;
}

template <Scalar T>
Matrix<T> inverse(const Matrix<T>& a) {
  return solve(lu_decompose(a), Matrix<T>::identity(a.size()));
}

}  // namespace symdet

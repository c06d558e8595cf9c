#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "symdet/logdet.hpp"
#include "symdet/lu.hpp"
#include "symdet/matrix.hpp"
#include "symdet/tolerances.hpp"

namespace symdet {

/// Input failed a group-membership predicate.
class NonMembershipError : public std::runtime_error {
 public:
  NonMembershipError(const std::string& group, double residual, double bound)
      : std::runtime_error("matrix is not " + group + ": residual " + std::to_string(residual) +
                           " exceeds bound " + std::to_string(bound)),
        residual_(residual),
        bound_(bound) {}
  double residual() const { return residual_; }
  double bound() const { return bound_; }

 private:
  double residual_;
  double bound_;
};

namespace detail {
inline std::size_t half_dim(std::size_t n, const char* op) {
  if (n % 2 != 0) throw ContractViolation(std::string(op) + ": dimension must be even, got " + std::to_string(n));
  return n / 2;
}
}  // namespace detail

/// J = [[O, I_N], [-I_N, O]].
template <Scalar T>
Matrix<T> form_matrix(std::size_t half_dim) {
  Matrix<T> j(2 * half_dim);
  for (std::size_t i = 0; i < half_dim; ++i) {
    j(i, half_dim + i) = T{1};
    j(half_dim + i, i) = T{-1};
  }
  return j;
}

/// ||A^T J A - J||_F / ||J||_F
template <Scalar T>
double symplectic_residual(const Matrix<T>& a) {
  const std::size_t n = detail::half_dim(a.size(), "symplectic_residual");
  const Matrix<T> j = form_matrix<T>(n);
  return frobenius_norm(transpose(a) * j * a - j) / frobenius_norm(j);
}

/// ||A^* J A - J||_F / ||J||_F
template <Scalar T>
double conjugate_symplectic_residual(const Matrix<T>& a) {
  const std::size_t n = detail::half_dim(a.size(), "conjugate_symplectic_residual");
  const Matrix<T> j = form_matrix<T>(n);
  return frobenius_norm(conj_transpose(a) * j * a - j) / frobenius_norm(j);
}

/// Admissible residual for `a`: the rounding error of A^T J A grows with ||A||_F^2.
template <Scalar T>
double membership_bound(const Matrix<T>& a, double tol) {
  const double norm = frobenius_norm(a);
  return tol * std::max(1.0, norm * norm / static_cast<double>(a.size()));
}

template <Scalar T>
bool is_symplectic(const Matrix<T>& a, double tol) {
  return symplectic_residual(a) <= membership_bound(a, tol);
}

template <Scalar T>
bool is_conjugate_symplectic(const Matrix<T>& a, double tol) {
  return conjugate_symplectic_residual(a) <= membership_bound(a, tol);
}

template <Scalar T>
struct BlockQuad {
  Matrix<T> a11, a12, a21, a22;
};

template <Scalar T>
BlockQuad<T> split_blocks(const Matrix<T>& a) {
  const std::size_t n = detail::half_dim(a.size(), "split_blocks");
  BlockQuad<T> q{Matrix<T>(n), Matrix<T>(n), Matrix<T>(n), Matrix<T>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      q.a11(i, j) = a(i, j);
      q.a12(i, j) = a(i, n + j);
      q.a21(i, j) = a(n + i, j);
      q.a22(i, j) = a(n + i, n + j);
    }
  }
  return q;
}

template <Scalar T>
Matrix<T> assemble_blocks(const BlockQuad<T>& q) {
  const std::size_t n = q.a11.size();
  if (q.a12.size() != n || q.a21.size() != n || q.a22.size() != n) {
    throw ContractViolation("assemble_blocks: blocks differ in dimension");
  }
  Matrix<T> a(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = q.a11(i, j);
      a(i, n + j) = q.a12(i, j);
      a(n + i, j) = q.a21(i, j);
      a(n + i, n + j) = q.a22(i, j);
    }
  }
  return a;
}

/// J A J^{-1}, formed blockwise as [[A22, -A21], [-A12, A11]].
template <Scalar T>
Matrix<T> j_conjugate(const Matrix<T>& a) {
  const BlockQuad<T> q = split_blocks(a);
  return assemble_blocks(BlockQuad<T>{q.a22, -q.a21, -q.a12, q.a11});
}

/// Which block combination produced a (C, D) pair.
enum class PairVariant {
  /// C = A11 + A22, D = A12 - A21, embedded as [[C, D], [-D, C]].
  RealSymplectic,
  /// C = A11 + conj(A22), D = A12 - conj(A21), embedded as [[C, D], [-conj(D), conj(C)]].
  ComplexSymplectic,
  /// Same combination as RealSymplectic, for A^* J A = J.
  ConjugateSymplectic,
};

std::string to_string(PairVariant v);

template <Scalar T>
struct BlockPair {
  Matrix<T> c;
  Matrix<T> d;
  PairVariant variant = PairVariant::RealSymplectic;
};

template <Scalar T>
BlockPair<T> block_pair(const Matrix<T>& a, PairVariant variant) {
  const BlockQuad<T> q = split_blocks(a);
  if (variant == PairVariant::ComplexSymplectic) {
    if constexpr (!is_complex_v<T>) {
      throw ContractViolation("block_pair: complex-symplectic variant requires a complex matrix");
    } else {
      return {q.a11 + conjugate(q.a22), q.a12 - conjugate(q.a21), variant};
    }
  }
  return {q.a11 + q.a22, q.a12 - q.a21, variant};
}

template <Scalar T>
Matrix<T> embed_pair(const BlockPair<T>& p) {
  if (p.c.size() != p.d.size()) throw ContractViolation("embed_pair: C and D differ in dimension");
  if (p.variant == PairVariant::ComplexSymplectic) {
    return assemble_blocks(BlockQuad<T>{p.c, p.d, -conjugate(p.d), conjugate(p.c)});
  }
  return assemble_blocks(BlockQuad<T>{p.c, p.d, -p.d, p.c});
}

struct SplitDet {
  LogDet plus;   ///< det(C + iD)
  LogDet minus;  ///< det(C - iD)
};

/// det(C + iD) and det(C - iD) for [[C, D], [-D, C]]; their product is the
/// determinant of the embedded 2N x 2N matrix.
template <Scalar T>
SplitDet unitary_split_det(const BlockPair<T>& p) {
  if (p.variant == PairVariant::ComplexSymplectic) {
    throw ContractViolation("unitary_split_det: pair must be [[C, D], [-D, C]]-shaped");
  }
  const ComplexMatrix c = to_complex(p.c);
  const ComplexMatrix d = to_complex(p.d);
  const Complex i{0.0, 1.0};
  return {log_det(add_scaled(c, d, i)), log_det(add_scaled(c, d, -i))};
}

/// det([[C, D], [-conj(D), conj(C)]]), which is real and nonnegative.
LogDet lemma_det(const ComplexMatrix& c, const ComplexMatrix& d);

/// Block reduction of the nonnegativity argument for invertible C.
struct LemmaProbe {
  ComplexMatrix c;
  ComplexMatrix d;
  std::optional<ComplexMatrix> e;  ///< C^{-1} D; absent when C is singular
  LogDet lemma_det;                ///< det([[C, D], [-conj(D), conj(C)]])
  LogDet det_c;                    ///< det(C)
  LogDet reduced_det;              ///< det([[I, E], [-conj(E), I]])
  LogDet gram_det;                 ///< det(conj(E) E + I)
  double ce_residual = 0.0;        ///< ||C E - D||_F / (||C||_F ||E||_F + ||D||_F)
  /// relative gap between lemma_det and det(C) conj(det(C)) reduced_det
  double reduction_residual = 0.0;
  /// relative gap between reduced_det and gram_det (both equal det(I + conj(E) E))
  double gram_residual = 0.0;

  bool c_invertible() const { return e.has_value(); }
};

LemmaProbe lemma_reduction(const ComplexMatrix& c, const ComplexMatrix& d);

/// Nonnegativity test for a determinant that should be a real number >= 0:
/// |Im det| <= rel * |det| + abs and Re det >= -(rel * |det| + abs).
/// Returns the normalized violation (<= 1 means satisfied).
double nonnegativity_violation(const LogDet& det, double rel, double abs);

}  // namespace symdet

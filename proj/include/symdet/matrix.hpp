#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace symdet {

using Complex = std::complex<double>;

/// Raised when a caller breaks an operation's precondition (shape, kind).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class ScalarKind { Real, Complex };

template <typename T>
inline constexpr bool is_complex_v = std::is_same_v<T, Complex>;

template <typename T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, Complex>;

template <Scalar T>
constexpr ScalarKind kind_of() {
  return is_complex_v<T> ? ScalarKind::Complex : ScalarKind::Real;
}

template <Scalar T>
constexpr T conj(T x) {
  if constexpr (is_complex_v<T>) {
    return std::conj(x);
  } else {
    return x;
  }
}

template <Scalar T>
constexpr double real_part(T x) {
  if constexpr (is_complex_v<T>) {
    return x.real();
  } else {
    return x;
  }
}

/// Dense n x n matrix, row-major, value semantics.
template <Scalar T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;

  explicit Matrix(std::size_t n) : n_(n), data_(n * n, T{}) {
    if (n == 0) throw ContractViolation("matrix dimension must be >= 1");
  }

  Matrix(std::size_t n, std::vector<T> entries) : n_(n), data_(std::move(entries)) {
    if (n == 0) throw ContractViolation("matrix dimension must be >= 1");
    if (data_.size() != n * n) throw ContractViolation("entry count must equal n^2");
  }

  /// Row-by-row literal; every row must have the same length as the number of rows.
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
    if (n_ == 0) throw ContractViolation("matrix dimension must be >= 1");
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw ContractViolation("matrix literal is not square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  static Matrix scalar(std::size_t n, T value) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
    return m;
  }

  static Matrix diagonal(std::span<const T> diag) {
    Matrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  static Matrix diagonal(std::initializer_list<T> diag) {
    return diagonal(std::span<const T>(diag.begin(), diag.size()));
  }

  std::size_t size() const { return n_; }
  static constexpr ScalarKind kind() { return kind_of<T>(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const T> entries() const { return data_; }
  std::span<T> entries() { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;

namespace detail {
template <Scalar T>
void require_same_size(const Matrix<T>& a, const Matrix<T>& b, const char* op) {
  if (a.size() != b.size()) {
    throw ContractViolation(std::string(op) + ": dimension mismatch (" + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()) + ")");
  }
}
}  // namespace detail

template <Scalar T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_size(a, b, "matmul");
  const std::size_t n = a.size();
  Matrix<T> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

/// a + alpha * b
template <Scalar T>
Matrix<T> add_scaled(const Matrix<T>& a, const Matrix<T>& b, T alpha) {
  detail::require_same_size(a, b, "add_scaled");
  Matrix<T> c = a;
  auto out = c.entries();
  auto rhs = b.entries();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += alpha * rhs[i];
  return c;
}

template <Scalar T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  return add_scaled(a, b, T{1});
}

template <Scalar T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  return add_scaled(a, b, T{-1});
}

template <Scalar T>
Matrix<T> operator-(const Matrix<T>& a) {
  Matrix<T> c = a;
  for (auto& x : c.entries()) x = -x;
  return c;
}

template <Scalar T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  return matmul(a, b);
}

template <Scalar T>
Matrix<T> operator*(T alpha, const Matrix<T>& a) {
  Matrix<T> c = a;
  for (auto& x : c.entries()) x *= alpha;
  return c;
}

template <Scalar T>
Matrix<T> transpose(const Matrix<T>& a) {
  const std::size_t n = a.size();
  Matrix<T> t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(j, i) = a(i, j);
  return t;
}

/// Entry-wise complex conjugate; identity for real matrices.
template <Scalar T>
Matrix<T> conjugate(const Matrix<T>& a) {
  if constexpr (!is_complex_v<T>) {
    return a;
  } else {
    Matrix<T> c = a;
    for (auto& x : c.entries()) x = std::conj(x);
    return c;
  }
}

template <Scalar T>
Matrix<T> conj_transpose(const Matrix<T>& a) {
  return conjugate(transpose(a));
}

/// Real -> complex promotion; complex input is returned unchanged.
template <Scalar T>
ComplexMatrix to_complex(const Matrix<T>& a) {
  if constexpr (is_complex_v<T>) {
    return a;
  } else {
    ComplexMatrix c(a.size());
    auto src = a.entries();
    auto dst = c.entries();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i];
    return c;
  }
}

template <Scalar T>
double frobenius_norm(const Matrix<T>& a) {
  double sum = 0.0;
  for (const auto& x : a.entries()) sum += std::norm(x);
  return std::sqrt(sum);
}

/// Product of row 2-norms; an upper bound on |det(a)|.
template <Scalar T>
double hadamard_bound(const Matrix<T>& a) {
  double bound = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) row += std::norm(a(i, j));
    bound *= std::sqrt(row);
  }
  return bound;
}

template <Scalar T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_size(a, b, "max_abs_diff");
  double m = 0.0;
  auto x = a.entries();
  auto y = b.entries();
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

}  // namespace symdet

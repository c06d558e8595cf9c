#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "symdet/lu.hpp"
#include "symdet/matrix.hpp"
#include "symdet/rng.hpp"
#include "symdet/symplectic.hpp"

namespace symdet {

enum class GroupTarget { RealSymplectic, ComplexSymplectic, ConjugateSymplectic };

std::string to_string(GroupTarget t);

enum class FactorKind { ShearLower, ShearUpper, DiagBlock, FormJ, Phase };

std::string to_string(FactorKind f);

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Random group elements are products of elementary factors:
/// shears [[I, O], [S, I]] / [[I, S], [O, I]], block diagonals [[P, O], [O, P^{-T}]]
/// (P^{-*} for the conjugate group), J, and scalar phases e^{i theta} I
/// (conjugate group only). The distribution is not Haar.
struct GeneratorConfig {
  std::size_t half_dim = 2;
  std::size_t num_factors = 12;
  /// Gaussian parameter blocks are scaled by factor_scale / sqrt(N).
  double factor_scale = 0.5;
  /// Shears satisfy 1 + ||S||_F <= cap; block-diagonal P satisfies
  /// ||P||_F ||P^{-1}||_F / N <= cap (redrawn otherwise).
  double condition_cap = 20.0;
  std::uint64_t seed = 0;
  GroupTarget target = GroupTarget::RealSymplectic;
  /// Forced factor sequence; when non-empty it replaces the random draw and num_factors.
  std::vector<FactorKind> schedule;
  /// Conjugate target only: guarantee at least one phase factor.
  bool ensure_phase_factor = true;

  void validate() const;
};

inline constexpr int kMaxFactorRetries = 32;

namespace detail {

template <Scalar T>
void require_target(GroupTarget target) {
  if constexpr (is_complex_v<T>) {
    if (target == GroupTarget::RealSymplectic) {
      throw ContractViolation("real-symplectic target requires a real scalar type");
    }
  } else {
    if (target != GroupTarget::RealSymplectic) {
      throw ContractViolation(to_string(target) + " target requires a complex scalar type");
    }
  }
}

template <Scalar T>
constexpr GroupTarget default_target() {
  return is_complex_v<T> ? GroupTarget::ComplexSymplectic : GroupTarget::RealSymplectic;
}

/// (S + S^T)/2, or (S + S^*)/2 for the conjugate target.
template <Scalar T>
Matrix<T> symmetrize(const Matrix<T>& s, GroupTarget target) {
  const Matrix<T> t = target == GroupTarget::ConjugateSymplectic ? conj_transpose(s) : transpose(s);
  return T{0.5} * (s + t);
}

}  // namespace detail

template <Scalar T>
Matrix<T> shear_lower(const Matrix<T>& s, GroupTarget target = detail::default_target<T>()) {
  detail::require_target<T>(target);
  const std::size_t n = s.size();
  const Matrix<T> id = Matrix<T>::identity(n);
  return assemble_blocks(BlockQuad<T>{id, Matrix<T>(n), detail::symmetrize(s, target), id});
}

template <Scalar T>
Matrix<T> shear_upper(const Matrix<T>& s, GroupTarget target = detail::default_target<T>()) {
  detail::require_target<T>(target);
  const std::size_t n = s.size();
  const Matrix<T> id = Matrix<T>::identity(n);
  return assemble_blocks(BlockQuad<T>{id, detail::symmetrize(s, target), Matrix<T>(n), id});
}

/// [[P, O], [O, P^{-T}]] (or P^{-*} for the conjugate target).
template <Scalar T>
Matrix<T> diag_block(const Matrix<T>& p, GroupTarget target = detail::default_target<T>()) {
  detail::require_target<T>(target);
  const LuFactorization<T> lu = lu_decompose(p);
  if (lu.singular) throw GenerationError("diag_block: parameter matrix is singular");
  const std::size_t n = p.size();
  const Matrix<T> inv = solve(lu, Matrix<T>::identity(n));
  const Matrix<T> lower_right = target == GroupTarget::ConjugateSymplectic ? conj_transpose(inv) : transpose(inv);
  return assemble_blocks(BlockQuad<T>{p, Matrix<T>(n), Matrix<T>(n), lower_right});
}

/// e^{i theta} I_{2N}; conjugate symplectic with determinant e^{2 i N theta}.
inline ComplexMatrix phase_factor(double theta, std::size_t half_dim) {
  return ComplexMatrix::scalar(2 * half_dim, std::polar(1.0, theta));
}

/// [[C, D], [-D, C]] for real C, D. No membership claim.
inline RealMatrix embed_orthogonal_pair(const RealMatrix& c, const RealMatrix& d) {
  if (c.size() != d.size()) throw ContractViolation("embed_orthogonal_pair: C and D differ in dimension");
  return embed_pair(BlockPair<double>{c, d, PairVariant::RealSymplectic});
}

template <Scalar T>
struct GeneratedMatrix {
  Matrix<T> matrix;
  std::vector<FactorKind> factors;
};

namespace detail {

template <Scalar T>
Matrix<T> draw_shear_parameter(const GeneratorConfig& config, Rng& rng) {
  const std::size_t n = config.half_dim;
  const double scale = config.factor_scale / std::sqrt(static_cast<double>(n));
  Matrix<T> s = symmetrize(T{scale} * random_gaussian<T>(rng, n), config.target);
  const double norm = frobenius_norm(s);
  const double limit = config.condition_cap - 1.0;
  if (norm > limit) s = T{limit / norm} * s;
  return s;
}

template <Scalar T>
Matrix<T> draw_diag_factor(const GeneratorConfig& config, Rng& rng) {
  const std::size_t n = config.half_dim;
  const double scale = config.factor_scale / std::sqrt(static_cast<double>(n));
  for (int attempt = 0; attempt < kMaxFactorRetries; ++attempt) {
    const Matrix<T> p = Matrix<T>::identity(n) + T{scale} * random_gaussian<T>(rng, n);
    const LuFactorization<T> lu = lu_decompose(p);
    if (lu.singular) continue;
    const Matrix<T> inv = solve(lu, Matrix<T>::identity(n));
    const double cond = frobenius_norm(p) * frobenius_norm(inv) / static_cast<double>(n);
    if (cond > config.condition_cap) continue;
    return diag_block(p, config.target);
  }
  throw GenerationError("could not draw a block-diagonal factor within the condition cap after " +
                        std::to_string(kMaxFactorRetries) + " attempts");
}

template <Scalar T>
Matrix<T> draw_factor(FactorKind kind, const GeneratorConfig& config, Rng& rng) {
  switch (kind) {
    case FactorKind::ShearLower:
      return shear_lower(draw_shear_parameter<T>(config, rng), config.target);
    case FactorKind::ShearUpper:
      return shear_upper(draw_shear_parameter<T>(config, rng), config.target);
    case FactorKind::DiagBlock:
      return draw_diag_factor<T>(config, rng);
    case FactorKind::FormJ:
      return form_matrix<T>(config.half_dim);
    case FactorKind::Phase:
      if constexpr (is_complex_v<T>) {
        if (config.target == GroupTarget::ConjugateSymplectic) {
          return phase_factor(rng.uniform(0.0, 2.0 * std::numbers::pi), config.half_dim);
        }
      }
      throw ContractViolation("phase factors belong to the conjugate symplectic target only");
  }
  throw ContractViolation("unknown factor kind");
}

}  // namespace detail

/// Product of elementary factors; deterministic given (config, rng state).
template <Scalar T>
GeneratedMatrix<T> generate_traced(const GeneratorConfig& config, Rng& rng) {
  config.validate();
  detail::require_target<T>(config.target);

  std::vector<FactorKind> kinds = config.schedule;
  if (kinds.empty()) {
    std::vector<FactorKind> pool{FactorKind::ShearLower, FactorKind::ShearUpper, FactorKind::DiagBlock,
                                 FactorKind::FormJ};
    if (config.target == GroupTarget::ConjugateSymplectic) pool.push_back(FactorKind::Phase);
    for (std::size_t i = 0; i < config.num_factors; ++i) kinds.push_back(pool[rng.index(pool.size())]);
    if (config.target == GroupTarget::ConjugateSymplectic && config.ensure_phase_factor &&
        std::find(kinds.begin(), kinds.end(), FactorKind::Phase) == kinds.end()) {
      kinds.back() = FactorKind::Phase;
    }
  }

  Matrix<T> product = Matrix<T>::identity(2 * config.half_dim);
  for (FactorKind kind : kinds) product = product * detail::draw_factor<T>(kind, config, rng);
  return {std::move(product), std::move(kinds)};
}

template <Scalar T>
Matrix<T> generate(const GeneratorConfig& config, Rng& rng) {
  return generate_traced<T>(config, rng).matrix;
}

/// Uses a fresh Rng seeded from config.seed.
template <Scalar T>
Matrix<T> generate(const GeneratorConfig& config) {
  Rng rng(config.seed);
  return generate<T>(config, rng);
}

}  // namespace symdet

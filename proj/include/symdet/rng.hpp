#pragma once

#include <cstdint>
#include <random>

#include "symdet/matrix.hpp"

namespace symdet {

/// splitmix64 finalizer; used to derive independent child seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of the index-th child stream of `seed`.
constexpr std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
  return mix_seed(mix_seed(seed) ^ mix_seed(index + 0x632be59bd9b4e019ULL));
}

/// Seeded generator. Not thread-safe; give each thread its own child.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix_seed(seed)) {}

  std::uint64_t seed() const { return seed_; }

  double normal() { return normal_(engine_); }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  /// Uniform integer in [0, n).
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }

  Rng child(std::uint64_t index) const { return Rng(child_seed(seed_, index)); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// I.i.d. standard normal entries; complex entries draw real and imaginary
/// parts independently.
template <Scalar T>
Matrix<T> random_gaussian(Rng& rng, std::size_t n) {
  Matrix<T> m(n);
  for (auto& x : m.entries()) {
    if constexpr (is_complex_v<T>) {
      const double re = rng.normal();
      const double im = rng.normal();
      x = Complex{re, im};
    } else {
      x = rng.normal();
    }
  }
  return m;
}

}  // namespace symdet

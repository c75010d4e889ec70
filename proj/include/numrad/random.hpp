#pragma once

// Seeded random sources. The generator is xoshiro256** seeded through
// splitmix64, and Gaussians come from the Box-Muller transform, so every
// stream is reproducible across platforms and standard libraries.

#include <cmath>
#include <cstdint>
#include <numbers>

#include "numrad/linalg.hpp"

namespace numrad {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Sub-seed for trial `index` of a run seeded with `seed`. Independent of
/// how many trials are run or in what order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0xd1b54a32d192ed03ULL * (index + 1));
  splitmix64(s);
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  /// Standard normal.
  double gaussian() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Standard complex Gaussian: E|z|^2 = 1.
  Complex complex_gaussian() noexcept {
    const double re = gaussian();
    const double im = gaussian();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

  std::uint64_t s_[4]{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// n x n matrix with i.i.d. standard complex Gaussian entries.
inline Matrix ginibre(std::size_t n, Rng& rng) {
  Matrix g(n);
  for (auto& z : g.entries()) z = rng.complex_gaussian();
  return g;
}

/// Ginibre matrix with the upper triangle and diagonal zeroed (T^n = 0).
inline Matrix strictly_lower_ginibre(std::size_t n, Rng& rng) {
  Matrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) g(i, j) = rng.complex_gaussian();
  return g;
}

/// Random Hermitian matrix, (G + G*)/2 for Ginibre G.
inline Matrix random_hermitian(std::size_t n, Rng& rng) { return hermitian_part(ginibre(n, rng)); }

/// Haar-distributed unitary: Gram-Schmidt QR of a Ginibre matrix. Modified
/// Gram-Schmidt yields R with positive diagonal, which is what makes Q Haar.
/// Each column is orthogonalized twice to keep Q unitary to working precision.
inline Matrix random_unitary(std::size_t n, Rng& rng) {
  Matrix q = ginibre(n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex dot{};
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

}  // namespace numrad

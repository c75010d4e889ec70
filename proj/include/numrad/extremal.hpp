#pragma once

// Golden operators, instance generators that satisfy the disk and sector
// hypotheses by construction, and random searches around the extremal
// cases of ||T|| - w(T) <= r^2/(2|lambda|).
//
// Orthogonal ranges: in finite dimension <Tf, T*g> = <T^2 f, g> for all f, g,
// so R(T) is orthogonal to R(T*) exactly when T^2 = 0.

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "numrad/bounds.hpp"
#include "numrad/linalg.hpp"
#include "numrad/matrix_io.hpp"
#include "numrad/random.hpp"

namespace numrad {

/// The two-dimensional shift [[0, 0], [1, 0]].
inline Matrix shift2() { return Matrix::from_rows({{0.0, 0.0}, {1.0, 0.0}}); }

/// R(T) orthogonal to R(T*), tested as ||T^2||_F <= 1e-10 max(1, ||T||_F^2).
inline bool orthogonal_ranges_check(const Matrix& t) {
  const double f = frobenius_norm(t);
  return frobenius_norm(t * t) <= 1e-10 * std::max(1.0, f * f);
}

struct DiskInstance {
  Matrix t;
  DiskCertificate cert;
};

/// T = lambda I + u r C, C a Ginibre matrix scaled to unit operator norm and
/// u uniform in [0, 1] (or `forced_u`). (lambda, r) certifies T.
inline DiskInstance gen_disk_instance(Complex lambda, double r, std::size_t n, std::uint64_t seed,
                                      std::optional<double> forced_u = std::nullopt) {
  if (lambda == Complex{}) throw std::invalid_argument("lambda must be nonzero");
  if (!(r > 0.0)) throw std::invalid_argument("r must be positive");
  Rng rng(seed);
  Matrix c = ginibre(n, rng);
  const double u = rng.uniform();
  const double scale = forced_u.value_or(u) * r / operator_norm(c);
  Matrix t = scale * c;
  for (std::size_t i = 0; i < n; ++i) t(i, i) += lambda;
  return {std::move(t), {lambda, r, std::nullopt}};
}

struct SegmentInstance {
  Matrix a;
  SectorPair sector;
};

/// A = U diag(d) U* with d uniform in [m, M] and U Haar unitary; the pair
/// (m, M) satisfies the operator-order hypothesis by construction.
inline SegmentInstance gen_segment_instance(double m, double M, std::size_t n, std::uint64_t seed) {
  if (!(m > 0.0) || !(M >= m)) throw InvalidInterval("requires M >= m > 0");
  Rng rng(seed);
  const Matrix u = random_unitary(n, rng);
  std::vector<double> d(n);
  for (auto& x : d) x = rng.uniform(m, M);
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += u(i, k) * d[k] * std::conj(u(j, k));
      a(i, j) = s;
      a(j, i) = std::conj(s);
    }
    a(i, i) = a(i, i).real();
  }
  return {std::move(a), SectorPair::interval(m, M, SectorMode::OperatorOrder)};
}

/// Strictly lower-triangular Ginibre matrix scaled to unit operator norm.
/// Strictly lower-triangular Ginibre supported on the block [[0, 0], [X, 0]]
/// with X of size (n - n/2) x n/2, so T^2 = 0; normalized to ||T|| = 1.
inline Matrix random_nilpotent(std::size_t n, Rng& rng) {
  Matrix t(n);
  const std::size_t k = n / 2;
  for (std::size_t i = k; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) t(i, j) = rng.complex_gaussian();
  const double norm = operator_norm(t);
  return norm > 0.0 ? Complex(1.0 / norm) * t : t;
}

struct Violations {
  double norm_dev;     // | ||T|| - 1 |
  double nilpotency;   // ||T^2||
  double disk_excess;  // max(0, ||T - lambda I|| - sqrt|lambda|)
};

struct SearchResult {
  Matrix candidate;
  Complex lambda;
  Violations violations;
  double score;  // max of the violations
};

/// Distance of (T, lambda) from the constraints ||T|| = 1, T^2 = 0 and
/// ||T - lambda I|| <= |lambda|^(1/2).
inline SearchResult score_candidate(Matrix t, Complex lambda) {
  Violations v{
      std::abs(operator_norm(t) - 1.0),
      operator_norm(t * t),
      std::max(0.0, operator_norm(shift(t, lambda)) - std::sqrt(std::abs(lambda))),
  };
  const double score = std::max({v.norm_dev, v.nilpotency, v.disk_excess});
  return {std::move(t), lambda, v, score};
}

inline constexpr int kLambdaGridPoints = 32;

/// lambda values 4 * 10^(-3k/(K-1)), k = 0..K-1: a log grid in (0, 4].
inline std::vector<double> lambda_log_grid() {
  std::vector<double> g(kLambdaGridPoints);
  for (int k = 0; k < kLambdaGridPoints; ++k)
    g[static_cast<std::size_t>(k)] = 4.0 * std::pow(10.0, -3.0 * k / (kLambdaGridPoints - 1));
  return g;
}

/// Random search for T with ||T|| = 1, R(T) orthogonal to R(T*) and
/// ||T - lambda I|| <= |lambda|^(1/2). Trial i draws a unit-norm strictly
/// lower-triangular candidate from derive_seed(seed, i) and scans the lambda
/// log grid; the minimum-score result over all trials is returned (earliest
/// on ties). A positive score is not evidence that no solution exists.
inline SearchResult search_problem(std::size_t n, std::size_t iters, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("search requires n >= 2");
  if (iters < 1) throw std::invalid_argument("search requires at least one iteration");
  const auto grid = lambda_log_grid();
  std::optional<SearchResult> best;
  for (std::size_t i = 0; i < iters; ++i) {
    Rng rng(derive_seed(seed, i));
    const Matrix t = random_nilpotent(n, rng);
    for (double lambda : grid) {
      auto result = score_candidate(t, lambda);
      if (!best || result.score < best->score) best = std::move(result);
    }
  }
  return std::move(*best);
}

/// Probe for the equality case ||T|| = 1, T^2 = 0, ||T - I|| <= 1. Trial i
/// draws a strictly lower-triangular direction and a scale s uniform in
/// [0, 2], so the trade-off between ||T|| = 1 and ||T - I|| <= 1 is
/// explored. Reports the best max(| ||T|| - 1 |, ||T^2||, max(0, ||T - I|| - 1)).
inline SearchResult probe_equality_remark(std::size_t n, std::size_t iters, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("probe requires n >= 2");
  if (iters < 1) throw std::invalid_argument("probe requires at least one iteration");
  std::optional<SearchResult> best;
  for (std::size_t i = 0; i < iters; ++i) {
    Rng rng(derive_seed(seed, i));
    const Matrix direction = random_nilpotent(n, rng);
    const double s = rng.uniform(0.0, 2.0);
    auto result = score_candidate(Complex(s) * direction, 1.0);
    if (!best || result.score < best->score) best = std::move(result);
  }
  return std::move(*best);
}

inline nlohmann::json search_result_to_json(const SearchResult& r) {
  return {
      {"candidate", matrix_to_json(r.candidate)},
      {"lambda", {r.lambda.real(), r.lambda.imag()}},
      {"violations",
       {{"norm_dev", r.violations.norm_dev},
        {"nilpotency", r.violations.nilpotency},
        {"disk_excess", r.violations.disk_excess}}},
      {"score", r.score},
  };
}

}  // namespace numrad

#pragma once

// Numerical range W(A) = { <Ax, x> : |x| = 1 } and numerical radius
// w(A) = sup |<Ax, x>|, computed through the support function
//
//   h(theta) = lambda_max(H(theta)),  H(theta) = (e^{i theta} A + e^{-i theta} A*) / 2.
//
// W(A) is convex, so h determines it: the top eigenvector x of H(theta)
// yields the boundary point <Ax, x> with Re(e^{i theta} <Ax, x>) = h(theta),
// and w(A) = max_theta h(theta).

#include <cmath>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "numrad/format.hpp"
#include "numrad/linalg.hpp"
#include "numrad/random.hpp"

namespace numrad {

inline constexpr int kDefaultThetaGrid = 512;

struct BoundaryPoint {
  double theta;
  Complex point;   // <Ax, x> for the top eigenvector x of H(theta)
  double support;  // lambda_max(H(theta))
};

struct RangeSummary {
  double radius;
  double norm;
  std::vector<BoundaryPoint> boundary;
};

inline Matrix rotated_hermitian_part(const Matrix& a, double theta) {
  const std::size_t n = a.size();
  const Complex e = std::polar(1.0, theta);
  Matrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = (e * a(i, i)).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = 0.5 * (e * a(i, j) + std::conj(e * a(j, i)));
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  return h;
}

/// x* A x; equals <Ax, x> for unit x.
inline Complex quadratic_form(const Matrix& a, std::span<const Complex> x) {
  const std::size_t n = a.size();
  Complex s{};
  for (std::size_t i = 0; i < n; ++i) {
    Complex row{};
    for (std::size_t j = 0; j < n; ++j) row += a(i, j) * x[j];
    s += std::conj(x[i]) * row;
  }
  return s;
}

/// h(theta) = lambda_max(H(theta)).
inline double support_function(const Matrix& a, double theta) {
  return hermitian_eigenvalues(rotated_hermitian_part(a, theta)).front();
}

namespace detail {

inline double grid_theta(int k, int n_theta) {
  return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_theta);
}

inline std::vector<Complex> column(const Matrix& m, std::size_t c) {
  std::vector<Complex> x(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) x[r] = m(r, c);
  return x;
}

// h on the uniform grid. For even grids H(theta + pi) = -H(theta), so one
// decomposition yields both h(theta) and h(theta + pi) = -lambda_min(H(theta)).
inline std::vector<double> support_on_grid(const Matrix& a, int n_theta) {
  std::vector<double> h(static_cast<std::size_t>(n_theta));
  const bool paired = n_theta % 2 == 0;
  const int count = paired ? n_theta / 2 : n_theta;
  for (int k = 0; k < count; ++k) {
    const auto values = hermitian_eigenvalues(rotated_hermitian_part(a, grid_theta(k, n_theta)));
    h[static_cast<std::size_t>(k)] = values.front();
    if (paired) h[static_cast<std::size_t>(k + count)] = -values.back();
  }
  return h;
}

}  // namespace detail

/// Boundary samples of W(A) on a uniform theta grid over [0, 2 pi), in
/// increasing theta. Requires n_theta >= 8.
inline std::vector<BoundaryPoint> numerical_range_boundary(const Matrix& a, int n_theta) {
  if (n_theta < 8) throw std::invalid_argument("n_theta must be at least 8");
  std::vector<BoundaryPoint> out(static_cast<std::size_t>(n_theta));
  const bool paired = n_theta % 2 == 0;
  const int count = paired ? n_theta / 2 : n_theta;
  const std::size_t last = a.size() - 1;
  for (int k = 0; k < count; ++k) {
    const double theta = detail::grid_theta(k, n_theta);
    const auto eig = hermitian_eigen(rotated_hermitian_part(a, theta));
    const auto top = detail::column(eig.vectors, 0);
    out[static_cast<std::size_t>(k)] = {theta, quadratic_form(a, top), eig.values.front()};
    if (paired) {
      // The bottom eigenvector of H(theta) is the top one of H(theta + pi).
      const auto bottom = detail::column(eig.vectors, last);
      out[static_cast<std::size_t>(k + count)] = {detail::grid_theta(k + count, n_theta),
                                                  quadratic_form(a, bottom), -eig.values.back()};
    }
  }
  return out;
}

/// w(A): maximum of the support function over a uniform grid of `grid`
/// angles, refined by golden-section search on the bracket around the best
/// grid angle until the bracket is narrower than 1e-10.
inline double numerical_radius(const Matrix& a, int grid = kDefaultThetaGrid) {
  if (grid < 8) throw std::invalid_argument("theta grid must have at least 8 points");
  const auto h = detail::support_on_grid(a, grid);
  std::size_t best = 0;
  for (std::size_t k = 1; k < h.size(); ++k)
    if (h[k] > h[best]) best = k;

  const double step = 2.0 * std::numbers::pi / grid;
  const double center = detail::grid_theta(static_cast<int>(best), grid);
  double lo = center - step;
  double hi = center + step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = support_function(a, x1);
  double f2 = support_function(a, x2);
  double result = std::max({h[best], f1, f2});
  while (hi - lo >= 1e-10) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = support_function(a, x2);
      result = std::max(result, f2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = support_function(a, x1);
      result = std::max(result, f1);
    }
  }
  return result;
}

/// Lower bound for w(A): the largest |<Ax, x>| over `samples` random unit
/// vectors drawn uniformly from the sphere (normalized complex Gaussians).
inline double numerical_radius_oracle(const Matrix& a, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  Rng rng(seed);
  const std::size_t n = a.size();
  std::vector<Complex> x(n);
  double best = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    double norm2 = 0.0;
    for (auto& xi : x) {
      xi = rng.complex_gaussian();
      norm2 += std::norm(xi);
    }
    if (norm2 == 0.0) continue;
    best = std::max(best, std::abs(quadratic_form(a, x)) / norm2);
  }
  return best;
}

inline RangeSummary summarize_range(const Matrix& a, int n_theta = kDefaultThetaGrid,
                                    int grid = kDefaultThetaGrid) {
  return {numerical_radius(a, grid), operator_norm(a), numerical_range_boundary(a, n_theta)};
}

/// CSV with header `theta,re,im,support`, 17 significant digits.
inline void write_boundary_csv(std::ostream& out, const std::vector<BoundaryPoint>& boundary) {
  out << "theta,re,im,support\n";
  for (const auto& b : boundary) {
    out << format_real(b.theta, false) << ',' << format_real(b.point.real(), false) << ','
        << format_real(b.point.imag(), false) << ',' << format_real(b.support, false) << '\n';
  }
}

}  // namespace numrad

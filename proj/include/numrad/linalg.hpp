#pragma once

// Dense complex matrices, a cyclic Jacobi eigensolver for Hermitian
// matrices, and the spectral (operator 2-) norm.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "numrad/errors.hpp"

namespace numrad {

using Complex = std::complex<double>;

/// Square dense complex matrix stored row-major.
class Matrix {
 public:
  /// Zero matrix of dimension n (n >= 1).
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {
    if (n == 0) throw InvalidMatrix("matrix dimension must be positive");
  }

  /// Takes ownership of n*n row-major entries; all entries must be finite.
  Matrix(std::size_t n, std::vector<Complex> entries) : n_(n), a_(std::move(entries)) {
    if (n == 0) throw InvalidMatrix("matrix dimension must be positive");
    if (a_.size() != n * n) {
      throw InvalidMatrix("expected " + std::to_string(n * n) + " entries, got " +
                          std::to_string(a_.size()));
    }
    if (!is_finite()) throw InvalidMatrix("matrix entries must be finite");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(std::span<const Complex> d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  /// Row-major nested initializer, mainly for tests: {{a, b}, {c, d}}.
  static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t n = rows.size();
    std::vector<Complex> e;
    e.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw InvalidMatrix("rows must all have length n");
      e.insert(e.end(), row.begin(), row.end());
    }
    return Matrix(n, std::move(e));
  }

  std::size_t size() const noexcept { return n_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return a_[i * n_ + j];
  }

  std::span<Complex> entries() noexcept { return a_; }
  std::span<const Complex> entries() const noexcept { return a_; }

  bool is_finite() const noexcept {
    return std::all_of(a_.begin(), a_.end(), [](const Complex& z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }

  friend bool operator==(const Matrix& x, const Matrix& y) = default;

 private:
  std::size_t n_;
  std::vector<Complex> a_;
};

namespace detail {

inline void require_same_size(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
  }
}

}  // namespace detail

/// Conjugate transpose.
inline Matrix adjoint(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  detail::require_same_size(a, b);
  Matrix r = a;
  auto re = r.entries();
  auto be = b.entries();
  for (std::size_t k = 0; k < re.size(); ++k) re[k] += be[k];
  return r;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
  detail::require_same_size(a, b);
  Matrix r = a;
  auto re = r.entries();
  auto be = b.entries();
  for (std::size_t k = 0; k < re.size(); ++k) re[k] -= be[k];
  return r;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  detail::require_same_size(a, b);
  const std::size_t n = a.size();
  Matrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

inline Matrix operator*(Complex s, const Matrix& a) {
  Matrix r = a;
  for (auto& z : r.entries()) z *= s;
  return r;
}

/// A - lambda*I.
inline Matrix shift(const Matrix& a, Complex lambda) {
  Matrix r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r(i, i) -= lambda;
  return r;
}

/// A*A, computed on the upper triangle and mirrored so the result is
/// exactly Hermitian.
inline Matrix gram(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += std::conj(a(k, i)) * a(k, j);
      g(i, j) = s;
      g(j, i) = std::conj(s);
    }
    g(i, i) = g(i, i).real();
  }
  return g;
}

inline double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

/// ||A - A*||_F
inline double hermitian_defect(const Matrix& a) {
  const std::size_t n = a.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
  return std::sqrt(s);
}

inline bool is_hermitian(const Matrix& a, double rel_tol = 1e-10) {
  return hermitian_defect(a) <= rel_tol * std::max(1.0, frobenius_norm(a));
}

/// (A + A*)/2, exactly Hermitian.
inline Matrix hermitian_part(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = 0.5 * (a(i, j) + std::conj(a(j, i)));
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  return h;
}

struct HermitianEigen {
  std::vector<double> values;  // descending
  Matrix vectors;              // column i pairs with values[i]
};

namespace detail {

inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr double kJacobiRelTol = 1e-13;

inline double off_diagonal_norm(const Matrix& a) {
  const std::size_t n = a.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
  return std::sqrt(s);
}

// Cyclic complex Jacobi on a Hermitian matrix. Each rotation is
// U = D*R where D = diag(.., conj(e), ..) rotates the phase e of a(p,q)
// away and R is the classical real Jacobi rotation; a <- U* a U and, if
// requested, v <- v U. On return a is diagonal to working precision.
inline void jacobi_diagonalize(Matrix& a, Matrix* v) {
  const std::size_t n = a.size();
  const double threshold = kJacobiRelTol * frobenius_norm(a);

  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double mag = std::abs(b);
        if (mag == 0.0) continue;
        const Complex e = b / mag;
        const Complex ec = std::conj(e);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex akp = a(k, p);
          const Complex akq = ec * a(k, q);
          const Complex np = c * akp - s * akq;
          const Complex nq = s * akp + c * akq;
          a(k, p) = np;
          a(k, q) = nq;
          a(p, k) = std::conj(np);
          a(q, k) = std::conj(nq);
        }
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        if (v != nullptr) {
          Matrix& vm = *v;
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = vm(k, p);
            const Complex vkq = ec * vm(k, q);
            vm(k, p) = c * vkp - s * vkq;
            vm(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  if (off_diagonal_norm(a) <= threshold) return;
  throw NoConvergence("Jacobi eigensolver did not converge within " +
                      std::to_string(kMaxJacobiSweeps) + " sweeps");
}

inline void require_hermitian(const Matrix& a) {
  const double defect = hermitian_defect(a);
  if (defect > 1e-10 * std::max(1.0, frobenius_norm(a))) {
    throw NotHermitian("matrix is not Hermitian (||A - A*||_F = " + std::to_string(defect) +
                       ")");
  }
}

}  // namespace detail

/// Full eigendecomposition of a Hermitian matrix. Eigenvalues are sorted in
/// descending order; eigenvectors are the columns of `vectors`.
///
/// Throws NotHermitian when ||A - A*||_F > 1e-10 max(1, ||A||_F). The input
/// is not symmetrized.
inline HermitianEigen hermitian_eigen(const Matrix& a) {
  detail::require_hermitian(a);
  const std::size_t n = a.size();
  Matrix work = a;
  for (std::size_t i = 0; i < n; ++i) work(i, i) = work(i, i).real();
  Matrix v = Matrix::identity(n);
  detail::jacobi_diagonalize(work, &v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return work(x, x).real() > work(y, y).real();
  });

  HermitianEigen out{std::vector<double>(n), Matrix(n)};
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = work(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

/// Eigenvalues only (descending). Same algorithm, no vector accumulation.
inline std::vector<double> hermitian_eigenvalues(const Matrix& a) {
  detail::require_hermitian(a);
  const std::size_t n = a.size();
  Matrix work = a;
  for (std::size_t i = 0; i < n; ++i) work(i, i) = work(i, i).real();
  detail::jacobi_diagonalize(work, nullptr);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = work(i, i).real();
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

/// Largest singular value, sqrt(lambda_max(A*A)).
inline double operator_norm(const Matrix& a) {
  const auto values = hermitian_eigenvalues(gram(a));
  return std::sqrt(std::max(0.0, values.front()));
}

}  // namespace numrad

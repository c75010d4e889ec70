#pragma once

// Reverse numerical-radius inequalities: hypothesis checkers and one
// evaluator per inequality, each producing a slack-annotated report.
//
// Disk hypothesis:   ||T - lambda I|| <= r, lambda != 0, r > 0.
// Sector hypothesis: B = (A* - conj(varphi) I)(phi I - A) is accretive
//                    (Re<Bx, x> >= 0), or self-adjoint and B >= 0.
// A sector (varphi, phi) is the disk centered at (phi + varphi)/2 with
// radius |phi - varphi|/2.
//
// A failed hypothesis is reported (hypothesis_ok = false), never thrown.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "numrad/format.hpp"
#include "numrad/linalg.hpp"
#include "numrad/numrange.hpp"

namespace numrad {

inline constexpr double kHypothesisTol = 1e-9;
inline constexpr double kSlackTol = 1e-8;
inline constexpr double kZeroNormTol = 1e-14;

enum class InequalityId {
  T2_2,
  E2_4,
  C2_7,
  C2_13,
  R2_15,
  T3_2,
  R3_5,
  C3_6,
  C3_7,
  T4_2,
  C4_6,
  R4_9,
  R4_10,
  R4_11,
  R4_12,
};

inline std::string_view to_string(InequalityId id) {
  switch (id) {
    case InequalityId::T2_2: return "T2_2";
    case InequalityId::E2_4: return "E2_4";
    case InequalityId::C2_7: return "C2_7";
    case InequalityId::C2_13: return "C2_13";
    case InequalityId::R2_15: return "R2_15";
    case InequalityId::T3_2: return "T3_2";
    case InequalityId::R3_5: return "R3_5";
    case InequalityId::C3_6: return "C3_6";
    case InequalityId::C3_7: return "C3_7";
    case InequalityId::T4_2: return "T4_2";
    case InequalityId::C4_6: return "C4_6";
    case InequalityId::R4_9: return "R4_9";
    case InequalityId::R4_10: return "R4_10";
    case InequalityId::R4_11: return "R4_11";
    case InequalityId::R4_12: return "R4_12";
  }
  return "?";
}

inline constexpr std::array kAllInequalities = {
    InequalityId::T2_2,  InequalityId::E2_4,  InequalityId::C2_7,  InequalityId::C2_13,
    InequalityId::R2_15, InequalityId::T3_2,  InequalityId::R3_5,  InequalityId::C3_6,
    InequalityId::C3_7,  InequalityId::T4_2,  InequalityId::C4_6,  InequalityId::R4_9,
    InequalityId::R4_10, InequalityId::R4_11, InequalityId::R4_12,
};

/// Claim ||T - lambda I|| <= r, with an optional gap rho <= ||lambda| - w(T)|.
struct DiskCertificate {
  Complex lambda;
  double r;
  std::optional<double> rho;

  /// Empty when well-formed, otherwise the reason it is not.
  std::string defect() const {
    if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()) || !std::isfinite(r))
      return "certificate values must be finite";
    if (lambda == Complex{}) return "lambda must be nonzero";
    if (!(r > 0.0)) return "r must be positive";
    if (rho && !(*rho >= 0.0 && std::isfinite(*rho))) return "rho must be a finite nonnegative real";
    return {};
  }
};

enum class SectorMode { Accretive, OperatorOrder };

struct SectorPair {
  Complex phi;
  Complex varphi;
  SectorMode mode = SectorMode::Accretive;

  /// Real specialization: varphi = m, phi = M.
  static SectorPair interval(double m, double M, SectorMode mode = SectorMode::OperatorOrder) {
    return {Complex(M, 0.0), Complex(m, 0.0), mode};
  }

  bool is_real() const noexcept { return phi.imag() == 0.0 && varphi.imag() == 0.0; }
  double m() const noexcept { return varphi.real(); }
  double M() const noexcept { return phi.real(); }

  /// Re(phi * conj(varphi)).
  double overlap() const noexcept { return (phi * std::conj(varphi)).real(); }

  std::string defect() const {
    if (phi == varphi) return "phi must differ from varphi";
    if (phi == -varphi) return "phi must differ from -varphi";
    return {};
  }
};

using Certificate = std::variant<DiskCertificate, SectorPair>;

struct InequalityReport {
  InequalityId inequality_id;
  bool hypothesis_ok = false;
  std::string diagnostic;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  std::optional<bool> refinement_flag;
  double w = 0.0;
  double norm = 0.0;

  /// True when the hypothesis holds but the inequality does not.
  bool violated() const noexcept { return hypothesis_ok && slack < -kSlackTol; }
};

/// w(T) and ||T||, computed once and shared by the evaluators.
struct OperatorMeasures {
  double w;
  double norm;
};

inline OperatorMeasures measure(const Matrix& t) { return {numerical_radius(t), operator_norm(t)}; }

struct DiskCheck {
  bool ok;
  double measured_norm;  // ||T - lambda I||
};

struct SectorCheck {
  bool ok;
  double min_eigenvalue;  // lambda_min of the Hermitian part of B
  std::string diagnostic;
};

namespace detail {

inline InequalityReport make_report(InequalityId id, bool ok, std::string diagnostic, double lhs,
                                    double rhs, const OperatorMeasures& m,
                                    std::optional<bool> flag = std::nullopt) {
  return {id, ok, std::move(diagnostic), lhs, rhs, rhs - lhs, flag, m.w, m.norm};
}

inline std::string disk_diagnostic(const DiskCertificate& cert, const DiskCheck& check) {
  if (auto d = cert.defect(); !d.empty()) return d;
  if (!check.ok)
    return "||T - lambda I|| = " + format_real(check.measured_norm) + " exceeds r = " +
           format_real(cert.r);
  return {};
}

}  // namespace detail

inline DiskCheck check_disk(const Matrix& t, const DiskCertificate& cert) {
  const double measured = operator_norm(shift(t, cert.lambda));
  return {measured <= cert.r + kHypothesisTol, measured};
}

/// Reports T2_2 (||T|| - w <= r^2/(2|lambda|)) and E2_4
/// (||T||^2 + |lambda|^2 <= 2 w |lambda| + r^2).
inline std::array<InequalityReport, 2> eval_theorem21(const Matrix& t, const DiskCertificate& cert,
                                                      const OperatorMeasures& m) {
  const auto check = check_disk(t, cert);
  const auto diag = detail::disk_diagnostic(cert, check);
  const bool ok = diag.empty();
  const double mod = std::abs(cert.lambda);
  const double r2 = cert.r * cert.r;
  return {
      detail::make_report(InequalityId::T2_2, ok, diag, m.norm - m.w, r2 / (2.0 * mod), m),
      detail::make_report(InequalityId::E2_4, ok, diag, m.norm * m.norm + mod * mod,
                          2.0 * m.w * mod + r2, m),
  };
}

inline std::array<InequalityReport, 2> eval_theorem21(const Matrix& t, const DiskCertificate& cert) {
  return eval_theorem21(t, cert, measure(t));
}

/// Reports C2_13 (||T||^2 - w^2 <= r^2 - rho^2). Without an explicit rho the
/// largest admissible gap rho = ||lambda| - w| is used, and when |lambda| = w
/// (to 1e-9) an R2_15 report (||T||^2 - w^2 <= r^2) is appended.
///
/// Throws InvalidRho for a negative or non-finite rho. A rho larger than
/// ||lambda| - w| is a failed hypothesis, not an error.
inline std::vector<InequalityReport> eval_corollary213(const Matrix& t, const DiskCertificate& cert,
                                                       const OperatorMeasures& m) {
  if (cert.rho && !(*cert.rho >= 0.0 && std::isfinite(*cert.rho)))
    throw InvalidRho("rho must be a finite nonnegative real");
  const auto check = check_disk(t, cert);
  auto diag = detail::disk_diagnostic(cert, check);
  const double mod = std::abs(cert.lambda);
  const double gap = std::abs(mod - m.w);
  const bool automatic = !cert.rho.has_value();
  const double rho = automatic ? gap : *cert.rho;
  if (diag.empty() && gap < rho - kHypothesisTol)
    diag = "rho = " + format_real(rho) + " exceeds ||lambda| - w(T)| = " + format_real(gap);

  const double lhs = m.norm * m.norm - m.w * m.w;
  const double r2 = cert.r * cert.r;
  std::vector<InequalityReport> out;
  out.push_back(
      detail::make_report(InequalityId::C2_13, diag.empty(), diag, lhs, r2 - rho * rho, m));
  if (automatic && gap <= kHypothesisTol)
    out.push_back(detail::make_report(InequalityId::R2_15, diag.empty(), diag, lhs, r2, m));
  return out;
}

inline std::vector<InequalityReport> eval_corollary213(const Matrix& t, const DiskCertificate& cert) {
  return eval_corollary213(t, cert, measure(t));
}

namespace detail {

inline void require_nonzero(const OperatorMeasures& m) {
  if (m.norm <= kZeroNormTol) throw ZeroOperator("operator norm is zero");
}

inline std::string strict_disk_diagnostic(const Matrix& t, const DiskCertificate& cert) {
  auto diag = disk_diagnostic(cert, check_disk(t, cert));
  if (diag.empty() && !(std::abs(cert.lambda) > cert.r)) diag = "requires |lambda| > r";
  return diag;
}

}  // namespace detail

/// Reports T3_2 (sqrt(1 - r^2/|lambda|^2) <= w/||T||) and R3_5
/// (||T||^2 - w^2 <= (r^2/|lambda|^2) ||T||^2). T3_2 carries the flag
/// r/|lambda| <= sqrt(3)/2, the range where it improves on w >= ||T||/2.
inline std::array<InequalityReport, 2> eval_theorem32(const Matrix& t, const DiskCertificate& cert,
                                                      const OperatorMeasures& m) {
  detail::require_nonzero(m);
  const auto diag = detail::strict_disk_diagnostic(t, cert);
  const bool ok = diag.empty();
  const double ratio = cert.r / std::abs(cert.lambda);
  const double q = ratio * ratio;
  const double lhs = q <= 1.0 ? std::sqrt(1.0 - q) : std::nan("");
  return {
      detail::make_report(InequalityId::T3_2, ok, diag, lhs, m.w / m.norm, m,
                          ratio <= std::sqrt(3.0) / 2.0),
      detail::make_report(InequalityId::R3_5, ok, diag, m.norm * m.norm - m.w * m.w,
                          q * m.norm * m.norm, m),
  };
}

inline std::array<InequalityReport, 2> eval_theorem32(const Matrix& t, const DiskCertificate& cert) {
  return eval_theorem32(t, cert, measure(t));
}

/// T4_2: ||T||^2 - w^2 <= 2 r^2 w / (|lambda| + sqrt(|lambda|^2 - r^2)).
inline InequalityReport eval_theorem42(const Matrix& t, const DiskCertificate& cert,
                                       const OperatorMeasures& m) {
  detail::require_nonzero(m);
  const auto diag = detail::strict_disk_diagnostic(t, cert);
  const double mod = std::abs(cert.lambda);
  const double r2 = cert.r * cert.r;
  const double root = mod * mod >= r2 ? std::sqrt(mod * mod - r2) : std::nan("");
  return detail::make_report(InequalityId::T4_2, diag.empty(), diag, m.norm * m.norm - m.w * m.w,
                             2.0 * r2 * m.w / (mod + root), m);
}

inline InequalityReport eval_theorem42(const Matrix& t, const DiskCertificate& cert) {
  return eval_theorem42(t, cert, measure(t));
}

/// Forms B = (A* - conj(varphi) I)(phi I - A). Accretive mode requires
/// lambda_min((B + B*)/2) >= -1e-9; OperatorOrder additionally requires
/// ||B - B*||_F <= 1e-9 max(1, ||B||_F).
inline SectorCheck check_sector_hypothesis(const Matrix& a, const SectorPair& s) {
  const std::size_t n = a.size();
  Matrix left = adjoint(a);
  Matrix right = -1.0 * a;
  for (std::size_t i = 0; i < n; ++i) {
    left(i, i) -= std::conj(s.varphi);
    right(i, i) += s.phi;
  }
  const Matrix b = left * right;
  const double min_eig = hermitian_eigenvalues(hermitian_part(b)).back();

  std::string diag;
  if (s.mode == SectorMode::OperatorOrder) {
    const double defect = hermitian_defect(b);
    if (defect > kHypothesisTol * std::max(1.0, frobenius_norm(b)))
      diag = "B is not self-adjoint (||B - B*||_F = " + format_real(defect) + ")";
  }
  if (diag.empty() && min_eig < -kHypothesisTol)
    diag = std::string(s.mode == SectorMode::OperatorOrder ? "B is not positive semidefinite"
                                                           : "B is not accretive") +
           " (lambda_min = " + format_real(min_eig) + ")";
  return {diag.empty(), min_eig, diag};
}

/// lambda = (phi + varphi)/2, r = |phi - varphi|/2. Throws DegenerateSector
/// when phi = varphi (r = 0) or phi = -varphi (lambda = 0).
inline DiskCertificate sector_to_disk(const SectorPair& s) {
  if (s.phi == s.varphi) throw DegenerateSector("phi = varphi gives a zero-radius disk");
  if (s.phi == -s.varphi) throw DegenerateSector("phi = -varphi gives a disk centered at 0");
  return {(s.phi + s.varphi) / 2.0, std::abs(s.phi - s.varphi) / 2.0, std::nullopt};
}

namespace detail {

inline std::string sector_diagnostic(const Matrix& a, const SectorPair& s) {
  if (auto d = s.defect(); !d.empty()) return d;
  return check_sector_hypothesis(a, s).diagnostic;
}

inline void require_positive_overlap(const SectorPair& s) {
  if (!(s.overlap() > 0.0))
    throw InvalidSector("requires Re(phi conj(varphi)) > 0, got " + format_real(s.overlap()));
}

}  // namespace detail

/// C2_7: ||A|| - w <= |phi - varphi|^2 / (4 |phi + varphi|).
inline InequalityReport eval_corollary27(const Matrix& a, const SectorPair& s,
                                         const OperatorMeasures& m) {
  const auto diag = detail::sector_diagnostic(a, s);
  const double d = std::abs(s.phi - s.varphi);
  return detail::make_report(InequalityId::C2_7, diag.empty(), diag, m.norm - m.w,
                             0.25 * d * d / std::abs(s.phi + s.varphi), m);
}

inline InequalityReport eval_corollary27(const Matrix& a, const SectorPair& s) {
  return eval_corollary27(a, s, measure(a));
}

/// Reports C3_6 (2 sqrt(Re(phi conj(varphi)))/|phi + varphi| <= w/||A||) and
/// C3_7 (||A||^2 - w^2 <= |(phi - varphi)/(phi + varphi)|^2 ||A||^2). C3_6
/// carries the flag |phi - varphi| <= (sqrt(3)/2)|phi + varphi|.
inline std::array<InequalityReport, 2> eval_corollary36(const Matrix& a, const SectorPair& s,
                                                        const OperatorMeasures& m) {
  detail::require_positive_overlap(s);
  detail::require_nonzero(m);
  const auto diag = detail::sector_diagnostic(a, s);
  const bool ok = diag.empty();
  const double sum = std::abs(s.phi + s.varphi);
  const double diff = std::abs(s.phi - s.varphi);
  const double q = diff / sum;
  return {
      detail::make_report(InequalityId::C3_6, ok, diag, 2.0 * std::sqrt(s.overlap()) / sum,
                          m.w / m.norm, m, diff <= std::sqrt(3.0) / 2.0 * sum),
      detail::make_report(InequalityId::C3_7, ok, diag, m.norm * m.norm - m.w * m.w,
                          q * q * m.norm * m.norm, m),
  };
}

inline std::array<InequalityReport, 2> eval_corollary36(const Matrix& a, const SectorPair& s) {
  return eval_corollary36(a, s, measure(a));
}

/// C4_6: ||A||^2 - w^2 <= (|phi + varphi| - 2 sqrt(Re(phi conj(varphi)))) w.
inline InequalityReport eval_corollary46(const Matrix& a, const SectorPair& s,
                                         const OperatorMeasures& m) {
  detail::require_positive_overlap(s);
  const auto diag = detail::sector_diagnostic(a, s);
  return detail::make_report(InequalityId::C4_6, diag.empty(), diag, m.norm * m.norm - m.w * m.w,
                             (std::abs(s.phi + s.varphi) - 2.0 * std::sqrt(s.overlap())) * m.w, m);
}

inline InequalityReport eval_corollary46(const Matrix& a, const SectorPair& s) {
  return eval_corollary46(a, s, measure(a));
}

/// The four bounds for a real interval M >= m > 0 (varphi = m, phi = M):
/// R4_9  ||A||/w <= (M + m)/(2 sqrt(mM))
/// R4_10 ||A|| - w <= (sqrt(M) - sqrt(m))^2/(2 sqrt(mM)) w
/// R4_11 ||A||^2 - w^2 <= (sqrt(M) - sqrt(m))^2 w
/// R4_12 ||A|| - w <= (M - m)^2/(4 (M + m))
inline std::array<InequalityReport, 4> eval_remark49(const Matrix& a, const SectorPair& s,
                                                     const OperatorMeasures& m) {
  if (!s.is_real()) throw InvalidInterval("phi and varphi must be real");
  const double lo = s.m();
  const double hi = s.M();
  if (!(lo > 0.0) || !(hi >= lo)) throw InvalidInterval("requires M >= m > 0");
  const auto diag = check_sector_hypothesis(a, s).diagnostic;
  const bool ok = diag.empty();
  const double gm = std::sqrt(lo * hi);
  const double root_gap = std::sqrt(hi) - std::sqrt(lo);
  const double root_gap2 = root_gap * root_gap;
  const double diff = m.norm - m.w;
  const double diff2 = m.norm * m.norm - m.w * m.w;
  return {
      detail::make_report(InequalityId::R4_9, ok, diag, m.norm / m.w, (hi + lo) / (2.0 * gm), m),
      detail::make_report(InequalityId::R4_10, ok, diag, diff, root_gap2 / (2.0 * gm) * m.w, m),
      detail::make_report(InequalityId::R4_11, ok, diag, diff2, root_gap2 * m.w, m),
      detail::make_report(InequalityId::R4_12, ok, diag, diff,
                          0.25 * (hi - lo) * (hi - lo) / (hi + lo), m),
  };
}

inline std::array<InequalityReport, 4> eval_remark49(const Matrix& a, const SectorPair& s) {
  return eval_remark49(a, s, measure(a));
}

namespace detail {

inline void append_failed(std::vector<InequalityReport>& out, std::initializer_list<InequalityId> ids,
                          const std::string& why, const OperatorMeasures& m) {
  for (auto id : ids) {
    out.push_back(make_report(id, false, why, std::nan(""), std::nan(""), m));
  }
}

inline void verify_disk(const Matrix& t, const DiskCertificate& cert, const OperatorMeasures& m,
                        std::vector<InequalityReport>& out) {
  for (auto& r : eval_theorem21(t, cert, m)) out.push_back(std::move(r));
  if (cert.rho && !(*cert.rho >= 0.0 && std::isfinite(*cert.rho))) {
    append_failed(out, {InequalityId::C2_13}, "rho must be a finite nonnegative real", m);
  } else {
    out.push_back(std::move(eval_corollary213(t, cert, m).front()));
  }
  if (m.norm <= kZeroNormTol) {
    append_failed(out, {InequalityId::T3_2, InequalityId::R3_5, InequalityId::T4_2},
                  "requires T != 0", m);
    return;
  }
  for (auto& r : eval_theorem32(t, cert, m)) out.push_back(std::move(r));
  out.push_back(eval_theorem42(t, cert, m));
}

inline void verify_sector(const Matrix& a, const SectorPair& s, const OperatorMeasures& m,
                          std::vector<InequalityReport>& out) {
  out.push_back(eval_corollary27(a, s, m));
  if (!(s.overlap() > 0.0)) {
    append_failed(out, {InequalityId::C3_6, InequalityId::C3_7, InequalityId::C4_6},
                  "requires Re(phi conj(varphi)) > 0", m);
  } else if (m.norm <= kZeroNormTol) {
    append_failed(out, {InequalityId::C3_6, InequalityId::C3_7}, "requires A != 0", m);
    out.push_back(eval_corollary46(a, s, m));
  } else {
    for (auto& r : eval_corollary36(a, s, m)) out.push_back(std::move(r));
    out.push_back(eval_corollary46(a, s, m));
  }
  if (s.is_real() && s.m() > 0.0 && s.M() >= s.m()) {
    for (auto& r : eval_remark49(a, s, m)) out.push_back(std::move(r));
  }
}

}  // namespace detail

/// Every applicable evaluator for every certificate, ordered by inequality
/// id (stable across certificates). A disk certificate yields T2_2, E2_4,
/// C2_13, T3_2, R3_5 and T4_2; a sector pair yields C2_7, C3_6, C3_7, C4_6
/// and, for a real interval M >= m > 0, R4_9 through R4_12.
inline std::vector<InequalityReport> verify_all(const Matrix& t, std::span<const Certificate> certs) {
  std::vector<InequalityReport> out;
  if (certs.empty()) return out;
  const auto m = measure(t);
  for (const auto& cert : certs) {
    std::visit(
        [&](const auto& c) {
          using C = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<C, DiskCertificate>) {
            detail::verify_disk(t, c, m, out);
          } else {
            detail::verify_sector(t, c, m, out);
          }
        },
        cert);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.inequality_id < y.inequality_id;
  });
  return out;
}

/// Approximate Chebyshev center of T: minimizes r(lambda) = ||T - lambda I||
/// by a grid over |lambda| <= 2||T|| followed by compass search (axis and
/// diagonal moves, halving the step) until the step drops below 1e-8.
/// Returns (lambda*, r(lambda*) + 1e-9).
inline DiskCertificate optimize_lambda(const Matrix& t) {
  const double radius_of_search = 2.0 * operator_norm(t);
  auto cost = [&](Complex lambda) { return operator_norm(shift(t, lambda)); };
  if (radius_of_search == 0.0) return {Complex{}, kHypothesisTol, std::nullopt};

  constexpr int kGrid = 24;
  const double spacing = 2.0 * radius_of_search / kGrid;
  Complex best{};
  double best_cost = cost(best);
  for (int i = 0; i <= kGrid; ++i) {
    for (int j = 0; j <= kGrid; ++j) {
      const Complex z(-radius_of_search + i * spacing, -radius_of_search + j * spacing);
      if (std::abs(z) > radius_of_search) continue;
      const double c = cost(z);
      if (c < best_cost) {
        best_cost = c;
        best = z;
      }
    }
  }

  static constexpr std::array<Complex, 8> kMoves = {
      Complex(1, 0),  Complex(-1, 0),  Complex(0, 1),  Complex(0, -1),
      Complex(1, 1),  Complex(1, -1),  Complex(-1, 1), Complex(-1, -1),
  };
  double step = spacing;
  while (step >= 1e-8) {
    bool improved = false;
    for (const auto& d : kMoves) {
      const Complex z = best + step * d;
      const double c = cost(z);
      if (c < best_cost) {
        best_cost = c;
        best = z;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  return {best, best_cost + kHypothesisTol, std::nullopt};
}

/// One JSON object per line, reals at 17 significant digits, non-finite
/// values as null.
inline std::string report_to_json_line(const InequalityReport& r) {
  std::string diag;
  for (char ch : r.diagnostic) {
    if (ch == '"' || ch == '\\') diag += '\\';
    diag += ch;
  }
  std::string s = "{\"inequality_id\":\"";
  s += to_string(r.inequality_id);
  s += "\",\"hypothesis_ok\":";
  s += r.hypothesis_ok ? "true" : "false";
  s += ",\"diagnostic\":\"" + diag + "\"";
  s += ",\"lhs\":" + format_real(r.lhs);
  s += ",\"rhs\":" + format_real(r.rhs);
  s += ",\"slack\":" + format_real(r.slack);
  s += ",\"refinement_flag\":";
  s += r.refinement_flag ? (*r.refinement_flag ? "true" : "false") : "null";
  s += ",\"w\":" + format_real(r.w);
  s += ",\"norm\":" + format_real(r.norm);
  s += "}";
  return s;
}

inline void write_reports(std::ostream& out, std::span<const InequalityReport> reports) {
  for (const auto& r : reports) out << report_to_json_line(r) << '\n';
}

}  // namespace numrad

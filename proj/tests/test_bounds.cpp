#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "json.hpp"
#include "numrad/bounds.hpp"
#include "numrad/extremal.hpp"
#include "numrad/random.hpp"

using numrad::Complex;
using numrad::DiskCertificate;
using numrad::InequalityId;
using numrad::Matrix;
using numrad::SectorMode;
using numrad::SectorPair;

namespace {

Matrix s2() { return Matrix::from_rows({{0.0, 0.0}, {1.0, 0.0}}); }

Matrix diag(double a, double b) { return Matrix::diagonal(std::vector<Complex>{a, b}); }

// Largest singular value of a 2x2 matrix from the invariants of M*M:
// sigma^2 = (t + sqrt(t^2 - 4 |det|^2)) / 2, t = ||M||_F^2.
double sigma_max_2x2(const Matrix& m) {
  const double t = numrad::frobenius_norm(m) * numrad::frobenius_norm(m);
  const double det = std::abs(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
  return std::sqrt(0.5 * (t + std::sqrt(t * t - 4.0 * det * det)));
}

// Random Hermitian matrix with spectrum in [m, M], by unitary conjugation.
Matrix hermitian_in(double m, double M, std::size_t n, numrad::Rng& rng) {
  const auto u = numrad::random_unitary(n, rng);
  std::vector<Complex> d(n);
  for (auto& x : d) x = rng.uniform(m, M);
  return numrad::hermitian_part(u * Matrix::diagonal(d) * numrad::adjoint(u));
}

const DiskCertificate kCertUnitHalf{1.0, 0.5, std::nullopt};

}  // namespace

TEST(CheckDisk, Examples) {
  const Complex lambda(0.3, -0.7);
  const auto scalar = numrad::check_disk(lambda * Matrix::identity(3), {lambda, 0.2, std::nullopt});
  EXPECT_TRUE(scalar.ok);
  EXPECT_EQ(scalar.measured_norm, 0.0);

  const auto fail = numrad::check_disk(s2(), {1.0, 1.0, std::nullopt});
  EXPECT_FALSE(fail.ok);
  EXPECT_NEAR(fail.measured_norm, sigma_max_2x2(numrad::shift(s2(), 1.0)), 1e-12);
  EXPECT_NEAR(fail.measured_norm, (1.0 + std::sqrt(5.0)) / 2.0, 1e-12);

  EXPECT_TRUE(numrad::check_disk(s2(), {1.0, 2.0, std::nullopt}).ok);
}

TEST(Theorem21, Examples) {
  const auto scalar = numrad::eval_theorem21(Matrix::identity(2), {1.0, 0.1, std::nullopt});
  EXPECT_TRUE(scalar[0].hypothesis_ok);
  EXPECT_EQ(scalar[0].inequality_id, InequalityId::T2_2);
  EXPECT_NEAR(scalar[0].lhs, 0.0, 1e-15);
  EXPECT_NEAR(scalar[0].rhs, 0.005, 1e-15);

  const auto shift = numrad::eval_theorem21(s2(), {1.0, 2.0, std::nullopt});
  EXPECT_TRUE(shift[0].hypothesis_ok);
  EXPECT_NEAR(shift[0].lhs, 0.5, 1e-12);
  EXPECT_DOUBLE_EQ(shift[0].rhs, 2.0);
  EXPECT_EQ(shift[1].inequality_id, InequalityId::E2_4);
  EXPECT_NEAR(shift[1].lhs, 2.0, 1e-12);
  EXPECT_NEAR(shift[1].rhs, 2.0 * 0.5 + 4.0, 1e-12);

  const auto fail = numrad::eval_theorem21(s2(), {1.0, 1.0, std::nullopt});
  EXPECT_FALSE(fail[0].hypothesis_ok);
  EXPECT_FALSE(fail[1].hypothesis_ok);
  EXPECT_NE(fail[0].diagnostic.find("exceeds"), std::string::npos);
}

TEST(Theorem21, MalformedCertificateIsAFailedHypothesis) {
  EXPECT_FALSE(numrad::eval_theorem21(s2(), {0.0, 1.0, std::nullopt})[0].hypothesis_ok);
  EXPECT_FALSE(numrad::eval_theorem21(s2(), {1.0, 0.0, std::nullopt})[0].hypothesis_ok);
  EXPECT_FALSE(numrad::eval_theorem21(s2(), {1.0, -1.0, std::nullopt})[0].hypothesis_ok);
}

TEST(Theorem21, InequalityChainHoldsJointly) {
  // E2_4 together with 2||T|||lambda| <= ||T||^2 + |lambda|^2 gives T2_2.
  numrad::Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex lambda = rng.complex_gaussian() + 0.2;
    const double r = rng.uniform(0.05, 1.5);
    const auto inst = numrad::gen_disk_instance(lambda, r, 1 + trial % 5, 1000 + trial);
    const auto reps = numrad::eval_theorem21(inst.t, inst.cert);
    ASSERT_TRUE(reps[0].hypothesis_ok);
    EXPECT_GE(reps[1].slack, -1e-8);
    EXPECT_GE(reps[0].slack, -1e-8);
    const double mod = std::abs(lambda);
    EXPECT_LE(2.0 * reps[0].norm * mod, reps[0].norm * reps[0].norm + mod * mod + 1e-12);
    // rhs(T2_2) - lhs(T2_2) >= slack(E2_4) / (2|lambda|) up to rounding.
    EXPECT_GE(reps[0].slack + 1e-12, reps[1].slack / (2.0 * mod) - 1e-8);
  }
}

TEST(SectorHypothesis, Examples) {
  const SectorPair ordered{2.0, 1.0, SectorMode::OperatorOrder};
  const auto ok = numrad::check_sector_hypothesis(diag(1, 2), ordered);
  EXPECT_TRUE(ok.ok);
  EXPECT_NEAR(ok.min_eigenvalue, 0.0, 1e-15);

  const auto bad = numrad::check_sector_hypothesis(diag(0, 3), {2.0, 1.0, SectorMode::Accretive});
  EXPECT_FALSE(bad.ok);
  EXPECT_NEAR(bad.min_eigenvalue, -2.0, 1e-14);

  numrad::Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = hermitian_in(1.0, 4.0, 2 + trial % 5, rng);
    EXPECT_TRUE(numrad::check_sector_hypothesis(a, SectorPair::interval(1.0, 4.0)).ok);
  }
}

TEST(SectorHypothesis, OperatorOrderNeedsSelfAdjointB) {
  // A = [[1, 1], [0, 1]]: B = (A* - I)(2I - A) = [[0, 0], [1, -1]] has
  // Hermitian part with a negative eigenvalue and is not self-adjoint.
  const auto a = Matrix::from_rows({{1.0, 1.0}, {0.0, 1.0}});
  const auto c = numrad::check_sector_hypothesis(a, {2.0, 1.0, SectorMode::OperatorOrder});
  EXPECT_FALSE(c.ok);
  EXPECT_NE(c.diagnostic.find("self-adjoint"), std::string::npos);

  // Non-normal A inside the disk |z - 1.5| <= 0.5 is accretive but B is not
  // self-adjoint.
  const auto inst = numrad::gen_disk_instance(1.5, 0.5, 3, 77, 0.9);
  EXPECT_TRUE(numrad::check_sector_hypothesis(inst.t, {2.0, 1.0, SectorMode::Accretive}).ok);
  EXPECT_FALSE(numrad::check_sector_hypothesis(inst.t, {2.0, 1.0, SectorMode::OperatorOrder}).ok);
}

TEST(SectorToDisk, Examples) {
  const auto a = numrad::sector_to_disk({2.0, 1.0});
  EXPECT_EQ(a.lambda, Complex(1.5));
  EXPECT_EQ(a.r, 0.5);
  const auto b = numrad::sector_to_disk({Complex(1, 1), Complex(1, -1)});
  EXPECT_EQ(b.lambda, Complex(1.0));
  EXPECT_EQ(b.r, 1.0);
  const auto c = numrad::sector_to_disk(SectorPair::interval(1.0, 4.0));
  EXPECT_EQ(c.lambda, Complex(2.5));
  EXPECT_EQ(c.r, 1.5);
  EXPECT_THROW(numrad::sector_to_disk({1.0, 1.0}), numrad::DegenerateSector);
  EXPECT_THROW(numrad::sector_to_disk({1.0, -1.0}), numrad::DegenerateSector);
}

TEST(SectorToDisk, OverlapIdentity) {
  numrad::Rng rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const SectorPair s{rng.complex_gaussian(), rng.complex_gaussian()};
    const auto d = numrad::sector_to_disk(s);
    const double lhs = std::norm(d.lambda) - d.r * d.r;
    EXPECT_NEAR(lhs, s.overlap(), 1e-12 * std::max(1.0, std::norm(d.lambda)));
  }
}

TEST(Corollary27, Examples) {
  const auto a = numrad::eval_corollary27(diag(1, 2), {2.0, 1.0});
  EXPECT_TRUE(a.hypothesis_ok);
  EXPECT_NEAR(a.lhs, 0.0, 1e-12);
  EXPECT_NEAR(a.rhs, 1.0 / 12.0, 1e-15);

  const auto b = numrad::eval_corollary27(diag(1, 4), SectorPair::interval(1, 4));
  EXPECT_TRUE(b.hypothesis_ok);
  EXPECT_NEAR(b.lhs, 0.0, 1e-12);
  EXPECT_NEAR(b.rhs, 0.45, 1e-15);

  numrad::Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto r = numrad::eval_corollary27(hermitian_in(1, 4, 3, rng), SectorPair::interval(1, 4));
    EXPECT_TRUE(r.hypothesis_ok);
    EXPECT_GE(r.slack, 0.0);
  }
}

TEST(Corollary27, DegenerateSectorIsAFailedHypothesis) {
  EXPECT_FALSE(numrad::eval_corollary27(diag(1, 1), {1.0, 1.0}).hypothesis_ok);
  EXPECT_FALSE(numrad::eval_corollary27(diag(1, 1), {1.0, -1.0}).hypothesis_ok);
}

TEST(Corollary27, EqualsTheorem21ThroughSectorToDisk) {
  numrad::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const double m = rng.uniform(0.1, 2.0);
    const double M = m + rng.uniform(0.01, 3.0);
    const auto inst = numrad::gen_segment_instance(m, M, 3, 500 + trial);
    const auto c27 = numrad::eval_corollary27(inst.a, inst.sector);
    const auto t21 = numrad::eval_theorem21(inst.a, numrad::sector_to_disk(inst.sector));
    EXPECT_NEAR(c27.rhs, t21[0].rhs, 1e-12);
    EXPECT_NEAR(c27.lhs, t21[0].lhs, 1e-12);
    EXPECT_TRUE(c27.hypothesis_ok);
    EXPECT_TRUE(t21[0].hypothesis_ok);
  }
}

TEST(Corollary213, Examples) {
  const Complex lambda(0.6, 0.8);
  const auto scalar =
      numrad::eval_corollary213(lambda * Matrix::identity(2), {lambda, 0.3, 0.0});
  ASSERT_EQ(scalar.size(), 1u);
  EXPECT_TRUE(scalar[0].hypothesis_ok);
  EXPECT_NEAR(scalar[0].lhs, 0.0, 1e-12);
  EXPECT_NEAR(scalar[0].rhs, 0.09, 1e-15);

  // |lambda| = w(S2) = 1/2: the special case with rhs r^2.
  const double r = sigma_max_2x2(numrad::shift(s2(), 0.5));
  const auto shift = numrad::eval_corollary213(s2(), {0.5, r, std::nullopt});
  ASSERT_EQ(shift.size(), 2u);
  EXPECT_EQ(shift[0].inequality_id, InequalityId::C2_13);
  EXPECT_EQ(shift[1].inequality_id, InequalityId::R2_15);
  for (const auto& rep : shift) {
    EXPECT_TRUE(rep.hypothesis_ok) << rep.diagnostic;
    EXPECT_NEAR(rep.lhs, 0.75, 1e-12);
    EXPECT_NEAR(rep.rhs, r * r, 1e-9);
    EXPECT_GE(rep.slack, -1e-8);
  }

  // rho above ||lambda| - w| = 1/2.
  const auto big = numrad::eval_corollary213(s2(), {1.0, 2.0, 0.6});
  EXPECT_FALSE(big[0].hypothesis_ok);
  EXPECT_NE(big[0].diagnostic.find("rho"), std::string::npos);
  EXPECT_TRUE(numrad::eval_corollary213(s2(), {1.0, 2.0, 0.4})[0].hypothesis_ok);
}

TEST(Corollary213, InvalidRho) {
  EXPECT_THROW(numrad::eval_corollary213(s2(), {1.0, 2.0, -0.1}), numrad::InvalidRho);
  EXPECT_THROW(numrad::eval_corollary213(s2(), {1.0, 2.0, std::nan("")}), numrad::InvalidRho);
}

TEST(Corollary213, AutoRhoSoundness) {
  numrad::Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex lambda = std::polar(rng.uniform(0.3, 2.0), rng.uniform(0.0, 6.28));
    const auto inst = numrad::gen_disk_instance(lambda, rng.uniform(0.05, 1.0), 3, 900 + trial);
    const auto rep = numrad::eval_corollary213(inst.t, inst.cert).front();
    ASSERT_TRUE(rep.hypothesis_ok);
    EXPECT_GE(rep.slack, -1e-8);
  }
}

TEST(Theorem32, Examples) {
  const auto unit = numrad::eval_theorem32(Matrix::identity(2), kCertUnitHalf);
  EXPECT_TRUE(unit[0].hypothesis_ok);
  EXPECT_NEAR(unit[0].lhs, std::sqrt(0.75), 1e-15);
  EXPECT_NEAR(unit[0].rhs, 1.0, 1e-12);
  EXPECT_EQ(unit[0].refinement_flag, std::optional<bool>(true));
  EXPECT_EQ(unit[1].inequality_id, InequalityId::R3_5);
  EXPECT_FALSE(unit[1].refinement_flag.has_value());

  numrad::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto c = numrad::ginibre(4, rng);
    c = Complex(1.0 / numrad::operator_norm(c)) * c;
    const Matrix t = Matrix::identity(4) + Complex(0.1) * c;
    for (const auto& rep : numrad::eval_theorem32(t, {1.0, 0.1, std::nullopt})) {
      EXPECT_TRUE(rep.hypothesis_ok);
      EXPECT_GE(rep.slack, 0.0);
    }
  }

  EXPECT_FALSE(numrad::eval_theorem32(Matrix::identity(2), {1.0, 1.0, std::nullopt})[0].hypothesis_ok);
  EXPECT_THROW(numrad::eval_theorem32(Matrix(2), kCertUnitHalf), numrad::ZeroOperator);
}

TEST(Theorem32, RefinementThreshold) {
  const double threshold = std::sqrt(3.0) / 2.0;
  const auto at = numrad::eval_theorem32(Matrix::identity(2), {1.0, threshold, std::nullopt});
  EXPECT_EQ(at[0].refinement_flag, std::optional<bool>(true));
  const auto above =
      numrad::eval_theorem32(Matrix::identity(2), {1.0, std::nextafter(threshold, 1.0), std::nullopt});
  EXPECT_EQ(above[0].refinement_flag, std::optional<bool>(false));
  // At the threshold the lower bound is exactly 1/2.
  EXPECT_NEAR(at[0].lhs, 0.5, 1e-15);
}

TEST(Corollary36, Examples) {
  const auto a = numrad::eval_corollary36(diag(1, 4), SectorPair::interval(1, 4));
  EXPECT_TRUE(a[0].hypothesis_ok);
  EXPECT_NEAR(a[0].lhs, 0.8, 1e-15);
  EXPECT_NEAR(a[0].rhs, 1.0, 1e-12);
  EXPECT_EQ(a[0].refinement_flag, std::optional<bool>(true));  // 3 <= (sqrt3/2) 5

  const auto b = numrad::eval_corollary36(diag(1, 2), {2.0, 1.0});
  EXPECT_NEAR(b[0].lhs, 2.0 * std::sqrt(2.0) / 3.0, 1e-15);
  EXPECT_LE(b[0].lhs, b[0].rhs);

  EXPECT_THROW(numrad::eval_corollary36(diag(1, 2), {-1.0, 1.0}), numrad::InvalidSector);
  EXPECT_THROW(numrad::eval_corollary46(diag(1, 2), {-1.0, 1.0}), numrad::InvalidSector);
}

TEST(Corollary36, RefinementFlagPredicate) {
  // |phi - varphi| <= (sqrt3/2)|phi + varphi| with (m, M) = (1, M):
  // M - 1 <= (sqrt3/2)(M + 1) iff M <= (1 + c)/(1 - c), c = sqrt3/2.
  const auto flag = [](double M) {
    return numrad::eval_corollary36(diag(1, M), SectorPair::interval(1, M))[0].refinement_flag.value();
  };
  EXPECT_TRUE(flag(13.0));
  EXPECT_FALSE(flag(14.0));
}

TEST(Theorem42, Examples) {
  const Complex lambda(-0.4, 0.9);
  const auto scalar = numrad::eval_theorem42(lambda * Matrix::identity(3), {lambda, 0.5, std::nullopt});
  EXPECT_TRUE(scalar.hypothesis_ok);
  EXPECT_NEAR(scalar.lhs, 0.0, 1e-12);
  EXPECT_GT(scalar.rhs, 0.0);

  numrad::Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    auto c = numrad::ginibre(3, rng);
    c = Complex(1.0 / numrad::operator_norm(c)) * c;
    const auto rep =
        numrad::eval_theorem42(Matrix::identity(3) + Complex(0.3) * c, {1.0, 0.3, std::nullopt});
    EXPECT_TRUE(rep.hypothesis_ok);
    EXPECT_GE(rep.slack, 0.0);
  }

  EXPECT_FALSE(numrad::eval_theorem42(s2(), {1.0, 2.0, std::nullopt}).hypothesis_ok);
  EXPECT_THROW(numrad::eval_theorem42(Matrix(2), kCertUnitHalf), numrad::ZeroOperator);
}

TEST(Corollary46, Examples) {
  const auto a = numrad::eval_corollary46(diag(1, 4), SectorPair::interval(1, 4));
  EXPECT_TRUE(a.hypothesis_ok);
  EXPECT_NEAR(a.lhs, 0.0, 1e-12);
  EXPECT_NEAR(a.rhs, 4.0, 1e-12);

  const auto b = numrad::eval_corollary46(diag(1, 2), {2.0, 1.0});
  EXPECT_NEAR(b.rhs, (3.0 - 2.0 * std::sqrt(2.0)) * 2.0, 1e-12);

  numrad::Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto rep = numrad::eval_corollary46(hermitian_in(0.5, 3.0, 4, rng), SectorPair::interval(0.5, 3.0));
    EXPECT_TRUE(rep.hypothesis_ok);
    EXPECT_GE(rep.slack, 0.0);
  }
}

TEST(Remark49, HermitianExamples) {
  const auto reps = numrad::eval_remark49(diag(1, 4), SectorPair::interval(1, 4));
  EXPECT_EQ(reps[0].inequality_id, InequalityId::R4_9);
  EXPECT_NEAR(reps[0].lhs, 1.0, 1e-12);
  EXPECT_EQ(reps[0].rhs, 1.25);
  EXPECT_EQ(reps[3].inequality_id, InequalityId::R4_12);
  EXPECT_NEAR(reps[3].lhs, 0.0, 1e-12);
  EXPECT_EQ(reps[3].rhs, 0.25 * 9.0 / 5.0);
  EXPECT_NEAR(reps[1].rhs, 0.25 * 4.0, 1e-12);  // (2 - 1)^2 / (2 * 2) * w
  EXPECT_NEAR(reps[2].rhs, 4.0, 1e-12);         // (2 - 1)^2 * w
  for (const auto& r : reps) EXPECT_TRUE(r.hypothesis_ok);
}

TEST(Remark49, NonNormalAccretiveInstances) {
  // ||A - (M+m)/2|| <= (M-m)/2 makes (A* - m)(M - A) accretive.
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = numrad::gen_disk_instance(2.5, 1.5, 4, 300 + trial);
    const auto reps = numrad::eval_remark49(inst.t, SectorPair::interval(1, 4, SectorMode::Accretive));
    for (const auto& r : reps) {
      EXPECT_TRUE(r.hypothesis_ok) << r.diagnostic;
      EXPECT_GE(r.slack, -1e-8) << numrad::to_string(r.inequality_id);
    }
  }
}

TEST(Remark49, InvalidInterval) {
  EXPECT_THROW(numrad::eval_remark49(diag(1, 2), SectorPair::interval(0.0, 1.0)), numrad::InvalidInterval);
  EXPECT_THROW(numrad::eval_remark49(diag(1, 2), SectorPair::interval(2.0, 1.0)), numrad::InvalidInterval);
  EXPECT_THROW(numrad::eval_remark49(diag(1, 2), {Complex(2, 1), 1.0}), numrad::InvalidInterval);
}

TEST(VerifyAll, IdentityRouting) {
  const std::vector<numrad::Certificate> certs{kCertUnitHalf};
  const auto reps = numrad::verify_all(Matrix::identity(2), certs);
  std::vector<InequalityId> ids;
  for (const auto& r : reps) ids.push_back(r.inequality_id);
  EXPECT_EQ(ids, (std::vector<InequalityId>{InequalityId::T2_2, InequalityId::E2_4, InequalityId::C2_13,
                                            InequalityId::T3_2, InequalityId::R3_5, InequalityId::T4_2}));
  for (const auto& r : reps) EXPECT_TRUE(r.hypothesis_ok);
}

TEST(VerifyAll, EmptyCertificates) {
  EXPECT_TRUE(numrad::verify_all(s2(), {}).empty());
}

TEST(VerifyAll, FailingDiskFailsEverything) {
  const std::vector<numrad::Certificate> certs{DiskCertificate{1.0, 1.0, std::nullopt}};
  const auto reps = numrad::verify_all(s2(), certs);
  EXPECT_EQ(reps.size(), 6u);
  for (const auto& r : reps) EXPECT_FALSE(r.hypothesis_ok) << numrad::to_string(r.inequality_id);
}

TEST(VerifyAll, MixedCertificatesSortedById) {
  const std::vector<numrad::Certificate> certs{SectorPair::interval(1, 4), DiskCertificate{2.5, 1.5, std::nullopt}};
  const auto reps = numrad::verify_all(diag(1, 4), certs);
  EXPECT_EQ(reps.size(), 14u);
  EXPECT_TRUE(std::is_sorted(reps.begin(), reps.end(),
                             [](const auto& a, const auto& b) { return a.inequality_id < b.inequality_id; }));
  for (const auto& r : reps) {
    EXPECT_TRUE(r.hypothesis_ok) << numrad::to_string(r.inequality_id);
    EXPECT_GE(r.slack, -1e-8);
  }
}

TEST(VerifyAll, NegativeOverlapAndZeroOperator) {
  const std::vector<numrad::Certificate> sector{SectorPair{1.0, -2.0}};
  for (const auto& r : numrad::verify_all(diag(1, 2), sector)) EXPECT_FALSE(r.hypothesis_ok);
  const std::vector<numrad::Certificate> disk{kCertUnitHalf};
  EXPECT_EQ(numrad::verify_all(Matrix(2), disk).size(), 6u);
}

TEST(VerifyAll, ReportsMatchRecomputation) {
  numrad::Rng rng(10);
  const auto t = numrad::ginibre(3, rng);
  const std::vector<numrad::Certificate> certs{numrad::optimize_lambda(t)};
  const double w = numrad::numerical_radius(t);
  const double norm = numrad::operator_norm(t);
  for (const auto& r : numrad::verify_all(t, certs)) {
    EXPECT_NEAR(r.w, w, 1e-9);
    EXPECT_NEAR(r.norm, norm, 1e-9);
  }
}

TEST(OptimizeLambda, DiagonalChebyshevCenter) {
  // For diagonal T, r(lambda) = max |d_i - lambda|: the center of {0, 1} is 1/2.
  const auto c = numrad::optimize_lambda(diag(0, 1));
  EXPECT_NEAR(std::abs(c.lambda - 0.5), 0.0, 1e-6);
  EXPECT_NEAR(c.r, 0.5, 1e-6);
  EXPECT_TRUE(numrad::check_disk(diag(0, 1), c).ok);
}

TEST(OptimizeLambda, ScalarAndShift) {
  const Complex lambda0(0.7, -0.2);
  const auto c = numrad::optimize_lambda(lambda0 * Matrix::identity(3));
  EXPECT_NEAR(std::abs(c.lambda - lambda0), 0.0, 1e-7);
  EXPECT_NEAR(c.r, 1e-9, 1e-7);

  const auto s = numrad::optimize_lambda(s2());
  EXPECT_LE(s.r, numrad::operator_norm(s2()) + 1e-9);
  EXPECT_TRUE(numrad::check_disk(s2(), s).ok);
}

TEST(Monotonicity, RhsNondecreasingInR) {
  numrad::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = numrad::ginibre(3, rng);
    const auto m = numrad::measure(t);
    const Complex lambda = 3.0 * rng.complex_gaussian() + 0.1;
    double prev[3] = {-1.0, -1.0, -1.0};
    for (double r = 0.05; r < std::abs(lambda); r += 0.05) {
      const DiskCertificate cert{lambda, r, std::nullopt};
      const double now[3] = {numrad::eval_theorem21(t, cert, m)[0].rhs,
                             numrad::eval_theorem32(t, cert, m)[1].rhs,
                             numrad::eval_theorem42(t, cert, m).rhs};
      for (int k = 0; k < 3; ++k) {
        EXPECT_GE(now[k], prev[k]);
        prev[k] = now[k];
      }
    }
  }
}

TEST(Soundness, DiskInstancesAllInequalities) {
  numrad::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex lambda = std::polar(rng.uniform(0.2, 2.0), rng.uniform(0.0, 6.28));
    const double r = rng.uniform(0.01, 0.99) * std::abs(lambda);
    const auto inst = numrad::gen_disk_instance(lambda, r, 1 + trial % 5, 40 + trial);
    const std::vector<numrad::Certificate> certs{inst.cert};
    for (const auto& rep : numrad::verify_all(inst.t, certs)) {
      EXPECT_TRUE(rep.hypothesis_ok);
      EXPECT_FALSE(rep.violated()) << numrad::to_string(rep.inequality_id) << " slack " << rep.slack;
    }
  }
}

TEST(ReportJson, FieldsExactlyAsType) {
  const auto rep = numrad::eval_theorem32(Matrix::identity(2), kCertUnitHalf)[0];
  const auto j = nlohmann::json::parse(numrad::report_to_json_line(rep));
  const std::set<std::string> keys{"inequality_id", "hypothesis_ok", "diagnostic", "lhs", "rhs",
                                   "slack",         "refinement_flag", "w",        "norm"};
  std::set<std::string> got;
  for (auto it = j.begin(); it != j.end(); ++it) got.insert(it.key());
  EXPECT_EQ(got, keys);
  EXPECT_EQ(j.at("inequality_id"), "T3_2");
  EXPECT_EQ(j.at("refinement_flag"), true);
  EXPECT_EQ(j.at("lhs").get<double>(), rep.lhs);
  EXPECT_EQ(j.at("slack").get<double>(), rep.slack);

  const auto line = numrad::report_to_json_line(numrad::eval_theorem21(s2(), {1.0, 2.0, std::nullopt})[0]);
  EXPECT_NE(line.find("\"refinement_flag\":null"), std::string::npos);
  EXPECT_NE(line.find("\"rhs\":2,"), std::string::npos);
}

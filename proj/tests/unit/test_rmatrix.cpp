#include <gtest/gtest.h>

#include "eqa/error.hpp"
#include "eqa/rmatrix.hpp"
#include "eqa/special_functions.hpp"

using namespace eqa;

namespace {

const Params kPar = Params::make(0.1, -0.3);
const Complex kX{1.3, 0.2};

CMatrix2 m2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix2 m;
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

CMatrix4 sample_matrix() {
  CMatrix4 m;
  for (int i = 0; i < 16; ++i) m(i / 4, i % 4) = Complex(i + 1, 0.5 * i - 3);
  return m;
}

}  // namespace

TEST(CMatrix4, LegOperationsAreInvolutions) {
  const CMatrix4 m = sample_matrix();
  EXPECT_EQ(partial_transpose(partial_transpose(m, 1), 1), m);
  EXPECT_EQ(partial_transpose(partial_transpose(m, 2), 2), m);
  EXPECT_EQ(permute_legs(permute_legs(m)), m);
  EXPECT_EQ(pauli_conjugate(pauli_conjugate(m, 1, 1), 1, 1), m);
  EXPECT_EQ(pauli_conjugate(pauli_conjugate(m, 3, 1), 3, 1), m);
}

TEST(CMatrix4, IdentityFixedPoints) {
  EXPECT_EQ(permute_legs(CMatrix4::identity()), CMatrix4::identity());
  EXPECT_EQ(partial_transpose(CMatrix4::identity(), 2), CMatrix4::identity());
}

TEST(CMatrix4, PartialTransposeOfKroneckerProduct) {
  const CMatrix2 a = m2({1, 2}, {0, -1}, {3, 0}, {0.5, 0.5});
  const CMatrix2 b = m2({-2, 1}, {4, 0}, {0, 7}, {1, -1});
  EXPECT_EQ(partial_transpose(CMatrix4::kron(a, b), 2), CMatrix4::kron(a, b.transpose()));
  EXPECT_EQ(partial_transpose(CMatrix4::kron(a, b), 1), CMatrix4::kron(a.transpose(), b));
  EXPECT_EQ(permute_legs(CMatrix4::kron(a, b)), CMatrix4::kron(b, a));
}

TEST(CMatrix4, InverseRoundTrip) {
  CMatrix4 m = sample_matrix();
  for (int i = 0; i < 4; ++i) m(i, i) += 20.0;
  EXPECT_LT((m * m.inverse() - CMatrix4::identity()).max_abs(), 1e-13);
}

TEST(CMatrix4, SingularInverseThrows) {
  EXPECT_THROW(CMatrix4{}.inverse(), Error);
}

TEST(RMatrix, EightVertexSparsity) {
  const CMatrix4 r = r_matrix(kPar, kX);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool allowed = i == j || i + j == 3;
      if (!allowed) EXPECT_EQ(r(i, j), Complex(0.0)) << i << j;
    }
  }
  EXPECT_EQ(r(0, 0), r(3, 3));
  EXPECT_EQ(r(1, 2), r(2, 1));
  EXPECT_EQ(r(1, 2), mu_inv(kX, kPar));
}

TEST(RMatrix, UnitarityAtRealSample) {
  const CMatrix4 u = permute_legs(r_matrix(kPar, 1.0 / 1.3)) * r_matrix(kPar, 1.3);
  EXPECT_LT((u - CMatrix4::identity()).max_abs(), 1e-9);
}

TEST(RMatrix, Prop1AtComplexSample) {
  const IdentitySuiteSample s = check_prop1(kPar, kX);
  EXPECT_LT(s.residuals.at(Residual::Unitarity), 1e-9);
  EXPECT_LT(s.residuals.at(Residual::Crossing), 1e-9);
  EXPECT_LT(s.residuals.at(Residual::Antisymmetry), 1e-9);
}

TEST(RMatrix, Prop1TighterEpsDoesNotHurt) {
  const IdentitySuiteSample a = check_prop1(kPar, kX);
  const IdentitySuiteSample b = check_prop1(kPar, kX, TruncationPolicy{1e-15, 512, 0.999});
  for (auto r : {Residual::Unitarity, Residual::Crossing, Residual::Antisymmetry}) {
    EXPECT_LE(b.residuals.at(r), std::max(a.residuals.at(r), 1e-14));
  }
}

TEST(RPlus, ScalarMultipleOfR) {
  const CMatrix4 r = r_matrix(kPar, kX);
  const CMatrix4 rp = r_plus(kPar, kX);
  const Complex f = tau(std::sqrt(kPar.q) / kX, kPar.q);
  EXPECT_LT((rp - r * f).max_abs(), 1e-14 * r.max_abs() * std::abs(f));
}

TEST(RPlus, QuasiPeriodicity) {
  const IdentitySuiteSample s = check_quasiperiodicity(kPar, kX);
  EXPECT_LT(s.residuals.at(Residual::Quasiperiodicity), 1e-9);
}

TEST(RPlusStar, NullShiftIsRPlus) { EXPECT_EQ(r_plus_star(kPar, kX, 0.0), r_plus(kPar, kX)); }

TEST(RPlusStar, ShiftedNomeMatchesRecomputation) {
  const Params shifted = Params::make(kPar.p * std::pow(kPar.q, 4.0), kPar.q);
  EXPECT_LT((r_plus_star(kPar, kX, -2.0) - r_plus(shifted, kX)).max_abs(),
            1e-12 * r_plus(shifted, kX).max_abs());
}

TEST(RPlusStar, OutOfDiskNome) {
  try {
    r_plus_star(Params::make(0.5, -0.3), kX, 2.0);  // |p q^{-4}| > 1
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BaseOutOfDomain);
  }
}

TEST(CriticalLevel, Collapse) {
  EXPECT_LT((cal_r(kPar, -2.0, kX) - CMatrix4::identity()).max_abs(), 1e-9);
  EXPECT_LT(std::abs(t_factor(kPar, -2.0, kX) - 1.0), 1e-11);
  EXPECT_LT((y_operator(kPar, -2.0, kX) - CMatrix4::identity()).max_abs(), 1e-9);
}

// At h = 1e-4 the O(h^2) term of the central difference is itself near 1e-6 here,
// so the closed form is checked against the Richardson combination of h and h/2.
TEST(CriticalLevel, DerivativesAgreeWithClosedForm) {
  const double h = kCriticalStep;
  const Complex closed = t_factor_dc_closed_form(kPar, kX);
  const CMatrix4 dr = (4.0 * cal_r_dc(kPar, kX, h / 2) - cal_r_dc(kPar, kX, h)) * (1.0 / 3.0);
  EXPECT_LT(dr.max_abs(), 1e-6);
  const Complex dt = (4.0 * t_factor_dc(kPar, kX, h / 2) - t_factor_dc(kPar, kX, h)) / 3.0;
  EXPECT_LT(std::abs(dt - closed), 1e-6 * std::max(1.0, std::abs(closed)));
  const CMatrix4 dy = (4.0 * y_operator_dc(kPar, kX, h / 2) - y_operator_dc(kPar, kX, h)) * (1.0 / 3.0);
  double off = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) off = std::max(off, std::abs(dy(i, j)));
  EXPECT_LT(off, 1e-6);
  EXPECT_LT((dy - CMatrix4::identity() * closed).max_abs(), 1e-6 * std::max(1.0, std::abs(closed)));
}

TEST(CriticalLevel, SecondOrderConvergenceOfT) {
  const IdentitySuiteSample s = check_c_derivatives(kPar, kX);
  const double ratio = s.residuals.at(Residual::dT_dc_ratio);
  EXPECT_GE(ratio, 3.0);
  EXPECT_LE(ratio, 5.0);
}

TEST(CriticalLevel, GenericCIsNotIdentity) {
  EXPECT_GT((cal_r(kPar, -1.3, kX) - CMatrix4::identity()).max_abs(), 1e-3);
}

#include <gtest/gtest.h>

#include "eqa/elliptic.hpp"
#include "eqa/error.hpp"

using namespace eqa;

TEST(NomeToElliptic, RealNomeGivesRealModulus) {
  const EllipticData e = nome_to_elliptic(Params::make(0.1, -0.3));
  EXPECT_EQ(e.modulus.imag(), 0.0);
  EXPECT_GT(e.modulus.real(), 0.0);
  EXPECT_LT(e.modulus.real(), 1.0);
  EXPECT_GT(e.K.real(), 0.0);
  EXPECT_EQ(e.K.imag(), 0.0);
}

TEST(NomeToElliptic, RoundTrips) {
  for (Complex p : {Complex{0.02}, Complex{0.1}, Complex{0.5}, Complex{0.2, 0.3}, Complex{-0.3, 0.1}}) {
    for (Complex q : {Complex{0.05}, Complex{-0.3}, Complex{0.2, -0.4}}) {
      const Complex x{1.3, 0.4};
      const EllipticData e = nome_to_elliptic(Params::make(p, q), x);
      EXPECT_LT(std::abs(std::exp(-kPi * e.Kprime / e.K) / p - 1.0), 1e-10);
      EXPECT_LT(std::abs(-std::exp(-kPi * e.lambda / (2.0 * e.K)) / q - 1.0), 1e-10);
      EXPECT_LT(std::abs(std::exp(kPi * e.u / (2.0 * e.K)) / x - 1.0), 1e-10);
    }
  }
}

TEST(NomeToElliptic, BranchFlagOnCut) {
  // q positive real puts -q on the cut of the principal logarithm.
  EXPECT_TRUE(nome_to_elliptic(Params::make(0.1, 0.3)).branch_ambiguous);
  EXPECT_FALSE(nome_to_elliptic(Params::make(0.1, -0.3)).branch_ambiguous);
}

TEST(JacobiSn, Zero) {
  const EllipticData e = nome_to_elliptic(Params::make(0.1, -0.3));
  EXPECT_EQ(jacobi_sn(0.0, e), Complex(0.0));
}

TEST(JacobiSn, QuarterPeriodIsOne) {
  const EllipticData e = nome_to_elliptic(Params::make(0.1, -0.3));
  EXPECT_LT(std::abs(jacobi_sn(e.K, e) - 1.0), 1e-10);
}

TEST(JacobiSn, TrigonometricLimit) {
  const EllipticData e = nome_to_elliptic(Params::make(1e-8, -0.3));
  EXPECT_LT(std::abs(jacobi_sn(0.3, e) - std::sin(0.3)), 1e-6);
}

TEST(Snh, ZeroAndOddness) {
  const EllipticData e = nome_to_elliptic(Params::make(Complex{0.2, 0.1}, -0.3));
  EXPECT_EQ(snh(0.0, e), Complex(0.0));
  const Complex u{0.4, -0.2};
  EXPECT_LT(std::abs(snh(-u, e) + snh(u, e)), 1e-11);
}

TEST(BaxterWeights, AtUnitSpectralParameter) {
  const BaxterWeights w = baxter_weights(Params::make(0.1, -0.3), 1.0);
  EXPECT_EQ(w.b, Complex(0.0));
  EXPECT_EQ(w.d, Complex(0.0));
  EXPECT_LT(std::abs(w.a - 1.0), 1e-15);
  EXPECT_EQ(w.c_w, Complex(1.0));
}

TEST(BaxterWeights, AtCrossing) {
  // u = lambda  <=>  x = exp(pi lambda / 2K) = -1/q.
  const Params par = Params::make(0.1, -0.3);
  const BaxterWeights w = baxter_weights(par, -1.0 / par.q);
  EXPECT_LT(std::abs(w.a), 1e-12);
  EXPECT_LT(std::abs(w.d), 1e-12);
}

TEST(BaxterWeights, GenericSanity) {
  const BaxterWeights w = baxter_weights(Params::make(0.1, -0.3), {1.3, 0.2});
  const Complex s = w.a * w.c_w - w.b * w.d;
  EXPECT_TRUE(std::isfinite(s.real()) && std::isfinite(s.imag()));
  EXPECT_GT(std::abs(s), 1e-6);
}

#include <gtest/gtest.h>

#include "../support/oracle.hpp"
#include "eqa/error.hpp"
#include "eqa/mode_expansion.hpp"

using namespace eqa;

TEST(Kernel, ZeroAndOddness) {
  EXPECT_EQ(kernel_closed_form(1, 0, 0.4), Complex(0.0));
  for (int k : {1, 2, 3}) {
    for (int s = 1; s <= 10; ++s) {
      EXPECT_EQ(kernel_closed_form(k, -s, 0.4), -kernel_closed_form(k, s, 0.4));
    }
  }
}

TEST(Kernel, DirectArithmetic) {
  const double q = 0.4;
  const double want = 2.0 * std::log(q) * (std::pow(q, 3) - std::pow(q, -3)) / (q + 1.0 / q);
  EXPECT_NEAR(kernel_closed_form(1, 1, q).real(), want, 1e-15 * std::abs(want));
}

TEST(Kernel, OverflowGuard) { EXPECT_THROW(kernel_closed_form(3, 200, 0.01), Error); }

TEST(Annulus, MidpointAndValidation) {
  const AnnulusSpec a = AnnulusSpec::midpoint(0.4, 1);
  EXPECT_GT(a.r, 0.4 * 0.4);
  EXPECT_LT(a.r, 0.4);
  EXPECT_THROW((AnnulusSpec{1, 0.4}.validate(0.4)), Error);
  EXPECT_THROW(AnnulusSpec::midpoint(-0.4, 1), Error);
}

TEST(Laurent, OddHarmonicsVanishAndRefinementIsStable) {
  const AnnulusSpec a = AnnulusSpec::midpoint(0.4, 1);
  // Extraction itself refuses nonvanishing odd modes or aliasing.
  const LaurentCoeffs c1 = laurent_extract(0.4, a, 10, 256);
  const LaurentCoeffs c2 = laurent_extract(0.4, a, 10, 512);
  // Coefficients grow like q^{-2k|s|}; compare relative to max(1, |c|).
  for (int s = -10; s <= 10; ++s) {
    EXPECT_LT(std::abs(c1.at(s) - c2.at(s)), 1e-10 * std::max(1.0, std::abs(c2.at(s)))) << s;
  }
}

TEST(Laurent, GeometricExpansionOracle) {
  const AnnulusSpec a = AnnulusSpec::midpoint(0.4, 1);
  const LaurentCoeffs c = laurent_extract(0.4, a, 3, 256);
  for (const auto& row : fixtures::oracle()["laurent"]) {
    const int s = row["s"].get<int>();
    const Complex want = fixtures::oracle_complex(row["value"]);
    EXPECT_LT(std::abs(c.at(s) - want), 1e-10 * std::max(1.0, std::abs(want))) << s;
  }
}

TEST(Laurent, SampleCountPrecondition) {
  const AnnulusSpec a = AnnulusSpec::midpoint(0.4, 1);
  EXPECT_THROW(laurent_extract(0.4, a, 10, 64), Error);   // below 8 s_max
  EXPECT_THROW(laurent_extract(0.4, a, 10, 100), Error);  // not a power of two
  EXPECT_EQ(default_sample_count(10), 256);
  EXPECT_EQ(default_sample_count(20), 512);
}

TEST(Symmetrize, OddOutputAndRangeCheck) {
  const AnnulusSpec a = AnnulusSpec::midpoint(0.4, 1);
  const LaurentCoeffs in = laurent_extract(0.4, a, 10, 256);
  const LaurentCoeffs out = laurent_extract(0.4, {1, 1.0 / a.r}, 10, 256);
  const LaurentCoeffs sym = symmetrize(in, out);
  EXPECT_LT(std::abs(sym.at(0)), 1e-10);
  for (int s = 1; s <= 10; ++s) {
    EXPECT_LT(std::abs(sym.at(s) + sym.at(-s)), 1e-10 * std::max(1.0, std::abs(sym.at(s)))) << s;
  }
  const LaurentCoeffs shorter = laurent_extract(0.4, a, 5, 256);
  try {
    symmetrize(in, shorter);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RangeMismatch);
  }
}

TEST(Prop2, KernelMatchesForAllCells) {
  for (int k : {1, 2, 3}) {
    for (double q : {0.3, 0.4, 0.5}) {
      const Prop2Report r = verify_prop2(q, k, 10);
      EXPECT_LT(r.max_residual, 1e-8) << k << " " << q;
      EXPECT_LT(r.max_oddness, 1e-10) << k << " " << q;
      EXPECT_EQ(r.sign, 1);
    }
  }
}

TEST(Prop2, AnnulusDependence) {
  const LaurentCoeffs a = laurent_extract(0.4, AnnulusSpec::midpoint(0.4, 1), 10, 256);
  const LaurentCoeffs b = laurent_extract(0.4, AnnulusSpec::midpoint(0.4, 2), 10, 256);
  double diff = 0.0;
  for (int s = -10; s <= 10; ++s) diff = std::max(diff, std::abs(a.at(s) - b.at(s)));
  EXPECT_GT(diff, 1e-3);
}

TEST(Prop2, RadiusIndependenceWithinAnnulus) {
  const double q = 0.4;
  const LaurentCoeffs a = laurent_extract(q, {1, std::pow(q, 1.4)}, 10, 256);
  const LaurentCoeffs b = laurent_extract(q, {1, std::pow(q, 1.6)}, 10, 256);
  for (int s = -10; s <= 10; ++s) {
    EXPECT_LT(std::abs(a.at(s) - b.at(s)), 1e-10 * std::max(1.0, std::abs(a.at(s)))) << s;
  }
}

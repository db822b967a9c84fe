#pragma once

#include <vector>

#include "eqa/types.hpp"

namespace eqa {

/// Circle |x| = r inside the open annulus |q|^{k+1} < r < |q|^k.
struct AnnulusSpec {
  int k = 1;
  double r = 0.0;

  /// Geometric midpoint r = q^{k + 1/2}.
  static AnnulusSpec midpoint(double q, int k);
  /// Throws DomainError unless r keeps a margin of 5% of the annulus width.
  void validate(double q) const;
};

/// Coefficients of x^{2s} for s in [s_min, s_max].
struct LaurentCoeffs {
  int s_min = 0;
  int s_max = -1;
  std::vector<Complex> coeffs;

  Complex at(int s) const { return coeffs.at(static_cast<std::size_t>(s - s_min)); }
  Complex& at(int s) { return coeffs.at(static_cast<std::size_t>(s - s_min)); }
  int size() const { return s_max - s_min + 1; }
};

/// Smallest admissible sample count: max(256, 16 s_max) rounded to a power of two.
int default_sample_count(int s_max);

/// Laurent coefficients of f_poisson_series on |x| = annulus.r by uniform
/// sampling and a discrete Fourier sum. q must be real in (0, 1).
LaurentCoeffs laurent_extract(double q, const AnnulusSpec& annulus, int s_max, int n_samples,
                              const TruncationPolicy& policy = {});

/// Half-sum of the two contour orderings: coefficients at r and at 1/r.
LaurentCoeffs symmetrize(const LaurentCoeffs& raw, const LaurentCoeffs& reciprocal);

/// (-1)^{k+1} 2 Log q (q^{(2k+1)s} - q^{-(2k+1)s}) / (q^s + q^{-s}).
Complex kernel_closed_form(int k, int s, Complex q);

struct Prop2Row {
  int s;
  Complex numeric;
  Complex closed_form;
  double residual;
};

/// Outcome of comparing symmetrized coefficients with the closed-form kernel.
/// Residuals are relative, |num - sign kernel| / max(1, |kernel|).
struct Prop2Report {
  double q = 0.0;
  int k = 1;
  double r = 0.0;
  int n_samples = 0;
  int sign = 1;
  double max_residual = 0.0;
  double max_oddness = 0.0;
  std::vector<Prop2Row> rows;
};

Prop2Report verify_prop2(double q, int k, int s_max, const TruncationPolicy& policy = {});

}  // namespace eqa

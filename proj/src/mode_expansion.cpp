#include "eqa/mode_expansion.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "eqa/error.hpp"
#include "eqa/structure_functions.hpp"

namespace eqa {

namespace {

constexpr double kContourGuard = 1e-4;
constexpr double kOddTolerance = 1e-10;
constexpr double kAliasTolerance = 1e-9;
constexpr double kOverflowExponent = 700.0;

void check_real_q(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorKind::DomainError, "modes.q", "mode extraction needs real q in (0, 1)");
  }
}

void check_contour(double q, double r) {
  // Poles of f sit on |x| = q^j for every integer j.
  const double j = std::round(std::log(r) / std::log(q));
  for (double jj = j - 1; jj <= j + 1; ++jj) {
    if (std::abs(r - std::pow(q, jj)) < kContourGuard) {
      throw Error(ErrorKind::PoleProximity, "laurent_extract.contour",
                  "contour within 1e-4 of a pole circle");
    }
  }
}

struct RawFourier {
  LaurentCoeffs coeffs;
  double max_odd = 0.0;
  double max_sample = 0.0;
};

RawFourier fourier_coefficients(double q, double r, int s_max, int n,
                                const TruncationPolicy& policy) {
  std::vector<Complex> samples(static_cast<std::size_t>(n));
  std::vector<Complex> phases(static_cast<std::size_t>(n));
  RawFourier out;
  for (int j = 0; j < n; ++j) {
    const double theta = 2.0 * kPi * j / n;
    phases[j] = std::polar(1.0, theta);
    samples[j] = f_poisson_series(r * phases[j], Complex{q, 0.0}, policy);
    out.max_sample = std::max(out.max_sample, std::abs(samples[j]));
  }
  // c_idx r^idx = (1/n) sum_j f_j e^{-i idx theta_j}; the phase table is reused mod n.
  auto fourier = [&](int idx) {
    Complex acc{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
      const long long e = (static_cast<long long>(idx) * j) % n;
      const std::size_t slot = static_cast<std::size_t>(e < 0 ? -e : (n - e) % n);
      acc += samples[j] * phases[slot];
    }
    return acc / static_cast<double>(n);
  };

  out.coeffs.s_min = -s_max;
  out.coeffs.s_max = s_max;
  out.coeffs.coeffs.resize(static_cast<std::size_t>(2 * s_max + 1));
  for (int s = -s_max; s <= s_max; ++s) {
    out.coeffs.at(s) = fourier(2 * s) / std::pow(r, 2 * s);
  }
  for (int idx = -2 * s_max - 1; idx <= 2 * s_max + 1; idx += 2) {
    out.max_odd = std::max(out.max_odd, std::abs(fourier(idx)));
  }
  return out;
}

}  // namespace

AnnulusSpec AnnulusSpec::midpoint(double q, int k) {
  check_real_q(q);
  AnnulusSpec a{k, std::pow(q, k + 0.5)};
  a.validate(q);
  return a;
}

void AnnulusSpec::validate(double q) const {
  check_real_q(q);
  if (k < 0) throw Error(ErrorKind::DomainError, "annulus.k", "annulus index must be >= 0");
  const double outer = std::pow(q, k);
  const double inner = std::pow(q, k + 1);
  const double margin = 0.05 * (outer - inner);
  if (!(r > inner + margin && r < outer - margin)) {
    throw Error(ErrorKind::DomainError, "annulus.r",
                "radius ratio outside the open annulus interior");
  }
}

int default_sample_count(int s_max) {
  const unsigned want = static_cast<unsigned>(std::max(256, 16 * s_max));
  return static_cast<int>(std::bit_ceil(want));
}

LaurentCoeffs laurent_extract(double q, const AnnulusSpec& annulus, int s_max, int n_samples,
                              const TruncationPolicy& policy) {
  check_real_q(q);
  if (s_max < 0) throw Error(ErrorKind::DomainError, "laurent_extract.s_max", "s_max >= 0");
  if (n_samples < 8 * s_max || n_samples < 8 ||
      !std::has_single_bit(static_cast<unsigned>(n_samples))) {
    throw Error(ErrorKind::DomainError, "laurent_extract.n_samples",
                "n_samples must be a power of two and >= 8 s_max");
  }
  const double r = annulus.r;
  if (!(r > 0.0)) throw Error(ErrorKind::DomainError, "laurent_extract.r", "radius must be > 0");
  check_contour(q, r);

  const RawFourier base = fourier_coefficients(q, r, s_max, n_samples, policy);
  if (base.max_odd > kOddTolerance * std::max(1.0, base.max_sample)) {
    throw Error(ErrorKind::DomainError, "laurent_extract.odd_modes",
                "odd Fourier modes do not vanish: " + std::to_string(base.max_odd));
  }
  const RawFourier fine = fourier_coefficients(q, r, s_max, 2 * n_samples, policy);
  for (int s = -s_max; s <= s_max; ++s) {
    const Complex a = base.coeffs.at(s);
    const Complex b = fine.coeffs.at(s);
    if (std::abs(a - b) > kAliasTolerance * std::max(1.0, std::abs(b))) {
      throw Error(ErrorKind::AliasingSuspected, "laurent_extract.aliasing",
                  "coefficient s = " + std::to_string(s) + " moved under sample doubling");
    }
  }
  return base.coeffs;
}

LaurentCoeffs symmetrize(const LaurentCoeffs& raw, const LaurentCoeffs& reciprocal) {
  if (raw.s_min != reciprocal.s_min || raw.s_max != reciprocal.s_max ||
      raw.coeffs.size() != reciprocal.coeffs.size()) {
    throw Error(ErrorKind::RangeMismatch, "symmetrize.range", "coefficient ranges differ");
  }
  LaurentCoeffs out = raw;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] = 0.5 * (raw.coeffs[i] + reciprocal.coeffs[i]);
  }
  return out;
}

Complex kernel_closed_form(int k, int s, Complex q) {
  if (k < 1) throw Error(ErrorKind::DomainError, "kernel.k", "kernel defined for k >= 1");
  if (q == 0.0) throw Error(ErrorKind::DomainError, "kernel.q", "q must be nonzero");
  const Complex log_q = std::log(q);
  if (std::abs(s) * (2.0 * k + 1.0) * std::abs(log_q.real()) > kOverflowExponent) {
    throw Error(ErrorKind::DomainError, "kernel.overflow", "|s| k |ln q| too large");
  }
  // Evaluated at |s| and reflected so that oddness in s holds bit for bit.
  const double ds = static_cast<double>(std::abs(s));
  const Complex a = std::exp((2.0 * k + 1.0) * ds * log_q);
  const Complex num = a - 1.0 / a;
  const Complex b = std::exp(ds * log_q);
  const Complex den = b + 1.0 / b;
  const double parity = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^{k+1}
  const Complex v = parity * 2.0 * log_q * num / den;
  return s < 0 ? -v : v;
}

Prop2Report verify_prop2(double q, int k, int s_max, const TruncationPolicy& policy) {
  const AnnulusSpec inner = AnnulusSpec::midpoint(q, k);
  const AnnulusSpec outer{k, 1.0 / inner.r};
  const int n = default_sample_count(s_max);
  const LaurentCoeffs sym = symmetrize(laurent_extract(q, inner, s_max, n, policy),
                                       laurent_extract(q, outer, s_max, n, policy));

  Prop2Report report;
  report.q = q;
  report.k = k;
  report.r = inner.r;
  report.n_samples = n;

  double best = std::numeric_limits<double>::infinity();
  for (int sign : {1, -1}) {
    double worst = 0.0;
    for (int s = -s_max; s <= s_max; ++s) {
      const Complex kern = kernel_closed_form(k, s, Complex{q, 0.0});
      worst = std::max(worst, std::abs(sym.at(s) - double(sign) * kern) /
                                  std::max(1.0, std::abs(kern)));
    }
    if (worst < best) {
      best = worst;
      report.sign = sign;
    }
  }
  report.max_residual = best;
  for (int s = -s_max; s <= s_max; ++s) {
    const Complex kern = double(report.sign) * kernel_closed_form(k, s, Complex{q, 0.0});
    const Complex num = sym.at(s);
    report.rows.push_back(
        {s, num, kern, std::abs(num - kern) / std::max(1.0, std::abs(kern))});
    const Complex odd = sym.at(s) + sym.at(-s);
    report.max_oddness =
        std::max(report.max_oddness, std::abs(odd) / std::max(1.0, std::abs(sym.at(s))));
  }
  return report;
}

}  // namespace eqa

#pragma once

#include <initializer_list>
#include <limits>
#include <span>
#include <string_view>

#include "eqa/types.hpp"

namespace eqa {

/// Denominator factors with modulus below this are treated as poles.
inline constexpr double kPoleGuard = 1e-10;

/// A truncated product together with the smallest factor modulus seen while
/// forming it. Callers dividing by the product use `min_factor` as their pole
/// guard.
struct GuardedProduct {
  Complex value{1.0, 0.0};
  double min_factor = std::numeric_limits<double>::infinity();

  void absorb(const GuardedProduct& other) {
    value *= other.value;
    min_factor = std::min(min_factor, other.min_factor);
  }
};

/// Throws PoleProximity tagged with `guard` if the product has a factor whose
/// modulus is below `distance`.
void require_nonvanishing(const GuardedProduct& product, std::string_view guard,
                          double distance = kPoleGuard);

/// Multi-base q-Pochhammer symbol
///   (x; b_1, ..., b_m)_inf = prod_{n_i >= 0} (1 - x b_1^{n_1} ... b_m^{n_m}).
/// Indices are enumerated lexicographically; an index direction is cut once
/// its partial monomial |x b^n| drops below policy.eps. An empty base list
/// yields the single factor (1 - x).
Complex qpochhammer(Complex x, std::span<const Complex> bases,
                    const TruncationPolicy& policy = {});
Complex qpochhammer(Complex x, std::initializer_list<Complex> bases,
                    const TruncationPolicy& policy = {});
GuardedProduct qpochhammer_guarded(Complex x, std::span<const Complex> bases,
                                   const TruncationPolicy& policy = {});

/// Theta_t(x) = (x;t)(t/x;t)(t;t).
Complex theta(Complex x, Complex t, const TruncationPolicy& policy = {});
GuardedProduct theta_guarded(Complex x, Complex t, const TruncationPolicy& policy = {});

/// 1/kappa(x^2): ratio of eight double-base (p, q^4) Pochhammer symbols.
Complex kappa_inv(Complex x2, const Params& params, const TruncationPolicy& policy = {});

/// 1/mu(x), the scalar normalization of the eight-vertex R-matrix.
Complex mu_inv(Complex x, const Params& params, const TruncationPolicy& policy = {});

/// tau(x) = x^{-1} Theta_{q^4}(q x^2) / Theta_{q^4}(q x^{-2}).
Complex tau(Complex x, Complex q, const TruncationPolicy& policy = {});
inline Complex tau(Complex x, const Params& params, const TruncationPolicy& policy = {}) {
  return tau(x, params.q, policy);
}

/// x d/dx ln Theta_t(x), summed analytically. |t| may be zero here.
Complex theta_logderiv(Complex x, Complex t, const TruncationPolicy& policy = {});

/// y d/dy ln tau(y) = -1 + 2 L(q y^2) + 2 L(q y^{-2}), L = theta_logderiv at base q^4.
Complex tau_logderiv(Complex y, Complex q, const TruncationPolicy& policy = {});

}  // namespace eqa

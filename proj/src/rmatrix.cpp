#include "eqa/rmatrix.hpp"

#include <algorithm>
#include <cmath>

#include "eqa/elliptic.hpp"
#include "eqa/error.hpp"
#include "eqa/special_functions.hpp"

namespace eqa {

CMatrix4 r_matrix(const Params& params, Complex x, const TruncationPolicy& policy) {
  const BaxterWeights w = baxter_weights(params, x, policy);
  const Complex norm = mu_inv(x, params, policy);
  CMatrix4 r;
  r(0, 0) = w.a;
  r(3, 3) = w.a;
  r(0, 3) = w.d;
  r(3, 0) = w.d;
  r(1, 1) = w.b;
  r(2, 2) = w.b;
  r(1, 2) = w.c_w;
  r(2, 1) = w.c_w;
  return r * norm;
}

CMatrix4 r_plus(const Params& params, Complex x, const TruncationPolicy& policy) {
  return tau(std::sqrt(params.q) / x, params.q, policy) * r_matrix(params, x, policy);
}

CMatrix4 r_plus_star(const Params& params, Complex x, Complex c,
                     const TruncationPolicy& policy) {
  Params shifted = params;
  shifted.p = params.p * cpow(params.q, -2.0 * c);
  if (!(std::abs(shifted.p) < 1.0)) {
    throw Error(ErrorKind::BaseOutOfDomain, "r_plus_star.shifted_nome",
                "|p q^{-2c}| must be < 1");
  }
  return r_plus(shifted, x, policy);
}

IdentitySuiteSample check_prop1(const Params& params, Complex x,
                                const TruncationPolicy& policy) {
  const CMatrix4 r_x = r_matrix(params, x, policy);
  const CMatrix4 r21_inv = permute_legs(r_matrix(params, 1.0 / x, policy));
  const CMatrix4 r_cross = r_matrix(params, -x / params.q, policy);
  const CMatrix4 r_neg = r_matrix(params, -x, policy);

  IdentitySuiteSample s{params, x, {}, {}};
  s.residuals[Residual::Unitarity] = (r21_inv * r_x - CMatrix4::identity()).max_abs();
  s.residuals[Residual::Crossing] =
      (partial_transpose(r21_inv, 1) - pauli_conjugate(r_cross, 1)).max_abs();
  s.residuals[Residual::Antisymmetry] = (r_neg + pauli_conjugate(r_x, 3)).max_abs();
  return s;
}

IdentitySuiteSample check_quasiperiodicity(const Params& params, Complex x,
                                           const TruncationPolicy& policy) {
  const CMatrix4 lhs = r_plus(params, -std::sqrt(params.p) * x, policy);
  const CMatrix4 r21 = permute_legs(r_plus(params, 1.0 / x, policy));
  const CMatrix4 rhs = pauli_conjugate(r21.inverse(), 1);
  IdentitySuiteSample s{params, x, {}, {}};
  const double diff = (lhs - rhs).max_abs();
  s.residuals[Residual::Quasiperiodicity] = diff / std::max(1.0, rhs.max_abs());
  s.residuals[Residual::QuasiperiodicityAbs] = diff;
  return s;
}

CMatrix4 cal_r(const Params& params, Complex c, Complex x, const TruncationPolicy& policy) {
  const Complex q = params.q;
  const CMatrix4 r_inv = r_matrix(params, 1.0 / x, policy);
  const CMatrix4 r_shift = r_matrix(params, cpow(q, -c - 2.0) * x, policy);
  const CMatrix4 r_c = r_matrix(params, cpow(q, c) * x, policy);
  const CMatrix4 inner = partial_transpose(r_inv * r_shift * r_inv, 2);
  return partial_transpose(inner * partial_transpose(r_c, 2), 2);
}

Complex t_factor(const Params& params, Complex c, Complex x, const TruncationPolicy& policy) {
  const Complex q = params.q;
  const Complex rq = std::sqrt(q);
  const Complex num = tau(rq * x, q, policy) * tau(cpow(q, -c + 0.5) / x, q, policy);
  const Complex den = tau(cpow(q, -c - 1.5) * x, q, policy) * tau(rq / x, q, policy);
  return num / den;
}

CMatrix4 y_operator(const Params& params, Complex c, Complex x,
                    const TruncationPolicy& policy) {
  return t_factor(params, c, x, policy) * cal_r(params, c, x, policy);
}

CMatrix4 cal_r_dc(const Params& params, Complex x, double h, const TruncationPolicy& policy) {
  const CMatrix4 up = cal_r(params, kCriticalLevel + h, x, policy);
  const CMatrix4 down = cal_r(params, kCriticalLevel - h, x, policy);
  return (up - down) * Complex{1.0 / (2.0 * h), 0.0};
}

Complex t_factor_dc(const Params& params, Complex x, double h, const TruncationPolicy& policy) {
  return (t_factor(params, kCriticalLevel + h, x, policy) -
          t_factor(params, kCriticalLevel - h, x, policy)) /
         (2.0 * h);
}

CMatrix4 y_operator_dc(const Params& params, Complex x, double h,
                       const TruncationPolicy& policy) {
  const CMatrix4 up = y_operator(params, kCriticalLevel + h, x, policy);
  const CMatrix4 down = y_operator(params, kCriticalLevel - h, x, policy);
  return (up - down) * Complex{1.0 / (2.0 * h), 0.0};
}

Complex t_factor_dc_closed_form(const Params& params, Complex x,
                                const TruncationPolicy& policy) {
  const Complex q = params.q;
  const Complex rq = std::sqrt(q);
  return -std::log(q) *
         (tau_logderiv(rq / x, q, policy) - tau_logderiv(rq * x, q, policy));
}

IdentitySuiteSample check_critical(const Params& params, Complex x,
                                   const TruncationPolicy& policy) {
  IdentitySuiteSample s{params, x, {}, {}};
  s.residuals[Residual::YCritical] =
      (y_operator(params, kCriticalLevel, x, policy) - CMatrix4::identity()).max_abs();
  s.residuals[Residual::TCritical] =
      std::abs(t_factor(params, kCriticalLevel, x, policy) - 1.0);
  return s;
}

IdentitySuiteSample check_c_derivatives(const Params& params, Complex x, double h,
                                        const TruncationPolicy& policy) {
  const Complex closed = t_factor_dc_closed_form(params, x, policy);
  IdentitySuiteSample s{params, x, {}, {}};
  s.residuals[Residual::dR_dc] = cal_r_dc(params, x, h, policy).max_abs();
  s.residuals[Residual::dR_dc_half] = cal_r_dc(params, x, 0.5 * h, policy).max_abs();
  s.residuals[Residual::dT_dc] = std::abs(t_factor_dc(params, x, h, policy) - closed);
  s.residuals[Residual::dT_dc_half] =
      std::abs(t_factor_dc(params, x, 0.5 * h, policy) - closed);
  s.residuals[Residual::dY_dc] =
      (y_operator_dc(params, x, h, policy) - CMatrix4::identity() * closed).max_abs();
  s.residuals[Residual::dR_dc_ratio] = s.residuals[Residual::dR_dc] / s.residuals[Residual::dR_dc_half];
  s.residuals[Residual::dT_dc_ratio] = s.residuals[Residual::dT_dc] / s.residuals[Residual::dT_dc_half];
  return s;
}

}  // namespace eqa

#include "eqa/elliptic.hpp"

#include <cmath>

#include "eqa/error.hpp"
#include "eqa/special_functions.hpp"

namespace eqa {

namespace {

constexpr double kBranchTolerance = 1e-8;
constexpr double kCrossingGuard = 1e-10;

bool near_cut(Complex log_value) {
  return std::abs(std::abs(log_value.imag()) - kPi) < kBranchTolerance;
}

// (-p; p^2)^2 / (-p^2; p^2)^2, the ratio theta_3(0)/theta_2(0) without p^{1/4}.
Complex sn_prefactor(Complex p, const TruncationPolicy& policy) {
  const Complex p2 = p * p;
  const Complex num = qpochhammer(-p, {p2}, policy);
  const Complex den = qpochhammer(-p2, {p2}, policy);
  return (num * num) / (den * den);
}

}  // namespace

EllipticData nome_to_elliptic(const Params& params, Complex x,
                              const TruncationPolicy& policy) {
  params.validate();
  if (x == 0.0) {
    throw Error(ErrorKind::DomainError, "nome_to_elliptic.x", "require x != 0");
  }
  const Complex p = params.p;
  const Complex p2 = p * p;

  // theta_3(0) = (p^2;p^2)(-p;p^2)^2, theta_2(0) = 2 p^{1/4} (p^2;p^2)(-p^2;p^2)^2.
  const Complex pp = qpochhammer(p2, {p2}, policy);
  const Complex odd = qpochhammer(-p, {p2}, policy);
  const Complex even = qpochhammer(-p2, {p2}, policy);
  const Complex theta3 = pp * odd * odd;

  EllipticData ell;
  ell.nome = p;
  const Complex ratio = even / odd;
  ell.modulus = 4.0 * std::sqrt(p) * ratio * ratio * ratio * ratio;
  ell.K = 0.5 * kPi * theta3 * theta3;
  ell.Kprime = -ell.K * std::log(p) / kPi;

  const Complex log_mq = std::log(-params.q);
  const Complex log_x = std::log(x);
  ell.lambda = -(2.0 * ell.K / kPi) * log_mq;
  ell.u = (2.0 * ell.K / kPi) * log_x;
  ell.branch_ambiguous = near_cut(log_mq) || near_cut(log_x);
  return ell;
}

Complex jacobi_sn(Complex u, const EllipticData& ell, const TruncationPolicy& policy) {
  const Complex p = ell.nome;
  const Complex p2 = p * p;
  const Complex v = kPi * u / (2.0 * ell.K);
  const Complex e_iv = std::exp(kI * v);
  const Complex z = e_iv * e_iv;

  // theta_1(v) = -i p^{1/4} e^{iv} Theta_{p^2}(1/z), theta_4(v) = Theta_{p^2}(p z).
  const GuardedProduct den = theta_guarded(p * z, p2, policy);
  require_nonvanishing(den, "jacobi_sn.theta4");
  const Complex num = theta(1.0 / z, p2, policy);
  return -0.5 * kI * e_iv * sn_prefactor(p, policy) * num / den.value;
}

Complex snh(Complex u, const EllipticData& ell, const TruncationPolicy& policy) {
  return -kI * jacobi_sn(kI * u, ell, policy);
}

BaxterWeights baxter_weights(const Params& params, Complex x,
                             const TruncationPolicy& policy) {
  const EllipticData ell = nome_to_elliptic(params, x, policy);
  const Complex s_lambda = snh(ell.lambda, ell, policy);
  if (std::abs(s_lambda) < kCrossingGuard) {
    throw Error(ErrorKind::DegenerateCrossing, "baxter_weights.snh_lambda",
                "snh(lambda) vanishes");
  }
  const Complex s_diff = snh(ell.lambda - ell.u, ell, policy);
  const Complex s_u = snh(ell.u, ell, policy);
  return BaxterWeights{s_diff / s_lambda, s_u / s_lambda, Complex{1.0, 0.0},
                       ell.modulus * s_diff * s_u};
}

}  // namespace eqa

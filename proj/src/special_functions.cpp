#include "eqa/special_functions.hpp"

#include <array>
#include <cmath>
#include <string>

#include "eqa/error.hpp"

namespace eqa {

namespace {

constexpr double kLogDerivGuard = 1e-8;

void check_bases(std::span<const Complex> bases, const TruncationPolicy& policy) {
  for (const Complex& b : bases) {
    if (!(std::abs(b) <= policy.base_bound)) {
      throw Error(ErrorKind::BaseOutOfDomain, "qpochhammer.base",
                  "|b| = " + std::to_string(std::abs(b)) + " exceeds base_bound " +
                      std::to_string(policy.base_bound));
    }
  }
}

void accumulate(Complex x, std::span<const Complex> bases, const TruncationPolicy& policy,
                GuardedProduct& acc) {
  if (bases.empty()) {
    const Complex factor = 1.0 - x;
    acc.value *= factor;
    acc.min_factor = std::min(acc.min_factor, std::abs(factor));
    return;
  }
  const Complex b = bases.front();
  const auto rest = bases.subspan(1);
  Complex monomial = x;
  for (int n = 0; std::abs(monomial) >= policy.eps; ++n) {
    if (n >= policy.max_terms) {
      throw Error(ErrorKind::TruncationBudgetExceeded, "qpochhammer.max_terms",
                  "tail above eps after " + std::to_string(policy.max_terms) + " terms");
    }
    accumulate(monomial, rest, policy, acc);
    monomial *= b;
  }
}

void check_finite(Complex x, std::string_view guard) {
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
    throw Error(ErrorKind::DomainError, std::string(guard), "non-finite argument");
  }
}

}  // namespace

void TruncationPolicy::validate() const {
  if (!(eps > 0.0) || max_terms < 1 || !(base_bound > 0.0 && base_bound < 1.0)) {
    throw Error(ErrorKind::DomainError, "policy",
                "require eps > 0, max_terms >= 1, 0 < base_bound < 1");
  }
}

Params Params::make(Complex p, Complex q) {
  Params params{p, q, std::nullopt, std::nullopt};
  params.validate();
  return params;
}

void Params::validate() const {
  if (!(std::abs(p) < 1.0) || !(std::abs(q) < 1.0)) {
    throw Error(ErrorKind::DomainError, "params.unit_disk", "require |p| < 1 and |q| < 1");
  }
  if (p == 0.0 || q == 0.0) {
    throw Error(ErrorKind::DomainError, "params.nonzero", "require p != 0 and q != 0");
  }
  if (m && *m == 0) {
    throw Error(ErrorKind::DomainError, "params.m", "surface index m must be nonzero");
  }
}

void require_nonvanishing(const GuardedProduct& product, std::string_view guard,
                          double distance) {
  if (product.min_factor < distance) {
    throw Error(ErrorKind::PoleProximity, std::string(guard),
                "denominator factor of modulus " + std::to_string(product.min_factor));
  }
}

GuardedProduct qpochhammer_guarded(Complex x, std::span<const Complex> bases,
                                   const TruncationPolicy& policy) {
  check_finite(x, "qpochhammer.x");
  check_bases(bases, policy);
  GuardedProduct acc;
  accumulate(x, bases, policy, acc);
  return acc;
}

Complex qpochhammer(Complex x, std::span<const Complex> bases,
                    const TruncationPolicy& policy) {
  return qpochhammer_guarded(x, bases, policy).value;
}

Complex qpochhammer(Complex x, std::initializer_list<Complex> bases,
                    const TruncationPolicy& policy) {
  return qpochhammer(x, std::span<const Complex>(bases.begin(), bases.size()), policy);
}

GuardedProduct theta_guarded(Complex x, Complex t, const TruncationPolicy& policy) {
  if (x == 0.0) {
    throw Error(ErrorKind::DomainError, "theta.x", "Theta_t(x) requires x != 0");
  }
  if (!(std::abs(t) > 0.0)) {
    throw Error(ErrorKind::BaseOutOfDomain, "theta.base", "Theta_t requires t != 0");
  }
  const std::array<Complex, 1> base{t};
  GuardedProduct acc = qpochhammer_guarded(x, base, policy);
  acc.absorb(qpochhammer_guarded(t / x, base, policy));
  acc.absorb(qpochhammer_guarded(t, base, policy));
  return acc;
}

Complex theta(Complex x, Complex t, const TruncationPolicy& policy) {
  return theta_guarded(x, t, policy).value;
}

Complex kappa_inv(Complex x2, const Params& params, const TruncationPolicy& policy) {
  if (x2 == 0.0) {
    throw Error(ErrorKind::DomainError, "kappa_inv.x2", "require x^2 != 0");
  }
  const Complex p = params.p;
  const Complex q2 = params.q * params.q;
  const Complex q4 = q2 * q2;
  const std::array<Complex, 2> bases{p, q4};
  auto P = [&](Complex y) { return qpochhammer_guarded(y, bases, policy); };

  GuardedProduct num = P(q4 / x2);
  num.absorb(P(q2 * x2));
  num.absorb(P(p / x2));
  num.absorb(P(p * q2 * x2));

  GuardedProduct den = P(q4 * x2);
  den.absorb(P(q2 / x2));
  den.absorb(P(p * x2));
  den.absorb(P(p * q2 / x2));
  require_nonvanishing(den, "kappa_inv.denominator");
  return num.value / den.value;
}

Complex mu_inv(Complex x, const Params& params, const TruncationPolicy& policy) {
  const Complex p = params.p;
  const Complex p2 = p * p;
  const Complex q2 = params.q * params.q;
  const Complex x2 = x * x;

  const GuardedProduct den = theta_guarded(q2 * x2, p2, policy);
  require_nonvanishing(den, "mu_inv.theta_denominator");
  const Complex pp = qpochhammer(p, {p}, policy);
  const Complex ratio = qpochhammer(p2, {p2}, policy) / (pp * pp);
  return kappa_inv(x2, params, policy) * ratio * theta(p * x2, p2, policy) *
         theta(q2, p2, policy) / den.value;
}

Complex tau(Complex x, Complex q, const TruncationPolicy& policy) {
  if (x == 0.0) {
    throw Error(ErrorKind::DomainError, "tau.x", "require x != 0");
  }
  const Complex t = q * q * q * q;
  const Complex x2 = x * x;
  const GuardedProduct den = theta_guarded(q / x2, t, policy);
  require_nonvanishing(den, "tau.denominator");
  return theta(q * x2, t, policy) / (x * den.value);
}

Complex theta_logderiv(Complex x, Complex t, const TruncationPolicy& policy) {
  if (x == 0.0) {
    throw Error(ErrorKind::DomainError, "theta_logderiv.x", "require x != 0");
  }
  if (!(std::abs(t) <= policy.base_bound)) {
    throw Error(ErrorKind::BaseOutOfDomain, "theta_logderiv.base", "|t| exceeds base_bound");
  }
  auto term = [&](Complex y) {
    const Complex den = 1.0 - y;
    if (std::abs(den) < kLogDerivGuard) {
      throw Error(ErrorKind::PoleProximity, "theta_logderiv.zero",
                  "argument within 1e-8 of a theta zero");
    }
    return y / den;
  };

  Complex sum{0.0, 0.0};
  // -sum_{n>=0} x t^n / (1 - x t^n)
  Complex y = x;
  for (int n = 0; n == 0 || std::abs(y) >= policy.eps; ++n) {
    if (n >= policy.max_terms) {
      throw Error(ErrorKind::TruncationBudgetExceeded, "theta_logderiv.max_terms",
                  "series tail above eps");
    }
    sum -= term(y);
    y *= t;
  }
  // +sum_{n>=1} t^n x^{-1} / (1 - t^n x^{-1})
  y = t / x;
  for (int n = 1; std::abs(y) >= policy.eps; ++n) {
    if (n >= policy.max_terms) {
      throw Error(ErrorKind::TruncationBudgetExceeded, "theta_logderiv.max_terms",
                  "series tail above eps");
    }
    sum += term(y);
    y *= t;
  }
  return sum;
}

Complex tau_logderiv(Complex y, Complex q, const TruncationPolicy& policy) {
  const Complex t = q * q * q * q;
  const Complex y2 = y * y;
  return -1.0 + 2.0 * theta_logderiv(q * y2, t, policy) +
         2.0 * theta_logderiv(q / y2, t, policy);
}

}  // namespace eqa

#include "eqa/structure_functions.hpp"

#include <array>
#include <cmath>

#include "eqa/error.hpp"
#include "eqa/special_functions.hpp"

namespace eqa {

namespace {

constexpr double kSeriesPoleGuard = 1e-6;
constexpr double kUnitGuard = 1e-8;

Complex ipow(Complex base, int n) {
  Complex b = n < 0 ? 1.0 / base : base;
  unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
  Complex r{1.0, 0.0};
  while (e != 0) {
    if (e & 1U) r *= b;
    b *= b;
    e >>= 1U;
  }
  return r;
}

// y / (1 - y) with the series pole guard.
Complex simple_fraction(Complex y, const char* guard) {
  const Complex den = 1.0 - y;
  if (std::abs(den) < kSeriesPoleGuard) {
    throw Error(ErrorKind::PoleProximity, guard, "x^2 on the q-lattice of poles");
  }
  return y / den;
}

void check_surface_index(int m, const char* guard) {
  if (m == 0) throw Error(ErrorKind::DomainError, guard, "m must be nonzero");
}

// Theta_{q^4} ratio with a guarded denominator.
struct ThetaRatio {
  Complex t;
  const TruncationPolicy& policy;
  const char* guard;

  Complex operator()(Complex n1, Complex n2, Complex d1, Complex d2) const {
    GuardedProduct den = theta_guarded(d1, t, policy);
    den.absorb(theta_guarded(d2, t, policy));
    require_nonvanishing(den, guard);
    return theta(n1, t, policy) * theta(n2, t, policy) / den.value;
  }
};

}  // namespace

SurfaceParams SurfaceParams::make(Complex p, Complex q, int m) {
  SurfaceParams s{p, q, m};
  s.validate();
  return s;
}

void SurfaceParams::validate() const {
  Params::make(p, q);
  check_surface_index(m, "surface.m");
}

Complex SurfaceParams::central_charge() const {
  return -2.0 + static_cast<double>(m) * std::log(p) / std::log(q);
}

void ClassicalLimitSpec::validate() const {
  if (k == 0) throw Error(ErrorKind::DomainError, "classical.k", "k must be nonzero");
  if (!(beta > 0.0 && beta <= 0.1)) {
    throw Error(ErrorKind::DomainError, "classical.beta", "beta must lie in (0, 0.1]");
  }
}

Complex ClassicalLimitSpec::q_at(Complex p, double beta_value) const {
  const Complex log_p = std::log(p);
  return std::exp(((1.0 - 0.5 * beta_value) * log_p + 2.0 * kPi * kI * double(root_index)) /
                  (2.0 * k));
}

Complex f_skao(Complex x, Complex q_s, Complex p_s, const TruncationPolicy& policy) {
  if (std::abs(1.0 - x) < kUnitGuard) {
    throw Error(ErrorKind::PoleProximity, "f_skao.unit", "x within 1e-8 of 1");
  }
  if (q_s == 0.0) throw Error(ErrorKind::DomainError, "f_skao.q", "q_s must be nonzero");
  const std::array<Complex, 1> base{p_s * p_s};
  GuardedProduct num = qpochhammer_guarded(q_s * x, base, policy);
  num.absorb(qpochhammer_guarded(p_s / q_s * x, base, policy));
  GuardedProduct den = qpochhammer_guarded(p_s * q_s * x, base, policy);
  den.absorb(qpochhammer_guarded(p_s * p_s / q_s * x, base, policy));
  require_nonvanishing(den, "f_skao.denominator");
  return num.value / ((1.0 - x) * den.value);
}

Complex f_poisson_series(Complex x, Complex q, const TruncationPolicy& policy) {
  if (x == 0.0) throw Error(ErrorKind::DomainError, "f_poisson_series.x", "x must be nonzero");
  const Complex X = x * x;
  const Complex Xi = 1.0 / X;
  const double scale = std::max(std::abs(X), std::abs(Xi));
  const char* guard = "f_poisson_series.pole";

  Complex sum = -simple_fraction(X, guard) + simple_fraction(Xi, guard);
  const Complex q2 = q * q;
  const Complex q4 = q2 * q2;
  // n >= 0 terms at q^{4n+2}, n > 0 terms at q^{4n}.
  Complex a = q2;
  for (int n = 0; scale * std::abs(a) >= policy.eps; ++n) {
    if (n >= policy.max_terms) {
      throw Error(ErrorKind::TruncationBudgetExceeded, "f_poisson_series.max_terms",
                  "series tail above eps");
    }
    sum += 2.0 * simple_fraction(X * a, guard) - 2.0 * simple_fraction(Xi * a, guard);
    a *= q4;
  }
  a = q4;
  for (int n = 1; scale * std::abs(a) >= policy.eps; ++n) {
    if (n >= policy.max_terms) {
      throw Error(ErrorKind::TruncationBudgetExceeded, "f_poisson_series.max_terms",
                  "series tail above eps");
    }
    sum += -2.0 * simple_fraction(X * a, guard) + 2.0 * simple_fraction(Xi * a, guard);
    a *= q4;
  }
  return -2.0 * std::log(q) * sum;
}

Complex f_poisson_tau(Complex x, Complex q, const TruncationPolicy& policy) {
  if (x == 0.0) throw Error(ErrorKind::DomainError, "f_poisson_tau.x", "x must be nonzero");
  const Complex rq = std::sqrt(q);
  return -std::log(q) * (tau_logderiv(rq / x, q, policy) - tau_logderiv(rq * x, q, policy));
}

Complex f_exchange(int m, Complex x, Complex p, Complex q, const TruncationPolicy& policy) {
  check_surface_index(m, "f_exchange.m");
  if (x == 0.0) throw Error(ErrorKind::DomainError, "f_exchange.x", "x must be nonzero");
  const Complex q2 = q * q;
  const Complex x2 = x * x;
  const Complex xm2 = 1.0 / x2;
  const ThetaRatio ratio{q2 * q2, policy, "f_exchange.denominator"};

  Complex result{1.0, 0.0};
  if (m > 0) {
    for (int s = 1; s <= 2 * m; ++s) {
      const Complex ps = ipow(p, s);
      const Complex pms = ipow(p, -s);
      result *= ratio(x2 * q2 * pms, xm2 * q2 * ps, xm2 * ps, x2 * pms) / q;
    }
  } else {
    for (int s = 0; s <= 2 * (-m) - 1; ++s) {
      const Complex ps = ipow(p, s);
      const Complex pms = ipow(p, -s);
      result *= q * ratio(x2 * ps, xm2 * pms, x2 * q2 * ps, xm2 * q2 * pms);
    }
  }
  return result;
}

Complex f_exchange_even_closed_form(int m, Complex x, Complex q,
                                    const TruncationPolicy& policy) {
  const Complex q2 = q * q;
  const Complex x2 = x * x;
  const GuardedProduct den = theta_guarded(x2, q2 * q2, policy);
  require_nonvanishing(den, "f_exchange_even.denominator");
  const Complex r = theta(x2 * q2, q2 * q2, policy) / den.value;
  return ipow(q, -2 * m) * ipow(x, 4 * m) * ipow(r, 4 * m);
}

Complex y_exchange(int m, Complex x, Complex p, Complex q, const TruncationPolicy& policy) {
  check_surface_index(m, "y_exchange.m");
  if (x == 0.0) throw Error(ErrorKind::DomainError, "y_exchange.x", "x must be nonzero");
  const Complex q2 = q * q;
  const Complex x2 = x * x;
  const Complex xm2 = 1.0 / x2;
  const ThetaRatio ratio{q2 * q2, policy, "y_exchange.denominator"};

  const int last = m > 0 ? 2 * m - 1 : 2 * (-m);
  Complex product{1.0, 0.0};
  for (int s = 1; s <= last; ++s) {
    const Complex ps = ipow(p, s);
    product *= x2 * ratio(xm2 * ps, x2 * q2 * ps, x2 * ps, xm2 * q2 * ps);
  }
  return product * product;
}

Complex classical_limit_series(int k, int m, Complex x, Complex q,
                               const TruncationPolicy& policy) {
  if (k == 0) throw Error(ErrorKind::DomainError, "classical_limit_series.k", "k must be nonzero");
  check_surface_index(m, "classical_limit_series.m");
  if (x == 0.0) throw Error(ErrorKind::DomainError, "classical_limit_series.x", "x must be nonzero");
  const Complex X = x * x;
  const Complex Xi = 1.0 / X;
  const double scale = std::max(std::abs(X), std::abs(Xi));
  const char* guard = "classical_limit_series.pole";

  Complex braces = -simple_fraction(X, guard) + simple_fraction(Xi, guard);
  const Complex q2 = q * q;
  const Complex q4 = q2 * q2;
  Complex a{1.0, 0.0};  // q^{4n}
  for (int n = 0; n == 0 || scale * std::abs(a) >= policy.eps; ++n) {
    if (n >= policy.max_terms) {
      throw Error(ErrorKind::TruncationBudgetExceeded, "classical_limit_series.max_terms",
                  "series tail above eps");
    }
    const Complex b = a * q2;  // q^{4n+2}
    braces += 2.0 * simple_fraction(X * a, guard) - 2.0 * simple_fraction(X * b, guard) -
              2.0 * simple_fraction(Xi * a, guard) + 2.0 * simple_fraction(Xi * b, guard);
    a *= q4;
  }
  const double km = static_cast<double>(k) * m;
  const double prefactor = (k % 2 != 0) ? 2.0 * km : -2.0 * km * (2.0 * m - 1.0);
  return prefactor * std::log(q) * braces;
}

Complex classical_limit_numeric(int m, Complex x, Complex p, const ClassicalLimitSpec& spec,
                                const TruncationPolicy& policy) {
  spec.validate();
  check_surface_index(m, "classical_limit_numeric.m");
  const Complex q = spec.q_at(p, spec.beta);
  Params::make(p, q);
  return std::log(y_exchange(m, 1.0 / x, p, q, policy)) / spec.beta;
}

SkaoDictionary skao_dictionary(const SurfaceParams& s, Complex x, int orientation) {
  if (orientation != 1 && orientation != -1) {
    throw Error(ErrorKind::DomainError, "skao_dictionary.orientation", "orientation is +1 or -1");
  }
  const Complex x2 = x * x;
  return SkaoDictionary{s.p, s.q * s.q, orientation > 0 ? x2 : 1.0 / x2};
}

Complex skao_exchange_ratio(const SkaoDictionary& d, const TruncationPolicy& policy) {
  return f_skao(d.x_s, d.q_s, d.p_s, policy) / f_skao(1.0 / d.x_s, d.q_s, d.p_s, policy);
}

Complex skao_comparison(const SurfaceParams& s, Complex x, const TruncationPolicy& policy,
                        int orientation) {
  if (s.m != 1) {
    throw Error(ErrorKind::DomainError, "skao_comparison.m", "comparison is defined at m = 1");
  }
  const Complex ratio = skao_exchange_ratio(skao_dictionary(s, x, orientation), policy);
  return y_exchange(1, x, s.p, s.q, policy) / (ratio * ratio);
}

}  // namespace eqa

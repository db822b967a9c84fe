#pragma once

#include "eqa/types.hpp"

namespace eqa {

/// A point of the surface p^m = q^{c+2}; c is derived with principal logs,
/// c = -2 + m Log p / Log q.
struct SurfaceParams {
  Complex p;
  Complex q;
  int m = 1;

  static SurfaceParams make(Complex p, Complex q, int m);
  Complex central_charge() const;
  void validate() const;
};

/// Classical limit parametrization q^{2k} = p^{1 - beta/2}. `root_index`
/// selects the 2k-th root: q = exp(((1 - beta/2) Log p + 2 pi i j) / 2k).
struct ClassicalLimitSpec {
  int k = 1;
  double beta = 1e-4;
  int root_index = 0;

  void validate() const;
  Complex q_at(Complex p, double beta_value) const;
  bool branch_ambiguous() const { return root_index != 0; }
};

/// SKAO q-Virasoro structure function
///   f_{1,2}(x) = (1-x)^{-1} (x|q_s, p_s/q_s; p_s^2) / (x|p_s q_s, p_s^2/q_s; p_s^2),
/// with (x|a_1..a_k; t) = prod_i (a_i x; t)_inf.
Complex f_skao(Complex x, Complex q_s, Complex p_s, const TruncationPolicy& policy = {});

/// Critical Poisson structure function in its partial-fraction series form.
Complex f_poisson_series(Complex x, Complex q, const TruncationPolicy& policy = {});

/// The same function as -(Log q)[D(q^{1/2}/x) - D(q^{1/2} x)] with D the
/// analytic log-derivative of tau.
Complex f_poisson_tau(Complex x, Complex q, const TruncationPolicy& policy = {});

/// Exchange function F(m, x) of t(z) with the generators on p^m = q^{c+2}.
Complex f_exchange(int m, Complex x, Complex p, Complex q,
                   const TruncationPolicy& policy = {});
inline Complex f_exchange(const SurfaceParams& s, Complex x,
                          const TruncationPolicy& policy = {}) {
  return f_exchange(s.m, x, s.p, s.q, policy);
}

/// Closed form of F(m, x) on p = q^{2k} with k even:
///   q^{-2m} x^{4m} [Theta_{q^4}(x^2 q^2) / Theta_{q^4}(x^2)]^{4m}.
Complex f_exchange_even_closed_form(int m, Complex x, Complex q,
                                    const TruncationPolicy& policy = {});

/// Quadratic exchange function Y_{p,q,m}(x): t(z) t(w) = Y(w/z) t(w) t(z).
Complex y_exchange(int m, Complex x, Complex p, Complex q,
                   const TruncationPolicy& policy = {});
inline Complex y_exchange(const SurfaceParams& s, Complex x,
                          const TruncationPolicy& policy = {}) {
  return y_exchange(s.m, x, s.p, s.q, policy);
}

/// The beta -> 0 Poisson structure function written from its own series:
/// prefactor 2km Log q (k odd) or -2km(2m-1) Log q (k even), x = z/w.
Complex classical_limit_series(int k, int m, Complex x, Complex q,
                               const TruncationPolicy& policy = {});

/// (1/beta) ln Y_{p,q,m}(1/x) at q^{2k} = p^{1-beta/2}. Y is evaluated at
/// w/z = 1/x so that the result is directly comparable with
/// classical_limit_series(k, m, x, q(beta = 0)).
Complex classical_limit_numeric(int m, Complex x, Complex p, const ClassicalLimitSpec& spec,
                                const TruncationPolicy& policy = {});

/// Dictionary (q_s, p_s, x_s) onto the SKAO variables for the m = 1 surface:
/// q_s = p, p_s = q^2, x_s = x^{orientation * 2}.
struct SkaoDictionary {
  Complex q_s;
  Complex p_s;
  Complex x_s;
};
SkaoDictionary skao_dictionary(const SurfaceParams& s, Complex x, int orientation);

/// SKAO exchange ratio f(x_s) / f(1/x_s).
Complex skao_exchange_ratio(const SkaoDictionary& d, const TruncationPolicy& policy = {});

/// Y(1, x) / [SKAO ratio]^2 under the dictionary with orientation -1
/// (x_s = x^{-2}, the w/z orientation of Y). Returns 1 when the m = 1
/// exchange function is the square of the SKAO one.
Complex skao_comparison(const SurfaceParams& s, Complex x, const TruncationPolicy& policy = {},
                        int orientation = -1);

}  // namespace eqa

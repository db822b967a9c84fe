#pragma once

#include "eqa/types.hpp"

namespace eqa {

/// Additive elliptic parametrization of a multiplicative point (p, q, x):
///   p = exp(-pi K'/K),  q = -exp(-pi lambda / 2K),  x = exp(pi u / 2K).
/// Logarithms are principal. `branch_ambiguous` is raised (not thrown) when
/// Log(-q) or Log(x) sits within 1e-8 of the cut.
struct EllipticData {
  Complex nome;
  Complex modulus;
  Complex K;
  Complex Kprime;
  Complex lambda;
  Complex u;
  bool branch_ambiguous = false;
};

/// The eight-vertex Boltzmann weights. `c_w` is always exactly 1.
struct BaxterWeights {
  Complex a;
  Complex b;
  Complex c_w;
  Complex d;
};

EllipticData nome_to_elliptic(const Params& params, Complex x,
                              const TruncationPolicy& policy = {});
inline EllipticData nome_to_elliptic(const Params& params,
                                     const TruncationPolicy& policy = {}) {
  return nome_to_elliptic(params, Complex{1.0, 0.0}, policy);
}

/// Jacobi sn(u, k) from theta quotients in the nome of `ell`. The theta
/// functions are evaluated through their triple products, which makes the
/// p^{1/4} prefactors of theta_1 and theta_2 cancel identically.
Complex jacobi_sn(Complex u, const EllipticData& ell, const TruncationPolicy& policy = {});

/// snh(u) = -i sn(iu).
Complex snh(Complex u, const EllipticData& ell, const TruncationPolicy& policy = {});

BaxterWeights baxter_weights(const Params& params, Complex x,
                             const TruncationPolicy& policy = {});

}  // namespace eqa

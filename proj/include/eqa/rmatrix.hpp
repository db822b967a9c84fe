#pragma once

#include "eqa/cmatrix4.hpp"
#include "eqa/identity_sample.hpp"
#include "eqa/types.hpp"

namespace eqa {

/// Central-difference step in c for derivatives at the critical level.
inline constexpr double kCriticalStep = 1e-4;
inline constexpr double kCriticalLevel = -2.0;

/// Normalized eight-vertex R-matrix R_{12}(x) = mu(x)^{-1} [a 0 0 d; 0 b c 0; 0 c b 0; d 0 0 a].
CMatrix4 r_matrix(const Params& params, Complex x, const TruncationPolicy& policy = {});

/// R^+_{12}(x) = tau(q^{1/2} x^{-1}) R_{12}(x), principal q^{1/2}.
CMatrix4 r_plus(const Params& params, Complex x, const TruncationPolicy& policy = {});

/// R^{+*}_{12}(x; q, p) = R^+_{12}(x; q, p q^{-2c}).
CMatrix4 r_plus_star(const Params& params, Complex x, Complex c,
                     const TruncationPolicy& policy = {});

/// Unitarity, crossing and antisymmetry residuals (entrywise max norm).
IdentitySuiteSample check_prop1(const Params& params, Complex x,
                                const TruncationPolicy& policy = {});

/// || R^+(-p^{1/2} x) - (s1 (x) I) R^+_{21}(x^{-1})^{-1} (s1 (x) I) ||.
IdentitySuiteSample check_quasiperiodicity(const Params& params, Complex x,
                                           const TruncationPolicy& policy = {});

/// The exchange matrix factor
///   calR(x) = ( (R(1/x) R(q^{-c-2} x) R(1/x))^{t2} R(q^c x)^{t2} )^{t2}.
CMatrix4 cal_r(const Params& params, Complex c, Complex x,
               const TruncationPolicy& policy = {});

/// T(x) = tau(q^{1/2} x) tau(q^{-c+1/2}/x) / (tau(q^{-c-3/2} x) tau(q^{1/2}/x)).
Complex t_factor(const Params& params, Complex c, Complex x,
                 const TruncationPolicy& policy = {});

/// Y(x) = T(x) calR(x).
CMatrix4 y_operator(const Params& params, Complex c, Complex x,
                    const TruncationPolicy& policy = {});

/// Central differences in c at c = -2.
CMatrix4 cal_r_dc(const Params& params, Complex x, double h = kCriticalStep,
                  const TruncationPolicy& policy = {});
Complex t_factor_dc(const Params& params, Complex x, double h = kCriticalStep,
                    const TruncationPolicy& policy = {});
CMatrix4 y_operator_dc(const Params& params, Complex x, double h = kCriticalStep,
                       const TruncationPolicy& policy = {});

/// Closed form of dT/dc at c = -2:
///   -(Log q) [ D(q^{1/2}/x) - D(q^{1/2} x) ],  D(y) = y d/dy ln tau(y).
Complex t_factor_dc_closed_form(const Params& params, Complex x,
                                const TruncationPolicy& policy = {});

/// Critical collapse: ||Y(c=-2) - I|| and |T(c=-2) - 1|.
IdentitySuiteSample check_critical(const Params& params, Complex x,
                                   const TruncationPolicy& policy = {});

/// Finite-difference derivative identities at h and h/2.
IdentitySuiteSample check_c_derivatives(const Params& params, Complex x,
                                        double h = kCriticalStep,
                                        const TruncationPolicy& policy = {});

}  // namespace eqa

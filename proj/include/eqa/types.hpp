#pragma once

#include <complex>
#include <optional>

namespace eqa {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr Complex kI{0.0, 1.0};

/// Truncation contract for every infinite product and series in the library.
///
/// A factor (1 - x b^n) or a series term is included while its deviation
/// magnitude is at least `eps`; by geometric decay the neglected tail is
/// O(eps / (1 - |b|)). Any base with modulus above `base_bound` is rejected.
struct TruncationPolicy {
  double eps = 1e-14;
  int max_terms = 512;
  double base_bound = 0.999;

  void validate() const;
};

/// A parameter point of the algebra: elliptic nome p, deformation q, and
/// optionally the central charge c or the surface index m.
struct Params {
  Complex p;
  Complex q;
  std::optional<Complex> c;
  std::optional<int> m;

  /// Validates |p| < 1, |q| < 1, p, q != 0 and m != 0.
  static Params make(Complex p, Complex q);
  void validate() const;
};

/// Principal branch a^s = exp(s Log a).
inline Complex cpow(Complex a, Complex s) { return std::exp(s * std::log(a)); }

}  // namespace eqa

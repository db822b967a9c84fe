#pragma once

#include <array>

#include "eqa/types.hpp"

namespace eqa {

/// 2x2 complex matrix, used to build decomposable operators A (x) B.
struct CMatrix2 {
  std::array<Complex, 4> e{};

  Complex& operator()(int r, int c) { return e[2 * r + c]; }
  const Complex& operator()(int r, int c) const { return e[2 * r + c]; }
  CMatrix2 transpose() const;
};

/// Operator on C^2 (x) C^2. Row/column index = 2 * (leg-1 index) + (leg-2 index).
class CMatrix4 {
 public:
  CMatrix4() = default;

  static CMatrix4 identity();
  static CMatrix4 kron(const CMatrix2& a, const CMatrix2& b);
  /// sigma^axis (x) I, axis in {1, 2, 3}.
  static CMatrix4 pauli_leg1(int axis);

  Complex& operator()(int r, int c) { return e_[4 * r + c]; }
  const Complex& operator()(int r, int c) const { return e_[4 * r + c]; }

  /// Leg index form: element <i1 i2 | M | j1 j2>.
  const Complex& at(int i1, int i2, int j1, int j2) const {
    return (*this)(2 * i1 + i2, 2 * j1 + j2);
  }

  CMatrix4& operator+=(const CMatrix4& other);
  CMatrix4& operator-=(const CMatrix4& other);
  CMatrix4& operator*=(Complex s);

  friend CMatrix4 operator+(CMatrix4 a, const CMatrix4& b) { return a += b; }
  friend CMatrix4 operator-(CMatrix4 a, const CMatrix4& b) { return a -= b; }
  friend CMatrix4 operator*(CMatrix4 a, Complex s) { return a *= s; }
  friend CMatrix4 operator*(Complex s, CMatrix4 a) { return a *= s; }
  friend CMatrix4 operator*(const CMatrix4& a, const CMatrix4& b);
  friend bool operator==(const CMatrix4&, const CMatrix4&) = default;

  /// Entrywise max modulus.
  double max_abs() const;

  /// Inverse by Gaussian elimination with partial pivoting. Throws
  /// DomainError on a singular matrix.
  CMatrix4 inverse() const;

  const std::array<Complex, 16>& entries() const { return e_; }

 private:
  std::array<Complex, 16> e_{};
};

/// M_{12} -> M_{21} = P M P with P the leg swap.
CMatrix4 permute_legs(const CMatrix4& m);

/// Transposition in tensor leg 1 or 2.
CMatrix4 partial_transpose(const CMatrix4& m, int leg);

/// (sigma^axis (x) I) M (sigma^axis (x) I) for axis 1 or 3; leg must be 1.
CMatrix4 pauli_conjugate(const CMatrix4& m, int axis, int leg = 1);

}  // namespace eqa

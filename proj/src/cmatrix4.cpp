#include "eqa/cmatrix4.hpp"

#include <cmath>
#include <utility>

#include "eqa/error.hpp"

namespace eqa {

CMatrix2 CMatrix2::transpose() const {
  CMatrix2 t;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) t(r, c) = (*this)(c, r);
  }
  return t;
}

CMatrix4 CMatrix4::identity() {
  CMatrix4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix4 CMatrix4::kron(const CMatrix2& a, const CMatrix2& b) {
  CMatrix4 m;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) m(2 * i1 + i2, 2 * j1 + j2) = a(i1, j1) * b(i2, j2);
  return m;
}

CMatrix4 CMatrix4::pauli_leg1(int axis) {
  CMatrix2 sigma;
  switch (axis) {
    case 1:
      sigma(0, 1) = 1.0;
      sigma(1, 0) = 1.0;
      break;
    case 2:
      sigma(0, 1) = -kI;
      sigma(1, 0) = kI;
      break;
    case 3:
      sigma(0, 0) = 1.0;
      sigma(1, 1) = -1.0;
      break;
    default:
      throw Error(ErrorKind::DomainError, "pauli.axis", "axis must be 1, 2 or 3");
  }
  CMatrix2 id;
  id(0, 0) = 1.0;
  id(1, 1) = 1.0;
  return kron(sigma, id);
}

CMatrix4& CMatrix4::operator+=(const CMatrix4& other) {
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += other.e_[i];
  return *this;
}

CMatrix4& CMatrix4::operator-=(const CMatrix4& other) {
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= other.e_[i];
  return *this;
}

CMatrix4& CMatrix4::operator*=(Complex s) {
  for (auto& v : e_) v *= s;
  return *this;
}

CMatrix4 operator*(const CMatrix4& a, const CMatrix4& b) {
  CMatrix4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      Complex acc{0.0, 0.0};
      for (int k = 0; k < 4; ++k) acc += a(r, k) * b(k, c);
      out(r, c) = acc;
    }
  }
  return out;
}

double CMatrix4::max_abs() const {
  double m = 0.0;
  for (const auto& v : e_) m = std::max(m, std::abs(v));
  return m;
}

CMatrix4 CMatrix4::inverse() const {
  CMatrix4 a = *this;
  CMatrix4 inv = identity();
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    }
    if (std::abs(a(pivot, col)) == 0.0) {
      throw Error(ErrorKind::DomainError, "cmatrix4.inverse", "singular matrix");
    }
    if (pivot != col) {
      for (int c = 0; c < 4; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Complex d = a(col, col);
    for (int c = 0; c < 4; ++c) {
      a(col, c) /= d;
      inv(col, c) /= d;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const Complex f = a(r, col);
      if (f == 0.0) continue;
      for (int c = 0; c < 4; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

CMatrix4 permute_legs(const CMatrix4& m) {
  CMatrix4 out;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) out(2 * i2 + i1, 2 * j2 + j1) = m.at(i1, i2, j1, j2);
  return out;
}

CMatrix4 partial_transpose(const CMatrix4& m, int leg) {
  if (leg != 1 && leg != 2) {
    throw Error(ErrorKind::DomainError, "partial_transpose.leg", "leg must be 1 or 2");
  }
  CMatrix4 out;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) {
          if (leg == 1) {
            out(2 * j1 + i2, 2 * i1 + j2) = m.at(i1, i2, j1, j2);
          } else {
            out(2 * i1 + j2, 2 * j1 + i2) = m.at(i1, i2, j1, j2);
          }
        }
  return out;
}

CMatrix4 pauli_conjugate(const CMatrix4& m, int axis, int leg) {
  if (leg != 1 || (axis != 1 && axis != 3)) {
    throw Error(ErrorKind::DomainError, "pauli_conjugate",
                "supported: axis 1 or 3 on leg 1");
  }
  const CMatrix4 s = CMatrix4::pauli_leg1(axis);
  return s * m * s;
}

}  // namespace eqa

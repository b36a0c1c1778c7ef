#pragma once

#include <array>
#include <string>
#include <vector>

#include "prym/field.hpp"

namespace prym {

/// Determinant of a 3x3 array (row-major) over any commutative ring type.
template <class T>
T det3(const std::array<T, 9>& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

class Matrix3 {
 public:
  explicit Matrix3(Field field);
  Matrix3(Field field, const std::array<std::array<long long, 3>, 3>& rows);
  static Matrix3 identity(const Field& field);
  static Matrix3 from_rows(const std::array<std::array<FieldElement, 3>, 3>& rows);

  const Field& field() const { return field_; }
  FieldElement& operator()(int r, int c) { return a_[3 * r + c]; }
  const FieldElement& operator()(int r, int c) const { return a_[3 * r + c]; }

  FieldElement det() const { return det3(a_); }
  Matrix3 adjugate() const;

  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
  friend bool operator==(const Matrix3& a, const Matrix3& b) { return a.a_ == b.a_; }

 private:
  Field field_;
  std::array<FieldElement, 9> a_;
};

/// A^{-1} = adj(A) / det A, checked against A A^{-1} = A^{-1} A = I.
/// Throws singular_matrix (message carries det A) when det A = 0.
Matrix3 invert3(const Matrix3& a);

/// Square matrix over a field, row-major.
struct DenseMatrix {
  Field field;
  std::size_t n = 0;
  std::vector<FieldElement> a;

  DenseMatrix(Field f, std::size_t size) : field(std::move(f)), n(size), a(size * size, field.zero()) {}
  FieldElement& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

/// Gaussian elimination with exact field arithmetic. Empty matrix -> 1.
FieldElement determinant(DenseMatrix m);

}  // namespace prym

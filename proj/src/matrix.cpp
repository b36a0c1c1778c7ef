#include "prym/matrix.hpp"

#include <utility>

namespace prym {

Matrix3::Matrix3(Field field) : field_(std::move(field)) { a_.fill(field_.zero()); }

Matrix3::Matrix3(Field field, const std::array<std::array<long long, 3>, 3>& rows)
    : field_(std::move(field)) {
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a_[3 * r + c] = field_.from_int(rows[r][c]);
}

Matrix3 Matrix3::identity(const Field& field) {
  Matrix3 m(field);
  for (int i = 0; i < 3; ++i) m(i, i) = field.one();
  return m;
}

Matrix3 Matrix3::from_rows(const std::array<std::array<FieldElement, 3>, 3>& rows) {
  Matrix3 m(rows[0][0].field());
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = rows[r][c];
  return m;
}

Matrix3 Matrix3::adjugate() const {
  // adj(A)_{ij} = (-1)^{i+j} M_{ji}
  Matrix3 adj(field_);
  const auto& m = *this;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      // cyclic index choice absorbs the cofactor sign
      adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  }
  return adj;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 r(a.field_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FieldElement s = a.field_.zero();
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Matrix3 invert3(const Matrix3& a) {
  const FieldElement d = a.det();
  if (d.is_zero()) fail(ErrorKind::singular_matrix, "matrix is singular (det = " + d.to_string() + ")");
  Matrix3 inv = a.adjugate();
  const FieldElement di = d.inverse();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv(i, j) *= di;
  const Matrix3 id = Matrix3::identity(a.field());
  if (!(a * inv == id) || !(inv * a == id))
    fail(ErrorKind::internal_contradiction, "adjugate inverse failed the round-trip check");
  return inv;
}

FieldElement determinant(DenseMatrix m) {
  const std::size_t n = m.n;
  FieldElement det = m.field.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return m.field.zero();
    if (piv != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(piv, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const FieldElement inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const FieldElement factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

}  // namespace prym

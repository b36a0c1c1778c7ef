#include <optional>
#include <random>

#include "doctest.h"
#include "prym/matrix.hpp"
#include "prym/poly.hpp"
#include "prym/ternary.hpp"

using namespace prym;

namespace {

UniPoly random_poly(const Field& f, std::mt19937_64& rng, int degree) {
  std::vector<FieldElement> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_element(f, rng));
  return UniPoly(f, c);
}

Matrix3 random_matrix(const Field& f, std::mt19937_64& rng) {
  Matrix3 m(f);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = random_element(f, rng);
  return m;
}

// Gauss-Jordan on [A | I], independent of the adjugate formula.
std::optional<Matrix3> gauss_jordan_inverse(const Matrix3& a) {
  const Field& f = a.field();
  std::array<std::array<FieldElement, 6>, 3> w;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 6; ++c) w[r][c] = c < 3 ? a(r, c) : (c - 3 == r ? f.one() : f.zero());
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    while (piv < 3 && w[piv][col].is_zero()) ++piv;
    if (piv == 3) return std::nullopt;
    std::swap(w[piv], w[col]);
    const FieldElement inv = w[col][col].inverse();
    for (auto& x : w[col]) x = x * inv;
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const FieldElement k = w[r][col];
      for (int c = 0; c < 6; ++c) w[r][c] = w[r][c] - k * w[col][c];
    }
  }
  Matrix3 out(f);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = w[r][c + 3];
  return out;
}

}  // namespace

TEST_CASE("univariate division and gcd") {
  std::mt19937_64 rng(1);
  const Field f = Field::prime(11);
  for (int i = 0; i < 200; ++i) {
    const UniPoly a = random_poly(f, rng, 7), b = random_poly(f, rng, 3);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    const UniPoly c = random_poly(f, rng, 2);
    if (c.is_zero()) continue;
    const UniPoly g = gcd(a * c, b * c);
    CHECK(divmod(g, c.monic()).remainder.is_zero());
  }
  const UniPoly x2m1 = UniPoly::from_ints(f, {-1, 0, 1});
  CHECK(gcd(x2m1, UniPoly::from_ints(f, {1, 1})) == UniPoly::from_ints(f, {1, 1}));
  CHECK(UniPoly(f).degree() < -1000);
  CHECK(UniPoly::from_ints(f, {1, 2, 3}).derivative() == UniPoly::from_ints(f, {2, 6}));
  CHECK(UniPoly::from_ints(f, {1, 0, 1})(f.from_int(3)) == f.from_int(10));
}

TEST_CASE("binary forms") {
  std::mt19937_64 rng(2);
  const Field f = Field::prime(13);
  for (int i = 0; i < 100; ++i) {
    std::vector<FieldElement> c;
    for (int j = 0; j <= 6; ++j) c.push_back(random_element(f, rng));
    const BinaryForm b(f, c);
    // Euler: x F_x + z F_z = n F
    const FieldElement x = random_element(f, rng), z = random_element(f, rng);
    CHECK(x * b.partial_x()(x, z) + z * b.partial_z()(x, z) == f.from_int(6) * b(x, z));
    CHECK(BinaryForm::homogenize(b.dehomogenize(), 6) == b);
  }
  // (x + z)(x - z) = x^2 - z^2
  const BinaryForm p = BinaryForm::from_ints(f, {1, 1}) * BinaryForm::from_ints(f, {1, -1});
  CHECK(p == BinaryForm::from_ints(f, {1, 0, -1}));
  CHECK(BinaryForm::homogenize(UniPoly::from_ints(f, {0, 1}), 3) == BinaryForm::from_ints(f, {0, 0, 1, 0}));
}

TEST_CASE("invert3 against Gauss-Jordan") {
  std::mt19937_64 rng(3);
  int invertible = 0;
  for (const Field& f : {Field::prime(13), Field::extension(3, 2), Field::rationals()}) {
    for (int i = 0; i < 400; ++i) {
      const Matrix3 a = random_matrix(f, rng);
      const auto oracle = gauss_jordan_inverse(a);
      CHECK(oracle.has_value() == !a.det().is_zero());
      if (!oracle) {
        CHECK_THROWS_AS(invert3(a), Error);
        continue;
      }
      ++invertible;
      const Matrix3 inv = invert3(a);
      CHECK(inv == *oracle);
      CHECK(a * inv == Matrix3::identity(f));
    }
  }
  CHECK(invertible >= 1000);
}

TEST_CASE("singular matrix error carries the determinant") {
  const Field f = Field::rationals();
  const Matrix3 a(f, {{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}});
  try {
    invert3(a);
    FAIL("expected singular_matrix");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::singular_matrix);
    CHECK(std::string(e.what()).find("0") != std::string::npos);
  }
}

TEST_CASE("dense determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(4);
  for (const Field& f : {Field::prime(7), Field::rationals()}) {
    for (int i = 0; i < 100; ++i) {
      const Matrix3 a = random_matrix(f, rng);
      DenseMatrix d(f, 3);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) d(r, c) = a(r, c);
      CHECK(determinant(d) == a.det());
    }
  }
  CHECK(determinant(DenseMatrix(Field::prime(5), 0)).is_one());
}

TEST_CASE("ternary forms") {
  const Field f = Field::prime(11);
  const auto ms = monomials(4);
  CHECK(ms.size() == 15);
  CHECK(ms.front() == Monomial{4, 0, 0});
  CHECK(ms.back() == Monomial{0, 0, 4});

  std::mt19937_64 rng(5);
  TernaryForm p(f, 4);
  for (const auto& m : ms) p.set(m, random_element(f, rng));
  const Matrix3 g = random_matrix(f, rng);
  const FieldElement x = random_element(f, rng), y = random_element(f, rng), z = random_element(f, rng);
  // substitute means evaluating at G (x, y, z)^T
  const FieldElement gx = g(0, 0) * x + g(0, 1) * y + g(0, 2) * z;
  const FieldElement gy = g(1, 0) * x + g(1, 1) * y + g(1, 2) * z;
  const FieldElement gz = g(2, 0) * x + g(2, 1) * y + g(2, 2) * z;
  CHECK(p.substitute(g)(x, y, z) == p(gx, gy, gz));
  CHECK(x * p.partial(0)(x, y, z) + y * p.partial(1)(x, y, z) + z * p.partial(2)(x, y, z) ==
        f.from_int(4) * p(x, y, z));

  TernaryQuadratic q(f);
  q(0, 1) = q(1, 0) = f.from_int(3);
  q(2, 2) = f.one();
  // 6 x1 x2 + x3^2
  CHECK(q.to_form().coeff(1, 1, 0) == f.from_int(6));
  CHECK(TernaryQuadratic::from_form(q.to_form()) == q);
}

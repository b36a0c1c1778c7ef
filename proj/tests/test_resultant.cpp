#include <random>
#include <set>

#include "doctest.h"
#include "prym/resultant.hpp"

using namespace prym;

namespace {

UniPoly random_poly(const Field& f, std::mt19937_64& rng, int degree) {
  std::vector<FieldElement> c;
  for (int i = 0; i < degree; ++i) c.push_back(random_element(f, rng));
  FieldElement lead = random_element(f, rng);
  while (lead.is_zero()) lead = random_element(f, rng);
  c.push_back(lead);
  return UniPoly(f, c);
}

BinaryForm random_form(const Field& f, std::mt19937_64& rng, int n) {
  std::vector<FieldElement> c;
  for (int i = 0; i <= n; ++i) c.push_back(random_element(f, rng));
  return BinaryForm(f, c);
}

TernaryForm random_ternary(const Field& f, std::mt19937_64& rng, int d) {
  TernaryForm t(f, d);
  for (const auto& m : monomials(d)) t.set(m, random_element(f, rng));
  return t;
}

TernaryForm linear(const Field& f, long long a, long long b, long long c) {
  TernaryForm l(f, 1);
  l.set(1, 0, 0, a);
  l.set(0, 1, 0, b);
  l.set(0, 0, 1, c);
  return l;
}

// Classical discriminant of a x^4 + b x^3 z + c x^2 z^2 + d x z^3 + e z^4.
FieldElement quartic_disc_formula(const BinaryForm& f) {
  const Field& F = f.field();
  const FieldElement a = f[0], b = f[1], c = f[2], d = f[3], e = f[4];
  auto k = [&](long long n) { return F.from_int(n); };
  return k(256) * a * a * a * e * e * e - k(192) * a * a * b * d * e * e -
         k(128) * a * a * c * c * e * e + k(144) * a * a * c * d * d * e - k(27) * a * a * d * d * d * d +
         k(144) * a * b * b * c * e * e - k(6) * a * b * b * d * d * e - k(80) * a * b * c * c * d * e +
         k(18) * a * b * c * d * d * d + k(16) * a * c * c * c * c * e - k(4) * a * c * c * c * d * d -
         k(27) * b * b * b * b * e * e + k(18) * b * b * b * c * d * e - k(4) * b * b * b * d * d * d -
         k(4) * b * b * c * c * c * e + b * b * c * c * d * d;
}

Matrix3 random_invertible(const Field& f, std::mt19937_64& rng) {
  while (true) {
    Matrix3 g(f);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) g(r, c) = random_element(f, rng);
    if (!g.det().is_zero()) return g;
  }
}

}  // namespace

TEST_CASE("univariate resultant") {
  const Field f = Field::prime(101);
  const FieldElement a = f.from_int(17), b = f.from_int(40);
  const UniPoly xa(f, {-a, f.one()}), xb(f, {-b, f.one()});
  CHECK(resultant(xa, xb) == a - b);
  CHECK(resultant(UniPoly(f), xa).is_zero());
  CHECK_THROWS_AS(resultant(UniPoly(f), UniPoly(f)), Error);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const int dp = 1 + i % 4, dq = 1 + (i / 4) % 5;
    const UniPoly p = random_poly(f, rng, dp), q = random_poly(f, rng, dq), r = random_poly(f, rng, 2);
    const FieldElement sign = (dp * dq) % 2 ? -f.one() : f.one();
    CHECK(resultant(p, q) == sign * resultant(q, p));
    CHECK(resultant(p, q * r) == resultant(p, q) * resultant(p, r));
    CHECK(resultant(p, p * q).is_zero());
  }
}

TEST_CASE("binary discriminant conventions") {
  const Field q = Field::rationals();
  // classical discriminant of x^2 + b xz + c z^2 is b^2 - 4c
  CHECK(classical_discriminant(BinaryForm::from_ints(q, {1, 3, 1})) == q.from_int(5));
  CHECK(binary_discriminant_scale(q, 4) == q.from_int(16));
  CHECK(binary_discriminant_scale(q, 6) == q.from_int(-1296));
  CHECK(binary_discriminant_scale(q, 3) == q.from_int(-3));

  const BinaryForm x4mz4 = BinaryForm::from_ints(q, {1, 0, 0, 0, -1});
  CHECK(classical_discriminant(x4mz4) == q.from_int(-256));
  CHECK(discriminant_binary(x4mz4) == q.from_int(-4096));

  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const BinaryForm f = random_form(q, rng, 4);
    if (f[0].is_zero()) continue;
    CHECK(classical_discriminant(f) == quartic_disc_formula(f));
  }
  CHECK_THROWS_AS(discriminant_binary(BinaryForm::from_ints(q, {1, 1})), Error);
}

TEST_CASE("discriminant vanishes exactly on non-squarefree forms") {
  std::mt19937_64 rng(3);
  int zeros = 0, total = 0;
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const Field f = Field::prime(p);
    for (int n : {4, 6}) {
      for (int i = 0; i < 130; ++i) {
        BinaryForm form = random_form(f, rng, n);
        if (i % 2) {
          // force a square factor
          const BinaryForm l = random_form(f, rng, 1);
          form = l * l * random_form(f, rng, n - 2);
        }
        if (form.is_zero()) continue;
        ++total;
        const bool zero = discriminant_binary(form).is_zero();
        zeros += zero;
        CHECK(zero == !squarefree_form(form));
      }
    }
  }
  CHECK(total >= 1000);
  CHECK(zeros > 100);
}

TEST_CASE("x^4 + x z^3 by its roots") {
  // Roots over F_25 counted by brute force, plus the root at infinity check.
  const Field f25 = Field::extension(5, 2);
  std::set<std::uint64_t> roots;
  for (std::uint64_t i = 0; i < 25; ++i) {
    const FieldElement x = f25.element(i);
    if ((x * x * x * x + x).is_zero()) roots.insert(i);
  }
  CHECK(roots.size() == 4);  // x (x^3 + 1) splits into distinct roots over F_25
  CHECK(squarefree_form(BinaryForm::from_ints(Field::prime(5), {1, 0, 0, 1, 0})));
  // x^3 + 1 = (x + 1)^3 in characteristic 3
  CHECK_FALSE(squarefree_form(BinaryForm::from_ints(Field::prime(3), {1, 0, 0, 1, 0})));
  // double root at infinity: x z^3
  CHECK_FALSE(squarefree_form(BinaryForm::from_ints(Field::prime(5), {0, 0, 0, 1, 0})));
  CHECK(squarefree_form(BinaryForm::from_ints(Field::prime(5), {0, 1, 0, 0, 1})));
}

TEST_CASE("Macaulay resultant") {
  const Field f = Field::prime(101);
  const Field q = Field::rationals();
  auto cube = [](const TernaryForm& l) { return l * l * l; };
  const TernaryForm x = TernaryForm::variable(q, 0), y = TernaryForm::variable(q, 1),
                    z = TernaryForm::variable(q, 2);
  CHECK(macaulay_resultant_cubics(cube(x), cube(y), cube(z)).is_one());
  CHECK(macaulay_resultant({x, y, z}).is_one());

  std::mt19937_64 rng(4);
  for (int i = 0; i < 5; ++i) {
    // Res of linear forms is the determinant; multiplicativity gives det^27 for cubes.
    const Matrix3 g = random_invertible(f, rng);
    std::array<TernaryForm, 3> l;
    for (int r = 0; r < 3; ++r) {
      l[r] = TernaryForm(f, 1);
      for (int c = 0; c < 3; ++c) l[r].set(c == 0, c == 1, c == 2, g(r, c));
    }
    CHECK(macaulay_resultant(l) == g.det());
    CHECK(macaulay_resultant_cubics(cube(l[0]), cube(l[1]), cube(l[2])) == g.det().pow(27));

    // Res(x1, x2, h) = h(0, 0, 1)
    const TernaryForm h = random_ternary(f, rng, 3);
    CHECK(macaulay_resultant({TernaryForm::variable(f, 0), TernaryForm::variable(f, 1), h}) ==
          h.coeff(0, 0, 3));

    // scaling in the first argument: lambda^(3 * 3)
    const TernaryForm a = random_ternary(f, rng, 3), b = random_ternary(f, rng, 3),
                      c = random_ternary(f, rng, 3);
    FieldElement lambda = random_element(f, rng);
    if (lambda.is_zero()) lambda = f.one();
    CHECK(macaulay_resultant_cubics(lambda * a, b, c) == lambda.pow(9) * macaulay_resultant_cubics(a, b, c));

    // common zero at (1 : 2 : 3)
    std::array<TernaryForm, 3> shared;
    for (auto& s : shared)
      s = linear(f, -2, 1, 0) * random_ternary(f, rng, 2) + linear(f, -3, 0, 1) * random_ternary(f, rng, 2);
    CHECK(macaulay_resultant(shared).is_zero());
  }
  CHECK_THROWS_AS(macaulay_resultant_cubics(x, y, z), Error);
}

TEST_CASE("ternary quartic discriminant") {
  const Field q = Field::rationals();
  TernaryForm fermat(q, 4);
  fermat.set(4, 0, 0, 1);
  fermat.set(0, 4, 0, -1);
  fermat.set(0, 0, 4, 1);
  const FieldElement two40 = q.from_rational(mpq_class(mpz_class(1) << 40));
  CHECK(disc_ternary_quartic(fermat) == -two40);
  CHECK(quartic_partials_resultant(fermat) == -two40 * q.from_int(kQuarticDiscScale));

  // Res(4x^3, -4y^3, 4z^3) = 4 (-4) 4 raised to 9 = -2^54
  CHECK(quartic_partials_resultant(fermat) == q.from_rational(mpq_class(-(mpz_class(1) << 54))));

  // covariance: Disc(F(Gx)) = det(G)^36 Disc(F)
  const Field f = Field::prime(101);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 6; ++i) {
    const TernaryForm F = random_ternary(f, rng, 4);
    const Matrix3 g = random_invertible(f, rng);
    CHECK(disc_ternary_quartic(F.substitute(g)) == g.det().pow(36) * disc_ternary_quartic(F));
  }

  // a node at (0 : 0 : 1): no z^4, x z^3, y z^3 terms
  for (int i = 0; i < 4; ++i) {
    TernaryForm F = random_ternary(f, rng, 4);
    F.set(0, 0, 4, 0);
    F.set(1, 0, 3, 0);
    F.set(0, 1, 3, 0);
    CHECK(disc_ternary_quartic(F).is_zero());
  }

  // Fermat quartic x^4 + y^4 + z^4 is smooth whenever p is odd
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Field fp = Field::prime(p);
    TernaryForm F(fp, 4);
    F.set(4, 0, 0, 1);
    F.set(0, 4, 0, 1);
    F.set(0, 0, 4, 1);
    CHECK_FALSE(disc_ternary_quartic(F).is_zero());
  }
  CHECK_THROWS_AS(disc_ternary_quartic(random_ternary(f, rng, 3)), Error);
}

#include <functional>
#include <random>

#include "doctest.h"
#include "prym/instances.hpp"
#include "prym/prym_core.hpp"

using namespace prym;

namespace {

ErrorKind error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::parse;
}

// schoolbook product of two binary quadratics, coefficients of x^4 .. z^4
std::array<FieldElement, 5> product(const BinaryForm& a, const BinaryForm& b) {
  const Field& f = a.field();
  std::array<FieldElement, 5> out{f.zero(), f.zero(), f.zero(), f.zero(), f.zero()};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("genus one model") {
  const Field f7 = Field::prime(7);
  const auto c = BiellipticQuartic::from_ints(f7, {0, 1, 0}, {1, 1, 1}, {1, 0, -1});
  const auto hh = product(c.h, c.h), fg = product(c.f, c.g);
  const BinaryForm s = genus_one_model(c).s;
  for (int i = 0; i < 5; ++i) CHECK(s[i] == hh[i] - f7.from_int(4) * fg[i]);

  const auto h0 = BiellipticQuartic::from_ints(f7, {1, 2, 3}, {0, 1, 5}, {0, 0, 0});
  CHECK(genus_one_model(h0).s == f7.from_int(-4) * (h0.f * h0.g));

  const Field q = Field::rationals();
  const auto degenerate = BiellipticQuartic::from_ints(q, {0, 1, 0}, {0, 1, 0}, {0, 0, 0});
  CHECK(genus_one_model(degenerate).s == BinaryForm::from_ints(q, {0, 0, -4, 0, 0}));
  const ValidationReport r = validate(degenerate);
  CHECK_FALSE(r.s_squarefree);
  CHECK_FALSE(r.fg_squarefree);
  CHECK_FALSE(r.passed());
}

TEST_CASE("plane quartic") {
  const Field f = Field::prime(11);
  const auto c = BiellipticQuartic::from_ints(f, {1, 2, 3}, {4, 5, 6}, {7, 8, 9});
  const TernaryForm p = c.plane_quartic();
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const FieldElement x = random_element(f, rng), y = random_element(f, rng), z = random_element(f, rng);
    const FieldElement y2 = y * y;
    CHECK(p(x, y, z) == y2 * y2 - c.h(x, z) * y2 + c.f(x, z) * c.g(x, z));
  }
}

TEST_CASE("validation") {
  const Field f7 = Field::prime(7);
  // rows (f), (h), (g) dependent: h = f + g
  const auto dep = BiellipticQuartic::from_ints(f7, {1, 0, 1}, {0, 1, 0}, {1, 1, 1});
  CHECK_FALSE(validate(dep).det_nonzero);
  CHECK(error_of([&] { split(dep); }) == ErrorKind::rejected_input);
  CHECK(error_of([&] { split(dep, true); }) == ErrorKind::singular_matrix);
  CHECK(error_of([&] { singular_model(dep); }) == ErrorKind::singular_matrix);

  const auto zero_f = BiellipticQuartic::from_ints(f7, {0, 0, 0}, {1, 1, 1}, {1, 0, 1});
  CHECK(error_of([&] { validate(zero_f); }) == ErrorKind::degenerate_input);

  // f = g: fg is a square
  const auto sq = BiellipticQuartic::from_ints(f7, {1, 0, 1}, {1, 0, 1}, {0, 1, 0});
  CHECK_FALSE(validate(sq).fg_squarefree);
  const std::string msg = [&] {
    try {
      split(sq);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  }();
  CHECK(msg.find("fg has a repeated root") != std::string::npos);

  // The squarefree criterion must agree with the ternary discriminant where
  // validate cross-checks (over Q and p > 13); a disagreement would throw.
  std::mt19937_64 rng(2);
  int smooth = 0, singular = 0;
  for (const Field& f : {Field::prime(17), Field::prime(19), Field::rationals()}) {
    for (int i = 0; i < 40; ++i) {
      BiellipticQuartic c = random_curve(f, rng, 2);
      if (c.f.is_zero() || c.g.is_zero()) continue;
      const ValidationReport r = validate(c);
      REQUIRE(r.quartic_disc.has_value());
      CHECK(r.quartic_disc->is_zero() == !r.smooth());
      (r.smooth() ? smooth : singular)++;
    }
  }
  CHECK(smooth > 10);
  CHECK(singular > 3);
}

TEST_CASE("split on the documented example over F_7") {
  const Field f7 = Field::prime(7);
  const auto c = BiellipticQuartic::from_ints(f7, {0, 1, 0}, {1, 1, 1}, {1, 0, -1});
  const SplitResult r = split(c);
  // A = [[0,1,0],[1,0,-1],[1,1,1]]; det = -2, and by hand
  // A^{-1} = [[-1/2, 1/2, 1/2], [1, 0, 0], [-1/2, -1/2, 1/2]].
  const FieldElement h = f7.from_int(2).inverse();
  CHECK(r.a_matrix.det() == f7.from_int(-2));
  CHECK(r.a_inverse == Matrix3::from_rows({{{-h, h, h}, {f7.one(), f7.zero(), f7.zero()}, {-h, -h, h}}}));
  // a = a1 + 2 a2 x + a3 x^2 from the first column, and so on
  CHECK(r.a == UniPoly(f7, {-h, f7.from_int(2), -h}));
  CHECK(r.b == UniPoly(f7, {h, f7.zero(), -h}));
  CHECK(r.c == UniPoly(f7, {h, f7.zero(), h}));
  CHECK(r.sextic == r.b * (r.b * r.b - r.a * r.c));
  CHECK(r.sextic.degree() == 6);
}

TEST_CASE("singular model and pencil sextic") {
  const Field q = Field::rationals();
  // A = I: f = x^2, h = xz, g = z^2
  const auto id = BiellipticQuartic::from_ints(q, {1, 0, 0}, {0, 0, 1}, {0, 1, 0});
  CHECK(id.coefficient_matrix() == Matrix3::identity(q));
  const SingularModel m = singular_model(id);
  const TernaryForm x1 = TernaryForm::variable(q, 0), x2 = TernaryForm::variable(q, 1),
                    x3 = TernaryForm::variable(q, 2);
  CHECK(m.q[0].to_form() == x1 * x2);
  CHECK(m.q[1].to_form() == x2 * x2 + x1 * x3);
  CHECK(m.q[2].to_form() == x2 * x3);
  // -det{0, a/2, b/2; a/2, b, c/2; b/2, c/2, 0} with a = 1, b = 2x, c = x^2
  CHECK(pencil_sextic(m.q[0], m.q[1], m.q[2]) ==
        UniPoly(q, {q.zero(), q.zero(), q.zero(), q.from_rational(mpq_class(3, 2))}));

  const TernaryQuadratic zero(q);
  CHECK(pencil_sextic(zero, zero, zero).is_zero());

  // the smooth end of the deformation: (x2^2 + x3^2, x1^2, x2^2 - x3^2)
  const auto endpoint = DeformationPencil::from({zero, zero, zero}).fiber(q.one());
  // -det diag(2x, 1 + x^2, 1 - x^2)
  const UniPoly p = pencil_sextic(endpoint[0], endpoint[1], endpoint[2]);
  CHECK(p == UniPoly::from_ints(q, {0, -2, 0, 0, 0, 2}));
  CHECK(squarefree_form(BinaryForm::homogenize(p, 6)));

  std::mt19937_64 rng(3);
  for (const Field& f : {Field::prime(5), Field::prime(7), Field::prime(11), Field::prime(13), q}) {
    for (int i = 0; i < 40; ++i) {
      const BiellipticQuartic c = random_validated_curve(f, rng);
      const SplitResult s = split(c);
      const SingularModel sm = singular_model(c);
      CHECK(f.from_int(4) * pencil_sextic(sm.q[0], sm.q[1], sm.q[2]) == s.sextic);
      CHECK(s.sextic.degree() >= 5);
      CHECK(squarefree_form(BinaryForm::homogenize(s.sextic, 6)));
    }
  }
}

TEST_CASE("deformation") {
  const Field q = Field::rationals();
  const TernaryQuadratic zero(q);
  const BruinCover end = deform({zero, zero, zero}, q.one());
  TernaryForm expected(q, 4);
  expected.set(4, 0, 0, 1);
  expected.set(0, 4, 0, -1);
  expected.set(0, 0, 4, 1);
  CHECK(end.base_quartic() == expected);
  CHECK(end.base_disc == q.from_rational(mpq_class(-(mpz_class(1) << 40))));
  CHECK(end.usable());

  const Field f7 = Field::prime(7);
  std::mt19937_64 rng(4);
  int usable = 0;
  for (int i = 0; i < 10; ++i) {
    const BiellipticQuartic c = random_validated_curve(f7, rng);
    const BruinCover special = deform(c, f7.zero());
    CHECK(special.q == singular_model(c).q);
    CHECK(special.base_disc.is_zero());
    CHECK_FALSE(special.usable());
    for (std::uint64_t e = 1; e < 7; ++e) usable += deform(c, f7.element(e)).usable();
  }
  // only finitely many eps give a singular fiber
  CHECK(usable >= 30);
}

TEST_CASE("reduction of rational curves") {
  const Field q = Field::rationals();
  const auto c = BiellipticQuartic::from_elements(
      {q.from_rational(mpq_class(1, 2)), q.one(), q.from_rational(mpq_class(1, 7))},
      {q.one(), q.one(), q.one()}, {q.one(), q.zero(), q.from_int(-1)});
  const Field f5 = Field::prime(5);
  const auto r = c.reduce(f5);
  CHECK(r.f[0] == f5.from_int(3));
  CHECK(r.f[2] == f5.from_int(3));
  CHECK(error_of([&] { c.reduce(Field::prime(7)); }) == ErrorKind::rejected_input);
}

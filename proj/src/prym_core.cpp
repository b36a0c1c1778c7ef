#include "prym/prym_core.hpp"

namespace prym {

namespace {

BinaryForm quadratic(const std::array<FieldElement, 3>& c) {
  return BinaryForm(c[0].field(), {c[0], c[1], c[2]});
}

}  // namespace

BiellipticQuartic BiellipticQuartic::from_ints(const Field& field, const Triple& f,
                                               const Triple& g, const Triple& h) {
  return {field, BinaryForm::from_ints(field, {f[0], f[1], f[2]}),
          BinaryForm::from_ints(field, {g[0], g[1], g[2]}),
          BinaryForm::from_ints(field, {h[0], h[1], h[2]})};
}

BiellipticQuartic BiellipticQuartic::from_elements(const std::array<FieldElement, 3>& f,
                                                   const std::array<FieldElement, 3>& g,
                                                   const std::array<FieldElement, 3>& h) {
  return {f[0].field(), quadratic(f), quadratic(g), quadratic(h)};
}

Matrix3 BiellipticQuartic::coefficient_matrix() const {
  return Matrix3::from_rows({{{f[0], f[1], f[2]}, {h[0], h[1], h[2]}, {g[0], g[1], g[2]}}});
}

TernaryForm BiellipticQuartic::plane_quartic() const {
  // x1 = x, x2 = y, x3 = z
  TernaryForm out(field, 4);
  out.set(0, 4, 0, field.one());
  for (int i = 0; i <= 2; ++i) out.set(2 - i, 2, i, -h[i]);
  const BinaryForm r = f * g;
  for (int i = 0; i <= 4; ++i) out.set(4 - i, 0, i, r[i]);
  return out;
}

BiellipticQuartic BiellipticQuartic::reduce(const Field& target) const {
  auto map = [&](const BinaryForm& b) {
    std::array<FieldElement, 3> out;
    for (int i = 0; i < 3; ++i)
      out[i] = field.is_finite() ? b[i] : target.from_rational(b[i].rational());
    return out;
  };
  if (field.is_finite()) {
    if (field != target) fail(ErrorKind::field_mismatch, "can only reduce rational curves");
    return *this;
  }
  return from_elements(map(f), map(g), map(h));
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  if (!det_nonzero) out.push_back("det A = 0 (singular coefficient matrix)");
  if (!fg_squarefree) out.push_back("fg has a repeated root");
  if (!s_squarefree) out.push_back("h^2 - 4fg has a repeated root");
  return out;
}

ValidationReport validate(const BiellipticQuartic& c, const MacaulayOptions& opt) {
  if (c.field.characteristic() == 2) fail(ErrorKind::unsupported_field, "characteristic 2");
  if (c.f.is_zero() || c.g.is_zero()) fail(ErrorKind::degenerate_input, "f and g must be nonzero");
  ValidationReport rep;
  rep.det = c.coefficient_matrix().det();
  rep.det_nonzero = !rep.det.is_zero();
  rep.fg_squarefree = squarefree_form(c.f * c.g);
  const BinaryForm s = genus_one_model(c).s;
  rep.s_squarefree = !s.is_zero() && squarefree_form(s);

  const bool crosscheck = !c.field.is_finite() || c.field.characteristic() > 13;
  if (crosscheck) {
    try {
      rep.quartic_disc = disc_ternary_quartic(c.plane_quartic(), opt);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::resultant_indeterminate) throw;
    }
    if (rep.quartic_disc && rep.quartic_disc->is_zero() == rep.smooth())
      fail(ErrorKind::internal_contradiction,
           "squarefree criterion disagrees with the ternary discriminant");
  }
  return rep;
}

GenusOneModel genus_one_model(const BiellipticQuartic& c) {
  return {c.h * c.h - c.field.from_int(4) * (c.f * c.g)};
}

SplitResult split(const BiellipticQuartic& c, bool skip_validation, const MacaulayOptions& opt) {
  if (!skip_validation) {
    const ValidationReport rep = validate(c, opt);
    if (!rep.passed()) {
      std::string msg = "curve rejected:";
      for (const auto& f : rep.failures()) msg += " " + f + ";";
      fail(ErrorKind::rejected_input, msg);
    }
  }
  const Field& F = c.field;
  SplitResult r{c.coefficient_matrix(), Matrix3(F), UniPoly(F), UniPoly(F), UniPoly(F),
                UniPoly(F), genus_one_model(c)};
  r.a_inverse = invert3(r.a_matrix);
  const FieldElement two = F.from_int(2);
  auto column = [&](int j) {
    return UniPoly(F, {r.a_inverse(0, j), two * r.a_inverse(1, j), r.a_inverse(2, j)});
  };
  r.a = column(0);
  r.b = column(1);
  r.c = column(2);
  r.sextic = r.b * (r.b * r.b - r.a * r.c);
  if (r.sextic != r.b * r.b * r.b - r.a * r.b * r.c)
    fail(ErrorKind::internal_contradiction, "F != b^3 - abc");

  if (!skip_validation) {
    const int d = r.sextic.degree();
    if (d < 5 || !squarefree_form(BinaryForm::homogenize(r.sextic, 6)))
      fail(ErrorKind::internal_contradiction,
           "validated curve produced a sextic of degree " + std::to_string(d) +
               " or with a repeated root: " + r.sextic.to_string());
  }
  return r;
}

SingularModel singular_model(const BiellipticQuartic& c) {
  const Field& F = c.field;
  const Matrix3 a = c.coefficient_matrix();
  const Matrix3 inv = invert3(a);
  const FieldElement half = F.from_int(2).inverse();

  SingularModel m{{TernaryQuadratic(F), TernaryQuadratic(F), TernaryQuadratic(F)}};
  for (int i = 0; i < 3; ++i) {
    // a_i x1x2 + b_i (x2^2 + x1x3) + c_i x2x3
    auto& g = m.q[i];
    g(0, 1) = g(1, 0) = inv(i, 0) * half;
    g(1, 1) = inv(i, 1);
    g(0, 2) = g(2, 0) = inv(i, 1) * half;
    g(1, 2) = g(2, 1) = inv(i, 2) * half;
  }

  // A (q1, q2, q3)^T must give back (x1x2, x2^2 + x1x3, x2x3)^T.
  std::array<TernaryForm, 3> target{TernaryForm(F, 2), TernaryForm(F, 2), TernaryForm(F, 2)};
  target[0].set(1, 1, 0, F.one());
  target[1].set(0, 2, 0, F.one());
  target[1].set(1, 0, 1, F.one());
  target[2].set(0, 1, 1, F.one());
  for (int r = 0; r < 3; ++r) {
    TernaryForm acc(F, 2);
    for (int k = 0; k < 3; ++k) acc = acc + a(r, k) * m.q[k].to_form();
    if (!(acc == target[r]))
      fail(ErrorKind::internal_contradiction, "singular model failed A q = (x1x2, ...) check");
  }
  return m;
}

UniPoly pencil_sextic(const TernaryQuadratic& q1, const TernaryQuadratic& q2,
                      const TernaryQuadratic& q3) {
  const Field& F = q1.field();
  std::array<UniPoly, 9> m;
  const FieldElement two = F.from_int(2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[3 * i + j] = UniPoly(F, {q1(i, j), two * q2(i, j), q3(i, j)});
  return -det3(m);
}

TernaryForm cover_base_quartic(const std::array<TernaryQuadratic, 3>& q) {
  const TernaryForm a = q[0].to_form(), b = q[1].to_form(), c = q[2].to_form();
  return b * b - a * c;
}

BruinCover make_bruin_cover(const std::array<TernaryQuadratic, 3>& q, const MacaulayOptions& opt) {
  BruinCover cov{q, pencil_sextic(q[0], q[1], q[2]), FieldElement(), false, false};
  cov.base_disc = disc_ternary_quartic(cov.base_quartic(), opt);
  cov.base_smooth = !cov.base_disc.is_zero();
  cov.sextic_squarefree = !cov.sextic.is_zero() && cov.sextic.degree() >= 5 &&
                          squarefree_form(BinaryForm::homogenize(cov.sextic, 6));
  return cov;
}

DeformationPencil DeformationPencil::from(const std::array<TernaryQuadratic, 3>& base) {
  const Field& F = base[0].field();
  std::array<TernaryQuadratic, 3> end{TernaryQuadratic(F), TernaryQuadratic(F),
                                      TernaryQuadratic(F)};
  end[0](1, 1) = F.one();
  end[0](2, 2) = F.one();
  end[1](0, 0) = F.one();
  end[2](1, 1) = F.one();
  end[2](2, 2) = -F.one();
  DeformationPencil p{base, end};
  for (int i = 0; i < 3; ++i)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) p.direction[i](r, c) = end[i](r, c) - base[i](r, c);
  return p;
}

std::array<TernaryQuadratic, 3> DeformationPencil::fiber(const FieldElement& eps) const {
  std::array<TernaryQuadratic, 3> out = base;
  for (int i = 0; i < 3; ++i)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) out[i](r, c) = base[i](r, c) + eps * direction[i](r, c);
  return out;
}

BruinCover deform(const std::array<TernaryQuadratic, 3>& base, const FieldElement& eps,
                  const MacaulayOptions& opt) {
  return make_bruin_cover(DeformationPencil::from(base).fiber(eps), opt);
}

BruinCover deform(const BiellipticQuartic& c, const FieldElement& eps, const MacaulayOptions& opt) {
  return deform(singular_model(c).q, eps, opt);
}

}  // namespace prym

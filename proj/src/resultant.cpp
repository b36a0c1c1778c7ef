#include "prym/resultant.hpp"

#include <map>
#include <random>

#include "prym/matrix.hpp"

namespace prym {

FieldElement sylvester_determinant(const std::vector<FieldElement>& p,
                                   const std::vector<FieldElement>& q) {
  if (p.empty() || q.empty()) fail(ErrorKind::degree, "Sylvester matrix needs nonempty inputs");
  const Field& F = p.front().field();
  const std::size_t m = p.size() - 1, n = q.size() - 1;
  DenseMatrix s(F, m + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s(r, r + j) = p[j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s(n + r, r + j) = q[j];
  return determinant(std::move(s));
}

namespace {

std::vector<FieldElement> lead_first(const UniPoly& p) {
  std::vector<FieldElement> v(p.coeffs().rbegin(), p.coeffs().rend());
  return v;
}

}  // namespace

FieldElement resultant(const UniPoly& p, const UniPoly& q) {
  if (p.field() != q.field()) fail(ErrorKind::field_mismatch, "resultant over different fields");
  if (p.is_zero() && q.is_zero()) fail(ErrorKind::undefined_resultant, "Res(0, 0) is undefined");
  if (p.is_zero() || q.is_zero()) return p.field().zero();
  return sylvester_determinant(lead_first(p), lead_first(q));
}

FieldElement discriminant_binary(const BinaryForm& f) {
  if (f.degree() < 2) fail(ErrorKind::degree, "binary discriminant needs degree >= 2");
  return sylvester_determinant(f.partial_x().coeffs(), f.partial_z().coeffs());
}

FieldElement binary_discriminant_scale(const Field& field, int n) {
  if (n < 2) fail(ErrorKind::degree, "binary discriminant needs degree >= 2");
  FieldElement s = field.from_int(n).pow(static_cast<std::uint64_t>(n - 2));
  if ((n * (n - 1) / 2) % 2) s = -s;
  return s;
}

FieldElement classical_discriminant(const BinaryForm& f) {
  const FieldElement scale = binary_discriminant_scale(f.field(), f.degree());
  if (scale.is_zero())
    fail(ErrorKind::unsupported_field, "characteristic divides the form degree");
  return discriminant_binary(f) / scale;
}

bool squarefree_form(const BinaryForm& f) {
  if (f.is_zero()) fail(ErrorKind::degenerate_input, "zero form has no root multiplicities");
  const int n = f.degree();
  // at most a simple root at infinity
  if (n >= 2 && f[0].is_zero() && f[1].is_zero()) return false;
  const UniPoly a = f.dehomogenize();
  if (a.degree() <= 0) return true;
  return gcd(a, a.derivative()).degree() == 0;
}

// ---------------------------------------------------------------------------
// Macaulay

namespace {

int exponent(const Monomial& m, int i) { return i == 0 ? m.a : i == 1 ? m.b : m.c; }

struct MacaulayLayout {
  std::vector<Monomial> mons;
  std::map<std::pair<int, int>, std::size_t> index;  // (a, b) -> column
  std::vector<int> assigned;                         // form used for each row
  std::vector<std::size_t> non_reduced;
};

MacaulayLayout layout(const std::array<int, 3>& d) {
  MacaulayLayout L;
  const int t = d[0] + d[1] + d[2] - 2;
  L.mons = monomials(t);
  for (std::size_t i = 0; i < L.mons.size(); ++i) {
    const auto& m = L.mons[i];
    L.index[{m.a, m.b}] = i;
    int first = -1, hits = 0;
    for (int v = 0; v < 3; ++v) {
      if (exponent(m, v) >= d[v]) {
        ++hits;
        if (first < 0) first = v;
      }
    }
    if (first < 0) fail(ErrorKind::internal_contradiction, "monomial below the critical degree");
    L.assigned.push_back(first);
    if (hits > 1) L.non_reduced.push_back(i);
  }
  return L;
}

struct Quotient {
  FieldElement numerator;
  FieldElement extraneous;
};

Quotient macaulay_quotient(const std::array<TernaryForm, 3>& f, const MacaulayLayout& L,
                           const std::array<int, 3>& d) {
  const Field& F = f[0].field();
  const std::size_t N = L.mons.size();
  DenseMatrix M(F, N);
  std::array<std::vector<Monomial>, 3> support;
  for (int v = 0; v < 3; ++v) support[v] = monomials(d[v]);
  for (std::size_t r = 0; r < N; ++r) {
    const int v = L.assigned[r];
    Monomial shift = L.mons[r];
    (v == 0 ? shift.a : v == 1 ? shift.b : shift.c) -= d[v];
    for (const auto& s : support[v]) {
      FieldElement c = f[v].coeff(s);
      if (c.is_zero()) continue;
      M(r, L.index.at({shift.a + s.a, shift.b + s.b})) = std::move(c);
    }
  }
  const std::size_t K = L.non_reduced.size();
  DenseMatrix sub(F, K);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j) sub(i, j) = M(L.non_reduced[i], L.non_reduced[j]);
  return {determinant(std::move(M)), determinant(std::move(sub))};
}

}  // namespace

FieldElement macaulay_resultant(const std::array<TernaryForm, 3>& f, const MacaulayOptions& opt) {
  const Field& F = f[0].field();
  std::array<int, 3> d{};
  for (int v = 0; v < 3; ++v) {
    if (f[v].field() != F) fail(ErrorKind::field_mismatch, "Macaulay inputs over different fields");
    d[v] = f[v].degree();
    if (d[v] < 1) fail(ErrorKind::degree, "Macaulay resultant needs forms of degree >= 1");
  }
  const MacaulayLayout L = layout(d);
  {
    Quotient q = macaulay_quotient(f, L, d);
    if (!q.extraneous.is_zero()) return q.numerator / q.extraneous;
  }
  std::mt19937_64 rng(opt.seed);
  const std::uint64_t weight = static_cast<std::uint64_t>(d[0]) * d[1] * d[2];
  for (int attempt = 0; attempt < opt.max_retries; ++attempt) {
    Matrix3 g(F);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g(i, j) = random_element(F, rng, 3);
    const FieldElement dg = g.det();
    if (dg.is_zero()) continue;
    std::array<TernaryForm, 3> h{f[0].substitute(g), f[1].substitute(g), f[2].substitute(g)};
    Quotient q = macaulay_quotient(h, L, d);
    if (q.extraneous.is_zero()) continue;
    return q.numerator / q.extraneous / dg.pow(weight);
  }
  fail(ErrorKind::resultant_indeterminate,
       "extraneous Macaulay minor vanished for " + std::to_string(opt.max_retries) +
           " coordinate changes over " + F.name());
}

FieldElement macaulay_resultant_cubics(const TernaryForm& f1, const TernaryForm& f2,
                                       const TernaryForm& f3, const MacaulayOptions& opt) {
  if (f1.degree() != 3 || f2.degree() != 3 || f3.degree() != 3)
    fail(ErrorKind::degree, "expected three ternary cubics");
  return macaulay_resultant({f1, f2, f3}, opt);
}

FieldElement quartic_partials_resultant(const TernaryForm& f, const MacaulayOptions& opt) {
  if (f.degree() != 4) fail(ErrorKind::degree, "expected a ternary quartic");
  if (f.field().characteristic() == 2) fail(ErrorKind::unsupported_field, "characteristic 2");
  return macaulay_resultant_cubics(f.partial(0), f.partial(1), f.partial(2), opt);
}

FieldElement disc_ternary_quartic(const TernaryForm& f, const MacaulayOptions& opt) {
  return quartic_partials_resultant(f, opt) / f.field().from_int(kQuarticDiscScale);
}

}  // namespace prym

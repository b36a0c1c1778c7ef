#include "prym/ternary.hpp"

#include <sstream>

namespace prym {

std::vector<Monomial> monomials(int d) {
  std::vector<Monomial> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

TernaryForm::TernaryForm(Field field, int degree)
    : field_(std::move(field)), degree_(degree) {
  if (degree < 0) fail(ErrorKind::degree, "negative form degree");
  c_.assign(static_cast<std::size_t>((degree + 1) * (degree + 1)), field_.zero());
}

TernaryForm TernaryForm::variable(const Field& field, int i) {
  TernaryForm f(field, 1);
  f.set(i == 0, i == 1, i == 2, field.one());
  return f;
}

bool TernaryForm::is_zero() const {
  for (const auto& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

FieldElement TernaryForm::coeff(const Monomial& m) const {
  if (m.degree() != degree_ || m.a < 0 || m.b < 0 || m.c < 0) return field_.zero();
  return c_[slot(m.a, m.b)];
}

void TernaryForm::set(const Monomial& m, FieldElement v) {
  if (m.degree() != degree_ || m.a < 0 || m.b < 0 || m.c < 0)
    fail(ErrorKind::degree, "monomial degree does not match the form");
  c_[slot(m.a, m.b)] = std::move(v);
}

FieldElement TernaryForm::operator()(const FieldElement& x1, const FieldElement& x2,
                                     const FieldElement& x3) const {
  FieldElement acc = field_.zero();
  for (const auto& m : monomials(degree_)) {
    const auto& v = c_[slot(m.a, m.b)];
    if (v.is_zero()) continue;
    acc += v * x1.pow(m.a) * x2.pow(m.b) * x3.pow(m.c);
  }
  return acc;
}

TernaryForm TernaryForm::partial(int i) const {
  if (degree_ == 0) return TernaryForm(field_, 0);
  TernaryForm d(field_, degree_ - 1);
  for (const auto& m : monomials(degree_)) {
    const auto& v = c_[slot(m.a, m.b)];
    const int e = i == 0 ? m.a : i == 1 ? m.b : m.c;
    if (e == 0 || v.is_zero()) continue;
    Monomial n = m;
    (i == 0 ? n.a : i == 1 ? n.b : n.c) -= 1;
    d.set(n, d.coeff(n) + v * field_.from_int(e));
  }
  return d;
}

TernaryForm TernaryForm::pow(int e) const {
  TernaryForm acc(field_, 0);
  acc.set(0, 0, 0, field_.one());
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

TernaryForm TernaryForm::substitute(const Matrix3& g) const {
  std::array<TernaryForm, 3> lin;
  for (int i = 0; i < 3; ++i) {
    lin[i] = TernaryForm(field_, 1);
    lin[i].set(1, 0, 0, g(i, 0));
    lin[i].set(0, 1, 0, g(i, 1));
    lin[i].set(0, 0, 1, g(i, 2));
  }
  std::array<std::vector<TernaryForm>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    powers[i].push_back(lin[i].pow(0));
    for (int e = 1; e <= degree_; ++e) powers[i].push_back(powers[i].back() * lin[i]);
  }
  TernaryForm out(field_, degree_);
  for (const auto& m : monomials(degree_)) {
    const auto& v = c_[slot(m.a, m.b)];
    if (v.is_zero()) continue;
    out = out + v * (powers[0][m.a] * powers[1][m.b] * powers[2][m.c]);
  }
  return out;
}

TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
  if (a.degree_ != b.degree_) fail(ErrorKind::degree, "adding forms of different degree");
  TernaryForm r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

TernaryForm operator-(const TernaryForm& a, const TernaryForm& b) {
  return a + (-a.field_.one()) * b;
}

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
  TernaryForm r(a.field_, a.degree_ + b.degree_);
  const auto ma = monomials(a.degree_), mb = monomials(b.degree_);
  for (const auto& x : ma) {
    const auto& va = a.c_[a.slot(x.a, x.b)];
    if (va.is_zero()) continue;
    for (const auto& y : mb) {
      const auto& vb = b.c_[b.slot(y.a, y.b)];
      if (vb.is_zero()) continue;
      auto& dst = r.c_[r.slot(x.a + y.a, x.b + y.b)];
      dst += va * vb;
    }
  }
  return r;
}

TernaryForm operator*(const FieldElement& s, const TernaryForm& a) {
  TernaryForm r = a;
  for (auto& v : r.c_) v *= s;
  return r;
}

bool operator==(const TernaryForm& a, const TernaryForm& b) {
  return a.degree_ == b.degree_ && a.field_ == b.field_ && a.c_ == b.c_;
}

std::string TernaryForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& m : monomials(degree_)) {
    const auto& v = c_[slot(m.a, m.b)];
    if (v.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << v.to_string() << ')';
    const int e[3] = {m.a, m.b, m.c};
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------

TernaryQuadratic::TernaryQuadratic(Field field) : gram_(std::move(field)) {}

TernaryQuadratic TernaryQuadratic::from_form(const TernaryForm& q) {
  if (q.degree() != 2) fail(ErrorKind::degree, "Gram matrix needs a quadratic form");
  const Field& F = q.field();
  if (F.characteristic() == 2) fail(ErrorKind::unsupported_field, "characteristic 2");
  const FieldElement half = F.from_int(2).inverse();
  TernaryQuadratic g(F);
  g(0, 0) = q.coeff(2, 0, 0);
  g(1, 1) = q.coeff(0, 2, 0);
  g(2, 2) = q.coeff(0, 0, 2);
  g(0, 1) = g(1, 0) = q.coeff(1, 1, 0) * half;
  g(0, 2) = g(2, 0) = q.coeff(1, 0, 1) * half;
  g(1, 2) = g(2, 1) = q.coeff(0, 1, 1) * half;
  return g;
}

TernaryForm TernaryQuadratic::to_form() const {
  const Field& F = field();
  const FieldElement two = F.from_int(2);
  TernaryForm q(F, 2);
  q.set(2, 0, 0, gram_(0, 0));
  q.set(0, 2, 0, gram_(1, 1));
  q.set(0, 0, 2, gram_(2, 2));
  q.set(1, 1, 0, two * gram_(0, 1));
  q.set(1, 0, 1, two * gram_(0, 2));
  q.set(0, 1, 1, two * gram_(1, 2));
  return q;
}

}  // namespace prym

#include "prym/poly.hpp"

#include <sstream>

namespace prym {

UniPoly::UniPoly(Field field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.field() != field_) fail(ErrorKind::field_mismatch, "coefficient outside " + field_.name());
  normalize();
}

UniPoly UniPoly::from_ints(const Field& field, std::initializer_list<long long> coeffs) {
  return from_ints(field, std::vector<long long>(coeffs));
}

UniPoly UniPoly::from_ints(const Field& field, const std::vector<long long>& coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(field.from_int(v));
  return UniPoly(field, std::move(c));
}

UniPoly UniPoly::monomial(const Field& field, const FieldElement& c, int degree) {
  std::vector<FieldElement> v(static_cast<std::size_t>(degree) + 1, field.zero());
  v.back() = c;
  return UniPoly(field, std::move(v));
}

UniPoly UniPoly::constant(const FieldElement& c) { return UniPoly(c.field(), {c}); }

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int UniPoly::degree() const {
  return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
}

FieldElement UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_.zero();
  return coeffs_[i];
}

FieldElement UniPoly::leading() const { return is_zero() ? field_.zero() : coeffs_.back(); }

FieldElement UniPoly::operator()(const FieldElement& x) const {
  FieldElement acc = field_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<FieldElement> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d.push_back(coeffs_[i] * field_.from_int(static_cast<long long>(i)));
  return UniPoly(field_, std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.field_ != field_) fail(ErrorKind::field_mismatch, "adding polynomials over different fields");
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (o.field_ != field_)
    fail(ErrorKind::field_mismatch, "multiplying polynomials over different fields");
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<FieldElement> r(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const FieldElement& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << coeffs_[i].to_string() << ')';
    if (i >= 1) os << '*' << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(ErrorKind::degenerate_input, "polynomial division by zero");
  const Field& F = a.field();
  UniPoly r = a;
  const int db = b.degree();
  if (r.degree() < db) return {UniPoly(F), r};
  std::vector<FieldElement> q(static_cast<std::size_t>(r.degree() - db) + 1, F.zero());
  const FieldElement inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    const FieldElement c = r.leading() * inv;
    q[shift] = c;
    r -= UniPoly::monomial(F, c, shift) * b;
  }
  return {UniPoly(F, std::move(q)), r};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------------------

BinaryForm::BinaryForm(Field field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(ErrorKind::degree, "binary form needs at least one coefficient");
  for (const auto& c : coeffs_)
    if (c.field() != field_) fail(ErrorKind::field_mismatch, "coefficient outside " + field_.name());
}

BinaryForm BinaryForm::from_ints(const Field& field, std::initializer_list<long long> coeffs) {
  return from_ints(field, std::vector<long long>(coeffs));
}

BinaryForm BinaryForm::from_ints(const Field& field, const std::vector<long long>& coeffs) {
  std::vector<FieldElement> c;
  for (auto v : coeffs) c.push_back(field.from_int(v));
  return BinaryForm(field, std::move(c));
}

BinaryForm BinaryForm::homogenize(const UniPoly& p, int n) {
  if (p.degree() > n) fail(ErrorKind::degree, "cannot homogenize below the polynomial degree");
  std::vector<FieldElement> c(static_cast<std::size_t>(n) + 1, p.field().zero());
  for (int i = 0; i <= n; ++i) c[i] = p.coeff(n - i);
  return BinaryForm(p.field(), std::move(c));
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

UniPoly BinaryForm::dehomogenize() const {
  const int n = degree();
  std::vector<FieldElement> c(coeffs_.size(), field_.zero());
  for (int i = 0; i <= n; ++i) c[n - i] = coeffs_[i];
  return UniPoly(field_, std::move(c));
}

FieldElement BinaryForm::operator()(const FieldElement& x, const FieldElement& z) const {
  const int n = degree();
  FieldElement acc = field_.zero();
  for (int i = 0; i <= n; ++i) acc += coeffs_[i] * x.pow(n - i) * z.pow(i);
  return acc;
}

BinaryForm BinaryForm::partial_x() const {
  const int n = degree();
  if (n == 0) return BinaryForm(field_, {field_.zero()});
  std::vector<FieldElement> c;
  for (int i = 0; i < n; ++i) c.push_back(coeffs_[i] * field_.from_int(n - i));
  return BinaryForm(field_, std::move(c));
}

BinaryForm BinaryForm::partial_z() const {
  const int n = degree();
  if (n == 0) return BinaryForm(field_, {field_.zero()});
  std::vector<FieldElement> c;
  for (int i = 1; i <= n; ++i) c.push_back(coeffs_[i] * field_.from_int(i));
  return BinaryForm(field_, std::move(c));
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) fail(ErrorKind::degree, "adding binary forms of different degree");
  std::vector<FieldElement> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return BinaryForm(a.field_, std::move(c));
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
  return a + (-a.field_.one()) * b;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  std::vector<FieldElement> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return BinaryForm(a.field_, std::move(c));
}

BinaryForm operator*(const FieldElement& s, const BinaryForm& a) {
  std::vector<FieldElement> c = a.coeffs_;
  for (auto& x : c) x *= s;
  return BinaryForm(a.field_, std::move(c));
}

std::string BinaryForm::to_string() const {
  std::ostringstream os;
  const int n = degree();
  bool first = true;
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << coeffs_[i].to_string() << ')';
    if (n - i > 0) os << "*x" << (n - i > 1 ? "^" + std::to_string(n - i) : "");
    if (i > 0) os << "*z" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return first ? "0" : os.str();
}

}  // namespace prym

#include "prym/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace prym {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_field: return "invalid-field";
    case ErrorKind::unsupported_field: return "unsupported-field";
    case ErrorKind::field_mismatch: return "field-mismatch";
    case ErrorKind::singular_matrix: return "singular-matrix";
    case ErrorKind::undefined_resultant: return "undefined-resultant";
    case ErrorKind::degree: return "degree";
    case ErrorKind::degenerate_input: return "degenerate-input";
    case ErrorKind::resultant_indeterminate: return "resultant-indeterminate";
    case ErrorKind::rejected_input: return "rejected-input";
    case ErrorKind::resource_limit: return "resource-limit";
    case ErrorKind::model: return "model";
    case ErrorKind::inconsistent_counts: return "inconsistent-counts";
    case ErrorKind::internal_contradiction: return "internal-contradiction";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

namespace {

// Dense polynomials over F_p, constant term first, no trailing zeros.
using PolyP = std::vector<std::uint64_t>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP mod_poly(PolyP a, const PolyP& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  std::uint64_t lead_inv = 1;
  {
    // m is not necessarily monic (gcd intermediates)
    std::uint64_t b = m.back(), e = p - 2;
    while (e) {
      if (e & 1) lead_inv = lead_inv * b % p;
      b = b * b % p;
      e >>= 1;
    }
  }
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trim(a);
  }
  return a;
}

PolyP mul_mod(const PolyP& a, const PolyP& b, const PolyP& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return mod_poly(std::move(r), m, p);
}

PolyP gcd_poly(PolyP a, PolyP b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyP r = mod_poly(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const PolyP& m, std::uint64_t p) {
  const std::size_t k = m.size() - 1;
  if (k == 1) return true;
  if (m[0] == 0) return false;
  // x^{p^i} mod m for i = 1..k/2; gcd(x^{p^i} - x, m) must be trivial.
  PolyP xp = {0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    PolyP base = xp, acc = {1};
    std::uint64_t e = p;
    while (e) {
      if (e & 1) acc = mul_mod(acc, base, m, p);
      base = mul_mod(base, base, m, p);
      e >>= 1;
    }
    xp = acc;
    PolyP diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (gcd_poly(diff, m, p).size() > 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

mpq_class parse_rational(const std::string& text) {
  mpq_class r;
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
          t.end());
  if (t.empty() || r.set_str(t, 10) != 0) fail(ErrorKind::parse, "malformed rational '" + text + "'");
  if (r.get_den() == 0) fail(ErrorKind::parse, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Field

struct Field::Data {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;
};

Field::Field() : Field(Field::rationals()) {}

Field Field::rationals() {
  static const std::shared_ptr<const Data> data = std::make_shared<const Data>();
  return Field(data);
}

Field Field::prime(std::uint32_t p) {
  if (p == 2) fail(ErrorKind::invalid_field, "characteristic 2 is excluded");
  if (!is_prime(p)) fail(ErrorKind::invalid_field, std::to_string(p) + " is not prime");
  auto d = std::make_shared<Data>();
  d->kind = FieldKind::prime_field;
  d->p = p;
  d->k = 1;
  d->q = p;
  return Field(std::move(d));
}

Field Field::extension(std::uint32_t p, std::uint32_t k) {
  if (k == 0) fail(ErrorKind::invalid_field, "extension degree must be at least 1");
  Field base = prime(p);
  if (k == 1) return base;
  // Scan monic t^k + c_{k-1} t^{k-1} + ... + c_0 in order of sum c_i p^i.
  std::uint64_t limit = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    limit *= p;
    if (limit > (std::uint64_t{1} << 40)) fail(ErrorKind::invalid_field, "extension too large");
  }
  for (std::uint64_t n = 0; n < limit; ++n) {
    PolyP m(k + 1, 0);
    std::uint64_t t = n;
    for (std::uint32_t i = 0; i < k; ++i) {
      m[i] = t % p;
      t /= p;
    }
    m[k] = 1;
    if (is_irreducible(m, p)) {
      std::vector<std::uint32_t> mod(m.begin(), m.end());
      return with_modulus(p, std::move(mod));
    }
  }
  fail(ErrorKind::internal_contradiction, "no irreducible polynomial found");
}

Field Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  Field base = prime(p);
  if (modulus.size() < 2 || modulus.back() != 1)
    fail(ErrorKind::invalid_field, "modulus must be monic of degree >= 1");
  if (modulus.size() == 2) return base;
  PolyP m;
  for (auto c : modulus) m.push_back(c % p);
  if (!is_irreducible(m, p)) fail(ErrorKind::invalid_field, "modulus is reducible");
  auto d = std::make_shared<Data>();
  d->kind = FieldKind::extension_field;
  d->p = p;
  d->k = static_cast<std::uint32_t>(modulus.size() - 1);
  d->q = 1;
  for (std::uint32_t i = 0; i < d->k; ++i) d->q *= p;
  for (auto& c : modulus) c %= p;
  d->modulus = std::move(modulus);
  return Field(std::move(d));
}

FieldKind Field::kind() const { return data_->kind; }
std::uint32_t Field::characteristic() const { return data_->p; }
std::uint32_t Field::degree() const { return data_->k; }

std::uint64_t Field::order() const {
  if (!is_finite()) fail(ErrorKind::unsupported_field, "the rationals have no finite order");
  return data_->q;
}

const std::vector<std::uint32_t>& Field::modulus() const { return data_->modulus; }

std::string Field::name() const {
  switch (data_->kind) {
    case FieldKind::rationals: return "Q";
    case FieldKind::prime_field: return "GF(" + std::to_string(data_->p) + ")";
    case FieldKind::extension_field:
      return "GF(" + std::to_string(data_->p) + "^" + std::to_string(data_->k) + ")";
  }
  return "?";
}

bool operator==(const Field& a, const Field& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->kind == b.data_->kind && a.data_->p == b.data_->p && a.data_->k == b.data_->k &&
         a.data_->modulus == b.data_->modulus;
}

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long long n) const {
  if (!is_finite()) return FieldElement(*this, mpq_class(static_cast<long>(n)));
  const long long p = data_->p;
  long long r = n % p;
  if (r < 0) r += p;
  FieldElement::Coeffs c(data_->k, 0);
  c[0] = static_cast<std::uint32_t>(r);
  return FieldElement(*this, std::move(c));
}

FieldElement Field::from_rational(const mpq_class& r) const {
  if (!is_finite()) {
    mpq_class v = r;
    v.canonicalize();
    return FieldElement(*this, v);
  }
  const mpz_class p = data_->p;
  mpz_class num = r.get_num() % p, den = r.get_den() % p;
  if (num < 0) num += p;
  if (den == 0)
    fail(ErrorKind::rejected_input, "denominator of " + r.get_str() + " vanishes mod " + p.get_str());
  return from_int(num.get_si()) / from_int(den.get_si());
}

FieldElement Field::from_coeffs(std::vector<std::uint32_t> coeffs) const {
  if (!is_finite()) fail(ErrorKind::unsupported_field, "coefficient vectors need a finite field");
  if (coeffs.size() > data_->k) fail(ErrorKind::degree, "too many coefficients for " + name());
  coeffs.resize(data_->k, 0);
  for (auto& c : coeffs) c %= data_->p;
  return FieldElement(*this, std::move(coeffs));
}

FieldElement Field::element(std::uint64_t index) const {
  if (index >= order()) fail(ErrorKind::degree, "element index out of range");
  FieldElement::Coeffs c(data_->k, 0);
  for (auto& ci : c) {
    ci = static_cast<std::uint32_t>(index % data_->p);
    index /= data_->p;
  }
  return FieldElement(*this, std::move(c));
}

std::uint64_t Field::index_of(const FieldElement& e) const {
  if (e.field() != *this) fail(ErrorKind::field_mismatch, "element is not in " + name());
  const auto& c = e.coeffs();
  std::uint64_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * data_->p + c[i];
  return idx;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement() : field_(Field::rationals()), value_(mpq_class(0)) {}

FieldElement::FieldElement(Field field, mpq_class value)
    : field_(std::move(field)), value_(std::move(value)) {}

FieldElement::FieldElement(Field field, Coeffs value)
    : field_(std::move(field)), value_(std::move(value)) {}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (field_.data_ != o.field_.data_ && field_ != o.field_)
    fail(ErrorKind::field_mismatch, "mixing " + field_.name() + " and " + o.field_.name());
}

bool FieldElement::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 0;
  const auto& c = std::get<Coeffs>(value_);
  return std::all_of(c.begin(), c.end(), [](auto x) { return x == 0; });
}

bool FieldElement::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  const auto& c = std::get<Coeffs>(value_);
  if (c[0] != 1) return false;
  return std::all_of(c.begin() + 1, c.end(), [](auto x) { return x == 0; });
}

const mpq_class& FieldElement::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  fail(ErrorKind::unsupported_field, "not a rational element");
}

const FieldElement::Coeffs& FieldElement::coeffs() const {
  if (auto* c = std::get_if<Coeffs>(&value_)) return *c;
  fail(ErrorKind::unsupported_field, "not a finite-field element");
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (auto* q = std::get_if<mpq_class>(&r.value_)) {
    *q = -*q;
  } else {
    const std::uint32_t p = field_.characteristic();
    for (auto& c : std::get<Coeffs>(r.value_)) c = c == 0 ? 0 : p - c;
  }
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(o.value_);
  } else {
    const std::uint32_t p = field_.characteristic();
    auto& a = std::get<Coeffs>(value_);
    const auto& b = std::get<Coeffs>(o.value_);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint32_t s = a[i] + b[i];
      a[i] = s >= p ? s - p : s;
    }
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(o.value_);
    return *this;
  }
  const std::uint64_t p = field_.characteristic();
  auto& a = std::get<Coeffs>(value_);
  const auto& b = std::get<Coeffs>(o.value_);
  const std::size_t k = a.size();
  if (k == 1) {
    a[0] = static_cast<std::uint32_t>(std::uint64_t{a[0]} * b[0] % p);
    return *this;
  }
  std::vector<std::uint64_t> r(2 * k - 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) r[i + j] = (r[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  const auto& m = field_.modulus();
  for (std::size_t d = 2 * k - 2; d >= k; --d) {
    const std::uint64_t c = r[d];
    if (c == 0) continue;
    r[d] = 0;
    for (std::size_t i = 0; i < k; ++i) r[d - k + i] = (r[d - k + i] + (p - c) * m[i]) % p;
  }
  for (std::size_t i = 0; i < k; ++i) a[i] = static_cast<std::uint32_t>(r[i]);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorKind::degenerate_input, "division by zero in " + field_.name());
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    mpq_class r = 1 / *q;
    return FieldElement(field_, r);
  }
  return pow(field_.order() - 2);
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement base = *this, acc = field_.one();
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

FieldElement FieldElement::pow_signed(long long e) const {
  if (e >= 0) return pow(static_cast<std::uint64_t>(e));
  return inverse().pow(static_cast<std::uint64_t>(-e));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_) return false;
  return a.value_ == b.value_;
}

std::string FieldElement::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  const auto& c = std::get<Coeffs>(value_);
  if (c.size() == 1) return std::to_string(c[0]);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

FieldElement random_element(const Field& field, std::mt19937_64& rng, long long bound) {
  if (!field.is_finite()) {
    std::uniform_int_distribution<long long> d(-bound, bound);
    return field.from_int(d(rng));
  }
  std::uniform_int_distribution<std::uint64_t> d(0, field.order() - 1);
  return field.element(d(rng));
}

Field build_extension(std::uint32_t p, std::uint32_t k) { return Field::extension(p, k); }

int quadratic_character(const FieldElement& e) {
  const Field& F = e.field();
  if (!F.is_finite()) fail(ErrorKind::unsupported_field, "quadratic character needs a finite field");
  if (e.is_zero()) return 0;
  const FieldElement t = e.pow((F.order() - 1) / 2);
  if (t.is_one()) return 1;
  if (t == -F.one()) return -1;
  fail(ErrorKind::internal_contradiction, "Euler criterion produced " + t.to_string());
}

}  // namespace prym

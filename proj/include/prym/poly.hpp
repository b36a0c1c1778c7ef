#pragma once

#include <climits>
#include <initializer_list>
#include <string>
#include <vector>

#include "prym/field.hpp"

namespace prym {

/// Dense univariate polynomial, constant term first, no trailing zeros.
class UniPoly {
 public:
  /// Degree of the zero polynomial. Chosen so that deg(pq) = deg p + deg q
  /// still compares below every real degree without overflowing.
  static constexpr int kZeroDegree = INT_MIN / 4;

  UniPoly() = default;
  explicit UniPoly(Field field) : field_(std::move(field)) {}
  UniPoly(Field field, std::vector<FieldElement> coeffs);
  static UniPoly from_ints(const Field& field, std::initializer_list<long long> coeffs);
  static UniPoly from_ints(const Field& field, const std::vector<long long>& coeffs);
  static UniPoly monomial(const Field& field, const FieldElement& c, int degree);
  static UniPoly constant(const FieldElement& c);

  const Field& field() const { return field_; }
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i (zero beyond the degree).
  FieldElement coeff(int i) const;
  FieldElement leading() const;
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }

  FieldElement operator()(const FieldElement& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const FieldElement& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const FieldElement& c) { return a *= c; }
  friend UniPoly operator*(const FieldElement& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b);
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();

  Field field_;
  std::vector<FieldElement> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero if both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// Homogeneous form in (x, z) of formal degree n: sum_i c_i x^{n-i} z^i.
/// Leading entries may vanish; each vanishing leading entry is a root at infinity.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(Field field, std::vector<FieldElement> coeffs);
  static BinaryForm from_ints(const Field& field, std::initializer_list<long long> coeffs);
  static BinaryForm from_ints(const Field& field, const std::vector<long long>& coeffs);
  /// Homogenize p to formal degree n >= deg p.
  static BinaryForm homogenize(const UniPoly& p, int n);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const FieldElement& operator[](int i) const { return coeffs_.at(i); }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  /// F(x, 1).
  UniPoly dehomogenize() const;
  FieldElement operator()(const FieldElement& x, const FieldElement& z) const;
  BinaryForm partial_x() const;
  BinaryForm partial_z() const;

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const FieldElement& c, const BinaryForm& a);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  Field field_;
  std::vector<FieldElement> coeffs_;
};

}  // namespace prym

#pragma once

#include <array>
#include <string>
#include <vector>

#include "prym/field.hpp"
#include "prym/matrix.hpp"

namespace prym {

/// Exponent triple of x1^a x2^b x3^c.
struct Monomial {
  int a = 0, b = 0, c = 0;
  int degree() const { return a + b + c; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// All monomials of degree d in x1, x2, x3, in decreasing lex order
/// (x1^d first, x3^d last).
std::vector<Monomial> monomials(int d);

/// Homogeneous polynomial of degree d in x1, x2, x3.
class TernaryForm {
 public:
  TernaryForm() = default;
  TernaryForm(Field field, int degree);

  /// The variable x_i (i = 0, 1, 2) as a linear form.
  static TernaryForm variable(const Field& field, int i);

  const Field& field() const { return field_; }
  int degree() const { return degree_; }
  bool is_zero() const;

  FieldElement coeff(const Monomial& m) const;
  FieldElement coeff(int a, int b, int c) const { return coeff({a, b, c}); }
  void set(const Monomial& m, FieldElement v);
  void set(int a, int b, int c, FieldElement v) { set({a, b, c}, std::move(v)); }
  void set(int a, int b, int c, long long v) { set({a, b, c}, field_.from_int(v)); }

  FieldElement operator()(const FieldElement& x1, const FieldElement& x2,
                          const FieldElement& x3) const;
  /// d/dx_i.
  TernaryForm partial(int i) const;
  /// f(G x), i.e. x_i -> sum_j G(i, j) x_j.
  TernaryForm substitute(const Matrix3& g) const;
  TernaryForm pow(int e) const;

  friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator-(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator*(const FieldElement& s, const TernaryForm& a);
  friend bool operator==(const TernaryForm& a, const TernaryForm& b);

  std::string to_string() const;

 private:
  std::size_t slot(int a, int b) const { return static_cast<std::size_t>(a * (degree_ + 1) + b); }

  Field field_;
  int degree_ = 0;
  // indexed by slot(a, b); exponent of x3 is degree_ - a - b
  std::vector<FieldElement> c_;
};

/// Quadratic form Q(v) = v^T M v stored as its symmetric Gram matrix M;
/// off-diagonal entries are half the mixed coefficients.
class TernaryQuadratic {
 public:
  explicit TernaryQuadratic(Field field);
  static TernaryQuadratic from_form(const TernaryForm& q);

  const Field& field() const { return gram_.field(); }
  const Matrix3& gram() const { return gram_; }
  FieldElement& operator()(int r, int c) { return gram_(r, c); }
  const FieldElement& operator()(int r, int c) const { return gram_(r, c); }
  TernaryForm to_form() const;

  friend bool operator==(const TernaryQuadratic& a, const TernaryQuadratic& b) {
    return a.gram_ == b.gram_;
  }

 private:
  Matrix3 gram_;
};

}  // namespace prym

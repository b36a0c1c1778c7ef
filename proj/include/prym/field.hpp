#pragma once

// Exact scalar arithmetic: the rationals, prime fields F_p and extension
// fields F_{p^k} = F_p[t]/(modulus), p odd.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "prym/error.hpp"

namespace prym {

enum class FieldKind { rationals, prime_field, extension_field };

class FieldElement;

/// Field descriptor. Cheap to copy; all copies share one immutable record.
class Field {
 public:
  /// The rationals.
  Field();

  static Field rationals();
  /// F_p. Throws invalid_field unless p is an odd prime.
  static Field prime(std::uint32_t p);
  /// F_{p^k} with the lexicographically first monic irreducible modulus.
  /// k = 1 yields the prime field.
  static Field extension(std::uint32_t p, std::uint32_t k);
  /// F_{p^k} with a caller-supplied modulus (monic, constant term first).
  static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  FieldKind kind() const;
  bool is_finite() const { return kind() != FieldKind::rationals; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const;
  /// Extension degree k over the prime field (1 for F_p and for Q).
  std::uint32_t degree() const;
  /// q = p^k. Throws unsupported_field for Q.
  std::uint64_t order() const;
  /// Monic modulus, constant term first, length k + 1. Empty unless k > 1.
  const std::vector<std::uint32_t>& modulus() const;
  std::string name() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long n) const;
  FieldElement from_rational(const mpq_class& r) const;
  /// Coefficients over F_p of 1, t, ..., t^{k-1}; reduced mod p.
  FieldElement from_coeffs(std::vector<std::uint32_t> coeffs) const;
  /// Enumeration of a finite field: index = sum c_i p^i.
  FieldElement element(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElement& e) const;

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  struct Data;
  explicit Field(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend class FieldElement;
};

class FieldElement {
 public:
  using Coeffs = std::vector<std::uint32_t>;

  /// Rational zero.
  FieldElement();

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Valid only over Q.
  const mpq_class& rational() const;
  /// Valid only over finite fields; length k.
  const Coeffs& coeffs() const;

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement pow_signed(long long e) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// "num/den" or "n" over Q, "a" over F_p, "[c0,...,c_{k-1}]" over F_{p^k}.
  std::string to_string() const;

 private:
  FieldElement(Field field, mpq_class value);
  FieldElement(Field field, Coeffs value);
  void check_same_field(const FieldElement& o) const;

  Field field_;
  std::variant<mpq_class, Coeffs> value_;

  friend class Field;
};

/// build_extension: descriptor for F_{p^k}. Alias of Field::extension.
Field build_extension(std::uint32_t p, std::uint32_t k);

/// -1, 0, 1 as e is a non-square, zero, nonzero square; computed as e^{(q-1)/2}.
int quadratic_character(const FieldElement& e);

/// Uniform over a finite field; over Q a random integer in [-bound, bound].
FieldElement random_element(const Field& field, std::mt19937_64& rng, long long bound = 9);

bool is_prime(std::uint64_t n);

/// Parses "n", "-n", or "num/den" into a reduced rational.
mpq_class parse_rational(const std::string& text);

}  // namespace prym

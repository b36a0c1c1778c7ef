#pragma once

// Table-driven arithmetic for the point-counting kernels. Nonzero elements are
// stored as discrete logarithms to a fixed primitive element g; addition goes
// through the Zech table Z(i) = log(1 + g^i). Every table has q entries.

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "prym/field.hpp"

namespace prym {

class ZechField {
 public:
  using Elem = std::uint32_t;

  /// Builds the tables for a finite field. Prefer ZechField::get, which caches.
  explicit ZechField(Field field);

  /// Shared, cached kernel for F_{p^n} built on Field::extension(p, n).
  static std::shared_ptr<const ZechField> get(std::uint32_t p, std::uint32_t n);

  const Field& field() const { return field_; }
  std::uint64_t order() const { return q_; }
  Elem zero() const { return zero_; }
  Elem one() const { return 0; }

  bool is_zero(Elem a) const { return a == zero_; }

  Elem mul(Elem a, Elem b) const {
    if (a == zero_ || b == zero_) return zero_;
    std::uint32_t r = a + b;
    return r >= m1_ ? r - m1_ : r;
  }

  Elem add(Elem a, Elem b) const {
    if (a == zero_) return b;
    if (b == zero_) return a;
    const std::uint32_t d = b >= a ? b - a : b + m1_ - a;
    const Elem z = zech_[d];
    if (z == zero_) return zero_;
    std::uint32_t r = a + z;
    return r >= m1_ ? r - m1_ : r;
  }

  Elem neg(Elem a) const {
    if (a == zero_) return zero_;
    std::uint32_t r = a + half_;
    return r >= m1_ ? r - m1_ : r;
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem sqr(Elem a) const { return mul(a, a); }

  /// Quadratic character: log parity.
  int chi(Elem a) const {
    if (a == zero_) return 0;
    return (a & 1u) ? -1 : 1;
  }

  /// The i-th element in enumeration order (all q values for i < q).
  Elem nth(std::uint64_t i) const { return static_cast<Elem>(i); }

  Elem from_int(long long n) const;
  /// Elements of this field, or of a subfield F_{p^k} with k | n (embedded
  /// by sending the subfield generator to a fixed root of its modulus).
  Elem from(const FieldElement& e) const;
  FieldElement to_element(Elem a) const;

 private:
  Elem from_index(std::uint64_t idx) const { return log_[idx]; }

  Field field_;
  std::uint64_t q_ = 0;
  std::uint32_t m1_ = 0;    // q - 1
  std::uint32_t half_ = 0;  // log(-1)
  Elem zero_ = 0;
  std::vector<std::uint32_t> exp_;  // log -> index
  std::vector<Elem> log_;           // index -> log (zero_ for index 0)
  std::vector<Elem> zech_;
  // subfield embeddings: degree k -> image of the subfield generator
  mutable std::mutex embed_mutex_;
  mutable std::vector<std::pair<std::vector<std::uint32_t>, Elem>> embeddings_;
};

}  // namespace prym

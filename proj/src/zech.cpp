#include "prym/zech.hpp"

#include <map>

namespace prym {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

ZechField::ZechField(Field field) : field_(std::move(field)) {
  q_ = field_.order();
  if (q_ > (std::uint64_t{1} << 31)) fail(ErrorKind::resource_limit, "field too large for log tables");
  m1_ = static_cast<std::uint32_t>(q_ - 1);
  half_ = m1_ / 2;
  zero_ = m1_;

  const auto factors = prime_factors(q_ - 1);
  FieldElement g;
  bool found = false;
  for (std::uint64_t i = 1; i < q_ && !found; ++i) {
    g = field_.element(i);
    found = true;
    for (auto l : factors) {
      if (g.pow((q_ - 1) / l).is_one()) {
        found = false;
        break;
      }
    }
  }
  if (!found) fail(ErrorKind::internal_contradiction, "no primitive element in " + field_.name());

  exp_.resize(m1_);
  log_.assign(q_, zero_);
  FieldElement x = field_.one();
  for (std::uint32_t i = 0; i < m1_; ++i) {
    const std::uint64_t idx = field_.index_of(x);
    exp_[i] = static_cast<std::uint32_t>(idx);
    log_[idx] = i;
    x *= g;
  }

  const std::uint32_t p = field_.characteristic();
  zech_.resize(m1_);
  for (std::uint32_t i = 0; i < m1_; ++i) {
    std::uint64_t idx = exp_[i];
    const std::uint64_t c0 = idx % p;
    idx = idx - c0 + (c0 + 1) % p;
    zech_[i] = log_[idx];
  }
}

std::shared_ptr<const ZechField> ZechField::get(std::uint32_t p, std::uint32_t n) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const ZechField>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{p, n}];
  if (!slot) slot = std::make_shared<const ZechField>(Field::extension(p, n));
  return slot;
}

ZechField::Elem ZechField::from_int(long long n) const {
  const long long p = field_.characteristic();
  long long r = n % p;
  if (r < 0) r += p;
  return log_[static_cast<std::uint64_t>(r)];
}

ZechField::Elem ZechField::from(const FieldElement& e) const {
  const Field& src = e.field();
  if (!src.is_finite() || src.characteristic() != field_.characteristic())
    fail(ErrorKind::field_mismatch, "cannot map " + src.name() + " into " + field_.name());
  if (src == field_) return from_index(field_.index_of(e));
  const auto& c = e.coeffs();
  if (src.degree() == 1) return from_int(c[0]);
  if (field_.degree() % src.degree() != 0)
    fail(ErrorKind::field_mismatch, src.name() + " is not a subfield of " + field_.name());

  Elem root = zero_;
  {
    std::lock_guard<std::mutex> lock(embed_mutex_);
    for (const auto& [mod, r] : embeddings_)
      if (mod == src.modulus()) root = r;
    if (root == zero_) {
      // first root of the subfield modulus in enumeration order
      const auto& mod = src.modulus();
      for (std::uint64_t i = 1; i < q_ && root == zero_; ++i) {
        const Elem t = from_index(i);
        Elem v = zero_;
        for (std::size_t j = mod.size(); j-- > 0;) v = add(mul(v, t), from_int(mod[j]));
        if (v == zero_) root = t;
      }
      if (root == zero_) fail(ErrorKind::internal_contradiction, "subfield modulus has no root");
      embeddings_.emplace_back(mod, root);
    }
  }
  Elem v = zero_;
  for (std::size_t j = c.size(); j-- > 0;) v = add(mul(v, root), from_int(c[j]));
  return v;
}

FieldElement ZechField::to_element(Elem a) const {
  if (a == zero_) return field_.zero();
  return field_.element(exp_[a]);
}

}  // namespace prym

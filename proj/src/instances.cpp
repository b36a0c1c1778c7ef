#include "prym/instances.hpp"

namespace prym {

BiellipticQuartic random_curve(const Field& field, std::mt19937_64& rng, long long bound) {
  auto triple = [&] {
    return std::array<FieldElement, 3>{random_element(field, rng, bound),
                                       random_element(field, rng, bound),
                                       random_element(field, rng, bound)};
  };
  auto f = triple();
  auto g = triple();
  auto h = triple();
  return BiellipticQuartic::from_elements(f, g, h);
}

BiellipticQuartic random_validated_curve(const Field& field, std::mt19937_64& rng, long long bound,
                                         int max_tries) {
  for (int t = 0; t < max_tries; ++t) {
    BiellipticQuartic c = random_curve(field, rng, bound);
    if (c.f.is_zero() || c.g.is_zero()) continue;
    if (validate(c).passed()) return c;
  }
  fail(ErrorKind::resource_limit, "no validated curve found over " + field.name());
}

BiellipticQuartic random_normalized_rational_curve(std::mt19937_64& rng, long long bound) {
  const Field q = Field::rationals();
  std::uniform_int_distribution<long long> coef(-bound, bound);
  for (int t = 0; t < 10000; ++t) {
    const long long g2 = coef(rng), g1 = coef(rng);
    const Triple h{coef(rng), coef(rng), coef(rng)};
    BiellipticQuartic c = BiellipticQuartic::from_ints(q, {0, 1, 0}, {g2, g1, 1}, h);
    if (normalized_g_factor(c).is_zero()) continue;
    if (validate(c).passed()) return c;
  }
  fail(ErrorKind::resource_limit, "no normalized rational curve found");
}

FieldElement normalized_g_factor(const BiellipticQuartic& c) {
  const FieldElement g2 = c.g[0], g1 = c.g[1];
  const FieldElement t = g2 - g1 * g1 * c.field.from_int(4).inverse();
  return g2 * t * t;
}

FieldElement discriminant_ratio(const BiellipticQuartic& c, bool classical) {
  const SplitResult r = split(c);
  auto disc = [&](const BinaryForm& b) {
    return classical ? classical_discriminant(b) : discriminant_binary(b);
  };
  const FieldElement num = disc(BinaryForm::homogenize(r.sextic, 6)) * r.a_matrix.det().pow(18);
  const FieldElement den = normalized_g_factor(c) * disc(r.genus_one.s);
  if (den.is_zero()) fail(ErrorKind::degenerate_input, "ratio denominator vanishes");
  return num / den;
}

std::optional<SmoothFiber> random_smooth_fiber(const BiellipticQuartic& c, std::mt19937_64& rng,
                                               int max_tries) {
  for (int t = 0; t < max_tries; ++t) {
    const FieldElement eps = random_element(c.field, rng);
    if (eps.is_zero()) continue;
    BruinCover cover = deform(c, eps);
    if (cover.usable()) return SmoothFiber{eps, cover};
  }
  return std::nullopt;
}

}  // namespace prym

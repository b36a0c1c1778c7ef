#pragma once

// Seeded random instances for tests, the CLI and the acceptance runner.

#include <cstdint>
#include <optional>
#include <random>

#include "prym/prym_core.hpp"

namespace prym {

/// f, g, h with uniform coefficients (integers in [-bound, bound] over Q).
BiellipticQuartic random_curve(const Field& field, std::mt19937_64& rng, long long bound = 9);

/// random_curve redrawn until validate() passes; resource_limit after max_tries.
BiellipticQuartic random_validated_curve(const Field& field, std::mt19937_64& rng,
                                         long long bound = 9, int max_tries = 10000);

/// Curve over Q with f = xz, g = g2 x^2 + g1 xz + z^2 and random h, validated
/// and with g2 (g2 - g1^2/4) != 0.
BiellipticQuartic random_normalized_rational_curve(std::mt19937_64& rng, long long bound = 9);

/// g2 (g2 - g1^2/4) for a normalized curve.
FieldElement normalized_g_factor(const BiellipticQuartic& c);

/// Disc(F) det(A)^18 / (g2 (g2 - g1^2/4)^2 Disc(s)) with binary discriminants
/// in the convention of discriminant_binary (raw) or classical_discriminant.
FieldElement discriminant_ratio(const BiellipticQuartic& c, bool classical);

struct SmoothFiber {
  FieldElement eps;
  BruinCover cover;
};

/// Random nonzero eps until deform(c, eps) is usable; nullopt after max_tries.
std::optional<SmoothFiber> random_smooth_fiber(const BiellipticQuartic& c, std::mt19937_64& rng,
                                               int max_tries = 32);

}  // namespace prym

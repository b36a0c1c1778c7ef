#pragma once

// The bielliptic quartic C : y^4 - h(x,z) y^2 + f(x,z) g(x,z) = 0 and the
// curves built from it: the genus-1 quotient D, the genus-2 curve
// X : y^2 = b (b^2 - a c), the singular model q2^2 = q1 q3 with its double
// cover, and the deformation pencil feeding the Bruin construction.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "prym/field.hpp"
#include "prym/matrix.hpp"
#include "prym/poly.hpp"
#include "prym/resultant.hpp"
#include "prym/ternary.hpp"

namespace prym {

using Triple = std::array<long long, 3>;

/// f, g, h are binary quadratics with coefficients (c2, c1, c0) of x^2, xz, z^2.
struct BiellipticQuartic {
  Field field;
  BinaryForm f, g, h;

  static BiellipticQuartic from_ints(const Field& field, const Triple& f, const Triple& g,
                                     const Triple& h);
  static BiellipticQuartic from_elements(const std::array<FieldElement, 3>& f,
                                         const std::array<FieldElement, 3>& g,
                                         const std::array<FieldElement, 3>& h);

  /// Rows (f2 f1 f0), (h2 h1 h0), (g2 g1 g0).
  Matrix3 coefficient_matrix() const;
  /// y^4 - h y^2 + f g as a ternary quartic in (x1, x2, x3) = (x, y, z).
  TernaryForm plane_quartic() const;
  /// Reduction of a rational curve modulo p; throws rejected_input when a
  /// denominator vanishes.
  BiellipticQuartic reduce(const Field& target) const;
};

struct ValidationReport {
  FieldElement det;
  bool det_nonzero = false;
  bool fg_squarefree = false;
  bool s_squarefree = false;
  /// Ternary discriminant of C; computed over Q and for p > 13.
  std::optional<FieldElement> quartic_disc;

  bool smooth() const { return fg_squarefree && s_squarefree; }
  bool passed() const { return det_nonzero && smooth(); }
  std::vector<std::string> failures() const;
};

/// Checks det A != 0, fg squarefree and s = h^2 - 4fg squarefree. The last two
/// together are equivalent to smoothness of C; over Q and for p > 13 this is
/// cross-checked against the ternary discriminant.
ValidationReport validate(const BiellipticQuartic& c, const MacaulayOptions& opt = {});

/// D' : Y^2 = s(x, z), s = h^2 - 4fg, isomorphic to D via Y = 2y - h.
struct GenusOneModel {
  BinaryForm s;
};

GenusOneModel genus_one_model(const BiellipticQuartic& c);

struct SplitResult {
  Matrix3 a_matrix;
  Matrix3 a_inverse;
  UniPoly a, b, c;
  /// F = b (b^2 - a c); X : y^2 = F in P(1,3,1).
  UniPoly sextic;
  GenusOneModel genus_one;
};

/// Builds X. Unless skip_validation is set, inputs failing validate() raise
/// rejected_input listing the failed checks.
SplitResult split(const BiellipticQuartic& c, bool skip_validation = false,
                  const MacaulayOptions& opt = {});

/// (q1, q2, q3)^T = A^{-1} (x1 x2, x2^2 + x1 x3, x2 x3)^T. The cover is
/// q1 = u^2, q2 = uv, q3 = v^2 over the singular quartic q2^2 = q1 q3.
struct SingularModel {
  std::array<TernaryQuadratic, 3> q;
};

SingularModel singular_model(const BiellipticQuartic& c);

/// -det(Q1 + 2x Q2 + x^2 Q3) on Gram matrices; degree <= 6.
UniPoly pencil_sextic(const TernaryQuadratic& q1, const TernaryQuadratic& q2,
                      const TernaryQuadratic& q3);

/// Q2^2 - Q1 Q3.
TernaryForm cover_base_quartic(const std::array<TernaryQuadratic, 3>& q);

/// Y : Q1 = u^2, Q2 = uv, Q3 = v^2 over Z : Q2^2 = Q1 Q3, with H : y^2 = P(x).
struct BruinCover {
  std::array<TernaryQuadratic, 3> q;
  UniPoly sextic;
  FieldElement base_disc;
  bool base_smooth = false;
  bool sextic_squarefree = false;

  TernaryForm base_quartic() const { return cover_base_quartic(q); }
  bool usable() const { return base_smooth && sextic_squarefree; }
};

BruinCover make_bruin_cover(const std::array<TernaryQuadratic, 3>& q,
                            const MacaulayOptions& opt = {});

/// Q_i(eps) = q_i + eps q_i' with q1' = (x2^2 + x3^2) - q1, q2' = x1^2 - q2,
/// q3' = (x2^2 - x3^2) - q3.
struct DeformationPencil {
  std::array<TernaryQuadratic, 3> base;
  std::array<TernaryQuadratic, 3> direction;

  static DeformationPencil from(const std::array<TernaryQuadratic, 3>& base);
  std::array<TernaryQuadratic, 3> fiber(const FieldElement& eps) const;
};

BruinCover deform(const BiellipticQuartic& c, const FieldElement& eps,
                  const MacaulayOptions& opt = {});
BruinCover deform(const std::array<TernaryQuadratic, 3>& base, const FieldElement& eps,
                  const MacaulayOptions& opt = {});

}  // namespace prym

#pragma once

// Resultants and discriminants.
//
// Conventions:
//  * resultant(p, q) is the Sylvester determinant with deg q shifted copies of
//    p above deg p shifted copies of q, so Res(x - a, x - b) = a - b.
//  * discriminant_binary(F) = Res(dF/dx, dF/dz) for the two partials taken as
//    forms of formal degree n - 1. It equals
//    (-1)^{n(n-1)/2} n^{n-2} times the classical discriminant.
//  * macaulay_resultant is normalized by Res(x1^d1, x2^d2, x3^d3) = 1.
//  * disc_ternary_quartic(F) = Res(F_1, F_2, F_3) / 4^7.

#include <array>
#include <cstdint>

#include "prym/field.hpp"
#include "prym/poly.hpp"
#include "prym/ternary.hpp"

namespace prym {

/// Determinant of the Sylvester matrix of p, q viewed with formal degrees m, n
/// (coefficients given leading-first, lengths m + 1 and n + 1).
FieldElement sylvester_determinant(const std::vector<FieldElement>& p_lead_first,
                                   const std::vector<FieldElement>& q_lead_first);

/// Throws undefined_resultant when both inputs are zero. If exactly one input
/// is zero the result is 0.
FieldElement resultant(const UniPoly& p, const UniPoly& q);

/// Homogeneous resultant of the partials; n >= 2 (else degree error).
FieldElement discriminant_binary(const BinaryForm& f);

/// (-1)^{n(n-1)/2} n^{n-2} in the given field, the ratio between
/// discriminant_binary and the classical discriminant of a degree-n form.
FieldElement binary_discriminant_scale(const Field& field, int n);

/// discriminant_binary(f) / binary_discriminant_scale(n). Requires p not dividing n.
FieldElement classical_discriminant(const BinaryForm& f);

/// True iff f has no repeated root in P^1 over the algebraic closure.
/// Uses gcd(F(x,1), F'(x,1)) and the multiplicity at infinity, so it is valid
/// whatever the characteristic divides.
bool squarefree_form(const BinaryForm& f);

struct MacaulayOptions {
  std::uint64_t seed = 0x5eed;
  int max_retries = 64;
};

/// Resultant of three ternary forms by Macaulay's quotient formula at the
/// critical degree d1 + d2 + d3 - 2. Degenerate extraneous minors trigger a
/// random change of variables; the result is then divided by det(G)^{d1 d2 d3}.
FieldElement macaulay_resultant(const std::array<TernaryForm, 3>& f, const MacaulayOptions& opt = {});

/// The three-cubics case (36 x 36 matrix); checks that every form is a cubic.
FieldElement macaulay_resultant_cubics(const TernaryForm& f1, const TernaryForm& f2,
                                       const TernaryForm& f3, const MacaulayOptions& opt = {});

/// 4^7: Res(partials) = 4^7 Disc for ternary quartics.
inline constexpr long long kQuarticDiscScale = 16384;

/// Zero iff the plane quartic F = 0 is singular.
FieldElement disc_ternary_quartic(const TernaryForm& f, const MacaulayOptions& opt = {});

/// Raw Res(F_1, F_2, F_3) before the 4^7 normalization.
FieldElement quartic_partials_resultant(const TernaryForm& f, const MacaulayOptions& opt = {});

}  // namespace prym

#pragma once

// JSON documents: curve inputs (strict) and versioned reports.

#include <optional>

#include "json.hpp"
#include "prym/zeta.hpp"

namespace prym {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "prym-report/1";
inline constexpr const char* kVersion = "0.1.0";

/// {"p": 7, "k": 1, "f": [f2, f1, f0], "g": [...], "h": [...]}, with an
/// optional "epsilon" used by the bruin command. Without "p" the curve is over
/// Q and coefficients may be "num/den" strings. Over F_{p^k}, k > 1, a
/// coefficient is an integer or a list of k integers (constant term first).
struct CurveDocument {
  BiellipticQuartic curve;
  std::optional<FieldElement> epsilon;
};

/// Strict: unknown or malformed keys raise a parse error naming the key.
/// p_override reduces a rational document mod p; it must agree with "p" if
/// both are present.
CurveDocument parse_curve_document(const Json& doc, std::optional<std::uint32_t> p_override = {});

Json curve_document(const BiellipticQuartic& c, const std::optional<FieldElement>& eps = {});

Json to_json(const Field& f);
Json to_json(const FieldElement& e);
Json to_json(const Matrix3& m);
/// Constant term first.
Json to_json(const UniPoly& p);
/// Coefficients of x^n, x^{n-1} z, ..., z^n.
Json to_json(const BinaryForm& b);
Json to_json(const TernaryQuadratic& q);
Json to_json(const CountRecord& r);
Json to_json(const WeilPolynomial& l);
Json to_json(const ValidationReport& r);
Json to_json(const SplitResult& s);
Json to_json(const SplitVerification& v);
Json to_json(const BruinVerification& v);

/// Copy of a report without wall-clock fields, for reproducibility checks.
Json strip_timings(Json report);

}  // namespace prym

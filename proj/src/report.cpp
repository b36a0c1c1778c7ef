#include "prym/report.hpp"

#include <set>

namespace prym {

namespace {

[[noreturn]] void bad(const std::string& key, const std::string& why) {
  fail(ErrorKind::parse, "key \"" + key + "\": " + why);
}

std::uint32_t read_u32(const Json& doc, const std::string& key) {
  const Json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > (1LL << 31))
    bad(key, "expected a positive integer");
  return static_cast<std::uint32_t>(v.get<long long>());
}

FieldElement read_scalar(const Field& field, const Json& v, const std::string& key) {
  try {
    if (v.is_number_integer()) return field.from_rational(mpq_class(v.dump()));
    if (v.is_string()) return field.from_rational(parse_rational(v.get<std::string>()));
    if (v.is_array() && field.degree() > 1) {
      if (v.size() != field.degree()) bad(key, "expected " + std::to_string(field.degree()) + " coordinates");
      std::vector<std::uint32_t> c;
      const long long p = field.characteristic();
      for (const auto& x : v) {
        if (!x.is_number_integer()) bad(key, "coordinates must be integers");
        c.push_back(static_cast<std::uint32_t>(((x.get<long long>() % p) + p) % p));
      }
      return field.from_coeffs(c);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse) throw;
    bad(key, e.what());
  } catch (const std::exception& e) {
    bad(key, e.what());
  }
  bad(key, "expected an integer" + std::string(field.is_finite() ? "" : " or a \"num/den\" string"));
}

std::array<FieldElement, 3> read_triple(const Field& field, const Json& doc, const std::string& key) {
  if (!doc.contains(key)) bad(key, "missing");
  const Json& v = doc.at(key);
  if (!v.is_array() || v.size() != 3) bad(key, "expected three coefficients (x^2, xz, z^2)");
  return {read_scalar(field, v[0], key), read_scalar(field, v[1], key),
          read_scalar(field, v[2], key)};
}

}  // namespace

CurveDocument parse_curve_document(const Json& doc, std::optional<std::uint32_t> p_override) {
  if (!doc.is_object()) fail(ErrorKind::parse, "curve document must be a JSON object");
  static const std::set<std::string> allowed{"p", "k", "f", "g", "h", "epsilon"};
  for (const auto& [key, value] : doc.items())
    if (!allowed.count(key)) bad(key, "unknown key");

  std::optional<std::uint32_t> p;
  if (doc.contains("p")) p = read_u32(doc, "p");
  std::uint32_t k = 1;
  if (doc.contains("k")) {
    if (!p) bad("k", "requires \"p\"");
    k = read_u32(doc, "k");
  }
  if (p && p_override && *p != *p_override)
    bad("p", "document says " + std::to_string(*p) + " but --p is " + std::to_string(*p_override));

  Field source;
  try {
    source = p ? Field::extension(*p, k) : Field::rationals();
  } catch (const Error& e) {
    bad(p ? "p" : "k", e.what());
  }
  CurveDocument out{BiellipticQuartic::from_elements(read_triple(source, doc, "f"),
                                                     read_triple(source, doc, "g"),
                                                     read_triple(source, doc, "h")),
                    std::nullopt};
  if (doc.contains("epsilon")) out.epsilon = read_scalar(source, doc.at("epsilon"), "epsilon");
  if (!p && p_override) {
    Field target;
    try {
      target = Field::prime(*p_override);
    } catch (const Error& e) {
      bad("p", e.what());
    }
    out.curve = out.curve.reduce(target);
    if (out.epsilon) out.epsilon = target.from_rational(out.epsilon->rational());
  }
  return out;
}

Json curve_document(const BiellipticQuartic& c, const std::optional<FieldElement>& eps) {
  Json doc = Json::object();
  if (c.field.is_finite()) {
    doc["p"] = c.field.characteristic();
    doc["k"] = c.field.degree();
  }
  auto triple = [](const BinaryForm& b) { return Json::array({to_json(b[0]), to_json(b[1]), to_json(b[2])}); };
  doc["f"] = triple(c.f);
  doc["g"] = triple(c.g);
  doc["h"] = triple(c.h);
  if (eps) doc["epsilon"] = to_json(*eps);
  return doc;
}

Json to_json(const Field& f) {
  Json j{{"name", f.name()}, {"characteristic", f.characteristic()}, {"degree", f.degree()}};
  if (f.degree() > 1) j["modulus"] = f.modulus();
  return j;
}

Json to_json(const FieldElement& e) {
  if (!e.field().is_finite()) return e.to_string();
  if (e.field().degree() == 1) return e.coeffs()[0];
  return e.coeffs();
}

Json to_json(const Matrix3& m) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) rows.push_back({to_json(m(r, 0)), to_json(m(r, 1)), to_json(m(r, 2))});
  return rows;
}

Json to_json(const UniPoly& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(to_json(x));
  return c;
}

Json to_json(const BinaryForm& b) {
  Json c = Json::array();
  for (int i = 0; i <= b.degree(); ++i) c.push_back(to_json(b[i]));
  return c;
}

Json to_json(const TernaryQuadratic& q) {
  return {{"gram", to_json(q.gram())}, {"form", q.to_form().to_string()}};
}

Json to_json(const CountRecord& r) {
  Json j{{"q", r.q}, {"m", r.m}, {"points", r.points}, {"model", r.model}, {"seconds", r.seconds}};
  j["genus"] = r.genus ? Json(*r.genus) : Json(nullptr);
  j["weil_bound_ok"] = r.within_weil_bound();
  return j;
}

Json to_json(const WeilPolynomial& l) {
  return {{"genus", l.genus}, {"q", l.q}, {"coefficients", l.a}, {"text", l.to_string()},
          {"functional_equation", l.satisfies_functional_equation()}};
}

Json to_json(const ValidationReport& r) {
  Json j{{"det", to_json(r.det)},
         {"det_nonzero", r.det_nonzero},
         {"fg_squarefree", r.fg_squarefree},
         {"s_squarefree", r.s_squarefree},
         {"smooth", r.smooth()},
         {"passed", r.passed()},
         {"failures", r.failures()}};
  j["quartic_discriminant"] = r.quartic_disc ? to_json(*r.quartic_disc) : Json(nullptr);
  return j;
}

Json to_json(const SplitResult& s) {
  return {{"A", to_json(s.a_matrix)},
          {"det_A", to_json(s.a_matrix.det())},
          {"A_inverse", to_json(s.a_inverse)},
          {"a", to_json(s.a)},
          {"b", to_json(s.b)},
          {"c", to_json(s.c)},
          {"F", to_json(s.sextic)},
          {"s", to_json(s.genus_one.s)},
          {"X", "y^2 = " + s.sextic.to_string()},
          {"D", "Y^2 = " + s.genus_one.s.to_string()}};
}

namespace {

Json records(const std::vector<CountRecord>& r) {
  Json a = Json::array();
  for (const auto& x : r) a.push_back(to_json(x));
  return a;
}

}  // namespace

Json to_json(const SplitVerification& v) {
  Json j{{"validation", to_json(v.validation)},
         {"split", to_json(v.split)},
         {"counts", {{"C", records(v.counts_c)}, {"D", records(v.counts_d)}, {"X", records(v.counts_x)}}},
         {"passed", v.passed},
         {"failure", v.failure},
         {"invariant_violations", v.invariant_violations}};
  Json l{{"C", to_json(v.l_c)}, {"D", to_json(v.l_d)}};
  if (!v.l_x.a.empty()) {
    l["X"] = to_json(v.l_x);
    l["D*X"] = to_json(v.l_dx);
  }
  j["lpolys"] = l;
  return j;
}

Json to_json(const BruinVerification& v) {
  Json quads = Json::array();
  for (const auto& q : v.cover.q) quads.push_back(to_json(q));
  return {{"quadrics", quads},
          {"base_quartic", v.cover.base_quartic().to_string()},
          {"base_discriminant", to_json(v.cover.base_disc)},
          {"H", "y^2 = " + v.cover.sextic.to_string()},
          {"counts", {{"Z", records(v.counts_z)}, {"H", records(v.counts_h)}, {"Y", records(v.counts_y)}}},
          {"predicted_Y", v.predicted_y},
          {"fiber_histogram", {{"size1", v.fiber_histogram[0]}, {"size0", v.fiber_histogram[1]}, {"size2", v.fiber_histogram[2]}}},
          {"lpolys", {{"Z", to_json(v.l_z)}, {"H", to_json(v.l_h)}, {"Z*H", to_json(v.l_zh)}}},
          {"requested_depth", v.requested_depth},
          {"achieved_depth", v.achieved_depth},
          {"passed", v.passed},
          {"full_certificate", v.full_certificate},
          {"note", v.note},
          {"invariant_violations", v.invariant_violations}};
}

Json strip_timings(Json report) {
  if (report.is_object()) {
    report.erase("seconds");
    report.erase("elapsed_seconds");
    for (auto& [key, value] : report.items()) value = strip_timings(value);
  } else if (report.is_array()) {
    for (auto& value : report) value = strip_timings(value);
  }
  return report;
}

}  // namespace prym

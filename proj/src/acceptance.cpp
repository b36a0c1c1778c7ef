#include "prym/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "prym/cli.hpp"
#include "prym/instances.hpp"

namespace prym {

std::string format_line(const CriterionResult& r) {
  char t[64];
  std::snprintf(t, sizeof t, "%.2f s", r.seconds);
  std::string line = std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " +
                     r.title + ": " + r.detail + " (" + t;
  if (r.limit_seconds > 0) {
    std::snprintf(t, sizeof t, "%.0f s", r.limit_seconds);
    line += std::string(" of ") + t;
  }
  return line + ")";
}

namespace {

/// Everything criterion 8 audits.
struct Audit {
  std::uint64_t polynomials = 0;
  std::uint64_t counts = 0;
  std::vector<std::string> violations;

  void add(const std::vector<std::string>& v, const std::string& where) {
    for (const auto& s : v) violations.push_back(where + ": " + s);
  }
};

FieldElement minus_two_pow_40(const Field& Q) {
  return Q.from_rational(mpq_class(-(mpz_class(1) << 40)));
}

TernaryForm fermat_quartic(const Field& Q) {
  TernaryForm f(Q, 4);
  f.set(4, 0, 0, Q.one());
  f.set(0, 4, 0, -Q.one());
  f.set(0, 0, 4, Q.one());
  return f;
}

// Macaulay value against a second path: on the family y^4 - h y^2 + r the
// discriminant is kappa Disc(r) Disc(h^2 - 4r)^2 with classical binary
// discriminants, and x^4 - y^4 + z^4 is minus the member h = 0, r = x^4 + z^4.
CriterionResult criterion_discriminant(std::mt19937_64& rng) {
  CriterionResult r;
  const Field Q = Field::rationals();
  const FieldElement golden = disc_ternary_quartic(fermat_quartic(Q));
  const FieldElement raw = quartic_partials_resultant(fermat_quartic(Q));

  std::optional<FieldElement> kappa;
  bool constant = true;
  int samples = 0;
  for (; samples < 12; ++samples) {
    const BiellipticQuartic c = random_validated_curve(Q, rng, 6);
    const FieldElement s = classical_discriminant(genus_one_model(c).s);
    const FieldElement k =
        disc_ternary_quartic(c.plane_quartic()) / (classical_discriminant(c.f * c.g) * s * s);
    if (!kappa) kappa = k;
    constant = constant && k == *kappa;
  }
  const BinaryForm quartic = BinaryForm::from_ints(Q, {1, 0, 0, 0, 1});
  const FieldElement s = classical_discriminant(Q.from_int(-4) * quartic);
  const FieldElement second = -(*kappa * classical_discriminant(quartic) * s * s);

  r.passed = golden == minus_two_pow_40(Q) && constant && second == golden;
  r.detail = "disc(x^4 - y^4 + z^4) = " + golden.to_string() + " (Res of partials " +
             raw.to_string() + " = 4^7 disc); family constant " + kappa->to_string() +
             (constant ? " on all " : " NOT constant on ") + std::to_string(samples) +
             " random quartics; second path gives " + second.to_string();
  return r;
}

CriterionResult criterion_split_counts(std::mt19937_64& rng, Audit& audit) {
  CriterionResult r;
  int total = 0, passed = 0;
  std::string first_failure;
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const Field F = Field::prime(p);
    for (int i = 0; i < 100; ++i) {
      const BiellipticQuartic c = random_validated_curve(F, rng);
      const SplitVerification v = verify_split(c);
      ++total;
      if (v.passed) ++passed;
      else if (first_failure.empty()) first_failure = " first failure over " + F.name() + ": " + v.failure;
      audit.polynomials += 4;
      audit.counts += v.counts_c.size() + v.counts_d.size() + v.counts_x.size();
      audit.add(v.invariant_violations, "split over " + F.name());
    }
  }
  r.passed = passed == total && total == 400;
  r.detail = std::to_string(passed) + "/" + std::to_string(total) +
             " curves over F_5, F_7, F_11, F_13 (100 each)" + first_failure;
  return r;
}

// Criteria 3 and 4 share instances.
std::pair<CriterionResult, CriterionResult> criteria_pencil_and_squarefree(std::mt19937_64& rng) {
  CriterionResult r3, r4;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Field> fields{Field::prime(5), Field::prime(7), Field::prime(11), Field::prime(13),
                            Field::rationals()};
  int total = 0, identity = 0, squarefree = 0;
  double squarefree_seconds = 0;
  for (const Field& F : fields) {
    for (int i = 0; i < 200; ++i) {
      const BiellipticQuartic c = random_validated_curve(F, rng);
      const SplitResult s = split(c);
      const SingularModel m = singular_model(c);
      ++total;
      if (F.from_int(4) * pencil_sextic(m.q[0], m.q[1], m.q[2]) == s.sextic) ++identity;
      const auto t1 = std::chrono::steady_clock::now();
      const int d = s.sextic.degree();
      if ((d == 5 || d == 6) && squarefree_form(BinaryForm::homogenize(s.sextic, 6))) ++squarefree;
      squarefree_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
    }
  }
  const double all = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r3.seconds = all - squarefree_seconds;
  r4.seconds = squarefree_seconds;
  r3.passed = identity == total && total >= 1000;
  r4.passed = squarefree == total && total >= 1000;
  const std::string where = " validated curves over F_5, F_7, F_11, F_13 and Q";
  r3.detail = std::to_string(identity) + "/" + std::to_string(total) + where;
  r4.detail = std::to_string(squarefree) + "/" + std::to_string(total) + where +
              " (degree 5 or 6, no repeated root)";
  return {r3, r4};
}

CriterionResult criterion_ratio(std::mt19937_64& rng) {
  CriterionResult r;
  std::optional<FieldElement> raw0, cal0;
  bool raw_constant = true, cal_constant = true;
  const int n = 50;
  for (int i = 0; i < n; ++i) {
    const BiellipticQuartic c = random_normalized_rational_curve(rng);
    const FieldElement raw = discriminant_ratio(c, false);
    const FieldElement cal = discriminant_ratio(c, true);
    if (!raw0) raw0 = raw, cal0 = cal;
    raw_constant = raw_constant && raw == *raw0;
    cal_constant = cal_constant && cal == *cal0;
  }
  const Field Q = Field::rationals();
  r.passed = raw_constant && cal_constant && *cal0 == Q.from_int(4);
  r.detail = std::to_string(n) + " rational curves with f = xz, g = g2 x^2 + g1 xz + z^2: ratio " +
             (raw_constant ? "constant " : "NOT constant, first ") + raw0->to_string() +
             " with Res(F_x, F_z) discriminants, " + (cal_constant ? "constant " : "NOT constant, first ") +
             cal0->to_string() + " with classical discriminants (scale 6^4 / 4^2 with signs)";
  return r;
}

CriterionResult criterion_bruin(std::mt19937_64& rng, Audit& audit) {
  CriterionResult r;
  auto audit_one = [&](const BruinVerification& v, const std::string& where) {
    audit.polynomials += 3;
    audit.counts += v.counts_z.size() + v.counts_h.size() + v.counts_y.size();
    audit.add(v.invariant_violations, where);
  };

  const Field F5 = Field::prime(5);
  int fibers = 0, passed = 0, tries = 0;
  while (fibers < 10 && tries < 200) {
    ++tries;
    const BiellipticQuartic c = random_validated_curve(F5, rng);
    const auto fiber = random_smooth_fiber(c, rng);
    if (!fiber) continue;
    const BruinVerification v = verify_bruin(fiber->cover, 3);
    ++fibers;
    if (v.passed && v.achieved_depth == 3) ++passed;
    audit_one(v, "bruin over F_5");
  }

  const Field F3 = Field::prime(3);
  bool certificate = false;
  std::string p3 = "no smooth fiber over F_3 found";
  for (int t = 0; t < 200 && !certificate; ++t) {
    const BiellipticQuartic c = random_validated_curve(F3, rng);
    const auto fiber = random_smooth_fiber(c, rng);
    if (!fiber) continue;
    const BruinVerification v = verify_bruin(fiber->cover, 5);
    audit_one(v, "bruin over F_3");
    certificate = v.full_certificate && v.invariant_violations.empty();
    std::ostringstream os;
    os << "F_3 depth " << v.achieved_depth << ": L_Y = " << v.l_zh.to_string()
       << (certificate ? " (full certificate)" : " (" + v.note + ")");
    p3 = os.str();
  }
  r.passed = fibers >= 10 && passed == fibers && certificate;
  r.detail = std::to_string(passed) + "/" + std::to_string(fibers) +
             " smooth fibers over F_5 pass at depth 3; " + p3;
  return r;
}

CriterionResult criterion_negative(std::mt19937_64& rng) {
  CriterionResult r;
  int failed = 0;
  const int n = 100;
  VerifyOptions corrupt;
  corrupt.corrupt_sextic = true;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t p = std::array<std::uint32_t, 4>{5, 7, 11, 13}[i % 4];
    const BiellipticQuartic c = random_validated_curve(Field::prime(p), rng);
    if (!verify_split(c, corrupt).passed) ++failed;
  }

  // Rejected inputs by category, through the command-line entry point.
  std::array<int, 3> seen{};  // det A = 0, fg repeated root, s repeated root
  std::array<int, 3> exit3{};
  bool counted = false;
  auto submit = [&](const BiellipticQuartic& c, int kind) {
    JobSpec job;
    job.command = "verify";
    job.input_text = curve_document(c).dump();
    const std::uint64_t before = counting_invocations();
    const RunResult res = run(job);
    counted = counted || counting_invocations() != before;
    ++seen[kind];
    if (res.exit_code == kExitRejected) ++exit3[kind];
  };
  const Field F5 = Field::prime(5), F7 = Field::prime(7);
  submit(BiellipticQuartic::from_ints(F7, {1, 0, 1}, {0, 1, 0}, {1, 0, 1}), 0);
  submit(BiellipticQuartic::from_ints(F7, {0, 1, 0}, {0, 1, 0}, {1, 0, 1}), 1);
  submit(BiellipticQuartic::from_ints(F7, {1, 0, 0}, {0, 1, 1}, {1, 1, 0}), 1);
  for (int t = 0; t < 5000 && (seen[0] < 20 || seen[1] < 20 || seen[2] < 20); ++t) {
    const BiellipticQuartic c = random_curve(t % 2 ? F5 : F7, rng);
    if (c.f.is_zero() || c.g.is_zero()) continue;
    const ValidationReport v = validate(c);
    if (v.passed()) continue;
    const int kind = !v.det_nonzero ? 0 : !v.fg_squarefree ? 1 : 2;
    if (seen[kind] < 20) submit(c, kind);
  }
  const bool rejections = exit3 == seen && seen[0] >= 10 && seen[1] >= 10 && seen[2] >= 10 && !counted;
  r.passed = failed * 100 >= 95 * n && rejections;
  r.detail = "corrupted F fails on " + std::to_string(failed) + "/" + std::to_string(n) +
             "; exit 3 for det A = 0 " + std::to_string(exit3[0]) + "/" + std::to_string(seen[0]) +
             ", fg repeated root " + std::to_string(exit3[1]) + "/" + std::to_string(seen[1]) +
             ", s repeated root " + std::to_string(exit3[2]) + "/" + std::to_string(seen[2]) +
             (counted ? "; COUNTING WAS REACHED" : "; no counting reached");
  return r;
}

CriterionResult criterion_invariants(const Audit& audit) {
  CriterionResult r;
  r.passed = audit.violations.empty() && audit.polynomials > 0;
  r.detail = std::to_string(audit.polynomials) + " L-polynomials and " + std::to_string(audit.counts) +
             " counts audited, " + std::to_string(audit.violations.size()) + " violations";
  if (!audit.violations.empty()) r.detail += "; first: " + audit.violations.front();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream& out) {
  std::vector<CriterionResult> results;
  Audit audit;
  auto finish = [&](int id, const char* title, double limit, CriterionResult r) {
    r.id = id;
    r.title = title;
    r.limit_seconds = limit;
    if (limit > 0 && r.seconds >= limit) {
      r.passed = false;
      r.detail += "; over the time limit";
    }
    out << format_line(r) << std::endl;
    results.push_back(r);
  };
  auto guarded = [](const std::function<CriterionResult()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = f();
    } catch (const Error& e) {
      r.passed = false;
      r.detail = std::string("error (") + to_string(e.kind()) + "): " + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };
  auto stream = [&](std::uint64_t k) { return std::mt19937_64(opt.seed * 1000003ULL + k); };

  auto rng1 = stream(1);
  finish(1, "ternary quartic discriminant golden value", 10,
         guarded([&] { return criterion_discriminant(rng1); }));

  auto rng2 = stream(2);
  finish(2, "L_C = L_D L_X on random validated curves", 600,
         guarded([&] { return criterion_split_counts(rng2, audit); }));

  // 3 and 4 share instances; the pair keeps separate timings.
  auto rng3 = stream(3);
  std::pair<CriterionResult, CriterionResult> c34;
  const CriterionResult shared = guarded([&] {
    c34 = criteria_pencil_and_squarefree(rng3);
    return CriterionResult{0, "", true, "", 0, 0};
  });
  if (!shared.passed) c34.first = c34.second = shared;
  finish(3, "4 pencil_sextic(q1, q2, q3) = b(b^2 - ac)", 30, c34.first);
  finish(4, "F = b(b^2 - ac) squarefree", 0, c34.second);

  auto rng5 = stream(5);
  finish(5, "discriminant identity ratio", 60, guarded([&] { return criterion_ratio(rng5); }));

  auto rng6 = stream(6);
  finish(6, "Bruin cover counts match L_Z L_H", 900,
         guarded([&] { return criterion_bruin(rng6, audit); }));

  auto rng7 = stream(7);
  finish(7, "negative controls", 0, guarded([&] { return criterion_negative(rng7); }));

  finish(8, "round trip, functional equation and Weil bounds", 0,
         guarded([&] { return criterion_invariants(audit); }));
  return results;
}

}  // namespace prym

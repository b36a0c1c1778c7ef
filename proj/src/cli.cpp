#include "prym/cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "prym/acceptance.hpp"
#include "prym/instances.hpp"

namespace prym {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_field:
    case ErrorKind::unsupported_field:
    case ErrorKind::field_mismatch:
    case ErrorKind::singular_matrix:
    case ErrorKind::degenerate_input:
    case ErrorKind::rejected_input:
    case ErrorKind::degree:
    case ErrorKind::parse:
      return kExitRejected;
    case ErrorKind::resource_limit:
      return kExitResource;
    default:
      return kExitInternal;
  }
}

namespace {

const char* status_for(int code) {
  switch (code) {
    case kExitPass: return "pass";
    case kExitFailed: return "fail";
    case kExitRejected: return "rejected";
    case kExitResource: return "resource-limit";
    default: return "error";
  }
}

struct Loaded {
  Json doc;
  std::optional<std::uint64_t> seed;
};

Loaded load_input(const JobSpec& job) {
  std::string text;
  if (job.input_text) {
    text = *job.input_text;
  } else if (job.input_path) {
    std::ifstream in(*job.input_path);
    if (!in) fail(ErrorKind::parse, "cannot read input file " + *job.input_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    fail(ErrorKind::parse, "command '" + job.command + "' needs --input or --curve");
  }
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::parse, std::string("input is not valid JSON: ") + e.what());
  }
  // A report: re-run its embedded input with its seed.
  if (doc.is_object() && doc.contains("schema")) {
    if (!doc.contains("input") || !doc["input"].is_object())
      fail(ErrorKind::parse, "key \"input\": report has no embedded curve");
    Loaded l{doc["input"], std::nullopt};
    if (doc.contains("seed") && doc["seed"].is_number_unsigned()) l.seed = doc["seed"].get<std::uint64_t>();
    return l;
  }
  return {doc, std::nullopt};
}

VerifyOptions verify_options(const JobSpec& job, std::uint64_t seed) {
  VerifyOptions o;
  o.macaulay.seed = seed;
  if (job.cap_evals) o.caps.max_evals = *job.cap_evals;
  return o;
}

std::string validation_text(const ValidationReport& r) {
  std::ostringstream os;
  os << "det A = " << r.det.to_string() << (r.det_nonzero ? "" : " (zero)") << "\n";
  os << "fg squarefree: " << (r.fg_squarefree ? "yes" : "no") << "\n";
  os << "s squarefree: " << (r.s_squarefree ? "yes" : "no") << "\n";
  if (r.quartic_disc) os << "quartic discriminant: " << r.quartic_disc->to_string() << "\n";
  return os.str();
}

std::string split_text(const SplitVerification& v) {
  std::ostringstream os;
  os << "over " << v.curve.field.name() << ": L_C = " << v.l_c.to_string() << "\n";
  if (!v.l_x.a.empty()) os << "  L_D L_X = " << v.l_dx.to_string() << "\n";
  os << "  " << (v.passed ? "match" : "MISMATCH: " + v.failure) << "\n";
  for (const auto& s : v.invariant_violations) os << "  invariant violated: " << s << "\n";
  return os.str();
}

void run_command(const JobSpec& job, RunResult& res) {
  Json& rep = res.report;
  std::ostringstream text;

  if (job.command == "selftest") {
    AcceptanceOptions opt;
    if (job.seed) opt.seed = *job.seed;
    rep["seed"] = opt.seed;
    std::ostringstream lines;
    const auto results = run_acceptance(opt, lines);
    Json crit = Json::array();
    bool all = true;
    for (const auto& r : results) {
      crit.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                      {"seconds", r.seconds}});
      all = all && r.passed;
    }
    rep["result"] = {{"criteria", crit}};
    res.summary = lines.str();
    res.exit_code = all ? kExitPass : kExitFailed;
    return;
  }

  if (job.command == "disc-check") {
    const Field Q = Field::rationals();
    TernaryForm fermat(Q, 4);
    fermat.set(4, 0, 0, Q.one());
    fermat.set(0, 4, 0, -Q.one());
    fermat.set(0, 0, 4, Q.one());
    MacaulayOptions mo;
    mo.seed = job.seed.value_or(kDefaultSeed);
    rep["seed"] = mo.seed;
    const FieldElement d = disc_ternary_quartic(fermat, mo);
    const bool golden = d == Q.from_rational(mpq_class(-1) * mpq_class(mpz_class(1) << 40));
    rep["result"] = {{"quartic", fermat.to_string()}, {"discriminant", to_json(d)},
                     {"matches_minus_2_pow_40", golden}};
    text << "disc(" << fermat.to_string() << ") = " << d.to_string()
         << (golden ? " = -2^40" : " (expected -2^40)") << "\n";
    res.exit_code = golden ? kExitPass : kExitFailed;
    if (job.input_path || job.input_text) {
      const Loaded in = load_input(job);
      const CurveDocument doc = parse_curve_document(in.doc, job.p);
      rep["input"] = curve_document(doc.curve, doc.epsilon);
      const FieldElement dc = disc_ternary_quartic(doc.curve.plane_quartic(), mo);
      rep["result"]["curve_discriminant"] = to_json(dc);
      text << "disc(C) = " << dc.to_string() << (dc.is_zero() ? " (singular)" : " (smooth)") << "\n";
    }
    res.summary = text.str();
    return;
  }

  const Loaded in = load_input(job);
  const std::uint64_t seed = job.seed ? *job.seed : in.seed.value_or(kDefaultSeed);
  rep["seed"] = seed;
  CurveDocument doc = parse_curve_document(in.doc, job.p);
  const BiellipticQuartic& c = doc.curve;
  rep["input"] = curve_document(c, doc.epsilon);
  rep["field"] = to_json(c.field);
  const VerifyOptions vo = verify_options(job, seed);
  text << "curve over " << c.field.name() << ": y^4 - (" << c.h.to_string() << ") y^2 + ("
       << c.f.to_string() << ")(" << c.g.to_string() << ")\n";

  if (job.command == "validate") {
    const ValidationReport r = validate(c, vo.macaulay);
    rep["result"] = {{"validation", to_json(r)}};
    text << validation_text(r);
    res.exit_code = r.passed() ? kExitPass : kExitRejected;
  } else if (job.command == "split") {
    const SplitResult s = split(c, job.skip_validation, vo.macaulay);
    rep["result"] = {{"split", to_json(s)}};
    if (!job.skip_validation) rep["result"]["validation"] = to_json(validate(c, vo.macaulay));
    text << "a = " << s.a.to_string() << "\nb = " << s.b.to_string() << "\nc = " << s.c.to_string()
         << "\nX : y^2 = " << s.sextic.to_string() << "\nD : Y^2 = " << s.genus_one.s.to_string()
         << "\n";
    res.exit_code = kExitPass;
  } else if (job.command == "verify") {
    std::vector<SplitVerification> runs;
    if (c.field.is_finite()) runs.push_back(verify_split(c, vo));
    else runs = verify_split_rational(c, 3, vo);
    Json arr = Json::array();
    bool ok = !runs.empty();
    for (const auto& v : runs) {
      arr.push_back(to_json(v));
      text << split_text(v);
      ok = ok && v.passed && v.invariant_violations.empty();
    }
    rep["result"] = {{"verifications", arr}};
    res.exit_code = ok ? kExitPass : kExitFailed;
  } else if (job.command == "bruin") {
    if (!c.field.is_finite()) fail(ErrorKind::unsupported_field, "bruin needs a finite field (use --p)");
    if (!job.skip_validation) {
      const ValidationReport r = validate(c, vo.macaulay);
      if (!r.passed()) fail(ErrorKind::rejected_input, "curve rejected: " + r.failures().front());
    }
    std::optional<BruinCover> cover;
    if (doc.epsilon) {
      cover = deform(c, *doc.epsilon, vo.macaulay);
    } else {
      std::mt19937_64 rng(seed);
      const auto fiber = random_smooth_fiber(c, rng);
      if (!fiber) fail(ErrorKind::rejected_input, "no smooth deformation fiber found");
      doc.epsilon = fiber->eps;
      cover = fiber->cover;
      rep["input"] = curve_document(c, doc.epsilon);
    }
    const BruinVerification v = verify_bruin(*cover, job.depth, vo);
    rep["result"] = {{"epsilon", to_json(*doc.epsilon)}, {"bruin", to_json(v)}};
    text << "epsilon = " << doc.epsilon->to_string() << "\nL_Z L_H = " << v.l_zh.to_string() << "\n";
    for (std::size_t m = 0; m < v.counts_y.size(); ++m)
      text << "  N_" << m + 1 << "(Y) = " << v.counts_y[m].points << ", predicted "
           << v.predicted_y[m] << "\n";
    text << v.note << "\n";
    if (!v.passed || !v.invariant_violations.empty()) res.exit_code = kExitFailed;
    else if (v.achieved_depth < v.requested_depth) res.exit_code = kExitResource;
    else res.exit_code = kExitPass;
  } else {
    fail(ErrorKind::parse, "unknown command '" + job.command + "'");
  }
  res.summary = text.str();
}

}  // namespace

RunResult run(const JobSpec& job) {
  RunResult res;
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t calls = counting_invocations();
  res.report = {{"schema", kReportSchema}, {"version", kVersion}, {"command", job.command}};
  try {
    run_command(job, res);
  } catch (const Error& e) {
    res.exit_code = exit_code_for(e.kind());
    res.report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    res.summary += std::string("error (") + to_string(e.kind()) + "): " + e.what() + "\n";
  } catch (const std::exception& e) {
    res.exit_code = kExitInternal;
    res.report["error"] = {{"kind", "internal"}, {"message", e.what()}};
    res.summary += std::string("internal error: ") + e.what() + "\n";
  }
  res.report["status"] = status_for(res.exit_code);
  res.report["exit_code"] = res.exit_code;
  res.report["counting_invocations"] = counting_invocations() - calls;
  res.report["elapsed_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.summary += std::string("status: ") + status_for(res.exit_code) + "\n";
  return res;
}

void emit(const JobSpec& job, const RunResult& result) {
  const std::string body = job.format == "text" ? result.summary : result.report.dump(2) + "\n";
  if (!job.out_path) {
    std::cout << body;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(*job.out_path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::parse, "cannot write " + tmp.string());
    out << body;
    if (!out.flush()) fail(ErrorKind::parse, "cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
  if (job.format == "json") std::cerr << result.summary;
}

}  // namespace prym

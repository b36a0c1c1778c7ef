#include "prym/zeta.hpp"

#include <gmpxx.h>

#include <sstream>

namespace prym {

namespace {

std::int64_t to_i64(const mpz_class& v, const char* what) {
  if (!v.fits_slong_p()) fail(ErrorKind::inconsistent_counts, std::string(what) + " overflows 64 bits");
  return v.get_si();
}

mpz_class zpow(std::int64_t b, int e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), mpz_class(static_cast<long>(b)).get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

bool WeilPolynomial::satisfies_functional_equation() const {
  if (genus < 0 || a.size() != static_cast<std::size_t>(2 * genus + 1) || a[0] != 1) return false;
  for (int i = 0; i <= genus; ++i)
    if (mpz_class(static_cast<long>(a[2 * genus - i])) != zpow(q, genus - i) * static_cast<long>(a[i]))
      return false;
  return true;
}

bool WeilPolynomial::satisfies_a1_bound() const {
  if (genus == 0) return true;
  const mpz_class a1 = static_cast<long>(a[1]);
  return a1 * a1 <= mpz_class(4) * genus * genus * static_cast<long>(q);
}

std::string WeilPolynomial::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == 0) {
      os << a[0];
      continue;
    }
    if (a[i] == 0) continue;
    os << (a[i] < 0 ? " - " : " + ");
    const std::int64_t v = a[i] < 0 ? -a[i] : a[i];
    if (v != 1) os << v << '*';
    os << 'T';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

WeilPolynomial lpoly_from_counts(std::int64_t q, std::span<const std::int64_t> counts, int genus) {
  if (genus < 1) fail(ErrorKind::degree, "genus must be >= 1");
  if (counts.size() < static_cast<std::size_t>(genus))
    fail(ErrorKind::inconsistent_counts, "need counts over F_q^1..F_q^g");
  // s_i = q^i + 1 - N_i are the Frobenius power sums
  std::vector<mpz_class> s(genus + 1), e(genus + 1);
  for (int i = 1; i <= genus; ++i) s[i] = zpow(q, i) + 1 - static_cast<long>(counts[i - 1]);
  e[0] = 1;
  for (int k = 1; k <= genus; ++k) {
    mpz_class acc = 0;
    for (int i = 1; i <= k; ++i) {
      if (i % 2) acc += e[k - i] * s[i];
      else acc -= e[k - i] * s[i];
    }
    if (acc % k != 0)
      fail(ErrorKind::inconsistent_counts,
           "Newton step " + std::to_string(k) + " is not divisible (" + acc.get_str() + ")");
    e[k] = acc / k;
  }
  WeilPolynomial l;
  l.genus = genus;
  l.q = q;
  l.a.assign(2 * genus + 1, 0);
  for (int i = 0; i <= genus; ++i) l.a[i] = to_i64(i % 2 ? -e[i] : e[i], "L-coefficient");
  for (int i = 0; i < genus; ++i)
    l.a[2 * genus - i] = to_i64(zpow(q, genus - i) * static_cast<long>(l.a[i]), "L-coefficient");
  return l;
}

std::int64_t predicted_count(const WeilPolynomial& l, int m) {
  if (m < 1) fail(ErrorKind::degree, "extension degree must be >= 1");
  const int n = 2 * l.genus;
  std::vector<mpz_class> e(n + 1), s(m + 1);
  for (int i = 0; i <= n; ++i) e[i] = i % 2 ? -mpz_class(static_cast<long>(l.a[i])) : mpz_class(static_cast<long>(l.a[i]));
  for (int k = 1; k <= m; ++k) {
    mpz_class acc = 0;
    for (int i = 1; i < k && i <= n; ++i) {
      if (i % 2) acc += e[i] * s[k - i];
      else acc -= e[i] * s[k - i];
    }
    if (k <= n) {
      if (k % 2) acc += k * e[k];
      else acc -= k * e[k];
    }
    s[k] = acc;
  }
  return to_i64(zpow(l.q, m) + 1 - s[m], "predicted count");
}

WeilPolynomial operator*(const WeilPolynomial& x, const WeilPolynomial& y) {
  if (x.q != y.q) fail(ErrorKind::inconsistent_counts, "multiplying L-polynomials over different q");
  WeilPolynomial r;
  r.genus = x.genus + y.genus;
  r.q = x.q;
  std::vector<mpz_class> acc(x.a.size() + y.a.size() - 1, 0);
  for (std::size_t i = 0; i < x.a.size(); ++i)
    for (std::size_t j = 0; j < y.a.size(); ++j)
      acc[i + j] += mpz_class(static_cast<long>(x.a[i])) * static_cast<long>(y.a[j]);
  for (const auto& v : acc) r.a.push_back(to_i64(v, "product coefficient"));
  return r;
}

namespace {

void check_lpoly(const WeilPolynomial& l, const std::vector<CountRecord>& counts,
                 const std::string& name, std::vector<std::string>& out) {
  if (!l.satisfies_functional_equation()) out.push_back(name + ": functional equation fails");
  if (!l.satisfies_a1_bound()) out.push_back(name + ": |a_1| exceeds 2g sqrt(q)");
  for (std::size_t m = 1; m <= counts.size(); ++m)
    if (predicted_count(l, static_cast<int>(m)) != counts[m - 1].points)
      out.push_back(name + ": round trip fails at m = " + std::to_string(m));
}

void check_weil(const std::vector<CountRecord>& counts, const std::string& name,
                std::vector<std::string>& out) {
  for (const auto& c : counts)
    if (!c.within_weil_bound())
      out.push_back(name + ": Weil bound violated over F_" + std::to_string(c.q) + "^" +
                    std::to_string(c.m) + " (N = " + std::to_string(c.points) + ")");
}

}  // namespace

SplitVerification verify_split(const BiellipticQuartic& c, const VerifyOptions& opt) {
  if (!c.field.is_finite())
    fail(ErrorKind::unsupported_field, "verify_split counts points; use verify_split_rational over Q");
  ValidationReport rep = validate(c, opt.macaulay);
  if (!rep.passed()) {
    std::string msg = "curve rejected:";
    for (const auto& f : rep.failures()) msg += " " + f + ";";
    fail(ErrorKind::rejected_input, msg);
  }
  SplitVerification v{.curve = c, .validation = rep, .split = split(c, false, opt.macaulay)};
  UniPoly x_model = v.split.sextic;
  if (opt.corrupt_sextic) x_model += UniPoly::constant(c.field.one());

  const TernaryForm quartic = c.plane_quartic();
  for (std::uint32_t m = 1; m <= 3; ++m) {
    v.counts_c.push_back(count_plane_quartic(quartic, m, opt.caps));
    v.counts_c.back().genus = 3;
  }
  v.counts_d.push_back(count_weighted(v.split.genus_one.s.dehomogenize(), 1, 1, opt.caps));
  v.counts_d.back().genus = 1;
  for (std::uint32_t m = 1; m <= 2; ++m) {
    v.counts_x.push_back(count_weighted(x_model, 2, m, opt.caps));
    if (!opt.corrupt_sextic) v.counts_x.back().genus = 2;
  }

  auto points = [](const std::vector<CountRecord>& r) {
    std::vector<std::int64_t> n;
    for (const auto& x : r) n.push_back(x.points);
    return n;
  };
  const auto q = static_cast<std::int64_t>(c.field.order());
  v.l_c = lpoly_from_counts(q, points(v.counts_c), 3);
  v.l_d = lpoly_from_counts(q, points(v.counts_d), 1);
  try {
    v.l_x = lpoly_from_counts(q, points(v.counts_x), 2);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::inconsistent_counts) throw;
    v.failure = std::string("X counts are not those of a genus-2 curve: ") + e.what();
    return v;
  }
  v.l_dx = v.l_d * v.l_x;
  v.passed = v.l_c == v.l_dx;
  if (!v.passed) v.failure = "L_C = " + v.l_c.to_string() + " but L_D L_X = " + v.l_dx.to_string();

  check_weil(v.counts_c, "C", v.invariant_violations);
  check_weil(v.counts_d, "D", v.invariant_violations);
  check_weil(v.counts_x, "X", v.invariant_violations);
  check_lpoly(v.l_c, v.counts_c, "L_C", v.invariant_violations);
  check_lpoly(v.l_d, v.counts_d, "L_D", v.invariant_violations);
  if (!opt.corrupt_sextic) check_lpoly(v.l_x, v.counts_x, "L_X", v.invariant_violations);
  if (!v.l_dx.satisfies_functional_equation())
    v.invariant_violations.push_back("L_D L_X: functional equation fails");
  return v;
}

std::vector<SplitVerification> verify_split_rational(const BiellipticQuartic& c, int primes,
                                                     const VerifyOptions& opt) {
  if (c.field.is_finite()) return {verify_split(c, opt)};
  const ValidationReport rep = validate(c, opt.macaulay);
  if (!rep.passed()) {
    std::string msg = "curve rejected:";
    for (const auto& f : rep.failures()) msg += " " + f + ";";
    fail(ErrorKind::rejected_input, msg);
  }
  std::vector<SplitVerification> out;
  for (std::uint32_t p = 5; static_cast<int>(out.size()) < primes; p += 2) {
    if (!is_prime(p)) continue;
    const std::uint64_t cube = std::uint64_t{p} * p * p;
    if (cube > opt.caps.max_axis || cube * cube > opt.caps.max_evals) {
      if (out.empty()) fail(ErrorKind::resource_limit, "no prime of good reduction within the caps");
      break;
    }
    const Field fp = Field::prime(p);
    BiellipticQuartic red;
    try {
      red = c.reduce(fp);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::rejected_input) continue;  // denominator divisible by p
      throw;
    }
    if (!validate(red, opt.macaulay).passed()) continue;
    out.push_back(verify_split(red, opt));
  }
  return out;
}

BruinVerification verify_bruin(const BruinCover& cover, int depth, const VerifyOptions& opt) {
  if (depth < 1 || depth > 5) fail(ErrorKind::degree, "Bruin depth must be between 1 and 5");
  const Field& F = cover.q[0].field();
  if (!F.is_finite()) fail(ErrorKind::unsupported_field, "verify_bruin counts points");
  if (!cover.base_smooth) fail(ErrorKind::rejected_input, "base quartic Q2^2 - Q1 Q3 is singular");
  if (!cover.sextic_squarefree)
    fail(ErrorKind::rejected_input, "pencil sextic is not a squarefree sextic or quintic");

  BruinVerification v{.cover = cover, .requested_depth = depth};
  const TernaryForm base = cover.base_quartic();
  for (std::uint32_t m = 1; m <= 3; ++m) {
    v.counts_z.push_back(count_plane_quartic(base, m, opt.caps));
    v.counts_z.back().genus = 3;
  }
  for (std::uint32_t m = 1; m <= 2; ++m) {
    v.counts_h.push_back(count_weighted(cover.sextic, 2, m, opt.caps));
    v.counts_h.back().genus = 2;
  }
  auto points = [](const std::vector<CountRecord>& r) {
    std::vector<std::int64_t> n;
    for (const auto& x : r) n.push_back(x.points);
    return n;
  };
  const auto q = static_cast<std::int64_t>(F.order());
  v.l_z = lpoly_from_counts(q, points(v.counts_z), 3);
  v.l_h = lpoly_from_counts(q, points(v.counts_h), 2);
  v.l_zh = v.l_z * v.l_h;

  bool all_match = true;
  for (int m = 1; m <= depth; ++m) {
    BruinCount bc;
    try {
      bc = count_bruin_cover(cover.q, static_cast<std::uint32_t>(m), opt.caps);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::resource_limit) throw;
      v.note = "stopped at depth " + std::to_string(m - 1) + ": " + e.what();
      break;
    }
    bc.cover.genus = 5;
    if (m == 1) v.fiber_histogram = bc.fiber_histogram;
    if (bc.fiber_histogram[0] != 0)
      v.invariant_violations.push_back("fiber of size 1 on a smooth cover at m = " + std::to_string(m));
    if (m <= 3 && bc.base.points != v.counts_z[m - 1].points)
      v.invariant_violations.push_back("base counts disagree at m = " + std::to_string(m));
    v.counts_y.push_back(bc.cover);
    v.predicted_y.push_back(predicted_count(v.l_zh, m));
    all_match = all_match && v.predicted_y.back() == bc.cover.points;
    v.achieved_depth = m;
  }
  v.passed = all_match && v.achieved_depth >= 1;
  v.full_certificate = v.passed && v.achieved_depth == 5;
  if (v.note.empty())
    v.note = v.full_certificate ? "full degree-10 certificate"
                                : "partial certificate (depth " + std::to_string(v.achieved_depth) + " of 5)";

  check_weil(v.counts_z, "Z", v.invariant_violations);
  check_weil(v.counts_h, "H", v.invariant_violations);
  check_weil(v.counts_y, "Y", v.invariant_violations);
  check_lpoly(v.l_z, v.counts_z, "L_Z", v.invariant_violations);
  check_lpoly(v.l_h, v.counts_h, "L_H", v.invariant_violations);
  if (!v.l_zh.satisfies_functional_equation())
    v.invariant_violations.push_back("L_Z L_H: functional equation fails");
  return v;
}

}  // namespace prym

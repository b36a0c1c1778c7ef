#include <functional>
#include <random>

#include "doctest.h"
#include "prym/instances.hpp"
#include "prym/zeta.hpp"

using namespace prym;

namespace {

ErrorKind error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::parse;
}

WeilPolynomial lpoly(std::int64_t q, std::vector<std::int64_t> counts, int genus) {
  return lpoly_from_counts(q, counts, genus);
}

}  // namespace

TEST_CASE("L-polynomials from counts") {
  CHECK(lpoly(5, {6}, 1).a == std::vector<std::int64_t>{1, 0, 5});
  CHECK(lpoly(5, {6, 26}, 2).a == std::vector<std::int64_t>{1, 0, 0, 0, 25});
  const WeilPolynomial e = lpoly(5, {4}, 1);
  CHECK(e.a == std::vector<std::int64_t>{1, -2, 5});
  CHECK(e.to_string() == "1 - 2*T + 5*T^2");

  CHECK(predicted_count(lpoly(5, {6}, 1), 1) == 6);
  CHECK(predicted_count(e, 2) == 32);
  CHECK(error_of([&] { predicted_count(e, 0); }) == ErrorKind::degree);

  // s1 = -1, s2 = 0: 2 e2 = e1 s1 - s2 = 1 is odd
  CHECK(error_of([] { lpoly(5, {7, 26}, 2); }) == ErrorKind::inconsistent_counts);
  CHECK(error_of([] { lpoly(5, {7}, 2); }) == ErrorKind::inconsistent_counts);
}

TEST_CASE("functional equation and products") {
  const WeilPolynomial l1 = lpoly(5, {4}, 1);
  WeilPolynomial l2 = lpoly(5, {6, 26}, 2);
  CHECK(l1.satisfies_functional_equation());
  CHECK(l2.satisfies_functional_equation());
  const WeilPolynomial l3 = l1 * l2;
  CHECK(l3.genus == 3);
  CHECK(l3.a.size() == 7);
  CHECK(l3.satisfies_functional_equation());
  CHECK(l3.a[6] == 125);

  l2.a[4] = 24;
  CHECK_FALSE(l2.satisfies_functional_equation());
  WeilPolynomial wild{1, 5, {1, 10, 5}};
  CHECK_FALSE(wild.satisfies_a1_bound());
}

TEST_CASE("round trip on genuine counts") {
  std::mt19937_64 rng(1);
  int checked = 0;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const Field fp = Field::prime(p);
    for (int i = 0; i < 40; ++i) {
      const BiellipticQuartic c = random_validated_curve(fp, rng);
      std::vector<std::int64_t> n;
      for (std::uint32_t m = 1; m <= 3; ++m) n.push_back(count_plane_quartic(c.plane_quartic(), m).points);
      const WeilPolynomial l = lpoly_from_counts(p, n, 3);
      CHECK(l.satisfies_functional_equation());
      CHECK(l.satisfies_a1_bound());
      for (int m = 1; m <= 3; ++m) CHECK(predicted_count(l, m) == n[m - 1]);
      // the prediction for m = 4 is a genuine count too
      if (p <= 7) CHECK(predicted_count(l, 4) == count_plane_quartic(c.plane_quartic(), 4).points);
      ++checked;
    }
  }
  CHECK(checked == 200);
}

TEST_CASE("verify_split") {
  const Field f7 = Field::prime(7);
  const auto c = BiellipticQuartic::from_ints(f7, {0, 1, 0}, {1, 1, 1}, {1, 0, -1});
  const SplitVerification v = verify_split(c);
  CHECK(v.passed);
  CHECK(v.invariant_violations.empty());
  CHECK(v.l_c == v.l_dx);
  CHECK(v.counts_c.size() == 3);
  CHECK(v.counts_d.size() == 1);
  CHECK(v.counts_x.size() == 2);

  VerifyOptions corrupt;
  corrupt.corrupt_sextic = true;
  const SplitVerification bad = verify_split(c, corrupt);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.failure.empty());

  // fg with a square factor never reaches counting
  const auto sq = BiellipticQuartic::from_ints(f7, {1, 0, 1}, {1, 0, 1}, {0, 1, 0});
  const std::uint64_t before = counting_invocations();
  CHECK(error_of([&] { verify_split(sq); }) == ErrorKind::rejected_input);
  CHECK(counting_invocations() == before);

  // over F_{p^2}
  std::mt19937_64 rng(2);
  const Field f9 = Field::extension(3, 2);
  for (int i = 0; i < 5; ++i) CHECK(verify_split(random_validated_curve(f9, rng)).passed);
}

TEST_CASE("verify_split over Q at good primes") {
  const Field q = Field::rationals();
  const auto c = BiellipticQuartic::from_elements(
      {q.zero(), q.one(), q.zero()}, {q.one(), q.one(), q.from_rational(mpq_class(1, 5))},
      {q.one(), q.zero(), q.from_int(-1)});
  const auto runs = verify_split_rational(c, 3);
  REQUIRE(runs.size() == 3);
  for (const auto& v : runs) {
    CHECK(v.passed);
    CHECK(v.curve.field.characteristic() != 5);
  }
}

TEST_CASE("verify_bruin") {
  std::mt19937_64 rng(3);
  const Field f5 = Field::prime(5);
  int done = 0;
  while (done < 3) {
    const BiellipticQuartic c = random_validated_curve(f5, rng);
    const auto fiber = random_smooth_fiber(c, rng);
    if (!fiber) continue;
    const BruinVerification v = verify_bruin(fiber->cover, 3);
    CHECK(v.passed);
    CHECK(v.achieved_depth == 3);
    CHECK_FALSE(v.full_certificate);
    CHECK(v.invariant_violations.empty());
    CHECK(v.l_zh.genus == 5);

    // a cap on point evaluations stops the Y counts early
    VerifyOptions capped;
    capped.caps.max_evals = 500000;
    const BruinVerification partial = verify_bruin(fiber->cover, 5, capped);
    CHECK(partial.passed);
    CHECK(partial.achieved_depth == 4);
    CHECK_FALSE(partial.full_certificate);
    CHECK(partial.note.find("stopped at depth 4") != std::string::npos);

    CHECK(error_of([&] { verify_bruin(deform(c, f5.zero()), 3); }) == ErrorKind::rejected_input);
    CHECK(error_of([&] { verify_bruin(fiber->cover, 6); }) == ErrorKind::degree);
    ++done;
  }
}

TEST_CASE("full degree-10 certificate over F_3") {
  std::mt19937_64 rng(4);
  const Field f3 = Field::prime(3);
  for (int t = 0; t < 50; ++t) {
    const BiellipticQuartic c = random_validated_curve(f3, rng);
    const auto fiber = random_smooth_fiber(c, rng);
    if (!fiber) continue;
    const BruinVerification v = verify_bruin(fiber->cover, 5);
    CHECK(v.passed);
    CHECK(v.full_certificate);
    CHECK(v.counts_y.size() == 5);
    return;
  }
  FAIL("no smooth fiber over F_3");
}

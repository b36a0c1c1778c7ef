#pragma once

// L-polynomials from point counts and the two isogeny checks built on them:
// L_C = L_D * L_X for the bielliptic quartic, and N_m(Y) = N_m predicted by
// L_Z * L_H for the Bruin cover.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prym/counting.hpp"
#include "prym/prym_core.hpp"

namespace prym {

/// L(T) = 1 + a_1 T + ... + a_{2g} T^{2g} over F_q.
struct WeilPolynomial {
  int genus = 0;
  std::int64_t q = 0;
  std::vector<std::int64_t> a{};  // length 2g + 1, a[0] = 1

  bool satisfies_functional_equation() const;
  /// a_1^2 <= 4 g^2 q.
  bool satisfies_a1_bound() const;
  std::string to_string() const;

  friend bool operator==(const WeilPolynomial&, const WeilPolynomial&) = default;
};

/// Newton's identities from N_1..N_g; exact divisions are checked and any
/// failure raises inconsistent_counts.
WeilPolynomial lpoly_from_counts(std::int64_t q, std::span<const std::int64_t> counts, int genus);

/// N_m = q^m + 1 - s_m. Requires m >= 1.
std::int64_t predicted_count(const WeilPolynomial& l, int m);

/// Product over the same q; the genera add.
WeilPolynomial operator*(const WeilPolynomial& x, const WeilPolynomial& y);

struct VerifyOptions {
  CountCaps caps;
  MacaulayOptions macaulay;
  /// Negative control: replace F by F + 1 before counting X.
  bool corrupt_sextic = false;
};

struct SplitVerification {
  BiellipticQuartic curve;
  ValidationReport validation;
  SplitResult split;
  std::vector<CountRecord> counts_c{}, counts_d{}, counts_x{};
  WeilPolynomial l_c{}, l_d{}, l_x{}, l_dx{};
  bool passed = false;
  std::string failure{};
  /// Weil bounds, functional equations and the round trip predicted_count
  /// of lpoly_from_counts.
  std::vector<std::string> invariant_violations{};
};

/// Counts C over F_{q..q^3}, D' over F_q, X over F_{q..q^2} and compares
/// L_C with L_D L_X. Rejected inputs raise rejected_input before any count;
/// a mismatch is reported, not thrown.
SplitVerification verify_split(const BiellipticQuartic& c, const VerifyOptions& opt = {});

/// For a curve over Q: verify_split at the first `primes` odd primes >= 5 of
/// good reduction (those where the reduction still validates).
std::vector<SplitVerification> verify_split_rational(const BiellipticQuartic& c, int primes = 3,
                                                     const VerifyOptions& opt = {});

struct BruinVerification {
  BruinCover cover;
  std::vector<CountRecord> counts_z{}, counts_h{}, counts_y{};
  std::vector<std::int64_t> predicted_y{};
  std::array<std::uint64_t, 3> fiber_histogram{};  // over F_q
  WeilPolynomial l_z{}, l_h{}, l_zh{};
  int requested_depth = 0;
  int achieved_depth = 0;
  bool passed = false;
  /// All five counts match, so L_Y = L_Z L_H as degree-10 polynomials.
  bool full_certificate = false;
  std::string note{};
  std::vector<std::string> invariant_violations{};
};

/// Compares N_m(Y) with the prediction from L_Z L_H for m = 1..depth (<= 5).
/// Hitting a resource cap stops early with a partial report.
BruinVerification verify_bruin(const BruinCover& cover, int depth, const VerifyOptions& opt = {});

}  // namespace prym

#pragma once

// Exhaustive point counts over F_{q^m} for plane curves in P^2, for
// y^2 = F(x, z) in P(1, g+1, 1), and for the genus-5 cover Y counted fiber by
// fiber over its plane quartic base Z.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "prym/poly.hpp"
#include "prym/ternary.hpp"

namespace prym {

struct CountCaps {
  /// Largest q^m allowed for any enumeration axis.
  std::uint64_t max_axis = 30000;
  /// Largest number of point evaluations for a P^2-indexed count.
  std::uint64_t max_evals = 250000000;
};

struct CountRecord {
  std::uint64_t q = 0;  // base field size
  std::uint32_t m = 1;  // extension degree
  std::int64_t points = 0;
  std::string model;
  std::optional<int> genus;  // when the model is known to be smooth
  double seconds = 0;        // excluded from equality

  std::uint64_t field_size() const;
  /// |N - (Q + 1)| <= 2 g sqrt(Q), Q = q^m. True when no genus is recorded.
  bool within_weil_bound() const;

  friend bool operator==(const CountRecord& a, const CountRecord& b) {
    return a.q == b.q && a.m == b.m && a.points == b.points && a.model == b.model &&
           a.genus == b.genus;
  }
};

/// Projective points of the plane curve P = 0 over F_{q^m}, q = |field of P|.
CountRecord count_plane_curve(const TernaryForm& p, std::uint32_t m, const CountCaps& caps = {});

/// count_plane_curve restricted to quartics.
CountRecord count_plane_quartic(const TernaryForm& p, std::uint32_t m, const CountCaps& caps = {});

/// Points of y^2 = F~(x, z) in P(1, g+1, 1), F~ the degree-(2g+2) homogenization.
CountRecord count_weighted(const UniPoly& f, int genus, std::uint32_t m, const CountCaps& caps = {});

struct BruinCount {
  CountRecord base;   // Z : Q2^2 = Q1 Q3
  CountRecord cover;  // Y : Q1 = u^2, Q2 = uv, Q3 = v^2
  /// Points of Z with fiber size 1 (Q1 = Q2 = Q3 = 0), 0 and 2.
  std::array<std::uint64_t, 3> fiber_histogram{};
};

/// Counts Z and Y at once; Y is never enumerated in P^4.
BruinCount count_bruin_cover(const std::array<TernaryQuadratic, 3>& q, std::uint32_t m,
                             const CountCaps& caps = {});

/// Tagged curve model ready for counting.
struct PlaneQuarticModel {
  TernaryForm quartic;
};
struct WeightedModel {
  UniPoly f;
  int genus = 1;
};
struct BruinCoverModel {
  std::array<TernaryQuadratic, 3> q;
};
using CurveInstance = std::variant<PlaneQuarticModel, WeightedModel, BruinCoverModel>;

/// For a cover, returns the count of Y.
CountRecord count(const CurveInstance& curve, std::uint32_t m, const CountCaps& caps = {});

/// Number of counting kernel invocations in this process.
std::uint64_t counting_invocations();

/// Worker threads for counting: PRYM_THREADS if set, else hardware concurrency.
unsigned counting_threads();

}  // namespace prym

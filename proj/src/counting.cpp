#include "prym/counting.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>
#include <vector>

#include "prym/zech.hpp"

namespace prym {

namespace {

std::atomic<std::uint64_t> g_invocations{0};

using Elem = ZechField::Elem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= b;
  return r;
}

std::shared_ptr<const ZechField> counting_field(const Field& base, std::uint32_t m,
                                                std::uint64_t axis_cap) {
  if (!base.is_finite()) fail(ErrorKind::unsupported_field, "cannot count points over Q");
  if (m == 0) fail(ErrorKind::degree, "extension degree must be >= 1");
  const std::uint32_t n = base.degree() * m;
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    size *= base.characteristic();
    if (size > axis_cap)
      fail(ErrorKind::resource_limit, "F_" + std::to_string(base.characteristic()) + "^" +
                                          std::to_string(n) + " exceeds the axis cap of " +
                                          std::to_string(axis_cap));
  }
  return ZechField::get(base.characteristic(), n);
}

void check_eval_cap(std::uint64_t qm, const CountCaps& caps) {
  if (qm * qm > caps.max_evals)
    fail(ErrorKind::resource_limit, "P^2 count over a field of size " + std::to_string(qm) +
                                        " exceeds the evaluation cap of " +
                                        std::to_string(caps.max_evals));
}

/// Sums fn(begin, end) over disjoint chunks of [0, rows).
template <class Acc, class Fn>
Acc parallel_sum(std::uint64_t rows, Fn fn) {
  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(counting_threads(), std::max<std::uint64_t>(1, rows / 64)));
  if (threads <= 1) return fn(std::uint64_t{0}, rows);
  std::vector<Acc> partial(threads);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (rows + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = std::min(rows, t * chunk), hi = std::min(rows, lo + chunk);
    pool.emplace_back([&, t, lo, hi] { partial[t] = fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
  Acc total{};
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace

unsigned counting_threads() {
  if (const char* env = std::getenv("PRYM_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t counting_invocations() { return g_invocations.load(); }

std::uint64_t CountRecord::field_size() const { return ipow(q, m); }

bool CountRecord::within_weil_bound() const {
  if (!genus) return true;
  // (N - Q - 1)^2 <= 4 g^2 Q, exact in integers
  const __int128 d = static_cast<__int128>(points) - static_cast<__int128>(field_size()) - 1;
  return d * d <= static_cast<__int128>(4) * *genus * *genus * static_cast<__int128>(field_size());
}

CountRecord count_plane_curve(const TernaryForm& p, std::uint32_t m, const CountCaps& caps) {
  ++g_invocations;
  const auto t0 = Clock::now();
  const auto K = counting_field(p.field(), m, caps.max_axis);
  const std::uint64_t qm = K->order();
  check_eval_cap(qm, caps);
  const int d = p.degree();

  // coef[a][b] for x1^a x2^b x3^{d-a-b}
  std::vector<std::vector<Elem>> coef(d + 1, std::vector<Elem>(d + 1, K->zero()));
  for (const auto& mon : monomials(d)) coef[mon.a][mon.b] = K->from(p.coeff(mon));

  struct Tally {
    std::int64_t n = 0;
    Tally& operator+=(const Tally& o) {
      n += o.n;
      return *this;
    }
  };

  // affine chart x3 = 1
  const Tally affine = parallel_sum<Tally>(qm, [&](std::uint64_t lo, std::uint64_t hi) {
    Tally t;
    std::vector<Elem> row(d + 1), xp(d + 1);
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Elem x = K->nth(i);
      xp[0] = K->one();
      for (int a = 1; a <= d; ++a) xp[a] = K->mul(xp[a - 1], x);
      for (int b = 0; b <= d; ++b) {
        Elem s = K->zero();
        for (int a = 0; a + b <= d; ++a) s = K->add(s, K->mul(coef[a][b], xp[a]));
        row[b] = s;
      }
      for (std::uint64_t j = 0; j < qm; ++j) {
        const Elem y = K->nth(j);
        Elem v = row[d];
        for (int b = d - 1; b >= 0; --b) v = K->add(K->mul(v, y), row[b]);
        if (K->is_zero(v)) ++t.n;
      }
    }
    return t;
  });

  std::int64_t n = affine.n;
  // line x3 = 0: (x : 1 : 0) and (1 : 0 : 0)
  for (std::uint64_t i = 0; i < qm; ++i) {
    const Elem x = K->nth(i);
    Elem v = K->zero();
    for (int a = d; a >= 0; --a) v = K->add(K->mul(v, x), coef[a][d - a]);
    if (K->is_zero(v)) ++n;
  }
  if (K->is_zero(coef[d][0])) ++n;

  CountRecord r;
  r.q = p.field().order();
  r.m = m;
  r.points = n;
  r.model = d == 4 ? "plane-quartic" : "plane-curve";
  r.seconds = seconds_since(t0);
  return r;
}

CountRecord count_plane_quartic(const TernaryForm& p, std::uint32_t m, const CountCaps& caps) {
  if (p.degree() != 4) fail(ErrorKind::degree, "expected a ternary quartic");
  return count_plane_curve(p, m, caps);
}

CountRecord count_weighted(const UniPoly& f, int genus, std::uint32_t m, const CountCaps& caps) {
  ++g_invocations;
  const auto t0 = Clock::now();
  if (genus < 1) fail(ErrorKind::model, "genus must be >= 1");
  if (f.degree() > 2 * genus + 2)
    fail(ErrorKind::model, "degree " + std::to_string(f.degree()) + " exceeds 2g + 2 = " +
                               std::to_string(2 * genus + 2));
  const auto K = counting_field(f.field(), m, caps.max_axis);
  const std::uint64_t qm = K->order();
  std::vector<Elem> c;
  for (const auto& v : f.coeffs()) c.push_back(K->from(v));

  struct Tally {
    std::int64_t n = 0;
    Tally& operator+=(const Tally& o) {
      n += o.n;
      return *this;
    }
  };
  const Tally affine = parallel_sum<Tally>(qm, [&](std::uint64_t lo, std::uint64_t hi) {
    Tally t;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Elem x = K->nth(i);
      Elem v = K->zero();
      for (std::size_t j = c.size(); j-- > 0;) v = K->add(K->mul(v, x), c[j]);
      t.n += 1 + K->chi(v);
    }
    return t;
  });

  // z = 0: (1 : y : 0) with y^2 = coefficient of x^{2g+2}
  const Elem top = K->from(f.coeff(2 * genus + 2));
  CountRecord r;
  r.q = f.field().order();
  r.m = m;
  r.points = affine.n + 1 + K->chi(top);
  r.model = "weighted-hyperelliptic";
  r.seconds = seconds_since(t0);
  return r;
}

BruinCount count_bruin_cover(const std::array<TernaryQuadratic, 3>& q, std::uint32_t m,
                             const CountCaps& caps) {
  ++g_invocations;
  const auto t0 = Clock::now();
  bool all_zero = true;
  for (const auto& qi : q)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) all_zero = all_zero && qi(r, c).is_zero();
  if (all_zero) fail(ErrorKind::degenerate_input, "all three quadratic forms vanish");

  const Field& base = q[0].field();
  const auto K = counting_field(base, m, caps.max_axis);
  const std::uint64_t qm = K->order();
  check_eval_cap(qm, caps);

  // Gram entries with doubled off-diagonals: Q = sum g_jj x_j^2 + sum_{j<k} h_jk x_j x_k
  struct Coeffs {
    Elem s00, s11, s22, h01, h02, h12;
  };
  std::array<Coeffs, 3> cf;
  const FieldElement two = base.from_int(2);
  for (int i = 0; i < 3; ++i) {
    cf[i] = {K->from(q[i](0, 0)),       K->from(q[i](1, 1)),       K->from(q[i](2, 2)),
             K->from(two * q[i](0, 1)), K->from(two * q[i](0, 2)), K->from(two * q[i](1, 2))};
  }
  auto eval = [&](const Coeffs& c, Elem x1, Elem x2, Elem x3) {
    Elem v = K->mul(c.s00, K->sqr(x1));
    v = K->add(v, K->mul(c.s11, K->sqr(x2)));
    v = K->add(v, K->mul(c.s22, K->sqr(x3)));
    v = K->add(v, K->mul(c.h01, K->mul(x1, x2)));
    v = K->add(v, K->mul(c.h02, K->mul(x1, x3)));
    v = K->add(v, K->mul(c.h12, K->mul(x2, x3)));
    return v;
  };

  struct Tally {
    std::int64_t z = 0, y = 0;
    std::array<std::uint64_t, 3> hist{};
    Tally& operator+=(const Tally& o) {
      z += o.z;
      y += o.y;
      for (int i = 0; i < 3; ++i) hist[i] += o.hist[i];
      return *this;
    }
  };
  auto visit = [&](Tally& t, Elem v1, Elem v2, Elem v3) {
    if (K->sub(K->sqr(v2), K->mul(v1, v3)) != K->zero()) return;
    ++t.z;
    int fiber;
    if (!K->is_zero(v1)) fiber = K->chi(v1) > 0 ? 2 : 0;
    else if (!K->is_zero(v3)) fiber = K->chi(v3) > 0 ? 2 : 0;
    else fiber = 1;  // Q1 = Q3 = 0 forces Q2 = 0 on Z
    t.y += fiber;
    ++t.hist[fiber == 1 ? 0 : fiber == 0 ? 1 : 2];
  };

  Tally total = parallel_sum<Tally>(qm, [&](std::uint64_t lo, std::uint64_t hi) {
    Tally t;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Elem x = K->nth(i);
      // Q(x, y, 1) = A y^2 + B y + C
      std::array<Elem, 3> A, B, C;
      for (int k = 0; k < 3; ++k) {
        const auto& c = cf[k];
        A[k] = c.s11;
        B[k] = K->add(K->mul(c.h01, x), c.h12);
        C[k] = K->add(K->add(K->mul(c.s00, K->sqr(x)), K->mul(c.h02, x)), c.s22);
      }
      for (std::uint64_t j = 0; j < qm; ++j) {
        const Elem y = K->nth(j);
        Elem v[3];
        for (int k = 0; k < 3; ++k) v[k] = K->add(K->mul(K->add(K->mul(A[k], y), B[k]), y), C[k]);
        visit(t, v[0], v[1], v[2]);
      }
    }
    return t;
  });
  for (std::uint64_t i = 0; i < qm; ++i) {
    const Elem x = K->nth(i);
    visit(total, eval(cf[0], x, K->one(), K->zero()), eval(cf[1], x, K->one(), K->zero()),
          eval(cf[2], x, K->one(), K->zero()));
  }
  visit(total, eval(cf[0], K->one(), K->zero(), K->zero()),
        eval(cf[1], K->one(), K->zero(), K->zero()), eval(cf[2], K->one(), K->zero(), K->zero()));

  BruinCount out;
  out.base.q = out.cover.q = base.order();
  out.base.m = out.cover.m = m;
  out.base.points = total.z;
  out.cover.points = total.y;
  out.base.model = "plane-quartic";
  out.cover.model = "bruin-cover";
  out.fiber_histogram = total.hist;
  out.base.seconds = out.cover.seconds = seconds_since(t0);
  return out;
}

CountRecord count(const CurveInstance& curve, std::uint32_t m, const CountCaps& caps) {
  return std::visit(
      [&](const auto& c) -> CountRecord {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PlaneQuarticModel>) return count_plane_quartic(c.quartic, m, caps);
        else if constexpr (std::is_same_v<T, WeightedModel>) return count_weighted(c.f, c.genus, m, caps);
        else return count_bruin_cover(c.q, m, caps).cover;
      },
      curve);
}

}  // namespace prym

#include "algser/mahler.hpp"

#include <algorithm>
#include <stdexcept>

#include "algser/errors.hpp"
#include "algser/polylinalg.hpp"

namespace algser {

namespace {

Degree max_degree(std::span<const PolyFp> ps) {
  Degree m = kMinusInfinity;
  for (const auto& p : ps) m = std::max(m, p.degree());
  return m;
}

// Runs the recurrence n = 0, 1, ... and hands each PowerRep to `visit` until
// it returns false.
template <class Visit>
void walk_powers(std::span<const PolyFp> a, std::uint64_t last, Visit visit) {
  if (a.size() < 2) throw std::invalid_argument("power representation needs deg_y E >= 1");
  const std::size_t d = a.size() - 1;
  const PolyFp& ad = a[d];
  if (ad.is_zero()) throw std::invalid_argument("leading y-coefficient is zero");
  const PrimeModulus m = ad.modulus();
  Degree dx = 0;
  for (const auto& ai : a) dx = std::max(dx, ai.degree());

  std::vector<PolyFp> neg(d, PolyFp(m));
  for (std::size_t i = 0; i < d; ++i) neg[i] = -a[i];

  PowerRep cur{0, std::vector<PolyFp>(d, PolyFp(m)), PolyFp::constant(m, 1)};
  for (std::uint64_t n = 0; n <= last; ++n) {
    if (n < d) {
      cur.numer.assign(d, PolyFp(m));
      cur.numer[n] = PolyFp::constant(m, 1);
      cur.lead = PolyFp::constant(m, 1);
    } else if (n == d) {
      cur.numer = neg;
      cur.lead = ad;
    } else {
      std::vector<PolyFp> next(d, PolyFp(m));
      const PolyFp top = cur.numer[d - 1];
      for (std::size_t i = 0; i < d; ++i) {
        next[i] = top * neg[i];
        if (i > 0) next[i] += cur.numer[i - 1] * ad;
      }
      cur.numer = std::move(next);
      cur.lead = cur.lead * ad;
    }
    cur.n = n;
    if (n >= d && max_degree(cur.numer) > static_cast<Degree>(n - d + 1) * dx) {
      throw InternalDefect("power representation exceeds its degree bound");
    }
    if (!visit(cur)) return;
  }
}

}  // namespace

PowerRep power_representation(std::span<const PolyFp> a, std::uint64_t n) {
  PowerRep out;
  walk_powers(a, n, [&](const PowerRep& r) {
    if (r.n == n) out = r;
    return r.n < n;
  });
  return out;
}

MahlerEquation derive_mahler(const BiPolyFp& e) {
  MahlerTrace trace;
  return derive_mahler_traced(e, trace);
}

MahlerEquation derive_mahler_traced(const BiPolyFp& e, MahlerTrace& trace) {
  const std::vector<PolyFp> a = y_coefficients(e);
  const BiDegrees deg = degrees(e);
  if (deg.deg_y == 0) throw std::invalid_argument("no algebraic relation: deg_y E = 0");
  const PrimeModulus m = e.modulus();
  const std::uint64_t p = m.value();
  const std::size_t d = deg.deg_y;

  std::vector<std::uint64_t> targets{1};
  for (std::size_t i = 1; i <= d; ++i) {
    if (targets.back() > kMaxMahlerPower / p) throw CapExceeded("instance too large: p^d exceeds 2^20");
    targets.push_back(targets.back() * p);
  }

  trace = MahlerTrace{};
  std::size_t next = 0;
  walk_powers(a, targets.back(), [&](const PowerRep& r) {
    while (next < targets.size() && targets[next] == r.n) {
      trace.reps.push_back(r);
      ++next;
    }
    return next < targets.size();
  });

  std::vector<std::vector<PolyFp>> tuples;
  for (const auto& r : trace.reps) tuples.push_back(r.numer);
  trace.entry_bound = kMinusInfinity;
  for (const auto& t : tuples) trace.entry_bound = std::max(trace.entry_bound, max_degree(t));
  trace.dependency = dependency(tuples, trace.entry_bound);

  trace.raw.clear();
  for (std::size_t i = 0; i <= d; ++i) trace.raw.push_back(trace.dependency[i] * trace.reps[i].lead);

  std::vector<PolyFp> cur = trace.raw;
  std::size_t j = 0;
  while (cur[j].is_zero()) ++j;
  trace.shift = j;
  for (std::size_t step = 0; step < j; ++step) {
    const auto r = static_cast<std::uint32_t>(cur[j].order() % p);
    trace.digits.push_back(r);
    for (auto& poly : cur) poly = section(poly, r);
  }

  MahlerEquation eq;
  eq.modulus = m;
  eq.d = deg.deg_y;
  eq.deg_x = deg.deg_x;
  eq.coeffs.assign(cur.begin() + static_cast<std::ptrdiff_t>(j), cur.end());
  while (eq.coeffs.size() > 1 && eq.coeffs.back().is_zero()) eq.coeffs.pop_back();
  PolyFp g(m);
  for (const auto& c : eq.coeffs) g = gcd(g, c);
  for (auto& c : eq.coeffs) {
    if (!c.is_zero()) c = div_exact(c, g);
  }

  if (eq.coeffs.front().is_zero()) throw InternalDefect("Mahler equation has c_0 = 0");
  if (eq.k() > d) throw InternalDefect("Mahler equation order exceeds d");
  const Degree c0_bound = static_cast<Degree>((d + 1) * (targets.back() - d + 1) * deg.deg_x);
  if (eq.coeffs.front().degree() > c0_bound) throw InternalDefect("deg c_0 exceeds its bound");
  return eq;
}

SeriesTrunc mahler_residual(const MahlerEquation& eq, const SeriesTrunc& f) {
  const std::size_t n = f.precision();
  SeriesTrunc acc(f.modulus(), n);
  for (std::size_t i = 0; i < eq.coeffs.size(); ++i) {
    acc = acc + eq.coeffs[i] * frobenius_subst_to(f, static_cast<unsigned>(i), n);
  }
  return acc;
}

}  // namespace algser

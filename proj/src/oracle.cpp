#include "algser/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "algser/errors.hpp"

namespace algser {

namespace {

// G(x, z) as coefficients of z^0..z^d, each a polynomial in x.
using Bivar = std::vector<PolyFp>;

PolyFp drop_low(const PolyFp& a, std::size_t v) {
  if (a.is_zero()) return a;
  auto c = a.coeffs();
  return PolyFp(a.modulus(), std::vector<std::uint32_t>(c.begin() + static_cast<std::ptrdiff_t>(v), c.end()));
}

// Divides out the largest power of x dividing every coefficient.
void strip_x_content(Bivar& g) {
  std::size_t v = SIZE_MAX;
  for (const auto& gi : g) {
    if (!gi.is_zero()) v = std::min(v, gi.order());
  }
  if (v == SIZE_MAX || v == 0) return;
  for (auto& gi : g) gi = drop_low(gi, v);
}

std::uint32_t eval_at_zero(const Bivar& g, std::uint32_t c, PrimeModulus m) {
  std::uint32_t acc = 0;
  for (std::size_t i = g.size(); i-- > 0;) acc = m.add(m.mul(acc, c), g[i].raw(0));
  return acc;
}

// G(x, c + x z), content stripped.
Bivar substitute(const Bivar& g, std::uint32_t c, const std::vector<std::vector<std::uint32_t>>& binom,
                 PrimeModulus m) {
  const std::size_t d = g.size() - 1;
  Bivar out(d + 1, PolyFp(m));
  for (std::size_t l = 0; l <= d; ++l) {
    PolyFp acc(m);
    std::uint32_t cpow = 1;
    for (std::size_t i = l; i <= d; ++i) {
      const std::uint32_t s = m.mul(binom[i][l], cpow);
      if (s != 0 && !g[i].is_zero()) acc += g[i].scaled(s);
      cpow = m.mul(cpow, c);
    }
    out[l] = acc.shifted(l);
  }
  strip_x_content(out);
  return out;
}

struct Branch {
  Bivar g;
  std::vector<std::uint32_t> coeffs;
};

}  // namespace

SolutionSet solve_series(const BiPolyFp& e, std::size_t precision, std::span<const std::uint32_t> prefix,
                         std::size_t max_branches) {
  if (e.is_zero() || degrees(e).deg_y == 0) throw std::invalid_argument("solve_series needs deg_y E >= 1");
  const PrimeModulus m = e.modulus();
  const std::uint32_t p = m.value();
  Bivar start = y_coefficients(e);
  const std::size_t d = start.size() - 1;
  strip_x_content(start);

  std::vector<std::vector<std::uint32_t>> binom(d + 1, std::vector<std::uint32_t>(d + 1, 0));
  for (std::size_t i = 0; i <= d; ++i) {
    binom[i][0] = 1;
    for (std::size_t l = 1; l <= i; ++l) binom[i][l] = m.add(binom[i - 1][l - 1], l < i ? binom[i - 1][l] : 0);
  }

  SolutionSet out;
  out.precision = precision;
  std::vector<Branch> live{Branch{std::move(start), {}}};
  for (std::size_t n = 0; n < precision && !live.empty(); ++n) {
    std::vector<Branch> next;
    for (const auto& b : live) {
      std::uint32_t lo = 0, hi = p;
      if (n < prefix.size()) {
        lo = m.reduce(prefix[n]);
        hi = lo + 1;
      }
      for (std::uint32_t c = lo; c < hi; ++c) {
        if (eval_at_zero(b.g, c, m) != 0) continue;
        if (next.size() == max_branches) {
          out.complete = false;
          break;
        }
        Branch child{substitute(b.g, c, binom, m), b.coeffs};
        child.coeffs.push_back(c);
        next.push_back(std::move(child));
      }
    }
    live = std::move(next);
  }

  for (auto& b : live) {
    SeriesTrunc f(m, std::move(b.coeffs));
    if (!eval_at_series(e, f).is_zero()) throw InternalDefect("oracle branch is not a truncated root");
    out.roots.push_back(std::move(f));
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const SeriesTrunc& a, const SeriesTrunc& b) {
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
  });
  return out;
}

bool verify_prefix(const BiPolyFp& e, std::span<const std::uint32_t> prefix) {
  if (prefix.empty()) return true;
  const SeriesTrunc f(e.modulus(), std::vector<std::uint32_t>(prefix.begin(), prefix.end()));
  return eval_at_series(e, f).is_zero();
}

Fp naive_coeff(const BiPolyFp& e, std::span<const std::uint32_t> prefix, std::size_t n) {
  const SolutionSet s = solve_series(e, std::max(n + 1, prefix.size()), prefix);
  if (s.roots.empty()) throw DishonestInput("no oracle root extends the prefix");
  if (s.roots.size() > 1) throw std::domain_error("prefix does not select a unique oracle root");
  return s.roots.front().coeff(n);
}

std::optional<std::size_t> first_divergence(const SeriesTrunc& f, const SeriesTrunc& g) {
  if (f.precision() != g.precision()) throw std::invalid_argument("precision mismatch");
  for (std::size_t i = 0; i < f.precision(); ++i) {
    if (f.raw(i) != g.raw(i)) return i;
  }
  return std::nullopt;
}

namespace {

BigInt closed_form_bound(std::uint32_t p, std::uint32_t d, std::uint32_t dx) {
  if (d == 0) throw std::invalid_argument("bound needs deg_y >= 1");
  BigInt pd = boost::multiprecision::pow(BigInt(p), d);
  return BigInt(d + 1) * (pd - d + 1) * dx;
}

}  // namespace

BigInt bound_h(std::uint32_t p, const BiPolyZ& poly) {
  if (poly.is_zero()) throw std::invalid_argument("bound of the zero polynomial");
  const BiDegrees deg = poly.degrees();
  return closed_form_bound(p, deg.deg_y, deg.deg_x);
}

BigInt bound_corollary_g(const BiPolyFp& e) {
  if (e.is_zero()) throw std::invalid_argument("bound of the zero polynomial");
  const BiDegrees deg = degrees(e);
  return closed_form_bound(e.modulus().value(), deg.deg_y, deg.deg_x);
}

BigInt bound_prop_h(const BiPolyZ& poly) {
  if (poly.is_zero()) throw std::invalid_argument("bound of the zero polynomial");
  const BiDegrees deg = poly.degrees();
  if (deg.deg_y < 2) throw std::invalid_argument("bound needs deg_y >= 2");
  const BigInt d = deg.deg_y;
  return (d * d + d - 4) / 2 * deg.deg_x;
}

}  // namespace algser

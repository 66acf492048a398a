#include "algser/kernel.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <thread>

#include "algser/errors.hpp"
#include "algser/simd/kernels.hpp"

namespace algser {

BigIndex parse_big_index(std::string_view decimal) {
  if (decimal.empty()) throw std::invalid_argument("empty index");
  for (char ch : decimal) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("index must be a decimal natural number");
  }
  return BigIndex(std::string(decimal));
}

std::vector<std::uint32_t> digits_base_p(const BigIndex& n, std::uint32_t p) {
  if (n < 0) throw std::invalid_argument("negative index");
  if (n == 0) return {0};
  std::vector<std::uint32_t> out;
  BigIndex q = n;
  BigIndex r;
  const BigIndex base = p;
  while (q != 0) {
    boost::multiprecision::divide_qr(q, base, q, r);
    out.push_back(static_cast<std::uint32_t>(r));
  }
  return out;
}

std::vector<std::uint32_t> apply_digit(const CompiledSeries& cs, std::uint32_t r, std::span<const std::uint32_t> s,
                                       QueryStats* stats) {
  const FpMatrix& a = cs.A.at(r);
  const std::size_t e = a.dim();
  std::vector<std::uint64_t> acc(e, 0);
  std::uint64_t used = 0;
  for (std::size_t j = 0; j < e; ++j) {
    if (s[j] == 0) continue;
    simd::scale_accumulate(acc, s[j], a.column(j));
    ++used;
  }
  std::vector<std::uint32_t> out(e);
  for (std::size_t i = 0; i < e; ++i) out[i] = cs.p.reduce(acc[i]);
  if (stats != nullptr) {
    stats->field_ops += 2 * used * e + e;
    ++stats->matvecs;
  }
  return out;
}

std::uint32_t read_out(const CompiledSeries& cs, std::span<const std::uint32_t> s, QueryStats* stats) {
  if (stats != nullptr) stats->field_ops += 2 * cs.e;
  return cs.p.reduce(simd::dot(cs.u, s));
}

Fp h_coeff_digits(const CompiledSeries& cs, std::span<const std::uint32_t> digits, QueryStats* stats) {
  std::vector<std::uint32_t> s = cs.v;
  for (std::uint32_t r : digits) {
    if (r >= cs.p.value()) throw std::invalid_argument("digit out of range");
    s = apply_digit(cs, r, s, stats);
  }
  return Fp(cs.p, read_out(cs, s, stats));
}

Fp h_coeff(const CompiledSeries& cs, const BigIndex& m, QueryStats* stats) {
  return h_coeff_digits(cs, digits_base_p(m, cs.p.value()), stats);
}

Fp f_coeff(const CompiledSeries& cs, const BigIndex& n, QueryStats* stats) {
  if (n < 0) throw std::invalid_argument("negative index");
  const PrimeModulus m = cs.p;
  std::uint32_t acc = n < cs.c.size() ? cs.c.raw(static_cast<std::size_t>(n)) : 0;
  for (std::size_t t = 0; t < cs.a.size() && t <= n; ++t) {
    const std::uint32_t at = cs.a.raw(t);
    if (at == 0) continue;
    const Fp h = h_coeff(cs, n - t, stats);
    acc = m.add(acc, m.mul(at, h.value()));
    if (stats != nullptr) stats->field_ops += 2;
  }
  return Fp(m, acc);
}

std::vector<std::uint32_t> f_range(const CompiledSeries& cs, std::uint64_t n0, std::uint64_t n1, unsigned threads) {
  if (n0 > n1) throw std::invalid_argument("empty range: n0 > n1");
  if (n1 - n0 >= kMaxRangeLength) throw CapExceeded("range longer than " + std::to_string(kMaxRangeLength));
  const PrimeModulus m = cs.p;
  const std::uint64_t span = cs.a.is_zero() ? 0 : cs.a.size() - 1;
  const std::uint64_t m0 = n0 > span ? n0 - span : 0;
  const std::size_t count = static_cast<std::size_t>(n1 - m0 + 1);

  std::vector<std::uint32_t> h(count, 0);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) h[i] = h_coeff(cs, BigIndex(m0 + i)).value();
  };
  if (!cs.a.is_zero()) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
      work(0, count);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (count + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
        if (lo < hi) pool.emplace_back(work, lo, hi);
      }
      for (auto& th : pool) th.join();
    }
  }

  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(n1 - n0 + 1));
  for (std::uint64_t n = n0; n <= n1; ++n) {
    std::uint32_t acc = n < cs.c.size() ? cs.c.raw(static_cast<std::size_t>(n)) : 0;
    for (std::uint64_t t = 0; t < cs.a.size() && t <= n; ++t) {
      acc = m.add(acc, m.mul(cs.a.raw(static_cast<std::size_t>(t)), h[static_cast<std::size_t>(n - t - m0)]));
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace algser

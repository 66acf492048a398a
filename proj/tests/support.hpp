#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "algser/bipoly.hpp"
#include "algser/polyring.hpp"

namespace algser::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

/// Random polynomial of degree < max_len (possibly zero).
inline PolyFp random_poly(PrimeModulus m, std::size_t max_len) {
  std::vector<std::uint32_t> c(uniform(0, max_len));
  for (auto& x : c) x = static_cast<std::uint32_t>(uniform(0, m.value() - 1));
  return PolyFp(m, std::move(c));
}

inline PolyFp random_nonzero_poly(PrimeModulus m, std::size_t max_len) {
  for (;;) {
    PolyFp a = random_poly(m, max_len);
    if (!a.is_zero()) return a;
  }
}

/// 0, then the Catalan numbers C_0, C_1, ...: coefficients of the root of
/// y = y^2 + x with f_0 = 0.
inline std::vector<BigInt> catalan_series(std::size_t n) {
  std::vector<BigInt> cat{1};
  while (cat.size() + 1 < n) {
    BigInt next = 0;
    const std::size_t k = cat.size();
    for (std::size_t i = 0; i < k; ++i) next += cat[i] * cat[k - 1 - i];
    cat.push_back(next);
  }
  std::vector<BigInt> out{0};
  for (std::size_t i = 0; out.size() < n; ++i) out.push_back(cat[i]);
  out.resize(n);
  return out;
}

inline std::vector<std::uint32_t> catalan_mod(std::uint32_t p, std::size_t n) {
  std::vector<std::uint32_t> out;
  for (const auto& c : catalan_series(n)) out.push_back(static_cast<std::uint32_t>(c % p));
  return out;
}

inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> polys{"y^2 - y + x", "y^2 - x^2", "(1+x)*y^2 + y + x", "y^3 + x*y + x^2",
                                              "y - 1 - x*y^2"};
  return polys;
}

inline const std::vector<std::uint32_t>& corpus_primes() {
  static const std::vector<std::uint32_t> primes{2, 3, 5};
  return primes;
}

inline BiPolyFp equation(const std::string& text, std::uint32_t p) {
  return reduce_mod_p(content_normalize(parse_bipoly(text)), PrimeModulus(p));
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace algser::test

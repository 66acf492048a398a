#include "algser/ffield.hpp"

#include <stdexcept>
#include <string>

namespace algser {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint32_t p) : p_(p) {
  if (p < 2 || p > kMax || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime in [2, 65536]");
  }
}

std::uint32_t PrimeModulus::reduce_signed(std::int64_t x) const noexcept {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeModulus::inv(std::uint32_t a) const {
  a %= p_;
  if (a == 0) throw std::domain_error("inversion of zero in F_p");
  std::int64_t r0 = p_, r1 = a;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return reduce_signed(t0);
}

std::uint32_t PrimeModulus::pow(std::uint32_t a, std::uint64_t k) const noexcept {
  std::uint32_t base = a % p_;
  std::uint32_t result = 1 % p_;
  while (k != 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

void Fp::check(const Fp& o) const {
  if (!(m_ == o.m_)) {
    throw std::invalid_argument("modulus mismatch: " + std::to_string(m_.value()) + " vs " +
                                std::to_string(o.m_.value()));
  }
}

Fp& Fp::operator+=(const Fp& o) {
  check(o);
  v_ = m_.add(v_, o.v_);
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  check(o);
  v_ = m_.sub(v_, o.v_);
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  check(o);
  v_ = m_.mul(v_, o.v_);
  return *this;
}

Fp& Fp::operator/=(const Fp& o) {
  check(o);
  v_ = m_.mul(v_, m_.inv(o.v_));
  return *this;
}

Fp inv(const Fp& a) { return Fp(a.modulus(), a.modulus().inv(a.value())); }

Fp pow(const Fp& a, std::uint64_t k) { return Fp(a.modulus(), a.modulus().pow(a.value(), k)); }

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.value(); }

}  // namespace algser

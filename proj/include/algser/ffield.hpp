#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace algser {

/// A prime p with 2 <= p <= 2^16. Products of two residues fit in 32 bits,
/// and sums of up to 2^32 such products fit in 64 bits.
class PrimeModulus {
 public:
  static constexpr std::uint32_t kMax = 1u << 16;

  /// Throws std::invalid_argument unless p is a prime in [2, kMax].
  explicit PrimeModulus(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }

  std::uint32_t reduce(std::uint64_t x) const noexcept { return static_cast<std::uint32_t>(x % p_); }
  std::uint32_t reduce_signed(std::int64_t x) const noexcept;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Extended Euclid. Throws std::domain_error on zero.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const noexcept;

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// An element of F_p. Carries its modulus; mixing moduli throws
/// std::invalid_argument.
class Fp {
 public:
  Fp(PrimeModulus m, std::uint64_t value) : m_(m), v_(m.reduce(value)) {}
  static Fp from_signed(PrimeModulus m, std::int64_t value) { return Fp(m, m.reduce_signed(value)); }
  static Fp zero(PrimeModulus m) { return Fp(m, 0); }
  static Fp one(PrimeModulus m) { return Fp(m, 1); }

  std::uint32_t value() const noexcept { return v_; }
  PrimeModulus modulus() const noexcept { return m_; }
  bool is_zero() const noexcept { return v_ == 0; }

  Fp operator-() const { return Fp(m_, m_.neg(v_)); }
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o);

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp&, const Fp&) = default;

 private:
  void check(const Fp& o) const;

  PrimeModulus m_;
  std::uint32_t v_;
};

Fp inv(const Fp& a);
/// Square-and-multiply; 0^0 = 1.
Fp pow(const Fp& a, std::uint64_t k);

std::ostream& operator<<(std::ostream& os, const Fp& a);

}  // namespace algser

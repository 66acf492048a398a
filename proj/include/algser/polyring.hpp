#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algser/ffield.hpp"

namespace algser {

/// Polynomial degree; the zero polynomial has degree kMinusInfinity, which
/// compares below every natural number.
using Degree = std::int64_t;
inline constexpr Degree kMinusInfinity = std::numeric_limits<Degree>::min();

/// Largest truncation precision a SeriesTrunc may reach through Frobenius
/// substitution before CapExceeded is thrown.
inline constexpr std::size_t kDefaultPrecisionCap = std::size_t{1} << 20;

/// Largest number of stored coefficients a PolyFp may reach through
/// exponent spreading.
inline constexpr std::size_t kPolySizeCap = std::size_t{1} << 24;

/// p-adic digits of n, least significant first; n = 0 gives {0}.
std::vector<std::uint32_t> p_adic_digits(std::uint64_t n, std::uint32_t p);

/// Dense univariate polynomial over F_p. Normalized: the highest stored
/// coefficient is nonzero, or nothing is stored (zero polynomial).
class PolyFp {
 public:
  explicit PolyFp(PrimeModulus m) : m_(m) {}
  /// Coefficients of x^0, x^1, ...; each is reduced mod p.
  PolyFp(PrimeModulus m, std::vector<std::uint32_t> coeffs);

  static PolyFp constant(PrimeModulus m, std::uint32_t c) { return monomial(m, c, 0); }
  static PolyFp monomial(PrimeModulus m, std::uint32_t c, std::size_t exponent);
  /// Signed coefficients, constant term first. Convenient for literals.
  static PolyFp from_signed(PrimeModulus m, std::initializer_list<std::int64_t> coeffs);

  PrimeModulus modulus() const noexcept { return m_; }
  bool is_zero() const noexcept { return c_.empty(); }
  Degree degree() const noexcept { return c_.empty() ? kMinusInfinity : static_cast<Degree>(c_.size()) - 1; }
  /// Number of stored coefficients (degree + 1, or 0).
  std::size_t size() const noexcept { return c_.size(); }
  std::span<const std::uint32_t> coeffs() const noexcept { return c_; }
  std::uint32_t raw(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Fp coeff(std::size_t i) const { return Fp(m_, raw(i)); }
  Fp leading() const { return coeff(c_.empty() ? 0 : c_.size() - 1); }
  /// Smallest exponent with a nonzero coefficient. Throws std::domain_error on zero.
  std::size_t order() const;

  PolyFp operator-() const;
  PolyFp& operator+=(const PolyFp& o);
  PolyFp& operator-=(const PolyFp& o);
  PolyFp& operator*=(const PolyFp& o);
  friend PolyFp operator+(PolyFp a, const PolyFp& b) { return a += b; }
  friend PolyFp operator-(PolyFp a, const PolyFp& b) { return a -= b; }
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  friend bool operator==(const PolyFp&, const PolyFp&) = default;

  PolyFp scaled(std::uint32_t s) const;
  PolyFp scaled(const Fp& s) const;
  /// Multiplication by x^k.
  PolyFp shifted(std::size_t k) const;

  /// Descending terms, e.g. "x^2 + 2*x + 1"; "0" for zero.
  std::string to_string() const;

 private:
  void check(const PolyFp& o) const;
  void normalize();

  PrimeModulus m_;
  std::vector<std::uint32_t> c_;
};

/// (q, r) with a = q*b + r and deg r < deg b. Throws std::domain_error if b = 0.
std::pair<PolyFp, PolyFp> divrem(const PolyFp& a, const PolyFp& b);
/// a / b, requiring zero remainder (throws InternalDefect otherwise).
PolyFp div_exact(const PolyFp& a, const PolyFp& b);
/// Monic gcd; gcd(0, 0) = 0.
PolyFp gcd(const PolyFp& a, const PolyFp& b);
PolyFp monic(const PolyFp& a);
PolyFp pow(const PolyFp& a, std::uint64_t k);

/// S_r: coefficient n of the result is coefficient p*n + r of a.
PolyFp section(const PolyFp& a, std::uint32_t r);
/// a(x^{p^i}) by exponent spreading.
PolyFp frobenius_subst(const PolyFp& a, unsigned i);
/// [x^n]u computed as the constant term of S_{n_l} ... S_{n_0} u.
Fp digit_coeff_extract(const PolyFp& u, std::uint64_t n);

/// Laurent polynomial: coefficient of x^{lo + i} at position i. Normalized so
/// the first and last stored coefficients are nonzero (empty for zero).
class LaurentPolyFp {
 public:
  explicit LaurentPolyFp(PrimeModulus m) : m_(m) {}
  LaurentPolyFp(PrimeModulus m, std::int64_t lo, std::vector<std::uint32_t> coeffs);
  explicit LaurentPolyFp(const PolyFp& p);

  PrimeModulus modulus() const noexcept { return m_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Lowest exponent present (0 for zero).
  std::int64_t lo() const noexcept { return lo_; }
  /// Highest exponent present; kMinusInfinity for zero.
  Degree hi() const noexcept { return c_.empty() ? kMinusInfinity : lo_ + static_cast<std::int64_t>(c_.size()) - 1; }
  std::span<const std::uint32_t> coeffs() const noexcept { return c_; }
  std::uint32_t raw(std::int64_t exponent) const noexcept;
  bool is_polynomial() const noexcept { return c_.empty() || lo_ >= 0; }
  /// Throws InternalDefect if negative exponents are present.
  PolyFp to_poly() const;

  LaurentPolyFp operator-() const;
  LaurentPolyFp& operator+=(const LaurentPolyFp& o);
  LaurentPolyFp& operator-=(const LaurentPolyFp& o);
  friend LaurentPolyFp operator+(LaurentPolyFp a, const LaurentPolyFp& b) { return a += b; }
  friend LaurentPolyFp operator-(LaurentPolyFp a, const LaurentPolyFp& b) { return a -= b; }
  friend LaurentPolyFp operator*(const LaurentPolyFp& a, const LaurentPolyFp& b);
  friend bool operator==(const LaurentPolyFp&, const LaurentPolyFp&) = default;

  std::string to_string() const;

 private:
  void normalize();

  PrimeModulus m_;
  std::int64_t lo_ = 0;
  std::vector<std::uint32_t> c_;
};

/// (part with exponents < 0, part with exponents >= 0).
std::pair<LaurentPolyFp, PolyFp> laurent_split(const LaurentPolyFp& f);
LaurentPolyFp frobenius_subst(const LaurentPolyFp& a, unsigned i);

/// Power series known modulo x^N: exactly N coefficients, of x^0..x^{N-1}.
class SeriesTrunc {
 public:
  SeriesTrunc(PrimeModulus m, std::size_t precision) : m_(m), c_(precision, 0) {}
  /// Precision is coeffs.size(); entries reduced mod p.
  SeriesTrunc(PrimeModulus m, std::vector<std::uint32_t> coeffs);
  static SeriesTrunc from_poly(const PolyFp& p, std::size_t precision);

  PrimeModulus modulus() const noexcept { return m_; }
  std::size_t precision() const noexcept { return c_.size(); }
  std::span<const std::uint32_t> coeffs() const noexcept { return c_; }
  /// Throws std::out_of_range at or beyond the precision.
  Fp coeff(std::size_t i) const;
  std::uint32_t raw(std::size_t i) const { return c_.at(i); }
  bool is_zero() const noexcept;
  SeriesTrunc truncated(std::size_t precision) const;
  PolyFp to_poly() const { return PolyFp(m_, c_); }

  SeriesTrunc operator-() const;
  friend SeriesTrunc operator+(const SeriesTrunc& a, const SeriesTrunc& b);
  friend SeriesTrunc operator-(const SeriesTrunc& a, const SeriesTrunc& b);
  friend SeriesTrunc operator*(const SeriesTrunc& a, const SeriesTrunc& b);
  friend SeriesTrunc operator*(const PolyFp& a, const SeriesTrunc& b);
  friend bool operator==(const SeriesTrunc&, const SeriesTrunc&) = default;
  SeriesTrunc scaled(std::uint32_t s) const;

 private:
  PrimeModulus m_;
  std::vector<std::uint32_t> c_;
};

/// S_r on a truncated series; the result has precision ceil((N - r) / p).
SeriesTrunc section(const SeriesTrunc& f, std::uint32_t r);
/// f(x^{p^i}); precision grows to N * p^i. Throws CapExceeded beyond `cap`.
SeriesTrunc frobenius_subst(const SeriesTrunc& f, unsigned i, std::size_t cap = kDefaultPrecisionCap);
/// f(x^{p^i}) mod x^precision, for any precision <= N * p^i.
SeriesTrunc frobenius_subst_to(const SeriesTrunc& f, unsigned i, std::size_t precision);
/// 1/f to the precision of f. Throws std::domain_error if f(0) = 0.
SeriesTrunc series_inv(const SeriesTrunc& f);

}  // namespace algser

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "algser/ffield.hpp"
#include "algser/polyring.hpp"

namespace algser {

using BigInt = boost::multiprecision::cpp_int;

/// x^x_exp * y^y_exp. Ordered by (y_exp, x_exp), so the last entry of a term
/// map is the lexicographically greatest monomial.
struct Monomial {
  std::uint32_t x_exp = 0;
  std::uint32_t y_exp = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.y_exp <=> b.y_exp; c != 0) return c;
    return a.x_exp <=> b.x_exp;
  }
};

struct BiDegrees {
  std::uint32_t deg_x = 0;
  std::uint32_t deg_y = 0;
};

/// Bivariate polynomial with arbitrary-precision integer coefficients. No
/// zero coefficient is ever stored.
class BiPolyZ {
 public:
  using Terms = std::map<Monomial, BigInt>;

  BiPolyZ() = default;
  explicit BiPolyZ(Terms terms);
  static BiPolyZ constant(const BigInt& c);
  static BiPolyZ variable_x();
  static BiPolyZ variable_y();

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coeff(Monomial m) const;
  /// Throws std::domain_error on the zero polynomial.
  BiDegrees degrees() const;

  BiPolyZ operator-() const;
  friend BiPolyZ operator+(const BiPolyZ& a, const BiPolyZ& b);
  friend BiPolyZ operator-(const BiPolyZ& a, const BiPolyZ& b);
  friend BiPolyZ operator*(const BiPolyZ& a, const BiPolyZ& b);
  friend bool operator==(const BiPolyZ&, const BiPolyZ&) = default;

  /// Canonical text: terms by (y-exponent desc, x-exponent desc), explicit
  /// '*', '^' only for exponents >= 2. "0" for zero.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Largest exponent (and resulting degree) the parser accepts.
inline constexpr std::uint32_t kMaxParsedDegree = 1u << 16;

/// Parses the expression grammar
///   expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
///   factor := atom ('^' natural)? ; atom := integer | 'x' | 'y' | '(' expr ')'
/// with an optional unary minus before any term. Throws ParseError.
BiPolyZ parse_bipoly(std::string_view text);

/// Divides out the gcd of the coefficients and makes the coefficient of the
/// greatest monomial (by (y, x)) positive. Throws std::domain_error on zero.
BiPolyZ content_normalize(const BiPolyZ& p);

/// Bivariate polynomial over F_p. No zero coefficient is ever stored.
class BiPolyFp {
 public:
  using Terms = std::map<Monomial, std::uint32_t>;

  explicit BiPolyFp(PrimeModulus m) : m_(m) {}
  BiPolyFp(PrimeModulus m, Terms terms);
  /// Sum of ys[i](x) * y^i.
  static BiPolyFp from_y_coefficients(PrimeModulus m, std::span<const PolyFp> ys);

  PrimeModulus modulus() const noexcept { return m_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::uint32_t coeff(Monomial mono) const;

  std::string to_string() const;
  friend bool operator==(const BiPolyFp&, const BiPolyFp&) = default;

 private:
  PrimeModulus m_;
  Terms terms_;
};

/// Coefficientwise reduction. Throws InternalDefect if the result is zero,
/// which cannot happen for content-normalized input.
BiPolyFp reduce_mod_p(const BiPolyZ& p, PrimeModulus m);

/// Maximal x- and y-exponents. Throws std::domain_error on zero.
BiDegrees degrees(const BiPolyFp& e);

/// a_0..a_d with a_i = [y^i]E; a_d != 0. Throws std::domain_error on zero.
std::vector<PolyFp> y_coefficients(const BiPolyFp& e);

/// E(x, f(x)) to the precision of f, by Horner's rule in y.
SeriesTrunc eval_at_series(const BiPolyFp& e, const SeriesTrunc& f);

}  // namespace algser

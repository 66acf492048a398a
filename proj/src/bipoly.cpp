#include "algser/bipoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "algser/errors.hpp"

namespace algser {

namespace {

void drop_zeros(BiPolyZ::Terms& t) {
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
}

// Shared printer for integer and residue coefficients.
template <class Coeff>
void print_term(std::ostringstream& os, bool first, const Monomial& mono, const Coeff& c) {
  const bool negative = c < 0;
  const Coeff mag = negative ? Coeff(-c) : c;
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  const bool constant = mono.x_exp == 0 && mono.y_exp == 0;
  bool need_star = false;
  if (mag != 1 || constant) {
    os << mag;
    need_star = true;
  }
  auto var = [&](char name, std::uint32_t e) {
    if (e == 0) return;
    if (need_star) os << "*";
    os << name;
    if (e >= 2) os << "^" << e;
    need_star = true;
  };
  var('x', mono.x_exp);
  var('y', mono.y_exp);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  BiPolyZ parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty expression");
    BiPolyZ result = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPolyZ signed_term() {
    if (accept('-')) return -term();
    return term();
  }

  BiPolyZ expr() {
    BiPolyZ acc = signed_term();
    for (;;) {
      if (accept('+')) {
        acc = acc + signed_term();
      } else if (accept('-')) {
        acc = acc - signed_term();
      } else {
        return acc;
      }
    }
  }

  BiPolyZ term() {
    BiPolyZ acc = factor();
    while (accept('*')) {
      BiPolyZ rhs = factor();
      if (!acc.is_zero() && !rhs.is_zero()) {
        const auto a = acc.degrees(), b = rhs.degrees();
        if (a.deg_x + b.deg_x > kMaxParsedDegree || a.deg_y + b.deg_y > kMaxParsedDegree) fail("exponent overflow");
      }
      acc = acc * rhs;
    }
    return acc;
  }

  BiPolyZ factor() {
    BiPolyZ base = atom();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t k = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      k = k * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      ++pos_;
      if (k > kMaxParsedDegree) {
        pos_ = start;
        fail("exponent overflow");
      }
    }
    if (pos_ == start) fail("expected a natural exponent");
    if (!base.is_zero()) {
      const auto d = base.degrees();
      if (static_cast<std::uint64_t>(d.deg_x) * k > kMaxParsedDegree ||
          static_cast<std::uint64_t>(d.deg_y) * k > kMaxParsedDegree) {
        pos_ = start;
        fail("exponent overflow");
      }
    }
    BiPolyZ result = BiPolyZ::constant(1);
    BiPolyZ sq = base;
    while (k != 0) {
      if (k & 1) result = result * sq;
      k >>= 1;
      if (k != 0) sq = sq * sq;
    }
    return result;
  }

  BiPolyZ atom() {
    skip_ws();
    if (pos_ == s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return BiPolyZ::constant(BigInt(std::string(s_.substr(start, pos_ - start))));
    }
    if (c == 'x') {
      ++pos_;
      return BiPolyZ::variable_x();
    }
    if (c == 'y') {
      ++pos_;
      return BiPolyZ::variable_y();
    }
    if (c == '(') {
      ++pos_;
      BiPolyZ inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

// ---------------------------------------------------------------- BiPolyZ

BiPolyZ::BiPolyZ(Terms terms) : terms_(std::move(terms)) { drop_zeros(terms_); }

BiPolyZ BiPolyZ::constant(const BigInt& c) { return BiPolyZ(Terms{{Monomial{0, 0}, c}}); }
BiPolyZ BiPolyZ::variable_x() { return BiPolyZ(Terms{{Monomial{1, 0}, 1}}); }
BiPolyZ BiPolyZ::variable_y() { return BiPolyZ(Terms{{Monomial{0, 1}, 1}}); }

BigInt BiPolyZ::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BiDegrees BiPolyZ::degrees() const {
  if (terms_.empty()) throw std::domain_error("degrees of the zero polynomial");
  BiDegrees d;
  for (const auto& [m, c] : terms_) {
    d.deg_x = std::max(d.deg_x, m.x_exp);
    d.deg_y = std::max(d.deg_y, m.y_exp);
  }
  return d;
}

BiPolyZ BiPolyZ::operator-() const {
  BiPolyZ r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BiPolyZ operator+(const BiPolyZ& a, const BiPolyZ& b) {
  BiPolyZ::Terms t = a.terms_;
  for (const auto& [m, c] : b.terms_) t[m] += c;
  return BiPolyZ(std::move(t));
}

BiPolyZ operator-(const BiPolyZ& a, const BiPolyZ& b) { return a + (-b); }

BiPolyZ operator*(const BiPolyZ& a, const BiPolyZ& b) {
  BiPolyZ::Terms t;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) t[Monomial{ma.x_exp + mb.x_exp, ma.y_exp + mb.y_exp}] += ca * cb;
  }
  return BiPolyZ(std::move(t));
}

std::string BiPolyZ::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    print_term(os, first, it->first, it->second);
    first = false;
  }
  return os.str();
}

BiPolyZ parse_bipoly(std::string_view text) { return Parser(text).parse(); }

BiPolyZ content_normalize(const BiPolyZ& p) {
  if (p.is_zero()) throw std::domain_error("content of the zero polynomial");
  BigInt g = 0;
  for (const auto& [m, c] : p.terms()) g = boost::multiprecision::gcd(g, c);
  if (g < 0) g = -g;
  if (p.terms().rbegin()->second < 0) g = -g;
  BiPolyZ::Terms t;
  for (const auto& [m, c] : p.terms()) t.emplace(m, c / g);
  return BiPolyZ(std::move(t));
}

// --------------------------------------------------------------- BiPolyFp

BiPolyFp::BiPolyFp(PrimeModulus m, Terms terms) : m_(m), terms_(std::move(terms)) {
  for (auto& [mono, c] : terms_) c = m_.reduce(c);
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

BiPolyFp BiPolyFp::from_y_coefficients(PrimeModulus m, std::span<const PolyFp> ys) {
  Terms t;
  for (std::size_t j = 0; j < ys.size(); ++j) {
    for (std::size_t i = 0; i < ys[j].size(); ++i) {
      t[Monomial{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}] = ys[j].coeffs()[i];
    }
  }
  return BiPolyFp(m, std::move(t));
}

std::uint32_t BiPolyFp::coeff(Monomial mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? 0 : it->second;
}

std::string BiPolyFp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    print_term(os, first, it->first, static_cast<std::int64_t>(it->second));
    first = false;
  }
  return os.str();
}

BiPolyFp reduce_mod_p(const BiPolyZ& p, PrimeModulus m) {
  BiPolyFp::Terms t;
  const BigInt pm = m.value();
  for (const auto& [mono, c] : p.terms()) {
    BigInt r = c % pm;
    if (r < 0) r += pm;
    t.emplace(mono, static_cast<std::uint32_t>(r));
  }
  BiPolyFp e(m, std::move(t));
  if (e.is_zero() && !p.is_zero()) {
    throw InternalDefect("reduction mod p vanished; input was not content-normalized");
  }
  return e;
}

BiDegrees degrees(const BiPolyFp& e) {
  if (e.is_zero()) throw std::domain_error("degrees of the zero polynomial");
  BiDegrees d;
  for (const auto& [m, c] : e.terms()) {
    d.deg_x = std::max(d.deg_x, m.x_exp);
    d.deg_y = std::max(d.deg_y, m.y_exp);
  }
  return d;
}

std::vector<PolyFp> y_coefficients(const BiPolyFp& e) {
  const BiDegrees d = degrees(e);
  std::vector<std::vector<std::uint32_t>> raw(d.deg_y + 1);
  for (const auto& [m, c] : e.terms()) {
    auto& row = raw[m.y_exp];
    if (row.size() <= m.x_exp) row.resize(m.x_exp + 1, 0);
    row[m.x_exp] = c;
  }
  std::vector<PolyFp> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(e.modulus(), std::move(r));
  return out;
}

SeriesTrunc eval_at_series(const BiPolyFp& e, const SeriesTrunc& f) {
  const std::size_t n = f.precision();
  if (e.is_zero()) return SeriesTrunc(f.modulus(), n);
  const auto a = y_coefficients(e);
  SeriesTrunc acc = SeriesTrunc::from_poly(a.back(), n);
  for (std::size_t i = a.size() - 1; i-- > 0;) acc = acc * f + SeriesTrunc::from_poly(a[i], n);
  return acc;
}

}  // namespace algser

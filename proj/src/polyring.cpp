#include "algser/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "algser/errors.hpp"
#include "algser/simd/kernels.hpp"

namespace algser {

namespace {

void require_same(PrimeModulus a, PrimeModulus b) {
  if (!(a == b)) throw std::invalid_argument("modulus mismatch in polynomial arithmetic");
}

void trim(std::vector<std::uint32_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Product of a and b truncated to `limit` coefficients.
std::vector<std::uint32_t> multiply(PrimeModulus m, std::span<const std::uint32_t> a,
                                    std::span<const std::uint32_t> b, std::size_t limit) {
  if (a.empty() || b.empty() || limit == 0) return {};
  const std::size_t n = std::min(a.size() + b.size() - 1, limit);
  std::vector<std::uint64_t> acc(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == 0) continue;
    const std::size_t len = std::min(b.size(), n - i);
    simd::scale_accumulate(std::span(acc).subspan(i, len), a[i], b.first(len));
  }
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = m.reduce(acc[i]);
  return out;
}

std::size_t checked_power(std::uint32_t p, unsigned i, std::size_t cap) {
  std::size_t q = 1;
  for (unsigned t = 0; t < i; ++t) {
    if (q > cap / p) throw CapExceeded("p^i exceeds the size cap in Frobenius substitution");
    q *= p;
  }
  return q;
}

void append_term(std::ostringstream& os, bool& first, std::uint32_t c, std::int64_t e) {
  if (c == 0) return;
  if (!first) os << " + ";
  first = false;
  if (e == 0) {
    os << c;
    return;
  }
  if (c != 1) os << c << "*";
  os << "x";
  if (e != 1) os << "^" << e;
}

}  // namespace

std::vector<std::uint32_t> p_adic_digits(std::uint64_t n, std::uint32_t p) {
  std::vector<std::uint32_t> digits;
  do {
    digits.push_back(static_cast<std::uint32_t>(n % p));
    n /= p;
  } while (n != 0);
  return digits;
}

// ---------------------------------------------------------------- PolyFp

PolyFp::PolyFp(PrimeModulus m, std::vector<std::uint32_t> coeffs) : m_(m), c_(std::move(coeffs)) {
  for (auto& x : c_) x = m_.reduce(x);
  normalize();
}

PolyFp PolyFp::monomial(PrimeModulus m, std::uint32_t c, std::size_t exponent) {
  std::vector<std::uint32_t> v(exponent + 1, 0);
  v[exponent] = c;
  return PolyFp(m, std::move(v));
}

PolyFp PolyFp::from_signed(PrimeModulus m, std::initializer_list<std::int64_t> coeffs) {
  std::vector<std::uint32_t> v;
  v.reserve(coeffs.size());
  for (auto x : coeffs) v.push_back(m.reduce_signed(x));
  return PolyFp(m, std::move(v));
}

void PolyFp::normalize() { trim(c_); }

void PolyFp::check(const PolyFp& o) const { require_same(m_, o.m_); }

std::size_t PolyFp::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return i;
  }
  throw std::domain_error("order of the zero polynomial");
}

PolyFp PolyFp::operator-() const {
  PolyFp r = *this;
  for (auto& x : r.c_) x = m_.neg(x);
  return r;
}

PolyFp& PolyFp::operator+=(const PolyFp& o) {
  check(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = m_.add(c_[i], o.c_[i]);
  normalize();
  return *this;
}

PolyFp& PolyFp::operator-=(const PolyFp& o) {
  check(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = m_.sub(c_[i], o.c_[i]);
  normalize();
  return *this;
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  a.check(b);
  PolyFp r(a.m_);
  r.c_ = multiply(a.m_, a.c_, b.c_, a.c_.size() + b.c_.size());
  r.normalize();
  return r;
}

PolyFp& PolyFp::operator*=(const PolyFp& o) { return *this = *this * o; }

PolyFp PolyFp::scaled(std::uint32_t s) const {
  PolyFp r = *this;
  s = m_.reduce(s);
  for (auto& x : r.c_) x = m_.mul(x, s);
  r.normalize();
  return r;
}

PolyFp PolyFp::scaled(const Fp& s) const {
  require_same(m_, s.modulus());
  return scaled(s.value());
}

PolyFp PolyFp::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  PolyFp r(m_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

std::string PolyFp::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) append_term(os, first, c_[i], static_cast<std::int64_t>(i));
  return os.str();
}

std::pair<PolyFp, PolyFp> divrem(const PolyFp& a, const PolyFp& b) {
  require_same(a.modulus(), b.modulus());
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const PrimeModulus m = a.modulus();
  if (a.size() < b.size()) return {PolyFp(m), a};
  std::vector<std::uint32_t> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<std::uint32_t> quo(a.size() - b.size() + 1, 0);
  const auto bc = b.coeffs();
  const std::uint32_t lead_inv = m.inv(bc.back());
  for (std::size_t i = quo.size(); i-- > 0;) {
    const std::uint32_t q = m.mul(rem[i + bc.size() - 1], lead_inv);
    quo[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[i + j] = m.sub(rem[i + j], m.mul(q, bc[j]));
  }
  return {PolyFp(m, std::move(quo)), PolyFp(m, std::move(rem))};
}

PolyFp div_exact(const PolyFp& a, const PolyFp& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw InternalDefect("inexact polynomial division");
  return q;
}

PolyFp monic(const PolyFp& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.modulus().inv(a.coeffs().back()));
}

PolyFp gcd(const PolyFp& a, const PolyFp& b) {
  PolyFp x = a, y = b;
  while (!y.is_zero()) {
    PolyFp r = divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

PolyFp pow(const PolyFp& a, std::uint64_t k) {
  PolyFp result = PolyFp::constant(a.modulus(), 1);
  PolyFp base = a;
  while (k != 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

PolyFp section(const PolyFp& a, std::uint32_t r) {
  const std::uint32_t p = a.modulus().value();
  if (r >= p) throw std::out_of_range("section digit out of range");
  std::vector<std::uint32_t> out;
  const auto c = a.coeffs();
  for (std::size_t i = r; i < c.size(); i += p) out.push_back(c[i]);
  return PolyFp(a.modulus(), std::move(out));
}

PolyFp frobenius_subst(const PolyFp& a, unsigned i) {
  if (a.is_zero()) return a;
  const std::size_t q = checked_power(a.modulus().value(), i, kPolySizeCap);
  if (a.size() - 1 > (kPolySizeCap - 1) / q) throw CapExceeded("Frobenius substitution exceeds the polynomial size cap");
  std::vector<std::uint32_t> out((a.size() - 1) * q + 1, 0);
  for (std::size_t n = 0; n < a.size(); ++n) out[n * q] = a.coeffs()[n];
  return PolyFp(a.modulus(), std::move(out));
}

Fp digit_coeff_extract(const PolyFp& u, std::uint64_t n) {
  PolyFp w = u;
  for (std::uint32_t digit : p_adic_digits(n, u.modulus().value())) w = section(w, digit);
  return w.coeff(0);
}

// ---------------------------------------------------------- LaurentPolyFp

LaurentPolyFp::LaurentPolyFp(PrimeModulus m, std::int64_t lo, std::vector<std::uint32_t> coeffs)
    : m_(m), lo_(lo), c_(std::move(coeffs)) {
  for (auto& x : c_) x = m_.reduce(x);
  normalize();
}

LaurentPolyFp::LaurentPolyFp(const PolyFp& p)
    : LaurentPolyFp(p.modulus(), 0, std::vector<std::uint32_t>(p.coeffs().begin(), p.coeffs().end())) {}

void LaurentPolyFp::normalize() {
  trim(c_);
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    lo_ += static_cast<std::int64_t>(lead);
  }
  if (c_.empty()) lo_ = 0;
}

std::uint32_t LaurentPolyFp::raw(std::int64_t exponent) const noexcept {
  if (c_.empty() || exponent < lo_ || exponent > hi()) return 0;
  return c_[static_cast<std::size_t>(exponent - lo_)];
}

PolyFp LaurentPolyFp::to_poly() const {
  if (!is_polynomial()) throw InternalDefect("Laurent polynomial has negative exponents");
  if (c_.empty()) return PolyFp(m_);
  std::vector<std::uint32_t> v(static_cast<std::size_t>(lo_), 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return PolyFp(m_, std::move(v));
}

LaurentPolyFp LaurentPolyFp::operator-() const {
  LaurentPolyFp r = *this;
  for (auto& x : r.c_) x = m_.neg(x);
  return r;
}

LaurentPolyFp& LaurentPolyFp::operator+=(const LaurentPolyFp& o) {
  require_same(m_, o.m_);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const std::int64_t lo = std::min(lo_, o.lo_);
  const std::int64_t hi = std::max(this->hi(), o.hi());
  std::vector<std::uint32_t> v(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[static_cast<std::size_t>(lo_ - lo) + i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    auto& slot = v[static_cast<std::size_t>(o.lo_ - lo) + i];
    slot = m_.add(slot, o.c_[i]);
  }
  lo_ = lo;
  c_ = std::move(v);
  normalize();
  return *this;
}

LaurentPolyFp& LaurentPolyFp::operator-=(const LaurentPolyFp& o) { return *this += -o; }

LaurentPolyFp operator*(const LaurentPolyFp& a, const LaurentPolyFp& b) {
  require_same(a.m_, b.m_);
  if (a.is_zero() || b.is_zero()) return LaurentPolyFp(a.m_);
  return LaurentPolyFp(a.m_, a.lo_ + b.lo_, multiply(a.m_, a.c_, b.c_, a.c_.size() + b.c_.size()));
}

std::string LaurentPolyFp::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) append_term(os, first, c_[i], lo_ + static_cast<std::int64_t>(i));
  return os.str();
}

std::pair<LaurentPolyFp, PolyFp> laurent_split(const LaurentPolyFp& f) {
  const PrimeModulus m = f.modulus();
  if (f.is_zero()) return {LaurentPolyFp(m), PolyFp(m)};
  std::vector<std::uint32_t> neg, nonneg;
  for (std::int64_t e = f.lo(); e <= f.hi(); ++e) {
    if (e < 0) {
      neg.push_back(f.raw(e));
    } else {
      nonneg.push_back(f.raw(e));
    }
  }
  if (f.lo() > 0) nonneg.insert(nonneg.begin(), static_cast<std::size_t>(f.lo()), 0);
  return {LaurentPolyFp(m, f.lo(), std::move(neg)), PolyFp(m, std::move(nonneg))};
}

LaurentPolyFp frobenius_subst(const LaurentPolyFp& a, unsigned i) {
  if (a.is_zero()) return a;
  const std::size_t q = checked_power(a.modulus().value(), i, kPolySizeCap);
  const std::size_t span = static_cast<std::size_t>(a.hi() - a.lo());
  if (span > (kPolySizeCap - 1) / q) throw CapExceeded("Frobenius substitution exceeds the polynomial size cap");
  std::vector<std::uint32_t> out(span * q + 1, 0);
  for (std::size_t n = 0; n <= span; ++n) out[n * q] = a.coeffs()[n];
  return LaurentPolyFp(a.modulus(), a.lo() * static_cast<std::int64_t>(q), std::move(out));
}

// ------------------------------------------------------------ SeriesTrunc

SeriesTrunc::SeriesTrunc(PrimeModulus m, std::vector<std::uint32_t> coeffs) : m_(m), c_(std::move(coeffs)) {
  for (auto& x : c_) x = m_.reduce(x);
}

SeriesTrunc SeriesTrunc::from_poly(const PolyFp& p, std::size_t precision) {
  std::vector<std::uint32_t> v(precision, 0);
  for (std::size_t i = 0; i < precision && i < p.size(); ++i) v[i] = p.coeffs()[i];
  return SeriesTrunc(p.modulus(), std::move(v));
}

Fp SeriesTrunc::coeff(std::size_t i) const {
  if (i >= c_.size()) throw std::out_of_range("coefficient beyond series precision");
  return Fp(m_, c_[i]);
}

bool SeriesTrunc::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

SeriesTrunc SeriesTrunc::truncated(std::size_t precision) const {
  if (precision > c_.size()) throw std::invalid_argument("cannot raise series precision");
  return SeriesTrunc(m_, std::vector<std::uint32_t>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(precision)));
}

SeriesTrunc SeriesTrunc::operator-() const {
  SeriesTrunc r = *this;
  for (auto& x : r.c_) x = m_.neg(x);
  return r;
}

SeriesTrunc operator+(const SeriesTrunc& a, const SeriesTrunc& b) {
  require_same(a.m_, b.m_);
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<std::uint32_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a.m_.add(a.c_[i], b.c_[i]);
  return SeriesTrunc(a.m_, std::move(v));
}

SeriesTrunc operator-(const SeriesTrunc& a, const SeriesTrunc& b) { return a + (-b); }

SeriesTrunc operator*(const SeriesTrunc& a, const SeriesTrunc& b) {
  require_same(a.m_, b.m_);
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<std::uint32_t> v = multiply(a.m_, a.c_, b.c_, n);
  v.resize(n, 0);
  return SeriesTrunc(a.m_, std::move(v));
}

SeriesTrunc operator*(const PolyFp& a, const SeriesTrunc& b) {
  require_same(a.modulus(), b.m_);
  std::vector<std::uint32_t> v = multiply(b.m_, a.coeffs(), b.c_, b.precision());
  v.resize(b.precision(), 0);
  return SeriesTrunc(b.m_, std::move(v));
}

SeriesTrunc SeriesTrunc::scaled(std::uint32_t s) const {
  SeriesTrunc r = *this;
  s = m_.reduce(s);
  for (auto& x : r.c_) x = m_.mul(x, s);
  return r;
}

SeriesTrunc section(const SeriesTrunc& f, std::uint32_t r) {
  const std::uint32_t p = f.modulus().value();
  if (r >= p) throw std::out_of_range("section digit out of range");
  const std::size_t n = f.precision();
  const std::size_t out_n = n > r ? (n - r + p - 1) / p : 0;
  std::vector<std::uint32_t> v(out_n);
  for (std::size_t i = 0; i < out_n; ++i) v[i] = f.coeffs()[i * p + r];
  return SeriesTrunc(f.modulus(), std::move(v));
}

SeriesTrunc frobenius_subst(const SeriesTrunc& f, unsigned i, std::size_t cap) {
  const std::size_t q = checked_power(f.modulus().value(), i, cap);
  if (f.precision() > cap / q) throw CapExceeded("Frobenius substitution exceeds the precision cap");
  return frobenius_subst_to(f, i, f.precision() * q);
}

SeriesTrunc frobenius_subst_to(const SeriesTrunc& f, unsigned i, std::size_t precision) {
  std::size_t q = 1;
  for (unsigned t = 0; t < i && q < precision; ++t) q *= f.modulus().value();
  const bool undetermined = f.precision() == 0 ? precision > 0 : (q < precision && precision > f.precision() * q);
  if (undetermined) {
    throw std::invalid_argument("requested precision exceeds what the series determines");
  }
  std::vector<std::uint32_t> v(precision, 0);
  for (std::size_t n = 0; n * q < precision; ++n) v[n * q] = f.coeffs()[n];
  return SeriesTrunc(f.modulus(), std::move(v));
}

SeriesTrunc series_inv(const SeriesTrunc& f) {
  const PrimeModulus m = f.modulus();
  const std::size_t n = f.precision();
  if (n == 0) return f;
  if (f.coeffs()[0] == 0) throw std::domain_error("series inverse needs a nonzero constant term");
  const std::uint32_t inv0 = m.inv(f.coeffs()[0]);
  std::vector<std::uint32_t> g(n, 0);
  g[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    std::uint64_t acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += static_cast<std::uint64_t>(f.coeffs()[i]) * g[k - i];
    g[k] = m.neg(m.mul(m.reduce(acc), inv0));
  }
  return SeriesTrunc(m, std::move(g));
}

}  // namespace algser

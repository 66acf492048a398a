#include <doctest.h>

#include "algser/errors.hpp"
#include "algser/polyring.hpp"
#include "support.hpp"

using namespace algser;

namespace {

PolyFp P(std::uint32_t p, std::initializer_list<std::int64_t> c) { return PolyFp::from_signed(PrimeModulus(p), c); }

std::uint64_t ipow(std::uint64_t b, unsigned k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("polynomial arithmetic examples") {
  CHECK(P(2, {1, 1}) * P(2, {1, 1}) == P(2, {1, 0, 1}));
  auto [q, r] = divrem(P(3, {1, 0, 1}), P(3, {0, 1}));
  CHECK(q == P(3, {0, 1}));
  CHECK(r == P(3, {1}));
  CHECK((P(5, {2, 1}) + P(5, {3, 4})).is_zero());
  CHECK_THROWS_AS(divrem(P(3, {1}), PolyFp(PrimeModulus(3))), std::domain_error);
}

TEST_CASE("zero polynomial degree is below every natural") {
  const PolyFp zero(PrimeModulus(3));
  CHECK(zero.degree() == kMinusInfinity);
  CHECK(zero.degree() < 0);
  CHECK(P(3, {0, 0, 0}).is_zero());
  CHECK(P(3, {1, 2, 3}).degree() == 1);
}

TEST_CASE("divrem reconstructs the dividend") {
  for (std::uint32_t p : test::corpus_primes()) {
    const PrimeModulus m(p);
    for (int trial = 0; trial < 300; ++trial) {
      const PolyFp a = test::random_poly(m, 20);
      const PolyFp b = test::random_nonzero_poly(m, 8);
      auto [q, r] = divrem(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }
}

TEST_CASE("gcd is monic and divides both") {
  const PrimeModulus m(5);
  for (int trial = 0; trial < 300; ++trial) {
    const PolyFp g = test::random_nonzero_poly(m, 4);
    const PolyFp a = g * test::random_nonzero_poly(m, 6);
    const PolyFp b = g * test::random_nonzero_poly(m, 6);
    const PolyFp d = gcd(a, b);
    CHECK(d.leading().value() == 1);
    CHECK(divrem(a, d).second.is_zero());
    CHECK(divrem(b, d).second.is_zero());
    CHECK(divrem(d, monic(g)).second.is_zero());
  }
  CHECK(gcd(PolyFp(m), PolyFp(m)).is_zero());
  CHECK_THROWS_AS(div_exact(P(5, {1, 0, 1}), P(5, {0, 1})), InternalDefect);
}

TEST_CASE("section of polynomials") {
  CHECK(section(P(2, {0, 1, 1, 1}), 1) == P(2, {1, 1}));
  CHECK(section(P(3, {1, 0, 0, 1, 1}), 0) == P(3, {1, 1}));
  CHECK(section(PolyFp(PrimeModulus(5)), 3).is_zero());
  CHECK_THROWS_AS(section(P(3, {1}), 3), std::out_of_range);
}

TEST_CASE("section of series") {
  const PrimeModulus m2(2), m3(3);
  const SeriesTrunc a = section(SeriesTrunc(m2, {1, 1, 1, 1}), 0);
  CHECK(a.precision() == 2);
  CHECK(a == SeriesTrunc(m2, {1, 1}));
  const SeriesTrunc b = section(SeriesTrunc(m3, {0, 0, 1, 0, 0, 1}), 2);
  CHECK(b.precision() == 2);
  CHECK(b == SeriesTrunc(m3, {1, 1}));
  const SeriesTrunc z = section(SeriesTrunc(m3, 7), 1);
  CHECK(z.precision() == 2);
  CHECK(z.is_zero());
  CHECK_THROWS_AS(section(SeriesTrunc(m3, 4), 5), std::out_of_range);
}

TEST_CASE("section precision is ceil((N - r) / p)") {
  for (std::uint32_t p : test::corpus_primes()) {
    for (std::size_t n = 0; n < 40; ++n) {
      for (std::uint32_t r = 0; r < p; ++r) {
        const std::size_t expect = n > r ? (n - r + p - 1) / p : 0;
        CHECK(section(SeriesTrunc(PrimeModulus(p), n), r).precision() == expect);
      }
    }
  }
}

TEST_CASE("Frobenius substitution") {
  CHECK(frobenius_subst(P(2, {1, 1}), 1) == P(2, {1, 0, 1}));
  CHECK(frobenius_subst(P(3, {0, 1}), 2) == PolyFp::monomial(PrimeModulus(3), 1, 9));
  const SeriesTrunc f(PrimeModulus(2), {1, 0, 1, 1});
  CHECK(frobenius_subst(f, 0) == f);
  const SeriesTrunc g = frobenius_subst(f, 2);
  CHECK(g.precision() == 16);
  CHECK(g.raw(8) == 1);
  CHECK(g.raw(12) == 1);
  CHECK(g.raw(4) == 0);
  CHECK_THROWS_AS(frobenius_subst(SeriesTrunc(PrimeModulus(2), 1 << 10), 11), CapExceeded);
  CHECK(frobenius_subst_to(f, 1, 5) == SeriesTrunc(PrimeModulus(2), {1, 0, 0, 0, 1}));
}

TEST_CASE("series inverse") {
  const PrimeModulus m2(2), m3(3);
  CHECK(series_inv(SeriesTrunc(m2, {1, 1, 0, 0})) == SeriesTrunc(m2, {1, 1, 1, 1}));
  CHECK(series_inv(SeriesTrunc(m2, std::vector<std::uint32_t>{1})) == SeriesTrunc(m2, std::vector<std::uint32_t>{1}));
  CHECK(series_inv(SeriesTrunc(m3, {1, 2, 0})) == SeriesTrunc(m3, {1, 1, 1}));
  CHECK_THROWS_AS(series_inv(SeriesTrunc(m3, {0, 1})), std::domain_error);
  for (int trial = 0; trial < 200; ++trial) {
    const PrimeModulus m(5);
    std::vector<std::uint32_t> c(1 + test::uniform(0, 30));
    for (auto& x : c) x = static_cast<std::uint32_t>(test::uniform(0, 4));
    c[0] = 1 + static_cast<std::uint32_t>(test::uniform(0, 3));
    const SeriesTrunc f(m, c);
    std::vector<std::uint32_t> one(c.size(), 0);
    one[0] = 1;
    CHECK(f * series_inv(f) == SeriesTrunc(m, one));
  }
}

TEST_CASE("series precision is the minimum of the operands") {
  const PrimeModulus m(3);
  CHECK((SeriesTrunc(m, 4) + SeriesTrunc(m, 7)).precision() == 4);
  CHECK((SeriesTrunc(m, 9) * SeriesTrunc(m, 5)).precision() == 5);
  CHECK_THROWS_AS(SeriesTrunc(m, 3).coeff(3), std::out_of_range);
}

TEST_CASE("Laurent split") {
  const PrimeModulus m(3);
  auto [neg, pos] = laurent_split(LaurentPolyFp(m, -1, {1, 1, 1}));
  CHECK(neg == LaurentPolyFp(m, -1, {1}));
  CHECK(pos == P(3, {1, 1}));
  auto [neg2, pos2] = laurent_split(LaurentPolyFp(P(3, {2, 0, 1})));
  CHECK(neg2.is_zero());
  CHECK(pos2 == P(3, {2, 0, 1}));
  auto [neg3, pos3] = laurent_split(LaurentPolyFp(m, -2, {1, 2}));
  CHECK(neg3 == LaurentPolyFp(m, -2, {1, 2}));
  CHECK(pos3.is_zero());
  CHECK_THROWS_AS(LaurentPolyFp(m, -2, {1, 2}).to_poly(), InternalDefect);
}

TEST_CASE("Laurent arithmetic") {
  const PrimeModulus m(5);
  const LaurentPolyFp a(m, -2, {1, 0, 3});
  const LaurentPolyFp b(m, 1, {2});
  CHECK(a * b == LaurentPolyFp(m, -1, {2, 0, 1}));
  CHECK((a - a).is_zero());
  CHECK((a + b).hi() == 1);
  CHECK((a + b).lo() == -2);
  CHECK(frobenius_subst(a, 1) == LaurentPolyFp(m, -10, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3}));
}

TEST_CASE("digit coefficient extraction examples") {
  CHECK(digit_coeff_extract(P(2, {1, 0, 0, 1}), 3).value() == 1);
  CHECK(digit_coeff_extract(P(5, {4, 1}), 0).value() == 4);
  CHECK(digit_coeff_extract(PolyFp::monomial(PrimeModulus(3), 1, 5), 5).value() == 1);
}

TEST_CASE("p-adic digits") {
  CHECK(p_adic_digits(0, 7) == std::vector<std::uint32_t>{0});
  CHECK(p_adic_digits(5, 3) == std::vector<std::uint32_t>{2, 1});
  CHECK(p_adic_digits(8, 2) == std::vector<std::uint32_t>{0, 0, 0, 1});
}

TEST_CASE("printing") {
  CHECK(P(3, {1, 2, 1}).to_string() == "x^2 + 2*x + 1");
  CHECK(PolyFp(PrimeModulus(3)).to_string() == "0");
  CHECK(P(5, {0, 1}).to_string() == "x");
}

// ------------------------------------------------------------ properties

TEST_CASE("property: z^(p^k) equals z(x^(p^k))") {
  for (std::uint32_t p : test::corpus_primes()) {
    const PrimeModulus m(p);
    for (int trial = 0; trial < 1000; ++trial) {
      const PolyFp z = test::random_poly(m, 8);
      const unsigned k = 1 + static_cast<unsigned>(trial % 2);
      REQUIRE(pow(z, ipow(p, k)) == frobenius_subst(z, k));
    }
  }
}

TEST_CASE("property: sections are linear") {
  for (std::uint32_t p : test::corpus_primes()) {
    const PrimeModulus m(p);
    for (int trial = 0; trial < 1000; ++trial) {
      const PolyFp u = test::random_poly(m, 30), v = test::random_poly(m, 30);
      const auto a = static_cast<std::uint32_t>(test::uniform(0, p - 1));
      const auto b = static_cast<std::uint32_t>(test::uniform(0, p - 1));
      const auto r = static_cast<std::uint32_t>(test::uniform(0, p - 1));
      REQUIRE(section(u.scaled(a) + v.scaled(b), r) == section(u, r).scaled(a) + section(v, r).scaled(b));
    }
  }
}

TEST_CASE("property: product rule for sections") {
  for (std::uint32_t p : test::corpus_primes()) {
    const PrimeModulus m(p);
    for (int trial = 0; trial < 1000; ++trial) {
      const PolyFp u = test::random_poly(m, 25), v = test::random_poly(m, 25);
      const auto r = static_cast<std::uint32_t>(test::uniform(0, p - 1));
      PolyFp rhs(m);
      for (std::uint32_t s = 0; s < p; ++s) {
        for (std::uint32_t t = 0; t < p; ++t) {
          if ((s + t) % p != r) continue;
          rhs += (section(u, s) * section(v, t)).shifted((s + t) / p);
        }
      }
      REQUIRE(section(u * v, r) == rhs);
    }
  }
}

TEST_CASE("property: sections pass through Frobenius factors") {
  for (std::uint32_t p : test::corpus_primes()) {
    const PrimeModulus m(p);
    for (int trial = 0; trial < 1000; ++trial) {
      const PolyFp u = test::random_poly(m, 25), v = test::random_poly(m, 10);
      const auto r = static_cast<std::uint32_t>(test::uniform(0, p - 1));
      REQUIRE(section(u * frobenius_subst(v, 1), r) == section(u, r) * v);
    }
  }
}

TEST_CASE("property: coefficient extraction by iterated sections") {
  for (std::uint32_t p : test::corpus_primes()) {
    const PrimeModulus m(p);
    for (int trial = 0; trial < 10000; ++trial) {
      const PolyFp u = test::random_poly(m, 60);
      const std::uint64_t n = test::uniform(0, 80);
      REQUIRE(digit_coeff_extract(u, n).value() == u.raw(n));
    }
  }
}

TEST_CASE("property: some section of a nonzero polynomial is nonzero") {
  for (std::uint32_t p : test::corpus_primes()) {
    const PrimeModulus m(p);
    for (int trial = 0; trial < 1000; ++trial) {
      const PolyFp u = test::random_nonzero_poly(m, 30);
      bool found = false;
      for (std::uint32_t r = 0; r < p; ++r) found = found || !section(u, r).is_zero();
      REQUIRE(found);
      // The least significant digit of the lowest exponent is a witness.
      REQUIRE_FALSE(section(u, static_cast<std::uint32_t>(u.order() % p)).is_zero());
    }
  }
}

TEST_CASE("property: sections shrink degrees") {
  for (std::uint32_t p : test::corpus_primes()) {
    const PrimeModulus m(p);
    for (int trial = 0; trial < 1000; ++trial) {
      const PolyFp a = test::random_nonzero_poly(m, 50);
      for (std::uint32_t r = 0; r < p; ++r) REQUIRE(section(a, r).degree() <= a.degree() / static_cast<Degree>(p));
    }
  }
}

TEST_CASE("property: reconstruction from sections") {
  for (std::uint32_t p : test::corpus_primes()) {
    const PrimeModulus m(p);
    for (int trial = 0; trial < 1000; ++trial) {
      const PolyFp u = test::random_poly(m, 40);
      PolyFp sum(m);
      for (std::uint32_t r = 0; r < p; ++r) sum += frobenius_subst(section(u, r), 1).shifted(r);
      REQUIRE(sum == u);
    }
  }
}

TEST_CASE("property: series sections agree with polynomial sections") {
  for (std::uint32_t p : test::corpus_primes()) {
    const PrimeModulus m(p);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t n = test::uniform(1, 40);
      const PolyFp u = test::random_poly(m, n);
      const auto r = static_cast<std::uint32_t>(test::uniform(0, p - 1));
      const SeriesTrunc s = section(SeriesTrunc::from_poly(u, n), r);
      REQUIRE(s == SeriesTrunc::from_poly(section(u, r), s.precision()));
    }
  }
}

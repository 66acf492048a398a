#include <doctest.h>

#include <algorithm>
#include <regex>

#include "algser/automaton.hpp"
#include "algser/errors.hpp"
#include "algser/oracle.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace algser;

namespace {

CompiledSeries catalan(std::uint32_t p, std::size_t n = 64) {
  return compile_series(test::equation("y^2 - y + x", p), test::catalan_mod(p, n));
}

std::size_t count(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

std::vector<std::uint32_t> random_digits(std::uint32_t p) {
  std::vector<std::uint32_t> d(test::uniform(0, 24));
  for (auto& x : d) x = static_cast<std::uint32_t>(test::uniform(0, p - 1));
  return d;
}

}  // namespace

TEST_CASE("Catalan mod 2 automaton") {
  const CompiledSeries cs = catalan(2, 10);
  const Dfao d = build_dfao(cs);
  CHECK(d.offset == 0);
  CHECK(d.p == 2);
  CHECK(d.transitions.size() == d.size() * 2);
  for (std::uint64_t n = 1; n <= 4096; ++n) REQUIRE(run(d, n) == (test::is_power_of(n, 2) ? 1u : 0u));
  CHECK(run(d, 0) == 0);
}

TEST_CASE("zero series gives one absorbing state") {
  const CompiledSeries cs = compile_series(test::equation("y", 3), std::vector<std::uint32_t>{0, 0});
  const Dfao d = minimize(build_dfao(cs));
  REQUIRE(d.size() == 1);
  CHECK(d.outputs[0] == 0);
  CHECK(d.transitions == std::vector<std::uint32_t>{0, 0, 0});
}

TEST_CASE("state cap") {
  const CompiledSeries cs = catalan(3);
  CHECK_THROWS_AS(build_dfao(cs, 2), CapExceeded);
  CHECK_NOTHROW(build_dfao(cs));
}

TEST_CASE("fixture runs") {
  const Dfao d = test::catalan3_fixture();
  CHECK(run(d, 6) == 0);
  CHECK(run(d, 1) == 1);
  CHECK(run(d, 3) == 2);
  CHECK_THROWS_AS(run(d, 0), std::invalid_argument);
  CHECK(run_digits(d, std::vector<std::uint32_t>{2, 1}) == 0);
}

TEST_CASE("Catalan mod 3 automaton matches the fixture") {
  const CompiledSeries cs = catalan(3);
  const Dfao built = build_dfao(cs);
  const Dfao small = minimize(built);
  const Dfao fixture = test::catalan3_fixture();
  CHECK(small.size() <= built.size());
  for (std::uint64_t n = 1; n <= 59049; ++n) {
    const std::uint32_t want = run(fixture, n);
    REQUIRE(run(built, n) == want);
    REQUIRE(run(small, n) == want);
  }
}

TEST_CASE("minimize merges duplicate states") {
  Dfao d = test::catalan3_fixture();
  // State 5 copies b_1; route a_1's digit 0 edge there.
  d.outputs.push_back(1);
  d.transitions.insert(d.transitions.end(), {1, 2, 3});
  d.transitions[0] = 5;
  const Dfao m = minimize(d);
  CHECK(m.size() == 5);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto digits = random_digits(3);
    REQUIRE(run_digits(m, digits) == run_digits(d, digits));
  }
}

TEST_CASE("minimize keeps a minimal automaton") {
  const Dfao d = test::catalan3_fixture();
  const Dfao m = minimize(d);
  CHECK(m.size() == d.size());
  CHECK(minimize(m) == m);
  for (std::uint64_t n = 1; n <= 2000; ++n) REQUIRE(run(m, n) == run(d, n));
}

TEST_CASE("minimize drops unreachable states") {
  Dfao d = test::catalan3_fixture();
  d.outputs.push_back(2);
  d.transitions.insert(d.transitions.end(), {5, 5, 5});
  CHECK(minimize(d).size() == 5);
}

TEST_CASE("built automata agree with the kernel on the corpus") {
  for (const auto& text : test::corpus()) {
    for (std::uint32_t p : {2u, 3u}) {
      CAPTURE(text);
      CAPTURE(p);
      const BiPolyFp e = test::equation(text, p);
      for (const auto& root : solve_series(e, 128).roots) {
        const CompiledSeries cs = compile_series(e, std::vector<std::uint32_t>(root.coeffs().begin(), root.coeffs().end()));
        const Dfao d = build_dfao(cs);
        const Dfao m = minimize(d);
        const auto v = f_range(cs, 0, 2000, 0);
        for (std::uint64_t n = 0; n <= 2000; ++n) REQUIRE(run(d, n) == v[n]);
        for (int trial = 0; trial < 500; ++trial) {
          const auto digits = random_digits(p);
          REQUIRE(run_digits(m, digits) == run_digits(d, digits));
        }
        // Leading zeros never change the output.
        for (int trial = 0; trial < 200; ++trial) {
          auto digits = random_digits(p);
          const std::uint32_t base = run_digits(d, digits);
          digits.push_back(0);
          REQUIRE(run_digits(d, digits) == base);
        }
      }
    }
  }
}

TEST_CASE("DOT export") {
  const std::regex node(R"((^|\n)\s*q\d+ \[label=)");
  const std::regex edge(R"(q\d+ -> q\d+ \[label=)");
  const std::string dot = export_dot(test::catalan3_fixture());
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(count(dot, node) == 5);
  CHECK(count(dot, edge) == 15);

  Dfao one;
  one.p = 3;
  one.outputs = {0};
  one.transitions = {0, 0, 0};
  const std::string single = export_dot(one);
  CHECK(count(single, node) == 1);
  CHECK(count(single, std::regex(R"(q0 -> q0 \[label=)")) == 3);
}

TEST_CASE("JSON round trip") {
  const Dfao fixture = test::catalan3_fixture();
  CHECK(dfao_from_json(to_json(fixture)) == fixture);
  const Dfao built = build_dfao(catalan(2, 10));
  CHECK(dfao_from_json(nlohmann::json::parse(to_json(built).dump())) == built);
  const nlohmann::json doc = to_json(fixture);
  CHECK(doc["states"] == nlohmann::json::array({1, 1, 2, 0, 2}));
  CHECK(doc["offset"] == 1);
}

TEST_CASE("JSON schema errors") {
  const nlohmann::json good = to_json(test::catalan3_fixture());
  auto path_of = [](const nlohmann::json& doc) -> std::string {
    try {
      dfao_from_json(doc);
    } catch (const SchemaError& e) {
      return e.path();
    }
    return "";
  };
  nlohmann::json bad = good;
  bad["transitions"].erase(0);
  CHECK(path_of(bad) == "transitions");
  bad = good;
  bad["transitions"][4] = 9;
  CHECK(path_of(bad).rfind("transitions", 0) == 0);
  bad = good;
  bad["offset"] = 2;
  CHECK(path_of(bad) == "offset");
  bad = good;
  bad["initial"] = 5;
  CHECK(path_of(bad) == "initial");
  bad = good;
  bad["states"][0] = 3;
  CHECK(path_of(bad).rfind("states", 0) == 0);
  bad = good;
  bad.erase("p");
  CHECK(path_of(bad) == "p");
}

#include "algser/compiler.hpp"

#include <algorithm>
#include <stdexcept>

#include "algser/errors.hpp"
#include "algser/oracle.hpp"

namespace algser {

using nlohmann::json;

std::size_t FpMatrix::nonzeros() const {
  return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](std::uint32_t x) { return x != 0; }));
}

std::vector<std::uint32_t> CompiledSeries::f_coordinates() const {
  std::vector<std::uint32_t> s(e, 0);
  for (std::size_t j = 0; j < c.size(); ++j) s[index(0, j)] = c.raw(j);
  for (std::size_t j = 0; j < a.size(); ++j) s[index(1, j)] = a.raw(j);
  return s;
}

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

Degree safe_degree(const PolyFp& a) { return a.is_zero() ? 0 : a.degree(); }

std::vector<std::uint32_t> row_times(std::span<const std::uint32_t> row, const FpMatrix& a, PrimeModulus m) {
  std::vector<std::uint32_t> out(a.dim(), 0);
  for (std::size_t c = 0; c < a.dim(); ++c) {
    std::uint64_t acc = 0;
    auto col = a.column(c);
    for (std::size_t r = 0; r < a.dim(); ++r) acc += static_cast<std::uint64_t>(row[r]) * col[r];
    out[c] = m.reduce(acc);
  }
  return out;
}

}  // namespace

ChangeOfVariable change_of_variable(const MahlerEquation& eq, std::span<const std::uint32_t> prefix) {
  const PrimeModulus m = eq.modulus;
  const PolyFp& c0 = eq.coeffs.at(0);
  if (static_cast<Degree>(prefix.size()) < c0.degree() + 1) {
    throw std::invalid_argument("prefix too short: need at least deg c_0 + 1 coefficients");
  }
  const std::size_t n = prefix.size();
  const std::size_t s = c0.order();
  const PolyFp unit(m, std::vector<std::uint32_t>(c0.coeffs().begin() + static_cast<std::ptrdiff_t>(s), c0.coeffs().end()));
  const SeriesTrunc f(m, std::vector<std::uint32_t>(prefix.begin(), prefix.end()));
  const SeriesTrunc quotient = f * series_inv(SeriesTrunc::from_poly(unit, n));

  ChangeOfVariable cov;
  std::vector<std::uint32_t> neg_part(quotient.coeffs().begin(), quotient.coeffs().begin() + static_cast<std::ptrdiff_t>(s));
  cov.g_minus = LaurentPolyFp(m, -static_cast<std::int64_t>(s), std::move(neg_part));
  cov.h_prefix = SeriesTrunc(
      m, std::vector<std::uint32_t>(quotient.coeffs().begin() + static_cast<std::ptrdiff_t>(s), quotient.coeffs().end()));
  cov.h0 = cov.h_prefix.raw(0);

  const std::uint64_t p = m.value();
  for (std::size_t i = 1; i <= eq.k(); ++i) cov.d.push_back(-(eq.coeffs[i] * pow(c0, ipow(p, i) - 2)));

  LaurentPolyFp b = -cov.g_minus;
  for (std::size_t i = 0; i < cov.d.size(); ++i) {
    if (cov.d[i].is_zero() || cov.g_minus.is_zero()) continue;
    b += LaurentPolyFp(cov.d[i]) * frobenius_subst(cov.g_minus, static_cast<unsigned>(i + 1));
  }
  auto [negative, nonneg] = laurent_split(b);
  if (!negative.is_zero()) throw InternalDefect("negative part of b does not cancel");
  cov.b = nonneg;

  Degree dmax = safe_degree(cov.b);
  for (const auto& di : cov.d) dmax = std::max(dmax, safe_degree(di));
  cov.D = static_cast<std::size_t>(dmax);
  return cov;
}

CompiledSeries build_representation(const MahlerEquation& eq, const ChangeOfVariable& cov, std::size_t max_dim) {
  const PrimeModulus m = eq.modulus;
  const std::uint32_t p = m.value();
  CompiledSeries cs;
  cs.p = m;
  cs.k = eq.k();
  cs.mahler = eq.coeffs;
  cs.a = PolyFp(m);
  cs.c = PolyFp(m);

  PolyFp b(m);
  std::vector<PolyFp> d;
  if (eq.forces_zero()) {
    cs.D = 0;
    cs.h0 = 0;
  } else {
    cs.a = eq.coeffs.front();
    cs.c = (LaurentPolyFp(cs.a) * cov.g_minus).to_poly();
    cs.h0 = cov.h0;
    b = cov.b;
    d = cov.d;
    cs.D = std::max<std::size_t>(cov.D, static_cast<std::size_t>(safe_degree(cs.a)));
  }
  const std::size_t D = cs.D;
  if (static_cast<double>(D + 1) * static_cast<double>(cs.k + 2) > static_cast<double>(max_dim)) {
    throw CapExceeded("dimension e = " + std::to_string((D + 1) * (cs.k + 2)) + " exceeds the cap " +
                      std::to_string(max_dim));
  }
  cs.e = (D + 1) * (cs.k + 2);

  auto place = [&](FpMatrix& a, std::size_t block, const PolyFp& poly, std::size_t col) {
    if (poly.degree() > static_cast<Degree>(D)) throw InternalDefect("section image leaves the span of the basis");
    for (std::size_t t = 0; t < poly.size(); ++t) {
      auto& cell = a.at(cs.index(block, t), col);
      cell = m.add(cell, poly.raw(t));
    }
  };

  cs.A.assign(p, FpMatrix(cs.e));
  for (std::uint32_t r = 0; r < p; ++r) {
    FpMatrix& a = cs.A[r];
    for (std::size_t j = 0; j <= D; ++j) {
      if (j >= r && (j - r) % p == 0) {
        const std::size_t t = (j - r) / p;
        a.at(cs.index(0, t), cs.index(0, j)) = 1;
        for (std::size_t i = 1; i <= cs.k; ++i) a.at(cs.index(i, t), cs.index(i + 1, j)) = 1;
      }
      const std::size_t col = cs.index(1, j);
      if (!b.is_zero()) place(a, 0, section(b.shifted(j), r), col);
      for (std::size_t i = 1; i <= d.size(); ++i) {
        if (!d[i - 1].is_zero()) place(a, i, section(d[i - 1].shifted(j), r), col);
      }
    }
  }

  cs.u.assign(cs.e, 0);
  cs.u[cs.index(0, 0)] = 1;
  for (std::size_t i = 0; i <= cs.k; ++i) cs.u[cs.index(i + 1, 0)] = cs.h0;
  cs.v.assign(cs.e, 0);
  cs.v[cs.index(1, 0)] = 1;

  const auto ua0 = row_times(cs.u, cs.A[0], m);
  if (ua0 != cs.u) throw InternalDefect("u A_0 != u");
  if (ua0[cs.index(1, 0)] != cs.h0) throw InternalDefect("u A_0 v != h(0)");
  return cs;
}

CompiledSeries compile_series(const BiPolyFp& e, std::span<const std::uint32_t> prefix, std::size_t max_dim,
                              std::string source) {
  if (!verify_prefix(e, prefix)) throw DishonestInput("prefix does not satisfy the equation");
  const MahlerEquation eq = derive_mahler(e);
  if (!eq.forces_zero()) {
    // deg d_i is known before d_i is formed; reject hopeless instances early.
    const std::uint64_t p = eq.modulus.value();
    const Degree c0 = eq.coeffs.front().degree();
    for (std::size_t i = 1; i <= eq.k(); ++i) {
      if (eq.coeffs[i].is_zero()) continue;
      const double deg = static_cast<double>(eq.coeffs[i].degree()) +
                         static_cast<double>(c0) * (static_cast<double>(ipow(p, i)) - 2.0);
      if ((deg + 1.0) * static_cast<double>(eq.k() + 2) > static_cast<double>(max_dim)) {
        throw CapExceeded("dimension e exceeds the cap " + std::to_string(max_dim));
      }
    }
  }
  ChangeOfVariable cov;
  if (!eq.forces_zero()) cov = change_of_variable(eq, prefix);
  CompiledSeries cs = build_representation(eq, cov, max_dim);
  cs.source = std::move(source);
  return cs;
}

// ------------------------------------------------------------------- JSON

json poly_to_json(const PolyFp& a) { return json(std::vector<std::uint32_t>(a.coeffs().begin(), a.coeffs().end())); }

json to_json(const CompiledSeries& cs) {
  json A = json::array();
  for (const auto& mat : cs.A) {
    json rows = json::array();
    for (std::size_t r = 0; r < mat.dim(); ++r) {
      std::vector<std::uint32_t> row(mat.dim());
      for (std::size_t c = 0; c < mat.dim(); ++c) row[c] = mat.at(r, c);
      rows.push_back(std::move(row));
    }
    A.push_back(std::move(rows));
  }
  json mahler = json::array();
  for (const auto& c : cs.mahler) mahler.push_back(poly_to_json(c));
  return json{{"format", 1},       {"p", cs.p.value()},  {"a", poly_to_json(cs.a)}, {"c", poly_to_json(cs.c)},
              {"e", cs.e},         {"u", cs.u},          {"A", std::move(A)},        {"v", cs.v},
              {"k", cs.k},         {"D", cs.D},          {"h0", cs.h0},              {"mahler", std::move(mahler)},
              {"source", cs.source}};
}

namespace {

const json& field(const json& doc, const char* name) {
  if (!doc.is_object()) throw SchemaError("$", "expected an object");
  auto it = doc.find(name);
  if (it == doc.end()) throw SchemaError(name, "missing field");
  return *it;
}

std::uint64_t natural(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw SchemaError(path, "expected a natural number");
  }
  return j.get<std::uint64_t>();
}

std::vector<std::uint32_t> residues(const json& j, const std::string& path, std::uint32_t p, std::size_t size = SIZE_MAX) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  if (size != SIZE_MAX && j.size() != size) {
    throw SchemaError(path, "expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
  }
  std::vector<std::uint32_t> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    const std::uint64_t x = natural(j[i], at);
    if (x >= p) throw SchemaError(at, "residue out of range");
    out.push_back(static_cast<std::uint32_t>(x));
  }
  return out;
}

PolyFp poly_field(const json& j, const std::string& path, PrimeModulus m) {
  return PolyFp(m, residues(j, path, m.value()));
}

}  // namespace

CompiledSeries compiled_from_json(const json& doc) {
  if (natural(field(doc, "format"), "format") != 1) throw SchemaError("format", "unsupported format");
  const std::uint64_t pv = natural(field(doc, "p"), "p");
  if (pv < 2 || pv > PrimeModulus::kMax || !is_prime(pv)) throw SchemaError("p", "not a prime in [2, 65536]");
  const PrimeModulus m(static_cast<std::uint32_t>(pv));
  const std::uint32_t p = m.value();

  CompiledSeries cs;
  cs.p = m;
  cs.a = poly_field(field(doc, "a"), "a", m);
  cs.c = poly_field(field(doc, "c"), "c", m);
  cs.k = natural(field(doc, "k"), "k");
  cs.D = natural(field(doc, "D"), "D");
  cs.e = natural(field(doc, "e"), "e");
  if (cs.D > kDefaultMaxDim || cs.k > kDefaultMaxDim || cs.e != (cs.D + 1) * (cs.k + 2)) {
    throw SchemaError("e", "expected (D+1)(k+2)");
  }
  if (cs.a.degree() > static_cast<Degree>(cs.D)) throw SchemaError("a", "degree exceeds D");
  if (cs.c.degree() > static_cast<Degree>(cs.D)) throw SchemaError("c", "degree exceeds D");
  const std::uint64_t h0 = natural(field(doc, "h0"), "h0");
  if (h0 >= p) throw SchemaError("h0", "residue out of range");
  cs.h0 = static_cast<std::uint32_t>(h0);
  cs.u = residues(field(doc, "u"), "u", p, cs.e);
  cs.v = residues(field(doc, "v"), "v", p, cs.e);

  const json& A = field(doc, "A");
  if (!A.is_array() || A.size() != p) throw SchemaError("A", "expected " + std::to_string(p) + " matrices");
  for (std::size_t r = 0; r < p; ++r) {
    const std::string path = "A[" + std::to_string(r) + "]";
    const json& rows = A[r];
    if (!rows.is_array() || rows.size() != cs.e) {
      throw SchemaError(path, "expected " + std::to_string(cs.e) + " rows");
    }
    FpMatrix mat(cs.e);
    for (std::size_t i = 0; i < cs.e; ++i) {
      const auto row = residues(rows[i], path + "[" + std::to_string(i) + "]", p, cs.e);
      for (std::size_t j = 0; j < cs.e; ++j) mat.at(i, j) = row[j];
    }
    cs.A.push_back(std::move(mat));
  }

  const json& mahler = field(doc, "mahler");
  if (!mahler.is_array()) throw SchemaError("mahler", "expected an array");
  for (std::size_t i = 0; i < mahler.size(); ++i) {
    cs.mahler.push_back(poly_field(mahler[i], "mahler[" + std::to_string(i) + "]", m));
  }
  if (doc.contains("source")) {
    if (!doc["source"].is_string()) throw SchemaError("source", "expected a string");
    cs.source = doc["source"].get<std::string>();
  }
  return cs;
}

}  // namespace algser
